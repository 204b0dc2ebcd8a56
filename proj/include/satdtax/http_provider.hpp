#pragma once

#include <memory>
#include <string>

#include "satdtax/chat.hpp"
#include "satdtax/gateway.hpp"

namespace satdtax {

// Chat-completion HTTP adapter (OpenAI-style wire schema, which is what
// DeepSeek and most hosted providers speak):
//
//   POST {endpoint}/chat/completions
//   {"model", "temperature", "messages": [{"role": "system"|"user", ...}]}
//
// Replies must carry choices[0].message.content and a usage block; a
// response without usage is an error, never guessed at.
class HttpChatProvider : public ChatProvider {
  public:
    explicit HttpChatProvider(const ProviderConfig& config);
    ~HttpChatProvider() override;

    ChatResponse complete(const ChatRequest& request) override;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Builds the configured provider ("http" or "mock").
std::shared_ptr<ChatProvider> make_provider(const ProviderConfig& config);

}  // namespace satdtax

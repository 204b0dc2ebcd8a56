#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "satdtax/chat.hpp"

namespace satdtax {

// Deterministic scripted provider for tests and offline runs.
//
// A script maps a stable request hash to a canned reply; requests with no
// scripted entry consume an ordered fallback list. Usage is synthesized
// from text lengths (ceil(chars/4) per side) so ledgers stay exact and
// reproducible.
class MockProvider : public ChatProvider {
  public:
    MockProvider() = default;

    // Script file: {"replies": {"<hash>": "reply"}, "fallback": ["r1", ...]}
    static std::shared_ptr<MockProvider> from_script_file(const std::string& path);
    static std::shared_ptr<MockProvider> from_script_json(const std::string& json_text);

    // Key under which complete() looks up a request.
    static std::string request_key(const std::string& system_text,
                                   const std::string& user_text);

    void add_reply(const std::string& system_text, const std::string& user_text,
                   const std::string& reply);
    void add_reply_for_key(const std::string& key, const std::string& reply);
    void add_fallback(const std::string& reply);

    std::string to_script_json() const;

    ChatResponse complete(const ChatRequest& request) override;

    static TokenUsage synthesize_usage(const ChatRequest& request,
                                       const std::string& reply);

  private:
    std::map<std::string, std::string> replies_;
    std::vector<std::string> fallback_;
    std::size_t next_fallback_ = 0;
    std::mutex mutex_;
};

}  // namespace satdtax

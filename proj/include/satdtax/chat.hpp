#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace satdtax {

// Ledger attribution for every model call the toolkit makes.
enum class CallTag { explain, generate, merge, assign, naive };

const char* to_string(CallTag tag);
CallTag call_tag_from_string(const std::string& s);

struct TokenUsage {
    std::int64_t input_tokens = 0;
    std::int64_t output_tokens = 0;

    TokenUsage& operator+=(const TokenUsage& o) {
        input_tokens += o.input_tokens;
        output_tokens += o.output_tokens;
        return *this;
    }
};

struct ChatRequest {
    std::string system_text;
    std::string user_text;
    double temperature = 1.0;
    CallTag tag = CallTag::explain;
};

struct ChatResponse {
    std::string text;
    TokenUsage usage;
};

// Raised when a provider cannot produce a response. Transient failures
// (timeouts, 5xx, rate limits) are retried by the gateway; permanent ones
// (auth, malformed response) are not.
class ProviderError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class TransientProviderError : public ProviderError {
  public:
    using ProviderError::ProviderError;
};

// Single-turn chat-completion transport. Implementations must be safe to
// call from multiple threads.
class ChatProvider {
  public:
    virtual ~ChatProvider() = default;
    virtual ChatResponse complete(const ChatRequest& request) = 0;
};

}  // namespace satdtax

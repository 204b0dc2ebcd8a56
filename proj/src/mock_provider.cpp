#include "satdtax/mock_provider.hpp"

#include "json.hpp"
#include "satdtax/text.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

namespace satdtax {

std::shared_ptr<MockProvider> MockProvider::from_script_file(const std::string& path) {
    return from_script_json(read_file(path));
}

std::shared_ptr<MockProvider> MockProvider::from_script_json(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ProviderError("mock script parse failure: " + std::string(e.what()));
    }
    auto mock = std::make_shared<MockProvider>();
    if (doc.contains("replies")) {
        for (const auto& [key, reply] : doc["replies"].items()) {
            mock->replies_[key] = reply.get<std::string>();
        }
    }
    if (doc.contains("fallback")) {
        for (const auto& reply : doc["fallback"]) {
            mock->fallback_.push_back(reply.get<std::string>());
        }
    }
    return mock;
}

std::string MockProvider::request_key(const std::string& system_text,
                                      const std::string& user_text) {
    return fnv1a64_hex(system_text + '\x1f' + user_text);
}

void MockProvider::add_reply(const std::string& system_text,
                             const std::string& user_text,
                             const std::string& reply) {
    add_reply_for_key(request_key(system_text, user_text), reply);
}

void MockProvider::add_reply_for_key(const std::string& key,
                                     const std::string& reply) {
    std::lock_guard lock(mutex_);
    replies_[key] = reply;
}

void MockProvider::add_fallback(const std::string& reply) {
    std::lock_guard lock(mutex_);
    fallback_.push_back(reply);
}

std::string MockProvider::to_script_json() const {
    ordered_json doc;
    doc["replies"] = ordered_json::object();
    for (const auto& [key, reply] : replies_) {
        doc["replies"][key] = reply;
    }
    doc["fallback"] = fallback_;
    return doc.dump(2);
}

TokenUsage MockProvider::synthesize_usage(const ChatRequest& request,
                                          const std::string& reply) {
    const std::size_t in_chars =
        request.system_text.size() + request.user_text.size();
    TokenUsage usage;
    usage.input_tokens = static_cast<std::int64_t>((in_chars + 3) / 4);
    usage.output_tokens = static_cast<std::int64_t>((reply.size() + 3) / 4);
    return usage;
}

ChatResponse MockProvider::complete(const ChatRequest& request) {
    std::string reply;
    {
        std::lock_guard lock(mutex_);
        const auto it = replies_.find(request_key(request.system_text,
                                                  request.user_text));
        if (it != replies_.end()) {
            reply = it->second;
        } else if (next_fallback_ < fallback_.size()) {
            reply = fallback_[next_fallback_++];
        } else {
            throw ProviderError(
                "mock script has no reply for request (tag " +
                std::string(to_string(request.tag)) + ", key " +
                request_key(request.system_text, request.user_text) + ")");
        }
    }
    return ChatResponse{reply, synthesize_usage(request, reply)};
}

}  // namespace satdtax

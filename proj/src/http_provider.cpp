#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include "satdtax/http_provider.hpp"

#include <cstdlib>

#include "json.hpp"
#include "satdtax/mock_provider.hpp"

using nlohmann::json;

namespace satdtax {

namespace {

// Splits "https://host[:port][/base]" into origin and base path.
void split_endpoint(const std::string& endpoint, std::string& origin,
                    std::string& base_path) {
    const auto scheme_end = endpoint.find("://");
    const std::size_t host_start =
        scheme_end == std::string::npos ? 0 : scheme_end + 3;
    const auto path_start = endpoint.find('/', host_start);
    if (path_start == std::string::npos) {
        origin = endpoint;
        base_path.clear();
    } else {
        origin = endpoint.substr(0, path_start);
        base_path = endpoint.substr(path_start);
        while (!base_path.empty() && base_path.back() == '/') {
            base_path.pop_back();
        }
    }
}

}  // namespace

struct HttpChatProvider::Impl {
    std::string origin;
    std::string base_path;
    std::string model;
    std::string api_key;
    int timeout_seconds = 300;
};

HttpChatProvider::HttpChatProvider(const ProviderConfig& config)
    : impl_(std::make_unique<Impl>()) {
    if (config.endpoint.empty()) {
        throw ProviderError("http provider needs an endpoint");
    }
    split_endpoint(config.endpoint, impl_->origin, impl_->base_path);
    impl_->model = config.model;
    impl_->timeout_seconds = config.timeout_seconds;
    if (!config.api_key_env.empty()) {
        const char* key = std::getenv(config.api_key_env.c_str());
        if (key == nullptr || *key == '\0') {
            throw ProviderError("environment variable " + config.api_key_env +
                                " is not set (API key)");
        }
        impl_->api_key = key;
    }
}

HttpChatProvider::~HttpChatProvider() = default;

ChatResponse HttpChatProvider::complete(const ChatRequest& request) {
    json body;
    body["model"] = impl_->model;
    body["temperature"] = request.temperature;
    body["stream"] = false;
    body["messages"] = json::array();
    if (!request.system_text.empty()) {
        body["messages"].push_back({{"role", "system"}, {"content", request.system_text}});
    }
    body["messages"].push_back({{"role", "user"}, {"content", request.user_text}});

    httplib::Client client(impl_->origin);
    client.set_connection_timeout(impl_->timeout_seconds, 0);
    client.set_read_timeout(impl_->timeout_seconds, 0);
    client.set_write_timeout(impl_->timeout_seconds, 0);

    httplib::Headers headers;
    if (!impl_->api_key.empty()) {
        headers.emplace("Authorization", "Bearer " + impl_->api_key);
    }

    const auto result = client.Post(impl_->base_path + "/chat/completions",
                                    headers, body.dump(), "application/json");
    if (!result) {
        throw TransientProviderError("transport failure: " +
                                     httplib::to_string(result.error()));
    }
    const int status = result->status;
    if (status == 401 || status == 403) {
        throw ProviderError("authentication failure (HTTP " +
                            std::to_string(status) + ")");
    }
    if (status == 408 || status == 409 || status == 429 || status >= 500) {
        throw TransientProviderError("HTTP " + std::to_string(status) + ": " +
                                     result->body.substr(0, 200));
    }
    if (status < 200 || status >= 300) {
        throw ProviderError("HTTP " + std::to_string(status) + ": " +
                            result->body.substr(0, 200));
    }

    json doc;
    try {
        doc = json::parse(result->body);
    } catch (const json::exception& e) {
        throw ProviderError("response is not valid JSON: " + std::string(e.what()));
    }
    ChatResponse response;
    try {
        response.text = doc.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception&) {
        throw ProviderError("response has no choices[0].message.content");
    }
    if (!doc.contains("usage") || !doc["usage"].contains("prompt_tokens") ||
        !doc["usage"].contains("completion_tokens")) {
        throw ProviderError("response is missing the usage block");
    }
    response.usage.input_tokens = doc["usage"]["prompt_tokens"].get<std::int64_t>();
    response.usage.output_tokens = doc["usage"]["completion_tokens"].get<std::int64_t>();
    if (response.usage.input_tokens < 0 || response.usage.output_tokens < 0) {
        throw ProviderError("response reports negative token usage");
    }
    return response;
}

std::shared_ptr<ChatProvider> make_provider(const ProviderConfig& config) {
    if (config.provider == "http") {
        return std::make_shared<HttpChatProvider>(config);
    }
    if (config.provider == "mock") {
        if (config.mock_script.empty()) {
            throw ProviderError("mock provider needs a mock_script path");
        }
        return MockProvider::from_script_file(config.mock_script);
    }
    throw ProviderError("unknown provider: " + config.provider);
}

}  // namespace satdtax

#include "satdtax/gateway.hpp"

#include <thread>

#include "json.hpp"
#include "satdtax/text.hpp"

using nlohmann::json;

namespace satdtax {

ProviderConfig load_provider_config(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw std::runtime_error("config parse failure (" + path + "): " + e.what());
    }
    ProviderConfig cfg;
    if (doc.contains("provider")) cfg.provider = doc["provider"].get<std::string>();
    if (doc.contains("endpoint")) cfg.endpoint = doc["endpoint"].get<std::string>();
    if (doc.contains("model")) cfg.model = doc["model"].get<std::string>();
    if (doc.contains("api_key_env")) cfg.api_key_env = doc["api_key_env"].get<std::string>();
    if (doc.contains("temperature")) cfg.temperature = doc["temperature"].get<double>();
    if (doc.contains("max_retries")) cfg.max_retries = doc["max_retries"].get<int>();
    if (doc.contains("retry_base_ms")) cfg.retry_base_ms = doc["retry_base_ms"].get<int>();
    if (doc.contains("max_concurrency")) cfg.max_concurrency = doc["max_concurrency"].get<int>();
    if (doc.contains("timeout_seconds")) cfg.timeout_seconds = doc["timeout_seconds"].get<int>();
    if (doc.contains("mock_script")) cfg.mock_script = doc["mock_script"].get<std::string>();
    if (doc.contains("pricing")) {
        const auto& p = doc["pricing"];
        if (p.contains("input_per_million"))
            cfg.pricing.input_per_million = p["input_per_million"].get<double>();
        if (p.contains("output_per_million"))
            cfg.pricing.output_per_million = p["output_per_million"].get<double>();
    }
    if (doc.contains("batch_size")) cfg.batch_size = doc["batch_size"].get<int>();
    if (doc.contains("runs")) cfg.runs = doc["runs"].get<int>();
    if (doc.contains("context_limit_tokens"))
        cfg.context_limit_tokens = doc["context_limit_tokens"].get<std::int64_t>();

    if (cfg.temperature < 0) throw std::runtime_error("temperature must be >= 0");
    if (cfg.max_retries < 0) throw std::runtime_error("max_retries must be >= 0");
    if (cfg.max_concurrency < 1) throw std::runtime_error("max_concurrency must be >= 1");
    if (cfg.batch_size < 1) throw std::runtime_error("batch_size must be >= 1");
    if (cfg.pricing.input_per_million < 0 || cfg.pricing.output_per_million < 0)
        throw std::runtime_error("pricing rates must be >= 0");
    return cfg;
}

ChatGateway::ChatGateway(std::shared_ptr<ChatProvider> provider,
                         ProviderConfig config)
    : provider_(std::move(provider)), config_(std::move(config)) {
    if (!provider_) throw std::runtime_error("gateway needs a provider");
    sleep_fn = [](std::chrono::milliseconds ms) { std::this_thread::sleep_for(ms); };
}

void ChatGateway::acquire_slot() {
    std::unique_lock lock(slots_mutex_);
    slots_cv_.wait(lock, [&] { return in_flight_ < config_.max_concurrency; });
    ++in_flight_;
}

void ChatGateway::release_slot() {
    {
        std::lock_guard lock(slots_mutex_);
        --in_flight_;
    }
    slots_cv_.notify_one();
}

namespace {

struct SlotGuard {
    ChatGateway* gw;
    void (ChatGateway::*release)();
    ~SlotGuard() { (gw->*release)(); }
};

}  // namespace

ChatResponse ChatGateway::complete(const ChatRequest& request) {
    if (trim(request.user_text).empty()) {
        throw std::runtime_error("chat request has empty user text");
    }
    if (request.temperature < 0) {
        throw std::runtime_error("chat request temperature must be >= 0");
    }

    acquire_slot();
    SlotGuard guard{this, &ChatGateway::release_slot};

    const auto started = std::chrono::steady_clock::now();
    const int attempts = config_.max_retries + 1;
    for (int attempt = 1;; ++attempt) {
        try {
            ChatResponse response = provider_->complete(request);
            const auto elapsed = std::chrono::duration<double>(
                                     std::chrono::steady_clock::now() - started)
                                     .count();
            ledger_.record(request.tag, response.usage, elapsed);
            return response;
        } catch (const TransientProviderError& e) {
            if (attempt >= attempts) {
                throw ProviderError("provider failed after " +
                                    std::to_string(attempts) +
                                    " attempts: " + e.what());
            }
            const auto delay = std::chrono::milliseconds(
                static_cast<long long>(config_.retry_base_ms) << (attempt - 1));
            sleep_fn(delay);
        }
    }
}

}  // namespace satdtax

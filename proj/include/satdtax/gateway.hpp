#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "satdtax/chat.hpp"
#include "satdtax/ledger.hpp"

namespace satdtax {

// Runtime configuration for providers and the pipeline. Mirrors the
// config-file schema; see the README for the JSON layout.
struct ProviderConfig {
    std::string provider = "mock";   // "http" or "mock"
    std::string endpoint;            // e.g. https://api.deepseek.com
    std::string model;
    std::string api_key_env;         // name of the env var holding the key
    double temperature = 1.0;
    int max_retries = 3;             // extra attempts after the first
    int retry_base_ms = 1000;        // doubled per retry: 1s, 2s, 4s, ...
    int max_concurrency = 1;
    int timeout_seconds = 300;
    CostModel pricing;
    std::string mock_script;         // path, used when provider == "mock"

    // Pipeline knobs, config-surfaced so deviations from the defaults
    // (batch 20, temperature 1.0, context cap 2000 lines, 10 runs) are
    // always explicit.
    int batch_size = 20;
    int runs = 10;
    std::int64_t context_limit_tokens = 65536;
};

ProviderConfig load_provider_config(const std::string& path);

// Wraps a transport with retry, a shared ledger, and a concurrency cap.
// complete() retries transient failures with exponential backoff and
// appends one ledger record per successful call.
class ChatGateway {
  public:
    ChatGateway(std::shared_ptr<ChatProvider> provider, ProviderConfig config);

    ChatResponse complete(const ChatRequest& request);

    RunLedger& ledger() { return ledger_; }
    const RunLedger& ledger() const { return ledger_; }
    const ProviderConfig& config() const { return config_; }
    int max_concurrency() const { return config_.max_concurrency; }

    // Overridable for tests; defaults to std::this_thread::sleep_for.
    std::function<void(std::chrono::milliseconds)> sleep_fn;

  private:
    void acquire_slot();
    void release_slot();

    std::shared_ptr<ChatProvider> provider_;
    ProviderConfig config_;
    RunLedger ledger_;
    std::mutex slots_mutex_;
    std::condition_variable slots_cv_;
    int in_flight_ = 0;
};

// Runs fn(0..n-1) with up to `workers` threads and returns results in
// index order. The first exception (by index) is rethrown on the caller
// thread. workers <= 1 degrades to a plain sequential loop.
template <typename T>
std::vector<T> indexed_parallel_map(std::size_t n, int workers,
                                    const std::function<T(std::size_t)>& fn) {
    std::vector<T> results(n);
    if (n == 0) return results;
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
        return results;
    }

    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    pool.reserve(count);
    for (std::size_t w = 0; w < count; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
    }
    return results;
}

}  // namespace satdtax

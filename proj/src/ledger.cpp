#include "satdtax/ledger.hpp"

#include <stdexcept>

namespace satdtax {

const char* to_string(CallTag tag) {
    switch (tag) {
        case CallTag::explain: return "explain";
        case CallTag::generate: return "generate";
        case CallTag::merge: return "merge";
        case CallTag::assign: return "assign";
        case CallTag::naive: return "naive";
    }
    return "unknown";
}

CallTag call_tag_from_string(const std::string& s) {
    if (s == "explain") return CallTag::explain;
    if (s == "generate") return CallTag::generate;
    if (s == "merge") return CallTag::merge;
    if (s == "assign") return CallTag::assign;
    if (s == "naive") return CallTag::naive;
    throw std::runtime_error("unknown call tag: " + s);
}

void RunLedger::record(CallTag tag, const TokenUsage& usage, double wall_seconds) {
    if (usage.input_tokens < 0 || usage.output_tokens < 0) {
        throw std::runtime_error("ledger rejects negative token counts");
    }
    std::lock_guard lock(mutex_);
    records_.push_back(CallRecord{tag, usage, wall_seconds});
}

std::vector<CallRecord> RunLedger::records() const {
    std::lock_guard lock(mutex_);
    return records_;
}

TokenUsage RunLedger::totals() const {
    std::lock_guard lock(mutex_);
    TokenUsage t;
    for (const auto& r : records_) t += r.usage;
    return t;
}

std::map<std::string, TokenUsage> RunLedger::totals_by_tag() const {
    std::lock_guard lock(mutex_);
    std::map<std::string, TokenUsage> by_tag;
    for (const auto& r : records_) by_tag[to_string(r.tag)] += r.usage;
    return by_tag;
}

std::map<std::string, std::int64_t> RunLedger::calls_by_tag() const {
    std::lock_guard lock(mutex_);
    std::map<std::string, std::int64_t> by_tag;
    for (const auto& r : records_) ++by_tag[to_string(r.tag)];
    return by_tag;
}

std::size_t RunLedger::call_count() const {
    std::lock_guard lock(mutex_);
    return records_.size();
}

double compute_cost(const TokenUsage& totals, const CostModel& model) {
    return static_cast<double>(totals.input_tokens) * model.input_per_million / 1e6 +
           static_cast<double>(totals.output_tokens) * model.output_per_million / 1e6;
}

double compute_cost(const RunLedger& ledger, const CostModel& model) {
    return compute_cost(ledger.totals(), model);
}

}  // namespace satdtax

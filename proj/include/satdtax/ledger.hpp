#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "satdtax/chat.hpp"

namespace satdtax {

// Per-million-token prices. Never hard-coded: provider prices drift, so
// they arrive via configuration.
struct CostModel {
    double input_per_million = 0.0;
    double output_per_million = 0.0;
};

struct CallRecord {
    CallTag tag = CallTag::explain;
    TokenUsage usage;
    double wall_seconds = 0.0;
};

// Append-only account of every provider call in a run. Appends are
// serialized internally; totals always equal the sum over records.
class RunLedger {
  public:
    void record(CallTag tag, const TokenUsage& usage, double wall_seconds);

    std::vector<CallRecord> records() const;
    TokenUsage totals() const;
    std::map<std::string, TokenUsage> totals_by_tag() const;
    std::map<std::string, std::int64_t> calls_by_tag() const;
    std::size_t call_count() const;

  private:
    mutable std::mutex mutex_;
    std::vector<CallRecord> records_;
};

// cost = input_tokens * input_rate / 1e6 + output_tokens * output_rate / 1e6
double compute_cost(const TokenUsage& totals, const CostModel& model);
double compute_cost(const RunLedger& ledger, const CostModel& model);

}  // namespace satdtax

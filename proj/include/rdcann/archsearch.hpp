#ifndef RDCANN_ARCHSEARCH_HPP
#define RDCANN_ARCHSEARCH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rdcann/data.hpp"
#include "rdcann/train.hpp"

namespace rdcann {

struct CandidateResult {
    int hidden_nodes = 0;
    double train_mse = 0.0;
    double val_mse = 0.0;          // +inf when the candidate diverged
    double val_pct_error = 0.0;    // on denormalized values
    std::uint64_t seed = 0;
    bool failed = false;
};

// Table of candidate hidden-layer sizes with their errors, plus the winner.
struct ArchSearchReport {
    std::vector<CandidateResult> rows; // ascending hidden_nodes
    int selected = 0;

    /// `hidden_nodes,train_mse,val_mse,val_pct_error` rows
    std::string to_csv() const;
    /// aligned text table
    std::string to_table() const;
};

using CandidateEvaluator = std::function<CandidateResult(int hidden_nodes)>;

/// Core selection logic over an arbitrary evaluator (tests inject mocks
/// here). Winner = minimum validation MSE among non-failed rows; ties break
/// by minimum %Error, then by smaller hidden count.
ArchSearchReport search_with_evaluator(const std::vector<int>& candidates,
                                       const CandidateEvaluator& evaluate);

/// Full search: one fixed split for all candidates, per-candidate seed
/// config.seed + H, training divergence recorded as a failed row.
ArchSearchReport search(const Dataset& ds, const std::vector<int>& candidates,
                        const TrainConfig& config, double train_fraction,
                        std::uint64_t split_seed);

} // namespace rdcann

#endif

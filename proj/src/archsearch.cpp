#include "rdcann/archsearch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rdcann/format.hpp"
#include "rdcann/metrics.hpp"
#include "rdcann/model_io.hpp"

namespace rdcann {

std::string ArchSearchReport::to_csv() const {
    std::ostringstream out;
    out << "hidden_nodes,train_mse,val_mse,val_pct_error\n";
    for (const auto& r : rows)
        out << r.hidden_nodes << ',' << format_double(r.train_mse) << ','
            << format_double(r.val_mse) << ',' << format_double(r.val_pct_error) << '\n';
    return out.str();
}

std::string ArchSearchReport::to_table() const {
    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-14s %-14s %-14s %-14s\n", "hidden_nodes", "train_mse",
                  "val_mse", "val_pct_error");
    out << buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%-14d %-14.6g %-14.6g %-14.6g%s\n", r.hidden_nodes,
                      r.train_mse, r.val_mse, r.val_pct_error,
                      r.hidden_nodes == selected ? "  <- selected" : "");
        out << buf;
    }
    return out.str();
}

ArchSearchReport search_with_evaluator(const std::vector<int>& candidates,
                                       const CandidateEvaluator& evaluate) {
    if (candidates.empty())
        throw std::invalid_argument("archsearch: candidate list is empty");
    for (int h : candidates)
        if (h < 1)
            throw std::invalid_argument("archsearch: candidate hidden size must be >= 1");

    std::vector<int> order = candidates;
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());

    ArchSearchReport report;
    for (int h : order)
        report.rows.push_back(evaluate(h));

    const CandidateResult* best = nullptr;
    for (const auto& r : report.rows) {
        if (r.failed)
            continue;
        if (!best || r.val_mse < best->val_mse ||
            (r.val_mse == best->val_mse &&
             (r.val_pct_error < best->val_pct_error ||
              (r.val_pct_error == best->val_pct_error && r.hidden_nodes < best->hidden_nodes))))
            best = &r;
    }
    if (!best)
        throw std::runtime_error("archsearch: every candidate diverged");
    report.selected = best->hidden_nodes;
    return report;
}

ArchSearchReport search(const Dataset& ds, const std::vector<int>& candidates,
                        const TrainConfig& config, double train_fraction,
                        std::uint64_t split_seed) {
    auto [train_ds, val_ds] = split(ds, train_fraction, split_seed);
    NormalizationSpec norm = fit_normalizer(train_ds);
    NormalizedData train_nd = normalize(train_ds, norm);
    NormalizedData val_nd = normalize(val_ds, norm);

    Matrix val_desired_denorm;
    for (const auto& s : val_ds.samples)
        val_desired_denorm.push_back({s.product_flow});

    return search_with_evaluator(candidates, [&](int h) {
        CandidateResult r;
        r.hidden_nodes = h;
        r.seed = config.seed + static_cast<std::uint64_t>(h);
        TrainConfig cand_cfg = config;
        cand_cfg.seed = r.seed;
        Network net = init_network(kNumInputs, h, 1, r.seed);
        try {
            train(net, train_nd, cand_cfg);
            r.train_mse = evaluate_mse(net, train_nd);
            r.val_mse = evaluate_mse(net, val_nd);
            Matrix val_pred_denorm;
            for (const auto& in : val_nd.inputs)
                val_pred_denorm.push_back({denormalize_output(forward(net, in)[0], norm)});
            r.val_pct_error = percent_error(val_pred_denorm, val_desired_denorm);
        } catch (const std::runtime_error&) {
            r.failed = true;
            r.train_mse = std::numeric_limits<double>::infinity();
            r.val_mse = std::numeric_limits<double>::infinity();
            r.val_pct_error = std::numeric_limits<double>::infinity();
        }
        return r;
    });
}

} // namespace rdcann

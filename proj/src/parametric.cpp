#include "rdcann/parametric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rdcann/format.hpp"

namespace rdcann {

SweepVariable sweep_variable_from_name(const std::string& name) {
    if (name == "sf_ratio")
        return SweepVariable::SfRatio;
    if (name == "feed_temp")
        return SweepVariable::FeedTemp;
    if (name == "solvent_temp")
        return SweepVariable::SolventTemp;
    if (name == "rotation")
        return SweepVariable::Rotation;
    throw std::invalid_argument("unknown sweep variable '" + name +
                                "' (expected sf_ratio, feed_temp, solvent_temp or rotation)");
}

const char* sweep_variable_name(SweepVariable v) {
    switch (v) {
    case SweepVariable::SfRatio: return "sf_ratio";
    case SweepVariable::FeedTemp: return "feed_temp";
    case SweepVariable::SolventTemp: return "solvent_temp";
    case SweepVariable::Rotation: return "rotation";
    }
    return "?";
}

TrendSummary monotonicity_report(const std::vector<double>& values, double tau) {
    if (values.empty())
        throw std::invalid_argument("monotonicity_report: empty series");
    std::size_t ups = 0, downs = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        double d = values[i] - values[i - 1];
        if (d > tau)
            ++ups;
        else if (d < -tau)
            ++downs;
    }
    TrendSummary t;
    // majority sign sets the trend; flat ties count as increasing
    bool upward = ups >= downs;
    t.direction = upward ? Trend::Increasing : Trend::Decreasing;
    for (std::size_t i = 1; i < values.size(); ++i) {
        double d = values[i] - values[i - 1];
        bool violation = upward ? (d < -tau) : (d > tau);
        if (violation) {
            ++t.violation_count;
            t.violation_indices.push_back(i);
            t.max_violation = std::max(t.max_violation, std::abs(d));
        }
    }
    if (t.violation_count > 0)
        t.direction = Trend::NonMonotone;
    return t;
}

SweepResult sweep(const TrainedModel& model, const SweepSpec& spec) {
    if (spec.grid.size() < 2)
        throw std::invalid_argument("sweep: grid must have at least 2 points");
    for (std::size_t i = 1; i < spec.grid.size(); ++i)
        if (!(spec.grid[i] > spec.grid[i - 1]))
            throw std::invalid_argument("sweep: grid must be strictly increasing");
    if (model.net.input_dim != kNumInputs)
        throw std::invalid_argument("sweep: model does not have the 4-input schema");

    SweepResult result;
    result.grid_values = spec.grid;
    for (double v : spec.grid) {
        double sf = spec.baseline_sf;
        double ft = spec.baseline_feed_temp;
        double st = spec.baseline_solvent_temp;
        double rot = spec.baseline_rotation;
        switch (spec.variable) {
        case SweepVariable::SfRatio: sf = v; break;
        case SweepVariable::FeedTemp: ft = v; break;
        case SweepVariable::SolventTemp: st = v; break;
        case SweepVariable::Rotation: rot = v; break;
        }
        double point[kNumInputs] = {sf, ft, st, rot};
        for (int c = 0; c < kNumInputs; ++c)
            if (point[c] < model.norm.col_min[c] || point[c] > model.norm.col_max[c])
                result.extrapolated = true;
        result.predicted_flow.push_back(model.predict(sf, ft, st, rot));
    }
    result.trend = monotonicity_report(result.predicted_flow);
    return result;
}

static const char* trend_name(Trend t) {
    switch (t) {
    case Trend::Increasing: return "increasing";
    case Trend::Decreasing: return "decreasing";
    case Trend::NonMonotone: return "non-monotone";
    }
    return "?";
}

std::string sweep_to_csv(const SweepResult& result, SweepVariable variable) {
    std::ostringstream out;
    out << sweep_variable_name(variable) << ",predicted_flow_m3hr\n";
    for (std::size_t i = 0; i < result.grid_values.size(); ++i)
        out << format_double(result.grid_values[i]) << ','
            << format_double(result.predicted_flow[i]) << '\n';
    out << "# trend: " << trend_name(result.trend.direction)
        << ", violations: " << result.trend.violation_count << '\n';
    return out.str();
}

std::vector<std::pair<double, double>> scatter_pairs(const TrainedModel& model,
                                                     const Dataset& validation) {
    if (validation.samples.empty())
        throw std::invalid_argument("scatter: empty validation set");
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(validation.samples.size());
    for (const auto& s : validation.samples)
        pairs.emplace_back(s.product_flow,
                           model.predict(s.sf_ratio, s.feed_temp, s.solvent_temp, s.rotation));
    return pairs;
}

std::string scatter_to_csv(const std::vector<std::pair<double, double>>& pairs) {
    std::ostringstream out;
    out << "actual,predicted\n";
    for (const auto& [a, p] : pairs)
        out << format_double(a) << ',' << format_double(p) << '\n';
    return out.str();
}

} // namespace rdcann

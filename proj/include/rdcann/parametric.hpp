#ifndef RDCANN_PARAMETRIC_HPP
#define RDCANN_PARAMETRIC_HPP

#include <string>
#include <vector>

#include "rdcann/data.hpp"
#include "rdcann/model_io.hpp"

namespace rdcann {

enum class SweepVariable { SfRatio, FeedTemp, SolventTemp, Rotation };

SweepVariable sweep_variable_from_name(const std::string& name);
const char* sweep_variable_name(SweepVariable v);

// One-factor-at-a-time sweep: vary one input over a grid while holding the
// other three at the baseline point.
struct SweepSpec {
    SweepVariable variable = SweepVariable::SfRatio;
    std::vector<double> grid; // strictly increasing, length >= 2
    double baseline_sf = 0.0;
    double baseline_feed_temp = 0.0;
    double baseline_solvent_temp = 0.0;
    double baseline_rotation = 0.0;
};

enum class Trend { Increasing, Decreasing, NonMonotone };

// Differences within +-tau of zero count as flat. An all-flat series is
// classified Increasing with zero violations (non-strict convention).
struct TrendSummary {
    Trend direction = Trend::Increasing;
    std::size_t violation_count = 0;
    double max_violation = 0.0;            // magnitude, same units as the values
    std::vector<std::size_t> violation_indices; // grid index of the offending row
};

struct SweepResult {
    std::vector<double> grid_values;
    std::vector<double> predicted_flow; // m3/hr, denormalized
    bool extrapolated = false;          // any grid/baseline value outside the fitted ranges
    TrendSummary trend;
};

inline constexpr double kTrendTolerance = 1e-9; // m3/hr

/// Trend classification from consecutive differences. Violations are
/// counter-trend steps; their index is the grid position of the later row.
TrendSummary monotonicity_report(const std::vector<double>& values, double tau = kTrendTolerance);

/// Runs the sweep through the trained model (normalize, forward,
/// denormalize per grid point) and attaches the trend summary.
SweepResult sweep(const TrainedModel& model, const SweepSpec& spec);

/// Sweep CSV: `<variable>,predicted_flow_m3hr` rows plus a
/// `# trend: <direction>, violations: <n>` trailer.
std::string sweep_to_csv(const SweepResult& result, SweepVariable variable);

/// One (actual, predicted) pair per validation sample, input order kept.
std::vector<std::pair<double, double>> scatter_pairs(const TrainedModel& model,
                                                     const Dataset& validation);

/// `actual,predicted` CSV for external plotting.
std::string scatter_to_csv(const std::vector<std::pair<double, double>>& pairs);

} // namespace rdcann

#endif

#ifndef RDCANN_DATA_HPP
#define RDCANN_DATA_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rdcann {

inline constexpr int kNumInputs = 4;
inline constexpr const char* kCsvHeader =
    "sf_ratio,feed_temp_c,solvent_temp_c,rotation_rpm,product_flow_m3hr";
inline constexpr std::array<const char*, 5> kColumnNames = {
    "sf_ratio", "feed_temp_c", "solvent_temp_c", "rotation_rpm", "product_flow_m3hr"};

// One operating record of the extraction column.
struct Sample {
    double sf_ratio = 0.0;     // solvent/feed ratio, dimensionless
    double feed_temp = 0.0;    // degC
    double solvent_temp = 0.0; // degC
    double rotation = 0.0;     // rpm
    double product_flow = 0.0; // m3/hr, the target

    std::array<double, kNumInputs> inputs() const {
        return {sf_ratio, feed_temp, solvent_temp, rotation};
    }
};

struct Dataset {
    std::vector<Sample> samples;
    std::string provenance; // source file path or generator description

    std::size_t size() const { return samples.size(); }
};

// Per-column min-max affine map onto [lo, hi]. Columns 0..3 are inputs,
// column 4 the target.
struct NormalizationSpec {
    std::array<double, 5> col_min{};
    std::array<double, 5> col_max{};
    double lo = 0.1;
    double hi = 0.9;

    double normalize_value(int col, double v) const;
    double denormalize_value(int col, double v) const;
};

// Dataset after normalization, in the layout the trainer consumes.
struct NormalizedData {
    std::vector<std::vector<double>> inputs;  // [n][4]
    std::vector<std::vector<double>> targets; // [n][1]
};

/// Parses the canonical CSV (header required verbatim). Throws
/// std::runtime_error naming the offending row/column for malformed cells,
/// schema violations, or Sample-invariant violations.
Dataset load_csv(const std::string& path);

/// Writes a dataset back in the canonical CSV format (17 significant digits).
void save_csv(const Dataset& ds, const std::string& path);

/// Fits per-column min/max from the given (training) dataset. Throws
/// std::runtime_error on an empty dataset or a constant column.
NormalizationSpec fit_normalizer(const Dataset& ds);

/// Applies the affine maps. Out-of-range values pass through un-clamped.
NormalizedData normalize(const Dataset& ds, const NormalizationSpec& spec);

/// Inverts the target column's map (network output -> m3/hr).
double denormalize_output(double value, const NormalizationSpec& spec);

/// Seeded shuffle, then first floor(n * train_fraction) rows train and the
/// rest validation. Exact partition. Throws std::invalid_argument on a
/// fraction outside (0, 1) or fewer than 2 samples.
std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction, std::uint64_t seed);

// Input ranges for the synthetic generator. Defaults are invented stand-ins
// for the (proprietary) plant operating envelope.
struct SurrogateRanges {
    double sf_lo = 1.0, sf_hi = 3.0;
    double feed_lo = 60.0, feed_hi = 110.0;
    double solvent_lo = 60.0, solvent_hi = 110.0;
    double rot_lo = 10.0, rot_hi = 60.0;
};

/// The documented surrogate response: smooth, strictly increasing in
/// sf_ratio and rotation, mildly nonlinear in both temperatures, always
/// positive over the default ranges. See README for the closed form.
double surrogate_flow(double sf_ratio, double feed_temp, double solvent_temp, double rotation);

/// Draws n samples with inputs uniform over the ranges and targets from
/// surrogate_flow, plus Gaussian noise of sd noise_sd * (surrogate value).
/// Deterministic per seed. Throws std::invalid_argument on n < 1 or
/// negative noise_sd.
Dataset generate_synthetic(std::size_t n, std::uint64_t seed, double noise_sd,
                           const SurrogateRanges& ranges = {});

} // namespace rdcann

#endif

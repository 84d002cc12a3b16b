#include "rdcann/data.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rdcann/errors.hpp"

#include "rdcann/format.hpp"
#include "rdcann/rng.hpp"

namespace rdcann {

double NormalizationSpec::normalize_value(int col, double v) const {
    double span = col_max[col] - col_min[col];
    return lo + (hi - lo) * (v - col_min[col]) / span;
}

double NormalizationSpec::denormalize_value(int col, double v) const {
    double span = col_max[col] - col_min[col];
    return col_min[col] + span * (v - lo) / (hi - lo);
}

static void check_sample(const Sample& s, std::size_t row) {
    auto bad = [row](const std::string& what) {
        throw std::runtime_error("row " + std::to_string(row) + ": " + what);
    };
    for (double v : {s.sf_ratio, s.feed_temp, s.solvent_temp, s.rotation, s.product_flow})
        if (!std::isfinite(v))
            bad("non-finite value");
    if (s.sf_ratio <= 0.0)
        bad("sf_ratio must be > 0");
    if (s.rotation < 0.0)
        bad("rotation_rpm must be >= 0");
    if (s.product_flow <= 0.0)
        bad("product_flow_m3hr must be > 0");
}

static std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

Dataset load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open file: " + path);
    std::string line;
    if (!std::getline(in, line))
        throw SchemaError(path + ": empty file");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != kCsvHeader)
        throw SchemaError(path + ": bad header, expected '" + kCsvHeader + "', got '" +
                                 line + "'");
    Dataset ds;
    ds.provenance = path;
    std::size_t row = 1; // header is row 0
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty()) {
            ++row;
            continue;
        }
        auto fields = split_fields(line);
        if (fields.size() != 5)
            throw SchemaError(path + ": row " + std::to_string(row) + ": expected 5 fields, got " +
                                     std::to_string(fields.size()));
        double vals[5];
        for (int c = 0; c < 5; ++c) {
            try {
                std::size_t used = 0;
                vals[c] = std::stod(fields[c], &used);
                if (used != fields[c].size())
                    throw std::invalid_argument("trailing junk");
            } catch (const std::exception&) {
                throw SchemaError(path + ": row " + std::to_string(row) + ", column " +
                                         kColumnNames[c] + ": non-numeric value '" + fields[c] + "'");
            }
        }
        Sample s{vals[0], vals[1], vals[2], vals[3], vals[4]};
        try {
            check_sample(s, row);
        } catch (const std::exception& e) {
            throw SchemaError(path + ": " + e.what());
        }
        ds.samples.push_back(s);
        ++row;
    }
    if (ds.samples.empty())
        throw SchemaError(path + ": empty dataset (header only)");
    return ds;
}

void save_csv(const Dataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write file: " + path);
    out << kCsvHeader << '\n';
    for (const auto& s : ds.samples) {
        out << format_double(s.sf_ratio) << ',' << format_double(s.feed_temp) << ','
            << format_double(s.solvent_temp) << ',' << format_double(s.rotation) << ','
            << format_double(s.product_flow) << '\n';
    }
    if (!out)
        throw IoError("write failed: " + path);
}

NormalizationSpec fit_normalizer(const Dataset& ds) {
    if (ds.samples.empty())
        throw std::invalid_argument("fit_normalizer: empty dataset");
    NormalizationSpec spec;
    for (int c = 0; c < 5; ++c) {
        spec.col_min[c] = std::numeric_limits<double>::infinity();
        spec.col_max[c] = -std::numeric_limits<double>::infinity();
    }
    for (const auto& s : ds.samples) {
        double vals[5] = {s.sf_ratio, s.feed_temp, s.solvent_temp, s.rotation, s.product_flow};
        for (int c = 0; c < 5; ++c) {
            spec.col_min[c] = std::min(spec.col_min[c], vals[c]);
            spec.col_max[c] = std::max(spec.col_max[c], vals[c]);
        }
    }
    for (int c = 0; c < 5; ++c)
        if (!(spec.col_max[c] > spec.col_min[c]))
            throw SchemaError(std::string("fit_normalizer: constant column '") +
                                     kColumnNames[c] + "'");
    return spec;
}

NormalizedData normalize(const Dataset& ds, const NormalizationSpec& spec) {
    NormalizedData nd;
    nd.inputs.reserve(ds.samples.size());
    nd.targets.reserve(ds.samples.size());
    for (const auto& s : ds.samples) {
        auto in = s.inputs();
        std::vector<double> row(kNumInputs);
        for (int c = 0; c < kNumInputs; ++c)
            row[c] = spec.normalize_value(c, in[c]);
        nd.inputs.push_back(std::move(row));
        nd.targets.push_back({spec.normalize_value(4, s.product_flow)});
    }
    return nd;
}

double denormalize_output(double value, const NormalizationSpec& spec) {
    return spec.denormalize_value(4, value);
}

std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction, std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw std::invalid_argument("split: train_fraction must be in (0, 1)");
    if (ds.samples.size() < 2)
        throw std::invalid_argument("split: need at least 2 samples");
    std::vector<std::size_t> idx(ds.samples.size());
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed);
    rng.shuffle(idx);
    auto n_train = static_cast<std::size_t>(std::floor(ds.samples.size() * train_fraction));
    Dataset train, val;
    train.provenance = ds.provenance + " [train split]";
    val.provenance = ds.provenance + " [validation split]";
    for (std::size_t i = 0; i < idx.size(); ++i)
        (i < n_train ? train : val).samples.push_back(ds.samples[idx[i]]);
    return {std::move(train), std::move(val)};
}

double surrogate_flow(double sf_ratio, double feed_temp, double solvent_temp, double rotation) {
    double tf = feed_temp - 85.0;
    double ts = solvent_temp - 85.0;
    return 14.0 + 5.0 * std::log(sf_ratio + 0.5) + 0.09 * rotation + 0.004 * sf_ratio * rotation +
           0.015 * tf - 1.2e-4 * tf * tf + 0.010 * ts - 0.9e-4 * ts * ts;
}

Dataset generate_synthetic(std::size_t n, std::uint64_t seed, double noise_sd,
                           const SurrogateRanges& ranges) {
    if (n < 1)
        throw std::invalid_argument("generate_synthetic: n must be >= 1");
    if (noise_sd < 0.0)
        throw std::invalid_argument("generate_synthetic: noise_sd must be >= 0");
    Rng rng(seed);
    Dataset ds;
    ds.provenance = "synthetic(seed=" + std::to_string(seed) + ", n=" + std::to_string(n) +
                    ", noise_sd=" + format_double(noise_sd) + ")";
    ds.samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Sample s;
        s.sf_ratio = rng.uniform(ranges.sf_lo, ranges.sf_hi);
        s.feed_temp = rng.uniform(ranges.feed_lo, ranges.feed_hi);
        s.solvent_temp = rng.uniform(ranges.solvent_lo, ranges.solvent_hi);
        s.rotation = rng.uniform(ranges.rot_lo, ranges.rot_hi);
        double base = surrogate_flow(s.sf_ratio, s.feed_temp, s.solvent_temp, s.rotation);
        double flow = base;
        if (noise_sd > 0.0) {
            // resample until positive so the Sample invariant holds
            do {
                flow = base + noise_sd * base * rng.normal();
            } while (flow <= 0.0);
        }
        s.product_flow = flow;
        ds.samples.push_back(s);
    }
    return ds;
}

} // namespace rdcann

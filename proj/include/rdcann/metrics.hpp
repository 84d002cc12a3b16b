#ifndef RDCANN_METRICS_HPP
#define RDCANN_METRICS_HPP

#include <utility>
#include <vector>

namespace rdcann {

using Matrix = std::vector<std::vector<double>>; // [exemplar][element]

// Predictions for one data set in both unit systems. MSE is computed on the
// normalized pair, %Error on the denormalized pair.
struct PredictionSet {
    Matrix denormalized_outputs; // dy
    Matrix denormalized_desired; // dd
    Matrix normalized_outputs;   // y
    Matrix normalized_desired;   // d
};

/// %Error = (100 / (N'*P)) * sum_ij |dy_ij - dd_ij| / dd_ij, on
/// denormalized values. Throws std::invalid_argument on shape mismatch and
/// std::domain_error when any dd_ij is zero (message names the exemplar).
double percent_error(const Matrix& dy, const Matrix& dd);

/// MSE = sum_ij (d_ij - y_ij)^2 / (N'*P), on normalized values.
double mse(const Matrix& y, const Matrix& d);

// Table-3-style summary: per-exemplar relative error in percent (elements
// averaged first when P > 1), reported as (mean, max). For P = 1 the mean
// equals percent_error.
struct RelativeErrors {
    double average_pct = 0.0;
    double maximum_pct = 0.0;
};
RelativeErrors relative_errors(const Matrix& dy, const Matrix& dd);

} // namespace rdcann

#endif

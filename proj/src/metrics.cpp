#include "rdcann/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rdcann {

static void check_shapes(const Matrix& a, const Matrix& b, const char* op) {
    if (a.empty() || a.size() != b.size())
        throw std::invalid_argument(std::string(op) + ": matrices must be non-empty and of equal shape");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].empty() || a[i].size() != b[i].size())
            throw std::invalid_argument(std::string(op) + ": row " + std::to_string(i) +
                                        " has mismatched or zero length");
    }
}

double percent_error(const Matrix& dy, const Matrix& dd) {
    check_shapes(dy, dd, "percent_error");
    double sum = 0.0;
    std::size_t terms = 0;
    for (std::size_t i = 0; i < dy.size(); ++i) {
        for (std::size_t j = 0; j < dy[i].size(); ++j) {
            if (dd[i][j] == 0.0)
                throw std::domain_error("percent_error: desired value is zero at exemplar " +
                                        std::to_string(i) + ", element " + std::to_string(j));
            sum += std::abs(dy[i][j] - dd[i][j]) / dd[i][j];
            ++terms;
        }
    }
    return 100.0 * sum / static_cast<double>(terms);
}

double mse(const Matrix& y, const Matrix& d) {
    check_shapes(y, d, "mse");
    double sum = 0.0;
    std::size_t terms = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        for (std::size_t j = 0; j < y[i].size(); ++j) {
            double e = d[i][j] - y[i][j];
            sum += e * e;
            ++terms;
        }
    }
    return sum / static_cast<double>(terms);
}

RelativeErrors relative_errors(const Matrix& dy, const Matrix& dd) {
    check_shapes(dy, dd, "relative_errors");
    RelativeErrors out;
    double sum = 0.0;
    for (std::size_t i = 0; i < dy.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < dy[i].size(); ++j) {
            if (dd[i][j] == 0.0)
                throw std::domain_error("relative_errors: desired value is zero at exemplar " +
                                        std::to_string(i) + ", element " + std::to_string(j));
            row += std::abs(dy[i][j] - dd[i][j]) / dd[i][j];
        }
        row *= 100.0 / static_cast<double>(dy[i].size());
        sum += row;
        if (row > out.maximum_pct)
            out.maximum_pct = row;
    }
    out.average_pct = sum / static_cast<double>(dy.size());
    return out;
}

} // namespace rdcann

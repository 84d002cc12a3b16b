#ifndef RDCANN_ERRORS_HPP
#define RDCANN_ERRORS_HPP

#include <stdexcept>

namespace rdcann {

// Failure families the CLI maps to distinct exit codes.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed files and column/format mismatches.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric failure, e.g. training divergence.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rdcann

#endif

#ifndef RDCANN_FORMAT_HPP
#define RDCANN_FORMAT_HPP

#include <cstdio>
#include <string>

namespace rdcann {

// Shortest-lossless-enough decimal form: 17 significant digits round-trip
// exactly for IEEE 754 doubles.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace rdcann

#endif

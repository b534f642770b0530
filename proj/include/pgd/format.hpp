#pragma once

#include <charconv>
#include <string>

namespace pgd::format {

/// Shortest decimal representation of a double that round-trips to the
/// same bits; keeps CSV output byte-stable across runs.
inline std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace pgd::format

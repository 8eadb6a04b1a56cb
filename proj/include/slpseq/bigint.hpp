#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace slpseq {

// Arbitrary-precision signed integer. Uncompressed text lengths, window
// counts, and highest-score matrix coordinates can all be exponential in the
// program length, so fixed-width integers are not an option anywhere near
// those quantities.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned k) {
    BigInt one = 1;
    return one << k;
}

inline std::string toString(const BigInt& v) { return v.str(); }

// Strict decimal parse (optional leading '-'); returns nullopt on any other
// character. cpp_int's own string constructor throws, which is awkward for
// CLI validation.
inline std::optional<BigInt> parseBigInt(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) return std::nullopt;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
    }
    return BigInt(std::string(s));
}

}  // namespace slpseq

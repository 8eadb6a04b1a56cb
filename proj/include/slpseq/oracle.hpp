#pragma once

#include <string_view>
#include <utility>
#include <vector>

// Brute-force reference implementations on plain uncompressed strings. These
// deliberately share no code with the compressed-side algorithms; they are
// the ground truth for the differential test suites and the CLI selfcheck.
namespace slpseq::oracle {

// Size caps keeping each oracle run in the seconds range.
inline constexpr std::size_t kMaxTextLength = 10000;
inline constexpr std::size_t kMaxSemilocalLength = 256;

// Classic quadratic dynamic-programming LCS score.
long long lcs(std::u32string_view a, std::u32string_view b);

// All critical points of the extended highest-score matrix of a against b,
// computed from an explicit dynamic program over the extended alignment dag.
// Point (i+1/2, j+1/2) is returned as the integer pair (i, j), sorted.
// Requires 1 <= |a|,|b| <= kMaxSemilocalLength; the result always holds
// exactly |a|+|b| points.
std::vector<std::pair<long long, long long>> semilocalCriticalPoints(std::u32string_view a,
                                                                     std::u32string_view b);

bool containsSubsequence(std::u32string_view t, std::u32string_view p);
long long longestPrefix(std::u32string_view t, std::u32string_view p);

// Window counts by exhaustive enumeration with greedy containment tests;
// minimality is checked by trimming one character off either end.
long long countMinimalWindows(std::u32string_view t, std::u32string_view p);
long long countFixedWindows(std::u32string_view t, std::u32string_view p, long long w);
long long countBoundedMinimal(std::u32string_view t, std::u32string_view p, long long w);

// The windows behind the counts, as 1-based inclusive (start, end) pairs in
// increasing start order.
std::vector<std::pair<long long, long long>> minimalWindows(std::u32string_view t,
                                                            std::u32string_view p);
std::vector<std::pair<long long, long long>> fixedWindows(std::u32string_view t,
                                                          std::u32string_view p, long long w);

}  // namespace slpseq::oracle

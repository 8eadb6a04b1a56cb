#pragma once

#include "slpseq/bigint.hpp"
#include "slpseq/semilocal.hpp"
#include "slpseq/slp.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slpseq {

// Per-symbol jump tables for global subsequence recognition. lambda(k) is
// the length of the longest prefix of the pattern-with-k-dropped-characters
// that embeds into the symbol's string, added to k; tables compose along
// concatenations, so the whole build is O(m̄ n).
struct JumpTable {
    std::vector<std::vector<int>> lambda;  // lambda[sym-1][k], k in [0, n]

    const std::vector<int>& forSymbol(Symbol sym) const { return lambda.at(sym - 1); }
};

JumpTable buildJumpTable(const Slp& slp, std::u32string_view pattern);

// Length of the longest pattern prefix that is a subsequence of the text.
int globalLongestPrefix(const Slp& slp, std::u32string_view pattern);

// Whole-pattern containment; the empty pattern is contained in anything.
bool containsSubsequence(const Slp& slp, std::u32string_view pattern);

// The partial implicit highest-score matrix of every program symbol against
// the pattern, each with its dominance index, built bottom-up: terminals by
// the base-case scan, concatenations by matrix composition.
class SemilocalCache {
public:
    struct Entry {
        PartialScoreMatrix matrix;
        DominanceIndex index;
    };

    SemilocalCache(const Slp& slp, std::u32string_view pattern);

    int patternLength() const { return n_; }
    Symbol size() const { return static_cast<Symbol>(entries_.size()); }
    const Entry& entry(Symbol sym) const { return entries_.at(sym - 1); }

private:
    int n_;
    std::vector<Entry> entries_;
};

// Length of the shortest suffix of the entry's string containing the pattern
// prefix of length nPrime as a subsequence, or nullopt if even the whole
// string does not contain it. Binary search over the row coordinates of the
// entry's nonzeros, probing with suffix-prefix queries.
std::optional<BigInt> shortestSuffixContaining(const SemilocalCache::Entry& entry, int nPrime);

// Symmetric: shortest prefix containing the pattern suffix of length nSuffix.
std::optional<BigInt> shortestPrefixContaining(const SemilocalCache::Entry& entry, int nSuffix);

enum class WindowMode { Minimal, Fixed, BoundedMinimal };

// Facade over one (program, pattern) pair: lazily builds the jump table and
// the semilocal cache, memoizes per-symbol window counts, and serves every
// query kind. All results are exact; counts are arbitrary precision.
class Recognizer {
public:
    Recognizer(Slp slp, std::u32string_view pattern);

    int longestPrefix();
    bool contains();

    // LCS(text, pattern). Requires a nonempty pattern.
    int lcs();

    BigInt countMinimalWindows();
    BigInt countFixedWindows(const BigInt& w);
    BigInt countBoundedMinimal(const BigInt& w);

    struct Report {
        std::vector<std::pair<BigInt, BigInt>> windows;  // 1-based inclusive
        bool truncated = false;
    };
    // Up to `limit` windows in increasing start order, descending only into
    // subtrees whose counts are nonzero. w is required for Fixed and
    // BoundedMinimal modes.
    Report reportWindows(WindowMode mode, const std::optional<BigInt>& w, std::size_t limit);

    const SemilocalCache& cache();
    const Slp& slp() const { return slp_; }
    const std::u32string& pattern() const { return pattern_; }

private:
    struct Window {
        BigInt start;
        BigInt end;
        bool operator==(const Window&) const = default;
    };
    struct FixedClass {
        BigInt wLo;  // inclusive range of left-part lengths w'
        BigInt wHi;
        bool episode = false;
    };

    void requirePattern() const;
    const std::vector<int>& lambdaRoot();

    // Boundary candidate machinery for one concatenation statement. The
    // candidate list includes the degenerate splits (whole pattern on one
    // side); those never count but serve as rejection witnesses, without
    // which the shared-endpoint minimality test is incomplete.
    std::vector<Window> boundaryCandidates(Symbol sym);
    std::vector<Window> boundarySurvivors(Symbol sym, const std::optional<BigInt>& maxLen);
    std::vector<FixedClass> fixedClasses(Symbol sym, const BigInt& w);

    const std::vector<BigInt>& minimalCounts();
    const std::vector<BigInt>& boundedCounts(const BigInt& w);
    const std::vector<BigInt>& fixedCounts(const BigInt& w);

    std::vector<Window> gatherMinimal(Symbol sym, const BigInt& offset, std::size_t limit,
                                      const std::vector<BigInt>& counts,
                                      const std::optional<BigInt>& maxLen);
    std::vector<Window> gatherFixed(Symbol sym, const BigInt& offset, std::size_t limit,
                                    const std::vector<BigInt>& counts, const BigInt& w);

    Slp slp_;
    std::u32string pattern_;
    int n_;
    std::optional<JumpTable> jumps_;
    std::optional<SemilocalCache> cache_;
    std::optional<std::vector<BigInt>> minimalCounts_;
    std::map<BigInt, std::vector<BigInt>> boundedCounts_;
    std::map<BigInt, std::vector<BigInt>> fixedCounts_;
};

// One-shot conveniences.
inline int lcs(const Slp& slp, std::u32string_view pattern) {
    return Recognizer(slp, pattern).lcs();
}

}  // namespace slpseq

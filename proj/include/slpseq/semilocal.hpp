#pragma once

#include "slpseq/bigint.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slpseq {

// One nonzero of an implicit highest-score matrix. Odd half-integer
// coordinates are stored as integers: the pair (i, j) stands for the point
// (i + 1/2, j + 1/2).
using ScorePoint = std::pair<BigInt, BigInt>;

// The partial implicit representation of the highest-score matrix of a text
// (length m, possibly astronomically large) against a pattern (length n):
// the nonzeros with row in <0:n> or column in <0:n>, which is everything the
// string-substring, suffix-prefix and prefix-suffix queries can ever touch.
// Their number is between n and 2n, independent of m.
//
// Storage is two parallel maps plus one optional boundary artifact:
//   rowToCol[r] = column of the unique nonzero with row r+1/2,  r in [0,n)
//   colToRow[c] = row of the unique nonzero with column c+1/2,  c in [0,n)
// A nonzero with both coordinates small appears in both maps. The m=1 base
// case with no character match additionally produces the single nonzero
// (-1/2, n+1/2); it can never be dominated by a supported query point but is
// part of the full representation, so it is carried along explicitly.
class PartialScoreMatrix {
public:
    // Full implicit representation of the 1 x n alignment dag for a single
    // text character against the pattern, built by one scan of the pattern.
    static PartialScoreMatrix baseCase(char32_t c, std::u32string_view pattern);

    const BigInt& textLength() const { return m_; }
    int patternLength() const { return n_; }

    const std::vector<BigInt>& rowToCol() const { return rowToCol_; }
    const std::vector<BigInt>& colToRow() const { return colToRow_; }
    const std::optional<ScorePoint>& outsidePoint() const { return outside_; }

    // Canonical sorted nonzero list; the equality representation.
    std::vector<ScorePoint> nonzeros() const;

    // Debug dump: one "2i+1,2j+1" line per nonzero in canonical order
    // (doubling turns the half-integer coordinates into odd integers).
    std::string dump() const;

    // Structural invariant check; throws std::logic_error on violation.
    void validate() const;

    bool operator==(const PartialScoreMatrix& other) const;

private:
    friend PartialScoreMatrix concat(const PartialScoreMatrix&, const PartialScoreMatrix&);
    PartialScoreMatrix() = default;

    BigInt m_;
    int n_ = 0;
    std::vector<BigInt> rowToCol_;
    std::vector<BigInt> colToRow_;
    std::optional<ScorePoint> outside_;
};

// Composition: the partial representation of T'T'' against the pattern from
// the partial representations of T' and T''. Nonzeros of the left matrix
// with column beyond n and of the right matrix with row below 0 pass through
// (suitably shifted); the n-by-n remainder is rank-compressed, multiplied
// with mulDistFast, and mapped back. Throws on pattern-length mismatch.
PartialScoreMatrix concat(const PartialScoreMatrix& left, const PartialScoreMatrix& right);

// Static dominance-counting structure over a matrix's nonzeros: a segment
// tree of column lists in row order, answering count queries in O(log^2 n),
// plus the three LCS query kinds recovered through A(i,j) = j - i - d(i,j).
class DominanceIndex {
public:
    explicit DominanceIndex(const PartialScoreMatrix& matrix);

    const BigInt& textLength() const { return m_; }
    int patternLength() const { return n_; }

    // Number of nonzeros (i,j) with i0 < i and j < j0.
    int count(const BigInt& i0, const BigInt& j0) const;

    // LCS(T, pattern[j+1..jp]), 0 <= j <= jp <= n.
    int stringSubstring(int j, int jp) const;

    // LCS(suffix of T of length l, pattern prefix of length jp), 0 <= l <= m.
    int suffixPrefix(const BigInt& l, int jp) const;

    // LCS(prefix of T of length l, pattern suffix after position j).
    int prefixSuffix(const BigInt& l, int j) const;

    // All nonzero row (column) coordinates, ascending. Exposed for the
    // breakpoint searches in the window-counting algorithms.
    const std::vector<BigInt>& sortedRows() const { return rows_; }
    const std::vector<BigInt>& sortedCols() const { return colsSorted_; }

private:
    BigInt m_;
    int n_ = 0;
    std::vector<BigInt> rows_;          // ascending row coordinates
    std::vector<BigInt> colsSorted_;    // ascending column coordinates
    std::size_t leaves_ = 0;
    std::vector<std::vector<BigInt>> tree_;  // tree_[leaves_+i] = {col of i-th row}
};

}  // namespace slpseq

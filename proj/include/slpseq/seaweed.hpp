#pragma once

#include "slpseq/bigint.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace slpseq {

// A finite permutation matrix over odd half-integer indices ⟨0:N⟩². Index
// i+1/2 is stored as the integer rank i, so row r carries its single nonzero
// in column rowToCol()[r].
class SeaweedPerm {
public:
    SeaweedPerm() = default;
    // Validates that rowToCol is a bijection on {0..N-1}.
    explicit SeaweedPerm(std::vector<int> rowToCol);

    static SeaweedPerm identity(int n);

    int size() const { return static_cast<int>(rowToCol_.size()); }
    int colOfRow(int r) const { return rowToCol_.at(static_cast<std::size_t>(r)); }
    const std::vector<int>& rowToCol() const { return rowToCol_; }
    std::vector<int> colToRow() const;

    bool operator==(const SeaweedPerm&) const = default;

private:
    std::vector<int> rowToCol_;
};

// Distribution-matrix element d(i0,j0): the number of nonzeros (i,j) with
// i > i0 and j < j0. Linear scan; meant for tests and small cases.
int distValue(const SeaweedPerm& perm, int i0, int j0);

// (min,+)-composition of permutation-distribution matrices, computed the
// direct way: materialize both (N+1)x(N+1) distribution matrices, take the
// elementwise min-plus product, and recover the density by the 2x2 stencil.
// O(N^3) time, O(N^2) memory. This is the correctness reference; it is never
// used on a hot path.
SeaweedPerm mulDistOracle(const SeaweedPerm& a, const SeaweedPerm& b);

// Same result as mulDistOracle, by divide and conquer on the shared middle
// index: recurse on the low/high halves and stitch the two sub-products back
// together along a monotone staircase. O(N log N) time, O(N) working memory.
SeaweedPerm mulDistFast(const SeaweedPerm& a, const SeaweedPerm& b);

// Rank compression of a point set with pairwise-distinct first components and
// pairwise-distinct second components: the permutation in rank space plus the
// order-preserving maps back to the original (possibly huge) coordinates.
struct RankCompressed {
    SeaweedPerm perm;
    std::vector<BigInt> rowCoords;  // ascending; rank r had row rowCoords[r]
    std::vector<BigInt> colCoords;  // ascending; rank c had column colCoords[c]
};

RankCompressed compressRanks(const std::vector<std::pair<BigInt, BigInt>>& points);

}  // namespace slpseq

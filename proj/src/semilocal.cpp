#include "slpseq/semilocal.hpp"

#include "slpseq/seaweed.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace slpseq {

PartialScoreMatrix PartialScoreMatrix::baseCase(char32_t c, std::u32string_view pattern) {
    const int n = static_cast<int>(pattern.size());
    if (n == 0) throw std::invalid_argument("pattern must be nonempty");

    PartialScoreMatrix out;
    out.m_ = 1;
    out.n_ = n;
    out.rowToCol_.assign(static_cast<std::size_t>(n), BigInt(0));
    out.colToRow_.assign(static_cast<std::size_t>(n), BigInt(0));

    // Non-match positions put a nonzero on the diagonal; the match positions
    // j_1 < ... < j_k chain together: (-1/2, j_1-1/2), consecutive links
    // (j_t-1/2, j_{t+1}-1/2), and (j_k-1/2, n+1/2). With no match at all the
    // chain degenerates to the single boundary nonzero (-1/2, n+1/2).
    int prevMatch = -1;  // 1-based position of the previous match, -1 if none
    for (int j = 1; j <= n; ++j) {
        if (pattern[static_cast<std::size_t>(j - 1)] == c) {
            if (prevMatch == -1) {
                out.colToRow_[static_cast<std::size_t>(j - 1)] = -1;
            } else {
                out.rowToCol_[static_cast<std::size_t>(prevMatch - 1)] = j - 1;
                out.colToRow_[static_cast<std::size_t>(j - 1)] = prevMatch - 1;
            }
            prevMatch = j;
        } else {
            out.rowToCol_[static_cast<std::size_t>(j - 1)] = j - 1;
            out.colToRow_[static_cast<std::size_t>(j - 1)] = j - 1;
        }
    }
    if (prevMatch == -1) {
        out.outside_ = ScorePoint(BigInt(-1), BigInt(n));
    } else {
        out.rowToCol_[static_cast<std::size_t>(prevMatch - 1)] = n;
    }
    out.validate();
    return out;
}

PartialScoreMatrix concat(const PartialScoreMatrix& left, const PartialScoreMatrix& right) {
    if (left.patternLength() != right.patternLength())
        throw std::invalid_argument("pattern length mismatch in concat");
    const int n = left.patternLength();
    const BigInt& mL = left.textLength();
    const BigInt& mR = right.textLength();

    PartialScoreMatrix out;
    out.m_ = mL + mR;
    out.n_ = n;
    out.rowToCol_.assign(static_cast<std::size_t>(n), BigInt(0));
    out.colToRow_.assign(static_cast<std::size_t>(n), BigInt(0));
    std::vector<char> rowSet(static_cast<std::size_t>(n), 0), colSet(static_cast<std::size_t>(n), 0);

    // Left nonzeros whose column is past the pattern range survive with the
    // column shifted by the length of the right operand.
    for (int r = 0; r < n; ++r) {
        if (left.rowToCol_[static_cast<std::size_t>(r)] >= n) {
            out.rowToCol_[static_cast<std::size_t>(r)] = left.rowToCol_[static_cast<std::size_t>(r)] + mR;
            rowSet[static_cast<std::size_t>(r)] = 1;
        }
    }
    // Right nonzeros whose row is below 0 survive with the row shifted down
    // by the length of the left operand.
    for (int c = 0; c < n; ++c) {
        if (right.colToRow_[static_cast<std::size_t>(c)] < 0) {
            out.colToRow_[static_cast<std::size_t>(c)] = right.colToRow_[static_cast<std::size_t>(c)] - mL;
            colSet[static_cast<std::size_t>(c)] = 1;
        }
    }

    // The n remaining nonzeros on each side meet in the shared middle range
    // <0:n>. Their outer coordinates are rank-compressed; the compressed
    // product pairs them up, and the pairing is shift-invariant, so the
    // mapped-back coordinates need no further adjustment.
    std::vector<ScorePoint> leftMid, rightMid;
    leftMid.reserve(static_cast<std::size_t>(n));
    rightMid.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) leftMid.emplace_back(left.colToRow_[static_cast<std::size_t>(c)], BigInt(c));
    for (int r = 0; r < n; ++r) rightMid.emplace_back(BigInt(r), right.rowToCol_[static_cast<std::size_t>(r)]);
    const RankCompressed pa = compressRanks(leftMid);
    const RankCompressed pb = compressRanks(rightMid);
    const SeaweedPerm product = mulDistFast(pa.perm, pb.perm);

    for (int r = 0; r < n; ++r) {
        const BigInt& x = pa.rowCoords[static_cast<std::size_t>(r)];
        const BigInt& y = pb.colCoords[static_cast<std::size_t>(product.colOfRow(r))];
        const bool xSmall = x >= 0;  // x <= n-1 always (rows of the left matrix)
        const bool ySmall = y < n;   // y >= 0 always (columns of the right matrix)
        if (xSmall) {
            const auto xi = static_cast<std::size_t>(static_cast<long long>(x));
            if (rowSet[xi]) throw std::logic_error("concat produced two nonzeros in one row");
            out.rowToCol_[xi] = y;
            rowSet[xi] = 1;
        }
        if (ySmall) {
            const auto yi = static_cast<std::size_t>(static_cast<long long>(y));
            if (colSet[yi]) throw std::logic_error("concat produced two nonzeros in one column");
            out.colToRow_[yi] = x;
            colSet[yi] = 1;
        }
    }

    for (int r = 0; r < n; ++r)
        if (!rowSet[static_cast<std::size_t>(r)]) throw std::logic_error("concat left a row slot empty");
    for (int c = 0; c < n; ++c)
        if (!colSet[static_cast<std::size_t>(c)]) throw std::logic_error("concat left a column slot empty");
    out.validate();
    return out;
}

std::vector<ScorePoint> PartialScoreMatrix::nonzeros() const {
    std::vector<ScorePoint> pts;
    pts.reserve(rowToCol_.size() + colToRow_.size() + 1);
    for (int r = 0; r < n_; ++r) pts.emplace_back(BigInt(r), rowToCol_[static_cast<std::size_t>(r)]);
    for (int c = 0; c < n_; ++c)
        if (colToRow_[static_cast<std::size_t>(c)] < 0) pts.emplace_back(colToRow_[static_cast<std::size_t>(c)], BigInt(c));
    if (outside_) pts.push_back(*outside_);
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::string PartialScoreMatrix::dump() const {
    std::ostringstream os;
    for (const ScorePoint& p : nonzeros())
        os << BigInt(2 * p.first + 1).str() << "," << BigInt(2 * p.second + 1).str() << "\n";
    return os.str();
}

void PartialScoreMatrix::validate() const {
    if (n_ <= 0 || m_ < 1) throw std::logic_error("partial matrix with empty text or pattern");
    if (static_cast<int>(rowToCol_.size()) != n_ || static_cast<int>(colToRow_.size()) != n_)
        throw std::logic_error("map sizes disagree with pattern length");
    const auto pts = nonzeros();
    if (static_cast<int>(pts.size()) < n_ || static_cast<int>(pts.size()) > 2 * n_)
        throw std::logic_error("nonzero count outside [n, 2n]");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& [r, c] = pts[i];
        if (r < -m_ || r > n_ - 1 || c < 0 || c > m_ + n_ - 1)
            throw std::logic_error("nonzero outside the core range");
        if (r > c) throw std::logic_error("nonzero above the i <= j diagonal");
        if (i > 0 && pts[i - 1].first == r) throw std::logic_error("duplicate row coordinate");
    }
    // Cross-consistency of the two maps on shared nonzeros.
    for (int r = 0; r < n_; ++r) {
        const BigInt& c = rowToCol_[static_cast<std::size_t>(r)];
        if (c < n_ && colToRow_[static_cast<std::size_t>(static_cast<long long>(c))] != r)
            throw std::logic_error("row and column maps disagree");
    }
    std::vector<char> colSeen(static_cast<std::size_t>(n_), 0);
    for (const auto& p : pts) {
        if (p.second < n_) {
            const auto ci = static_cast<std::size_t>(static_cast<long long>(p.second));
            if (colSeen[ci]) throw std::logic_error("duplicate column coordinate");
            colSeen[ci] = 1;
        }
    }
}

bool PartialScoreMatrix::operator==(const PartialScoreMatrix& other) const {
    return m_ == other.m_ && n_ == other.n_ && nonzeros() == other.nonzeros();
}

DominanceIndex::DominanceIndex(const PartialScoreMatrix& matrix)
    : m_(matrix.textLength()), n_(matrix.patternLength()) {
    auto pts = matrix.nonzeros();  // already sorted by row
    const std::size_t count = pts.size();
    rows_.reserve(count);
    colsSorted_.reserve(count);
    for (const auto& p : pts) {
        rows_.push_back(p.first);
        colsSorted_.push_back(p.second);
    }
    std::sort(colsSorted_.begin(), colsSorted_.end());

    leaves_ = 1;
    while (leaves_ < count) leaves_ <<= 1;
    tree_.assign(2 * leaves_, {});
    for (std::size_t i = 0; i < count; ++i) tree_[leaves_ + i] = {pts[i].second};
    for (std::size_t v = leaves_ - 1; v >= 1; --v) {
        const auto& a = tree_[2 * v];
        const auto& b = tree_[2 * v + 1];
        auto& dst = tree_[v];
        dst.resize(a.size() + b.size());
        std::merge(a.begin(), a.end(), b.begin(), b.end(), dst.begin());
    }
}

int DominanceIndex::count(const BigInt& i0, const BigInt& j0) const {
    // Row r (stored integer) is dominated when r >= i0; column c when c < j0.
    std::size_t lo = static_cast<std::size_t>(
        std::lower_bound(rows_.begin(), rows_.end(), i0) - rows_.begin());
    std::size_t l = lo + leaves_;
    std::size_t r = rows_.size() + leaves_;
    int total = 0;
    auto countIn = [&](const std::vector<BigInt>& v) {
        total += static_cast<int>(std::lower_bound(v.begin(), v.end(), j0) - v.begin());
    };
    while (l < r) {
        if (l & 1) countIn(tree_[l++]);
        if (r & 1) countIn(tree_[--r]);
        l >>= 1;
        r >>= 1;
    }
    return total;
}

int DominanceIndex::stringSubstring(int j, int jp) const {
    if (j < 0 || j > jp || jp > n_) throw std::out_of_range("string-substring query out of range");
    return jp - j - count(BigInt(j), BigInt(jp));
}

int DominanceIndex::suffixPrefix(const BigInt& l, int jp) const {
    if (l < 0 || l > m_ || jp < 0 || jp > n_) throw std::out_of_range("suffix-prefix query out of range");
    // A(-(m-l), jp) - (m-l) with A recovered by dominance counting.
    return jp - count(l - m_, BigInt(jp));
}

int DominanceIndex::prefixSuffix(const BigInt& l, int j) const {
    if (l < 0 || l > m_ || j < 0 || j > n_) throw std::out_of_range("prefix-suffix query out of range");
    // A(j, m+n-l) - m + l.
    return n_ - j - count(BigInt(j), m_ + n_ - l);
}

}  // namespace slpseq

#include "slpseq/seaweed.hpp"

#include <algorithm>
#include <numeric>

namespace slpseq {

SeaweedPerm::SeaweedPerm(std::vector<int> rowToCol) : rowToCol_(std::move(rowToCol)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int c : rowToCol_) {
        if (c < 0 || c >= n || seen[static_cast<std::size_t>(c)])
            throw std::invalid_argument("row-to-column map is not a permutation");
        seen[static_cast<std::size_t>(c)] = true;
    }
}

SeaweedPerm SeaweedPerm::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return SeaweedPerm(std::move(v));
}

std::vector<int> SeaweedPerm::colToRow() const {
    std::vector<int> inv(rowToCol_.size());
    for (int r = 0; r < size(); ++r) inv[static_cast<std::size_t>(rowToCol_[static_cast<std::size_t>(r)])] = r;
    return inv;
}

int distValue(const SeaweedPerm& perm, int i0, int j0) {
    const int n = perm.size();
    if (i0 < 0 || i0 > n || j0 < 0 || j0 > n) throw std::out_of_range("distribution index out of range");
    // Nonzero (r+1/2, c+1/2) is counted when r+1/2 > i0 and c+1/2 < j0.
    int count = 0;
    for (int r = i0; r < n; ++r)
        if (perm.colOfRow(r) < j0) ++count;
    return count;
}

SeaweedPerm mulDistOracle(const SeaweedPerm& a, const SeaweedPerm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    const int n = a.size();
    const std::size_t w = static_cast<std::size_t>(n) + 1;

    // d(i,j) over the integer grid [0:n]^2, row-major.
    auto materialize = [&](const SeaweedPerm& p) {
        std::vector<int> d(w * w, 0);
        for (int i = n - 1; i >= 0; --i) {
            const int c = p.colOfRow(i);
            for (int j = 0; j <= n; ++j)
                d[static_cast<std::size_t>(i) * w + static_cast<std::size_t>(j)] =
                    d[(static_cast<std::size_t>(i) + 1) * w + static_cast<std::size_t>(j)] + (c < j ? 1 : 0);
        }
        return d;
    };
    const std::vector<int> dA = materialize(a);
    const std::vector<int> dB = materialize(b);

    // dBT[k][j] = dB[j][k], so the min-plus inner loop is contiguous.
    std::vector<int> dBT(w * w);
    for (std::size_t j = 0; j < w; ++j)
        for (std::size_t k = 0; k < w; ++k) dBT[k * w + j] = dB[j * w + k];

    std::vector<int> dC(w * w);
    for (std::size_t i = 0; i < w; ++i) {
        const int* ra = &dA[i * w];
        for (std::size_t k = 0; k < w; ++k) {
            const int* rb = &dBT[k * w];
            int best = ra[0] + rb[0];
            for (std::size_t j = 1; j < w; ++j) best = std::min(best, ra[j] + rb[j]);
            dC[i * w + k] = best;
        }
    }

    std::vector<int> out(static_cast<std::size_t>(n), -1);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const std::size_t i = static_cast<std::size_t>(r), k = static_cast<std::size_t>(c);
            const int v = dC[i * w + (k + 1)] - dC[i * w + k] - dC[(i + 1) * w + (k + 1)] + dC[(i + 1) * w + k];
            if (v == 1) {
                if (out[i] != -1) throw std::logic_error("density stencil produced two nonzeros in a row");
                out[i] = c;
            } else if (v != 0) {
                throw std::logic_error("density stencil value outside {0,1}");
            }
        }
    }
    return SeaweedPerm(std::move(out));
}

namespace {

// State for the staircase merge of one divide-and-conquer level. C_lo and
// C_hi are the two mapped-back sub-products; together their rows (and their
// columns) partition {0..n-1}. The merged matrix C satisfies, at every
// integer point,
//   d_C(i,k) = min(M_lo, M_hi),
//   M_lo(i,k) = d_Clo(i,k) + gHi(k),   gHi(k) = #{hi columns < k},
//   M_hi(i,k) = d_Chi(i,k) + fLo(i),   fLo(i) = #{lo rows >= i},
// which follows from splitting the middle index of the min-plus product at
// mid. The cursor maintains M_lo and M_hi under unit moves of (i,k).
struct MergeCursor {
    const std::vector<char>& rowIsLo;
    const std::vector<char>& colIsLo;
    const std::vector<int>& rowToCol;  // union of C_lo and C_hi nonzeros
    const std::vector<int>& colToRow;
    int i = 0;
    int k = 0;
    int mlo = 0;
    int mhi = 0;  // starts at fLo(0) = number of lo rows

    int value() const { return std::min(mlo, mhi); }
    int delta() const { return mhi - mlo; }

    void right() {  // k -> k+1; column rank k enters the "< k" range
        const int r = colToRow[static_cast<std::size_t>(k)];
        if (colIsLo[static_cast<std::size_t>(k)]) {
            if (r >= i) ++mlo;
        } else {
            ++mlo;
            if (r >= i) ++mhi;
        }
        ++k;
    }
    void left() {
        --k;
        const int r = colToRow[static_cast<std::size_t>(k)];
        if (colIsLo[static_cast<std::size_t>(k)]) {
            if (r >= i) --mlo;
        } else {
            --mlo;
            if (r >= i) --mhi;
        }
    }
    void down() {  // i -> i+1; row rank i leaves the ">= i" range
        const int c = rowToCol[static_cast<std::size_t>(i)];
        if (rowIsLo[static_cast<std::size_t>(i)]) {
            if (c < k) --mlo;
            --mhi;
        } else {
            if (c < k) --mhi;
        }
        ++i;
    }
    void up() {
        --i;
        const int c = rowToCol[static_cast<std::size_t>(i)];
        if (rowIsLo[static_cast<std::size_t>(i)]) {
            if (c < k) ++mlo;
            ++mhi;
        } else {
            if (c < k) ++mhi;
        }
    }
    void moveTo(int ti, int tk) {
        while (i < ti) down();
        while (i > ti) up();
        while (k < tk) right();
        while (k > tk) left();
    }
};

std::vector<int> mulRec(const std::vector<int>& a, const std::vector<int>& b) {
    const int n = static_cast<int>(a.size());
    if (n <= 1) return a;  // size 0 or the single nonzero (0,0)

    const int mid = n / 2;
    const int nLo = mid;

    // Restrict A to nonzeros by column half: columns below mid keep their
    // value as the compressed rank, rows are compressed by scan order.
    std::vector<int> rowsLo, rowsHi, aLo, aHi;
    rowsLo.reserve(static_cast<std::size_t>(nLo));
    rowsHi.reserve(static_cast<std::size_t>(n - nLo));
    std::vector<char> rowIsLo(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        if (a[static_cast<std::size_t>(r)] < mid) {
            rowIsLo[static_cast<std::size_t>(r)] = 1;
            rowsLo.push_back(r);
            aLo.push_back(a[static_cast<std::size_t>(r)]);
        } else {
            rowsHi.push_back(r);
            aHi.push_back(a[static_cast<std::size_t>(r)] - mid);
        }
    }

    // Restrict B by row half: rows below mid are already ranks, columns are
    // compressed by prefix-counting their half membership.
    std::vector<int> bInv(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) bInv[static_cast<std::size_t>(b[static_cast<std::size_t>(j)])] = j;
    std::vector<char> colIsLo(static_cast<std::size_t>(n));
    std::vector<int> colRank(static_cast<std::size_t>(n));
    std::vector<int> bLoCols, bHiCols;
    for (int c = 0; c < n; ++c) {
        if (bInv[static_cast<std::size_t>(c)] < mid) {
            colIsLo[static_cast<std::size_t>(c)] = 1;
            colRank[static_cast<std::size_t>(c)] = static_cast<int>(bLoCols.size());
            bLoCols.push_back(c);
        } else {
            colRank[static_cast<std::size_t>(c)] = static_cast<int>(bHiCols.size());
            bHiCols.push_back(c);
        }
    }
    std::vector<int> bLo(static_cast<std::size_t>(nLo)), bHi(static_cast<std::size_t>(n - nLo));
    for (int j = 0; j < n; ++j) {
        const int c = b[static_cast<std::size_t>(j)];
        if (j < mid)
            bLo[static_cast<std::size_t>(j)] = colRank[static_cast<std::size_t>(c)];
        else
            bHi[static_cast<std::size_t>(j - mid)] = colRank[static_cast<std::size_t>(c)];
    }

    const std::vector<int> cLo = mulRec(aLo, bLo);
    const std::vector<int> cHi = mulRec(aHi, bHi);

    // Map both sub-products back to the original coordinates.
    std::vector<int> rowToCol(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < cLo.size(); ++r)
        rowToCol[static_cast<std::size_t>(rowsLo[r])] = bLoCols[static_cast<std::size_t>(cLo[r])];
    for (std::size_t r = 0; r < cHi.size(); ++r)
        rowToCol[static_cast<std::size_t>(rowsHi[r])] = bHiCols[static_cast<std::size_t>(cHi[r])];
    std::vector<int> colToRow(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) colToRow[static_cast<std::size_t>(rowToCol[static_cast<std::size_t>(r)])] = r;

    // kappa[i] = least k with M_hi(i,k) <= M_lo(i,k), or n+1 when the whole
    // row stays on the low side. The difference is nonincreasing in both i
    // and k, so a two-pointer walk suffices.
    MergeCursor cur{rowIsLo, colIsLo, rowToCol, colToRow};
    cur.mhi = nLo;
    std::vector<int> kappa(static_cast<std::size_t>(n) + 1);
    while (cur.k < n && cur.delta() > 0) cur.right();
    kappa[0] = (cur.delta() > 0) ? n + 1 : cur.k;
    for (int i = 1; i <= n; ++i) {
        cur.down();
        if (cur.delta() > 0) {
            kappa[static_cast<std::size_t>(i)] = n + 1;
            continue;
        }
        while (cur.k > 0) {
            cur.left();
            if (cur.delta() > 0) {
                cur.right();
                break;
            }
        }
        kappa[static_cast<std::size_t>(i)] = cur.k;
    }

    // Cells strictly on one side inherit that side's nonzero; cells touching
    // the staircase get their density evaluated from the four corners.
    std::vector<int> out(static_cast<std::size_t>(n), -1);
    for (int r = 0; r < n; ++r) {
        const int c = rowToCol[static_cast<std::size_t>(r)];
        const bool keep = rowIsLo[static_cast<std::size_t>(r)]
                              ? (c + 1 < kappa[static_cast<std::size_t>(r) + 1])
                              : (c >= kappa[static_cast<std::size_t>(r)]);
        if (keep) out[static_cast<std::size_t>(r)] = c;
    }
    MergeCursor eval{rowIsLo, colIsLo, rowToCol, colToRow};
    eval.mhi = nLo;
    for (int r = 0; r < n; ++r) {
        const int cFrom = std::max(0, kappa[static_cast<std::size_t>(r) + 1] - 1);
        const int cTo = std::min(n - 1, kappa[static_cast<std::size_t>(r)] - 1);
        for (int c = cFrom; c <= cTo; ++c) {
            eval.moveTo(r, c);
            const int v00 = eval.value();
            eval.right();
            const int v01 = eval.value();
            eval.down();
            const int v11 = eval.value();
            eval.left();
            const int v10 = eval.value();
            const int density = v01 - v00 - v11 + v10;
            if (density == 1) {
                if (out[static_cast<std::size_t>(r)] != -1)
                    throw std::logic_error("staircase merge emitted two nonzeros in a row");
                out[static_cast<std::size_t>(r)] = c;
            } else if (density != 0) {
                throw std::logic_error("staircase merge density outside {0,1}");
            }
        }
    }
    return out;
}

}  // namespace

SeaweedPerm mulDistFast(const SeaweedPerm& a, const SeaweedPerm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    return SeaweedPerm(mulRec(a.rowToCol(), b.rowToCol()));
}

RankCompressed compressRanks(const std::vector<std::pair<BigInt, BigInt>>& points) {
    const std::size_t n = points.size();
    std::vector<std::size_t> byRow(n), byCol(n);
    std::iota(byRow.begin(), byRow.end(), 0);
    std::iota(byCol.begin(), byCol.end(), 0);
    std::sort(byRow.begin(), byRow.end(),
              [&](std::size_t x, std::size_t y) { return points[x].first < points[y].first; });
    std::sort(byCol.begin(), byCol.end(),
              [&](std::size_t x, std::size_t y) { return points[x].second < points[y].second; });

    RankCompressed out;
    out.rowCoords.reserve(n);
    out.colCoords.reserve(n);
    std::vector<int> rowRank(n), colRank(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (r > 0 && points[byRow[r]].first == points[byRow[r - 1]].first)
            throw std::invalid_argument("duplicate first coordinate in rank compression");
        if (r > 0 && points[byCol[r]].second == points[byCol[r - 1]].second)
            throw std::invalid_argument("duplicate second coordinate in rank compression");
        rowRank[byRow[r]] = static_cast<int>(r);
        colRank[byCol[r]] = static_cast<int>(r);
        out.rowCoords.push_back(points[byRow[r]].first);
        out.colCoords.push_back(points[byCol[r]].second);
    }
    std::vector<int> rowToCol(n);
    for (std::size_t p = 0; p < n; ++p) rowToCol[static_cast<std::size_t>(rowRank[p])] = colRank[p];
    out.perm = SeaweedPerm(std::move(rowToCol));
    return out;
}

}  // namespace slpseq

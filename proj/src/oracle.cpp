#include "slpseq/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace slpseq::oracle {

namespace {

void checkTextCap(std::u32string_view t) {
    if (t.size() > kMaxTextLength) throw std::invalid_argument("oracle text cap exceeded");
}

bool greedyContains(std::u32string_view window, std::u32string_view p) {
    std::size_t k = 0;
    for (char32_t c : window) {
        if (k < p.size() && p[k] == c) ++k;
    }
    return k == p.size();
}

}  // namespace

long long lcs(std::u32string_view a, std::u32string_view b) {
    const std::size_t m = a.size(), n = b.size();
    std::vector<long long> prev(n + 1, 0), cur(n + 1, 0);
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (a[i - 1] == b[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

std::vector<std::pair<long long, long long>> semilocalCriticalPoints(std::u32string_view a,
                                                                     std::u32string_view b) {
    const long long m = static_cast<long long>(a.size());
    const long long n = static_cast<long long>(b.size());
    if (m < 1 || n < 1) throw std::invalid_argument("semilocal oracle needs nonempty strings");
    if (a.size() > kMaxSemilocalLength || b.size() > kMaxSemilocalLength)
        throw std::invalid_argument("semilocal oracle size cap exceeded");

    // A(i0,j0) over the integer grid i0 in [-m:n], j0 in [0:m+n], by a fresh
    // dynamic program over the extended dag per start column. Outside the
    // core rectangle every diagonal edge is present and scores 1.
    const long long width = m + n + 1;          // columns 0..m+n of the table
    const long long starts = n + m + 1;         // i0 = -m .. n
    std::vector<long long> tableA(static_cast<std::size_t>(starts * width), 0);
    auto at = [&](long long i0, long long j0) -> long long& {
        return tableA[static_cast<std::size_t>((i0 + m) * width + j0)];
    };

    std::vector<long long> row(static_cast<std::size_t>(width + m + 1), 0);
    std::vector<long long> nextRow(row.size(), 0);
    for (long long i0 = -m; i0 <= n; ++i0) {
        // Column c of the dag maps to slot c - i0 >= 0 in the row buffers.
        const long long hi = m + n;  // last column we ever need
        auto slot = [&](long long c) { return static_cast<std::size_t>(c - i0); };
        for (long long c = i0; c <= hi; ++c) row[slot(c)] = 0;
        for (long long l = 1; l <= m; ++l) {
            nextRow[slot(i0)] = 0;
            for (long long c = i0 + 1; c <= hi; ++c) {
                const bool inCore = c >= 1 && c <= n;
                const long long diagScore =
                    inCore ? (a[static_cast<std::size_t>(l - 1)] == b[static_cast<std::size_t>(c - 1)] ? 1 : -1)
                           : 1;
                long long best = std::max(row[slot(c)], nextRow[slot(c - 1)]);
                if (diagScore >= 0) best = std::max(best, row[slot(c - 1)] + diagScore);
                nextRow[slot(c)] = best;
            }
            std::swap(row, nextRow);
        }
        for (long long j0 = std::max<long long>(0, i0); j0 <= hi; ++j0) at(i0, j0) = row[slot(j0)];
        for (long long j0 = 0; j0 < i0; ++j0) at(i0, j0) = j0 - i0;  // convention for j < i
    }

    std::vector<std::pair<long long, long long>> pts;
    for (long long p = -m; p <= n - 1; ++p) {
        for (long long q = 0; q <= m + n - 1; ++q) {
            const long long a00 = at(p, q), a01 = at(p, q + 1), a10 = at(p + 1, q), a11 = at(p + 1, q + 1);
            if (a10 + 1 == a00 && a00 == a11 && a00 == a01) pts.emplace_back(p, q);
        }
    }
    if (static_cast<long long>(pts.size()) != m + n)
        throw std::logic_error("critical point extraction did not yield m+n points");
    std::sort(pts.begin(), pts.end());
    return pts;
}

bool containsSubsequence(std::u32string_view t, std::u32string_view p) {
    checkTextCap(t);
    return greedyContains(t, p);
}

long long longestPrefix(std::u32string_view t, std::u32string_view p) {
    checkTextCap(t);
    std::size_t k = 0;
    for (char32_t c : t) {
        if (k < p.size() && p[k] == c) ++k;
    }
    return static_cast<long long>(k);
}

std::vector<std::pair<long long, long long>> minimalWindows(std::u32string_view t,
                                                            std::u32string_view p) {
    checkTextCap(t);
    std::vector<std::pair<long long, long long>> out;
    if (p.empty()) return out;
    const long long m = static_cast<long long>(t.size());
    for (long long i = 1; i <= m; ++i) {
        for (long long j = i; j <= m; ++j) {
            std::u32string_view win = t.substr(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - i + 1));
            if (!greedyContains(win, p)) continue;
            const bool leftTrim = j > i && greedyContains(win.substr(1), p);
            const bool rightTrim = j > i && greedyContains(win.substr(0, win.size() - 1), p);
            if (!leftTrim && !rightTrim) out.emplace_back(i, j);
        }
    }
    return out;
}

long long countMinimalWindows(std::u32string_view t, std::u32string_view p) {
    return static_cast<long long>(minimalWindows(t, p).size());
}

std::vector<std::pair<long long, long long>> fixedWindows(std::u32string_view t,
                                                          std::u32string_view p, long long w) {
    checkTextCap(t);
    std::vector<std::pair<long long, long long>> out;
    if (w < 1 || p.empty()) return out;
    const long long m = static_cast<long long>(t.size());
    for (long long i = 1; i + w - 1 <= m; ++i) {
        if (greedyContains(t.substr(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(w)), p))
            out.emplace_back(i, i + w - 1);
    }
    return out;
}

long long countFixedWindows(std::u32string_view t, std::u32string_view p, long long w) {
    return static_cast<long long>(fixedWindows(t, p, w).size());
}

long long countBoundedMinimal(std::u32string_view t, std::u32string_view p, long long w) {
    long long count = 0;
    for (const auto& [i, j] : minimalWindows(t, p))
        if (j - i + 1 <= w) ++count;
    return count;
}

}  // namespace slpseq::oracle

#include "slpseq/recognition.hpp"

#include <algorithm>
#include <stdexcept>

namespace slpseq {

JumpTable buildJumpTable(const Slp& slp, std::u32string_view pattern) {
    const int n = static_cast<int>(pattern.size());
    JumpTable out;
    out.lambda.resize(slp.size());
    for (Symbol r = 1; r <= slp.size(); ++r) {
        std::vector<int>& lam = out.lambda[r - 1];
        lam.resize(static_cast<std::size_t>(n) + 1);
        const Statement& st = slp.statement(r);
        if (const auto* term = std::get_if<Terminal>(&st)) {
            for (int k = 0; k <= n; ++k)
                lam[static_cast<std::size_t>(k)] =
                    (k < n && pattern[static_cast<std::size_t>(k)] == term->ch) ? k + 1 : k;
        } else {
            const auto& cc = std::get<Concat>(st);
            const std::vector<int>& ls = out.lambda[cc.left - 1];
            const std::vector<int>& lt = out.lambda[cc.right - 1];
            for (int k = 0; k <= n; ++k)
                lam[static_cast<std::size_t>(k)] = lt[static_cast<std::size_t>(ls[static_cast<std::size_t>(k)])];
        }
    }
    return out;
}

int globalLongestPrefix(const Slp& slp, std::u32string_view pattern) {
    return buildJumpTable(slp, pattern).forSymbol(slp.root())[0];
}

bool containsSubsequence(const Slp& slp, std::u32string_view pattern) {
    return globalLongestPrefix(slp, pattern) == static_cast<int>(pattern.size());
}

SemilocalCache::SemilocalCache(const Slp& slp, std::u32string_view pattern)
    : n_(static_cast<int>(pattern.size())) {
    if (n_ == 0) throw std::invalid_argument("semilocal cache needs a nonempty pattern");
    entries_.reserve(slp.size());
    for (Symbol r = 1; r <= slp.size(); ++r) {
        const Statement& st = slp.statement(r);
        PartialScoreMatrix matrix =
            std::holds_alternative<Terminal>(st)
                ? PartialScoreMatrix::baseCase(std::get<Terminal>(st).ch, pattern)
                : concat(entries_[std::get<Concat>(st).left - 1].matrix,
                         entries_[std::get<Concat>(st).right - 1].matrix);
        DominanceIndex index(matrix);
        entries_.push_back(Entry{std::move(matrix), std::move(index)});
    }
}

namespace {

// Least value in {floor} ∪ candidates (ascending, all > floor) satisfying a
// monotone predicate; the predicate is constant between candidates, so the
// true minimum always lands on one of them.
template <typename Pred>
std::optional<BigInt> leastSatisfying(const BigInt& floor, const std::vector<BigInt>& cands, Pred pred) {
    if (pred(floor)) return floor;
    std::size_t lo = 0, hi = cands.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (pred(cands[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    if (lo == cands.size()) return std::nullopt;
    return cands[lo];
}

}  // namespace

std::optional<BigInt> shortestSuffixContaining(const SemilocalCache::Entry& entry, int nPrime) {
    const int n = entry.index.patternLength();
    if (nPrime < 1 || nPrime > n) throw std::out_of_range("prefix length out of range");
    const BigInt& mT = entry.index.textLength();
    if (entry.index.suffixPrefix(mT, nPrime) < nPrime) return std::nullopt;

    // The dominance count behind the query changes only when the suffix cut
    // crosses a nonzero row, at l = m + 1 + row.
    const BigInt floor = nPrime;
    std::vector<BigInt> cands;
    cands.reserve(entry.index.sortedRows().size());
    for (const BigInt& r : entry.index.sortedRows()) {
        BigInt v = mT + 1 + r;
        if (v > floor && v <= mT) cands.push_back(std::move(v));
    }
    auto result = leastSatisfying(floor, cands, [&](const BigInt& l) {
        return entry.index.suffixPrefix(l, nPrime) == nPrime;
    });
    if (!result) throw std::logic_error("shortest-suffix search missed its breakpoint");
    return result;
}

std::optional<BigInt> shortestPrefixContaining(const SemilocalCache::Entry& entry, int nSuffix) {
    const int n = entry.index.patternLength();
    if (nSuffix < 1 || nSuffix > n) throw std::out_of_range("suffix length out of range");
    const int j = n - nSuffix;
    const BigInt& mT = entry.index.textLength();
    if (entry.index.prefixSuffix(mT, j) < nSuffix) return std::nullopt;

    const BigInt floor = nSuffix;
    std::vector<BigInt> cands;
    cands.reserve(entry.index.sortedCols().size());
    const auto& cols = entry.index.sortedCols();
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        BigInt v = mT + n - *it;  // prefix cut crosses nonzero column c at l = m + n - c
        if (v > floor && v <= mT) cands.push_back(std::move(v));
    }
    auto result = leastSatisfying(floor, cands, [&](const BigInt& l) {
        return entry.index.prefixSuffix(l, j) == nSuffix;
    });
    if (!result) throw std::logic_error("shortest-prefix search missed its breakpoint");
    return result;
}

Recognizer::Recognizer(Slp slp, std::u32string_view pattern)
    : slp_(std::move(slp)), pattern_(pattern), n_(static_cast<int>(pattern.size())) {}

void Recognizer::requirePattern() const {
    if (n_ == 0) throw std::invalid_argument("operation requires a nonempty pattern");
}

const std::vector<int>& Recognizer::lambdaRoot() {
    if (!jumps_) jumps_ = buildJumpTable(slp_, pattern_);
    return jumps_->forSymbol(slp_.root());
}

int Recognizer::longestPrefix() { return lambdaRoot()[0]; }

bool Recognizer::contains() { return longestPrefix() == n_; }

const SemilocalCache& Recognizer::cache() {
    requirePattern();
    if (!cache_) cache_ = SemilocalCache(slp_, pattern_);
    return *cache_;
}

int Recognizer::lcs() {
    return cache().entry(slp_.root()).index.stringSubstring(0, n_);
}

std::vector<Recognizer::Window> Recognizer::boundaryCandidates(Symbol sym) {
    const auto& cc = std::get<Concat>(slp_.statement(sym));
    const BigInt& mL = slp_.symbolLength(cc.left);
    const SemilocalCache& c = cache();

    std::vector<Window> cands;
    for (int q = 0; q <= n_; ++q) {
        BigInt suffixLen = 0, prefixLen = 0;
        if (q > 0) {
            auto v = shortestSuffixContaining(c.entry(cc.left), q);
            if (!v) continue;
            suffixLen = std::move(*v);
        }
        if (q < n_) {
            auto v = shortestPrefixContaining(c.entry(cc.right), n_ - q);
            if (!v) continue;
            prefixLen = std::move(*v);
        }
        cands.push_back(Window{mL - suffixLen + 1, mL + prefixLen});
    }
    return cands;
}

std::vector<Recognizer::Window> Recognizer::boundarySurvivors(Symbol sym,
                                                              const std::optional<BigInt>& maxLen) {
    std::vector<Window> cands = boundaryCandidates(sym);
    if (maxLen) {
        std::erase_if(cands, [&](const Window& w) { return w.end - w.start + 1 > *maxLen; });
    }
    auto less = [](const Window& a, const Window& b) {
        return a.start != b.start ? a.start < b.start : a.end < b.end;
    };
    std::sort(cands.begin(), cands.end(), less);
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    // A candidate is a genuine minimal window unless a strictly smaller
    // candidate shares its start or its end; proper containment between
    // candidates always shares an endpoint because both endpoints move
    // monotonically with the split position.
    std::map<BigInt, BigInt> minEndForStart, maxStartForEnd;
    for (const Window& w : cands) {
        auto [itS, newS] = minEndForStart.try_emplace(w.start, w.end);
        if (!newS && w.end < itS->second) itS->second = w.end;
        auto [itE, newE] = maxStartForEnd.try_emplace(w.end, w.start);
        if (!newE && w.start > itE->second) itE->second = w.start;
    }
    const BigInt& mL = slp_.symbolLength(std::get<Concat>(slp_.statement(sym)).left);
    std::vector<Window> out;
    for (const Window& w : cands) {
        if (minEndForStart.at(w.start) != w.end) continue;
        if (maxStartForEnd.at(w.end) != w.start) continue;
        if (!(w.start <= mL && w.end > mL)) continue;  // count only boundary-spanning windows
        out.push_back(w);
    }
    return out;
}

const std::vector<BigInt>& Recognizer::minimalCounts() {
    if (!minimalCounts_) {
        cache();
        std::vector<BigInt> cnt(slp_.size());
        for (Symbol r = 1; r <= slp_.size(); ++r) {
            const Statement& st = slp_.statement(r);
            if (const auto* term = std::get_if<Terminal>(&st)) {
                cnt[r - 1] = (n_ == 1 && pattern_[0] == term->ch) ? 1 : 0;
            } else {
                const auto& cc = std::get<Concat>(st);
                cnt[r - 1] = cnt[cc.left - 1] + cnt[cc.right - 1] +
                             static_cast<int>(boundarySurvivors(r, std::nullopt).size());
            }
        }
        minimalCounts_ = std::move(cnt);
    }
    return *minimalCounts_;
}

const std::vector<BigInt>& Recognizer::boundedCounts(const BigInt& w) {
    auto it = boundedCounts_.find(w);
    if (it == boundedCounts_.end()) {
        cache();
        std::vector<BigInt> cnt(slp_.size());
        for (Symbol r = 1; r <= slp_.size(); ++r) {
            const Statement& st = slp_.statement(r);
            if (const auto* term = std::get_if<Terminal>(&st)) {
                cnt[r - 1] = (n_ == 1 && pattern_[0] == term->ch && w >= 1) ? 1 : 0;
            } else {
                const auto& cc = std::get<Concat>(st);
                cnt[r - 1] = cnt[cc.left - 1] + cnt[cc.right - 1] +
                             static_cast<int>(boundarySurvivors(r, w).size());
            }
        }
        it = boundedCounts_.emplace(w, std::move(cnt)).first;
    }
    return it->second;
}

std::vector<Recognizer::FixedClass> Recognizer::fixedClasses(Symbol sym, const BigInt& w) {
    const auto& cc = std::get<Concat>(slp_.statement(sym));
    const BigInt& mL = slp_.symbolLength(cc.left);
    const BigInt& mR = slp_.symbolLength(cc.right);
    const SemilocalCache& c = cache();

    const BigInt wLo = std::max<BigInt>(1, w - mR);
    const BigInt wHi = std::min<BigInt>(w - 1, mL);
    std::vector<FixedClass> out;
    if (wLo > wHi) return out;

    // Two left-part lengths are equivalent when they cover the same nonzeros
    // of both operand matrices; the covered sets change only at these
    // breakpoints, so each class is one contiguous w' segment.
    std::vector<BigInt> cuts;
    for (const BigInt& r : c.entry(cc.left).index.sortedRows()) {
        BigInt th = r + mL + 1;
        if (th > wLo && th <= wHi) cuts.push_back(std::move(th));
    }
    for (const BigInt& col : c.entry(cc.right).index.sortedCols()) {
        BigInt th = w - mR - n_ + col + 1;
        if (th > wLo && th <= wHi) cuts.push_back(std::move(th));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto longestPrefixIn = [&](const BigInt& wPrime) {
        int lo = 0, hi = n_;
        while (lo < hi) {  // largest q with suffixPrefix(w', q) == q
            const int mid = lo + (hi - lo + 1) / 2;
            if (c.entry(cc.left).index.suffixPrefix(wPrime, mid) == mid)
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    };
    auto longestSuffixIn = [&](const BigInt& wSecond) {
        int lo = 0, hi = n_;
        while (lo < hi) {
            const int mid = lo + (hi - lo + 1) / 2;
            if (c.entry(cc.right).index.prefixSuffix(wSecond, n_ - mid) == mid)
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    };

    BigInt classStart = wLo;
    BigInt covered = 0;
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
        const BigInt classEnd = (i < cuts.size()) ? BigInt(cuts[i] - 1) : wHi;
        FixedClass cls;
        cls.wLo = classStart;
        cls.wHi = classEnd;
        cls.episode = longestPrefixIn(classStart) + longestSuffixIn(w - classStart) >= n_;
        covered += classEnd - classStart + 1;
        out.push_back(std::move(cls));
        if (i < cuts.size()) classStart = cuts[i];
    }
    if (covered != wHi - wLo + 1)
        throw std::logic_error("fixed-window classes do not partition the valid range");
    return out;
}

const std::vector<BigInt>& Recognizer::fixedCounts(const BigInt& w) {
    auto it = fixedCounts_.find(w);
    if (it == fixedCounts_.end()) {
        cache();
        std::vector<BigInt> cnt(slp_.size());
        for (Symbol r = 1; r <= slp_.size(); ++r) {
            if (slp_.symbolLength(r) < w) continue;  // no window of length w fits
            const Statement& st = slp_.statement(r);
            if (const auto* term = std::get_if<Terminal>(&st)) {
                cnt[r - 1] = (n_ == 1 && pattern_[0] == term->ch) ? 1 : 0;
            } else {
                const auto& cc = std::get<Concat>(st);
                BigInt sum = cnt[cc.left - 1] + cnt[cc.right - 1];
                for (const FixedClass& cls : fixedClasses(r, w))
                    if (cls.episode) sum += cls.wHi - cls.wLo + 1;
                cnt[r - 1] = std::move(sum);
            }
        }
        it = fixedCounts_.emplace(w, std::move(cnt)).first;
    }
    return it->second;
}

BigInt Recognizer::countMinimalWindows() {
    requirePattern();
    return minimalCounts()[slp_.root() - 1];
}

BigInt Recognizer::countFixedWindows(const BigInt& w) {
    requirePattern();
    if (w < 1) throw std::invalid_argument("fixed window length must be at least 1");
    return fixedCounts(w)[slp_.root() - 1];
}

BigInt Recognizer::countBoundedMinimal(const BigInt& w) {
    requirePattern();
    if (w < 0) throw std::invalid_argument("window length bound must be nonnegative");
    return boundedCounts(w)[slp_.root() - 1];
}

namespace {

template <typename WindowT>
std::vector<WindowT> mergeByStart(std::vector<WindowT> a, std::vector<WindowT> b, std::size_t limit) {
    std::vector<WindowT> out;
    out.reserve(std::min(limit, a.size() + b.size()));
    std::size_t i = 0, j = 0;
    while (out.size() < limit && (i < a.size() || j < b.size())) {
        if (j == b.size() || (i < a.size() && a[i].start <= b[j].start))
            out.push_back(std::move(a[i++]));
        else
            out.push_back(std::move(b[j++]));
    }
    return out;
}

}  // namespace

std::vector<Recognizer::Window> Recognizer::gatherMinimal(Symbol sym, const BigInt& offset,
                                                          std::size_t limit,
                                                          const std::vector<BigInt>& counts,
                                                          const std::optional<BigInt>& maxLen) {
    if (limit == 0 || counts[sym - 1] == 0) return {};
    const Statement& st = slp_.statement(sym);
    if (std::holds_alternative<Terminal>(st)) return {Window{offset + 1, offset + 1}};

    const auto& cc = std::get<Concat>(st);
    std::vector<Window> left = gatherMinimal(cc.left, offset, limit, counts, maxLen);
    std::vector<Window> boundary = boundarySurvivors(sym, maxLen);
    for (Window& w : boundary) {
        w.start += offset;
        w.end += offset;
    }
    std::vector<Window> merged = mergeByStart(std::move(left), std::move(boundary), limit);
    if (merged.size() < limit) {
        std::vector<Window> right = gatherMinimal(cc.right, offset + slp_.symbolLength(cc.left),
                                                  limit - merged.size(), counts, maxLen);
        for (Window& w : right) merged.push_back(std::move(w));
    }
    return merged;
}

std::vector<Recognizer::Window> Recognizer::gatherFixed(Symbol sym, const BigInt& offset,
                                                        std::size_t limit,
                                                        const std::vector<BigInt>& counts,
                                                        const BigInt& w) {
    if (limit == 0 || counts[sym - 1] == 0) return {};
    const Statement& st = slp_.statement(sym);
    if (std::holds_alternative<Terminal>(st)) return {Window{offset + 1, offset + 1}};

    const auto& cc = std::get<Concat>(st);
    const BigInt& mL = slp_.symbolLength(cc.left);
    std::vector<Window> left = gatherFixed(cc.left, offset, limit, counts, w);

    // Boundary windows in ascending start order = descending left-part
    // length; classes were produced in ascending w' order.
    std::vector<Window> boundary;
    std::vector<FixedClass> classes = fixedClasses(sym, w);
    for (auto it = classes.rbegin(); it != classes.rend() && boundary.size() < limit; ++it) {
        if (!it->episode) continue;
        for (BigInt wp = it->wHi; wp >= it->wLo && boundary.size() < limit; --wp) {
            BigInt start = offset + mL - wp + 1;
            boundary.push_back(Window{start, start + w - 1});
        }
    }

    std::vector<Window> merged = mergeByStart(std::move(left), std::move(boundary), limit);
    if (merged.size() < limit) {
        std::vector<Window> right =
            gatherFixed(cc.right, offset + mL, limit - merged.size(), counts, w);
        for (Window& win : right) merged.push_back(std::move(win));
    }
    return merged;
}

Recognizer::Report Recognizer::reportWindows(WindowMode mode, const std::optional<BigInt>& w,
                                             std::size_t limit) {
    requirePattern();
    if (limit < 1) throw std::invalid_argument("report limit must be at least 1");

    std::vector<Window> found;
    switch (mode) {
        case WindowMode::Minimal:
            found = gatherMinimal(slp_.root(), 0, limit + 1, minimalCounts(), std::nullopt);
            break;
        case WindowMode::BoundedMinimal:
            if (!w) throw std::invalid_argument("bounded mode requires a window length bound");
            found = gatherMinimal(slp_.root(), 0, limit + 1, boundedCounts(*w), *w);
            break;
        case WindowMode::Fixed:
            if (!w || *w < 1) throw std::invalid_argument("fixed mode requires a window length");
            found = gatherFixed(slp_.root(), 0, limit + 1, fixedCounts(*w), *w);
            break;
    }

    Report report;
    report.truncated = found.size() > limit;
    if (report.truncated) found.resize(limit);
    report.windows.reserve(found.size());
    for (Window& win : found) report.windows.emplace_back(std::move(win.start), std::move(win.end));
    return report;
}

}  // namespace slpseq

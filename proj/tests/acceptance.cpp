// Acceptance suite: runs every criterion end to end and prints one PASS/FAIL
// line each. Exits nonzero if any criterion fails.

#include "slpseq/oracle.hpp"
#include "slpseq/recognition.hpp"
#include "slpseq/seaweed.hpp"
#include "slpseq/semilocal.hpp"
#include "slpseq/slp.hpp"

#include "test_util.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace slpseq;
using testutil::u32;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    double seconds = 0.0;
};

double now() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

void require(Outcome& out, bool cond, const std::string& what) {
    if (!cond && out.pass) {
        out.pass = false;
        out.detail = what;
    }
}

SeaweedPerm randomPerm(std::mt19937_64& rng, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return SeaweedPerm(std::move(v));
}

// 1. Figure regression: the worked m=8 / n=13 instance.
Outcome figureRegression() {
    Outcome out;
    const std::u32string text = u32("baabcbca");
    const std::u32string pattern = u32("baabcabcabaca");
    const auto pts = oracle::semilocalCriticalPoints(text, pattern);
    require(out, pts.size() == 21, "expected 21 critical points, got " + std::to_string(pts.size()));

    const Slp chain = testutil::chainSlp(text);
    const SemilocalCache cache(chain, pattern);
    const auto& root = cache.entry(chain.root());
    require(out, root.index.stringSubstring(4, 11) == 5,
            "A(4,11) = " + std::to_string(root.index.stringSubstring(4, 11)));
    require(out, root.index.count(4, 11) == 2,
            "dominance count at (4,11) = " + std::to_string(root.index.count(4, 11)));
    if (out.pass) out.detail = "21 critical points, A(4,11)=5, 2 dominated nonzeros";
    return out;
}

// 2. Differential fuzz against the brute-force oracles.
Outcome differentialFuzz() {
    Outcome out;
    std::mt19937_64 rng(20250811);
    const std::u32string alphabets[3] = {u32("a"), u32("ab"), u32("abcd")};
    const int instances = 1000;
    for (int i = 0; i < instances && out.pass; ++i) {
        const std::u32string& alphabet = alphabets[i % 3];
        const Slp slp = testutil::randomSlp(rng, alphabet, 12, 200);
        const std::u32string text = expand(slp, 200);
        const std::u32string pat = testutil::randomPattern(rng, alphabet, 1, 24);
        const long long m = static_cast<long long>(text.size());
        const std::string tag = " (instance " + std::to_string(i) + ")";

        Recognizer rec(slp, pat);
        require(out, rec.contains() == oracle::containsSubsequence(text, pat), "contains" + tag);
        require(out, rec.longestPrefix() == oracle::longestPrefix(text, pat), "prefix-len" + tag);
        require(out, rec.lcs() == oracle::lcs(text, pat), "lcs" + tag);
        require(out, rec.countMinimalWindows() == oracle::countMinimalWindows(text, pat),
                "count-min" + tag);
        for (int wi = 0; wi < 3; ++wi) {
            const long long w = 1 + static_cast<long long>(rng() % m);
            require(out, rec.countFixedWindows(w) == oracle::countFixedWindows(text, pat, w),
                    "count-fixed w=" + std::to_string(w) + tag);
            require(out, rec.countBoundedMinimal(w) == oracle::countBoundedMinimal(text, pat, w),
                    "count-bounded w=" + std::to_string(w) + tag);
        }
    }
    if (out.pass) out.detail = std::to_string(instances) + " instances, 0 mismatches";
    return out;
}

// 3. Multiplication oracle equivalence.
Outcome multiplicationEquivalence() {
    Outcome out;
    long long pairs = 0;
    for (int n = 1; n <= 4 && out.pass; ++n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        std::vector<SeaweedPerm> perms;
        do {
            perms.emplace_back(v);
        } while (std::next_permutation(v.begin(), v.end()));
        for (const auto& a : perms) {
            for (const auto& b : perms) {
                ++pairs;
                if (!(mulDistFast(a, b) == mulDistOracle(a, b))) {
                    require(out, false, "exhaustive mismatch at n=" + std::to_string(n));
                    break;
                }
            }
        }
    }
    std::mt19937_64 rng(77);
    for (int n : {16, 64, 256}) {
        for (int rep = 0; rep < 200 && out.pass; ++rep) {
            ++pairs;
            const SeaweedPerm a = randomPerm(rng, n);
            const SeaweedPerm b = randomPerm(rng, n);
            if (!(mulDistFast(a, b) == mulDistOracle(a, b)))
                require(out, false, "random mismatch at n=" + std::to_string(n));
        }
    }
    if (out.pass) out.detail = std::to_string(pairs) + " pairs, all equal";
    return out;
}

// 4. Exponential-scale analytic checks; every query must stay under 1 s.
Outcome exponentialScale() {
    Outcome out;
    double worst = 0.0;
    auto timed = [&](Recognizer& rec, const std::function<BigInt(Recognizer&)>& q) {
        const double t0 = now();
        BigInt v = q(rec);
        worst = std::max(worst, now() - t0);
        return v;
    };

    Recognizer recA(testutil::doublingSlp(u32("a"), 60), u32("a"));
    require(out, timed(recA, [](Recognizer& r) { return r.countMinimalWindows(); }) == pow2(60),
            "count-min on a^(2^60)");
    require(out,
            timed(recA, [](Recognizer& r) { return r.countFixedWindows(pow2(59)); }) == pow2(59) + 1,
            "count-fixed w=2^59 on a^(2^60)");

    Recognizer recAb(testutil::doublingSlp(u32("ab"), 59), u32("ab"));
    require(out, timed(recAb, [](Recognizer& r) { return r.countMinimalWindows(); }) == pow2(59),
            "count-min on (ab)^(2^59)");

    require(out, worst < 1.0, "a query took " + std::to_string(worst) + " s");
    if (out.pass) {
        std::ostringstream os;
        os << "2^60, 2^59+1 and 2^59 exactly; slowest query " << static_cast<int>(worst * 1e6)
           << " us";
        out.detail = os.str();
    }
    return out;
}

// 5. Query recovery fuzz: every supported query against the expanded text.
Outcome queryRecoveryFuzz() {
    Outcome out;
    std::mt19937_64 rng(555);
    for (int rep = 0; rep < 200 && out.pass; ++rep) {
        const std::u32string alphabet = (rep % 2) ? u32("ab") : u32("abc");
        const std::u32string text = testutil::randomPattern(rng, alphabet, 1, 64);
        const std::u32string pat = testutil::randomPattern(rng, alphabet, 1, 16);
        const Slp slp = testutil::chainSlp(text);
        const SemilocalCache cache(slp, pat);
        const DominanceIndex& idx = cache.entry(slp.root()).index;
        const long long m = static_cast<long long>(text.size());
        const int n = static_cast<int>(pat.size());
        const std::string tag = " (instance " + std::to_string(rep) + ")";
        const std::u32string_view tv(text), pv(pat);

        for (int j = 0; j <= n && out.pass; ++j)
            for (int jp = j; jp <= n; ++jp)
                if (idx.stringSubstring(j, jp) !=
                    oracle::lcs(tv, pv.substr(static_cast<std::size_t>(j), static_cast<std::size_t>(jp - j)))) {
                    require(out, false, "string-substring" + tag);
                    break;
                }
        for (long long l = 0; l <= m && out.pass; ++l) {
            for (int q = 0; q <= n; ++q) {
                if (idx.suffixPrefix(l, q) !=
                    oracle::lcs(tv.substr(static_cast<std::size_t>(m - l)), pv.substr(0, static_cast<std::size_t>(q)))) {
                    require(out, false, "suffix-prefix" + tag);
                    break;
                }
                if (idx.prefixSuffix(l, q) !=
                    oracle::lcs(tv.substr(0, static_cast<std::size_t>(l)), pv.substr(static_cast<std::size_t>(q)))) {
                    require(out, false, "prefix-suffix" + tag);
                    break;
                }
            }
        }
    }
    if (out.pass) out.detail = "200 instances, all query kinds exact";
    return out;
}

// 6. Bracketing independence of the root matrix.
Outcome bracketingIndependence() {
    Outcome out;
    const std::u32string text = u32("abaababa");
    const Slp fib = testutil::fibonacciSlp();
    const Slp balanced = buildSlpFromText(text);
    if (expand(balanced, 100) != text || expand(fib, 100) != text) {
        require(out, false, "programs disagree on the text");
        return out;
    }
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 20 && out.pass; ++rep) {
        const std::u32string pat =
            testutil::randomPattern(rng, rep % 4 == 3 ? u32("abc") : u32("ab"), 1, 16);
        const SemilocalCache viaFib(fib, pat);
        const SemilocalCache viaBalanced(balanced, pat);
        require(out,
                viaFib.entry(fib.root()).matrix == viaBalanced.entry(balanced.root()).matrix,
                "root nonzero sets differ for pattern " + testutil::narrow(pat));
    }
    if (out.pass) out.detail = "20 patterns, identical root nonzero sets";
    return out;
}

// 7. Performance smoke: subquadratic multiplication and linear cache builds.
Outcome performanceSmoke() {
    Outcome out;
    std::mt19937_64 rng(4242);

    auto medianMulTime = [&](int n, int batch) {
        std::vector<std::pair<SeaweedPerm, SeaweedPerm>> inputs;
        inputs.reserve(static_cast<std::size_t>(batch));
        for (int i = 0; i < batch; ++i) inputs.emplace_back(randomPerm(rng, n), randomPerm(rng, n));
        std::vector<double> times;
        for (int run = 0; run < 5; ++run) {
            const double t0 = now();
            for (const auto& [a, b] : inputs) {
                volatile int sink = mulDistFast(a, b).colOfRow(0);
                (void)sink;
            }
            times.push_back(now() - t0);
        }
        std::sort(times.begin(), times.end());
        return times[2];
    };
    const double tSmall = medianMulTime(1024, 40);
    const double tBig = medianMulTime(4096, 40);
    const double mulRatio = tBig / tSmall;
    require(out, mulRatio <= 12.0,
            "multiplication time ratio 4096/1024 = " + std::to_string(mulRatio));

    auto medianCacheTime = [&](unsigned textLen) {
        const std::u32string text = testutil::randomPattern(rng, u32("ab"), textLen, textLen);
        const std::u32string pat = testutil::randomPattern(rng, u32("ab"), 16, 16);
        const Slp slp = testutil::chainSlp(text);
        std::vector<double> times;
        for (int run = 0; run < 3; ++run) {
            const double t0 = now();
            const SemilocalCache cache(slp, pat);
            volatile int sink = cache.entry(slp.root()).index.stringSubstring(0, 16);
            (void)sink;
            times.push_back(now() - t0);
        }
        std::sort(times.begin(), times.end());
        return times[1];
    };
    const double cSmall = medianCacheTime(4000);
    const double cBig = medianCacheTime(8000);
    const double cacheRatio = cBig / cSmall;
    require(out, cacheRatio <= 2.5,
            "cache build time ratio for doubled program length = " + std::to_string(cacheRatio));

    if (out.pass) {
        std::ostringstream os;
        os.precision(2);
        os << std::fixed << "mul ratio " << mulRatio << " (<= 12), cache ratio " << cacheRatio
           << " (<= 2.5)";
        out.detail = os.str();
    }
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
        double budget;  // seconds
    };
    const Criterion criteria[] = {
        {"figure regression", figureRegression, 1.0},
        {"differential fuzz vs oracles", differentialFuzz, 60.0},
        {"multiplication oracle equivalence", multiplicationEquivalence, 30.0},
        {"exponential-scale analytic checks", exponentialScale, 0.0},
        {"query recovery fuzz", queryRecoveryFuzz, 30.0},
        {"bracketing independence", bracketingIndependence, 0.0},
        {"performance smoke", performanceSmoke, 0.0},
    };

    bool allPass = true;
    int id = 0;
    for (const Criterion& c : criteria) {
        ++id;
        Outcome out;
        const double t0 = now();
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        out.seconds = now() - t0;
        if (c.budget > 0 && out.seconds >= c.budget) {
            out.pass = false;
            out.detail += (out.detail.empty() ? "" : "; ") + std::string("over the ") +
                          std::to_string(c.budget) + " s budget";
        }
        allPass = allPass && out.pass;
        std::printf("criterion %d: %s  %s (%s) [%.2f s]\n", id, out.pass ? "PASS" : "FAIL", c.name,
                    out.detail.c_str(), out.seconds);
        std::fflush(stdout);
    }
    std::printf("acceptance: %s\n", allPass ? "PASS" : "FAIL");
    return allPass ? 0 : 1;
}

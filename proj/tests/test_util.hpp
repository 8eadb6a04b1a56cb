#pragma once

#include "slpseq/slp.hpp"

#include <random>
#include <string>
#include <string_view>

namespace slpseq::testutil {

inline std::u32string u32(std::string_view ascii) {
    return std::u32string(ascii.begin(), ascii.end());
}

inline std::string narrow(std::u32string_view s) {
    std::string out;
    for (char32_t c : s) out.push_back(static_cast<char>(c));
    return out;
}

// Fibonacci-style program deriving "abaababa".
inline Slp fibonacciSlp() {
    return Slp::fromStatements({Terminal{U'b'}, Terminal{U'a'}, Concat{2, 1}, Concat{3, 2},
                                Concat{4, 3}, Concat{5, 4}});
}

// Left-deep concatenation chain deriving exactly `text`.
inline Slp chainSlp(std::u32string_view text) {
    std::vector<Statement> st;
    std::vector<Symbol> termOf;
    auto terminal = [&](char32_t c) -> Symbol {
        for (Symbol r = 1; r <= st.size(); ++r)
            if (const auto* t = std::get_if<Terminal>(&st[r - 1]); t && t->ch == c) return r;
        st.push_back(Terminal{c});
        return static_cast<Symbol>(st.size());
    };
    for (char32_t c : text) terminal(c);
    Symbol cur = terminal(text[0]);
    for (std::size_t i = 1; i < text.size(); ++i) {
        st.push_back(Concat{cur, terminal(text[i])});
        cur = static_cast<Symbol>(st.size());
    }
    return Slp::fromStatements(std::move(st), cur);
}

// k repeated doublings of `base`, deriving base^(2^k).
inline Slp doublingSlp(std::u32string_view base, unsigned k) {
    Slp seed = chainSlp(base);
    std::vector<Statement> st = seed.statements();
    Symbol cur = seed.root();
    for (unsigned i = 0; i < k; ++i) {
        st.push_back(Concat{cur, cur});
        cur = static_cast<Symbol>(st.size());
    }
    return Slp::fromStatements(std::move(st), cur);
}

// Random program with at most maxStatements statements whose expansion stays
// within maxLen characters. Operand choice is biased toward recent symbols so
// the expansions actually spread over the whole [1, maxLen] range instead of
// clustering near the terminal lengths.
inline Slp randomSlp(std::mt19937_64& rng, std::u32string_view alphabet, unsigned maxStatements,
                     unsigned maxLen) {
    std::vector<Statement> st;
    const unsigned terminals =
        1 + static_cast<unsigned>(rng() % std::min<std::size_t>(alphabet.size(), maxStatements));
    std::vector<unsigned long long> lengths;
    for (unsigned i = 0; i < terminals; ++i) {
        st.push_back(Terminal{alphabet[rng() % alphabet.size()]});
        lengths.push_back(1);
    }
    const unsigned target = terminals + static_cast<unsigned>(rng() % (maxStatements - terminals + 1));
    auto pick = [&]() -> Symbol {
        if (rng() % 3 != 0) {
            const std::size_t window = std::max<std::size_t>(1, st.size() / 4);
            return static_cast<Symbol>(st.size() - rng() % window);
        }
        return static_cast<Symbol>(1 + rng() % st.size());
    };
    while (st.size() < target) {
        bool placed = false;
        for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
            const Symbol a = pick();
            const Symbol b = pick();
            if (lengths[a - 1] + lengths[b - 1] > maxLen) continue;
            st.push_back(Concat{a, b});
            lengths.push_back(lengths[a - 1] + lengths[b - 1]);
            placed = true;
        }
        if (!placed) break;  // nothing fits under the length budget anymore
    }
    return Slp::fromStatements(std::move(st));
}

inline std::u32string randomPattern(std::mt19937_64& rng, std::u32string_view alphabet,
                                    unsigned minLen, unsigned maxLen) {
    const unsigned len = minLen + static_cast<unsigned>(rng() % (maxLen - minLen + 1));
    std::u32string out;
    for (unsigned i = 0; i < len; ++i) out.push_back(alphabet[rng() % alphabet.size()]);
    return out;
}

}  // namespace slpseq::testutil

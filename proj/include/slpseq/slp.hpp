#pragma once

#include "slpseq/bigint.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace slpseq {

// 1-based statement index into a straight-line program.
using Symbol = std::uint32_t;

struct Terminal {
    char32_t ch;
    friend bool operator==(const Terminal&, const Terminal&) = default;
};

struct Concat {
    Symbol left;
    Symbol right;
    friend bool operator==(const Concat&, const Concat&) = default;
};

using Statement = std::variant<Terminal, Concat>;

class SlpError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SlpParseError : public SlpError {
public:
    SlpParseError(std::size_t line, const std::string& what)
        : SlpError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class SlpTooLong : public SlpError {
public:
    explicit SlpTooLong(BigInt actual)
        : SlpError("derived string has length " + actual.str()), actual_(std::move(actual)) {}
    const BigInt& actualLength() const { return actual_; }

private:
    BigInt actual_;
};

// A validated straight-line program: every statement is either a terminal
// character or the concatenation of two earlier statements. Immutable after
// construction; safe to share across threads.
class Slp {
public:
    // Validates references (strictly earlier statements only) and computes
    // per-symbol derived lengths bottom-up. Throws SlpError on violation.
    static Slp fromStatements(std::vector<Statement> statements,
                              std::optional<Symbol> root = std::nullopt);

    Symbol size() const { return static_cast<Symbol>(statements_.size()); }
    Symbol root() const { return root_; }
    const Statement& statement(Symbol sym) const { return statements_.at(sym - 1); }
    const std::vector<Statement>& statements() const { return statements_; }

    const BigInt& symbolLength(Symbol sym) const { return lengths_.at(sym - 1); }
    const BigInt& textLength() const { return lengths_.at(root_ - 1); }

    bool operator==(const Slp& other) const {
        return statements_ == other.statements_ && root_ == other.root_;
    }

private:
    Slp(std::vector<Statement> statements, std::vector<BigInt> lengths, Symbol root)
        : statements_(std::move(statements)), lengths_(std::move(lengths)), root_(root) {}

    std::vector<Statement> statements_;
    std::vector<BigInt> lengths_;
    Symbol root_;
};

// Parses the line-oriented SLP text format:
//   # comment
//   <id> = '<char>'
//   <id> = <id> <id>
//   root <id>            (optional; defaults to the last statement)
// Ids must be declared in strictly increasing order; references must point to
// already-declared ids. If `warnings` is non-null, statements unreachable
// from the root are reported there.
Slp parseSlp(std::string_view text, std::vector<std::string>* warnings = nullptr);

// Canonical serialization: statements renumbered 1..m̄ in declaration order,
// explicit trailing root line. parseSlp(serializeSlp(x)) == x, and the form
// is a fixed point of serialize∘parse.
std::string serializeSlp(const Slp& slp);

// Expands a symbol, refusing to materialize more than maxLen characters.
// Throws SlpTooLong otherwise. Test/CLI support only; the query algorithms
// never decompress.
std::u32string expand(const Slp& slp, Symbol sym, std::uint64_t maxLen);

inline std::u32string expand(const Slp& slp, std::uint64_t maxLen) {
    return expand(slp, slp.root(), maxLen);
}

// Builds a program deriving exactly `text` by balanced pairing: one terminal
// per distinct character, then each level concatenates adjacent pairs.
// Repeated pairs share a statement, so the program has O(|text|) statements.
Slp buildSlpFromText(std::u32string_view text);

// Symbols not reachable from the root (legal, but usually an authoring slip).
std::vector<Symbol> unreachableSymbols(const Slp& slp);

}  // namespace slpseq

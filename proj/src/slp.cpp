#include "slpseq/slp.hpp"

#include "slpseq/text.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace slpseq {

namespace {

std::string_view trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool parseId(std::string_view tok, Symbol& out) {
    if (tok.empty() || tok.size() > 9) return false;
    Symbol v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + static_cast<Symbol>(c - '0');
    }
    if (v == 0) return false;
    out = v;
    return true;
}

// Parses the quoted single-character payload of a terminal statement.
// Supported escapes: \n \t \r \0 \\ \' and \u{HEX}.
char32_t parseQuotedChar(std::string_view rhs, std::size_t lineNo) {
    if (rhs.size() < 3 || rhs.front() != '\'' || rhs.back() != '\'')
        throw SlpParseError(lineNo, "terminal must be a quoted character");
    std::string_view body = rhs.substr(1, rhs.size() - 2);
    if (body.size() >= 2 && body[0] == '\\') {
        switch (body[1]) {
            case 'n': if (body.size() == 2) return U'\n'; break;
            case 't': if (body.size() == 2) return U'\t'; break;
            case 'r': if (body.size() == 2) return U'\r'; break;
            case '0': if (body.size() == 2) return U'\0'; break;
            case '\\': if (body.size() == 2) return U'\\'; break;
            case '\'': if (body.size() == 2) return U'\''; break;
            case 'u': {
                if (body.size() > 4 && body[2] == '{' && body.back() == '}') {
                    char32_t v = 0;
                    for (std::size_t i = 3; i + 1 < body.size(); ++i) {
                        char c = body[i];
                        int d;
                        if (c >= '0' && c <= '9') d = c - '0';
                        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
                        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
                        else throw SlpParseError(lineNo, "bad \\u{...} escape");
                        v = v * 16 + static_cast<char32_t>(d);
                        if (v > 0x10FFFF) throw SlpParseError(lineNo, "\\u{...} escape out of range");
                    }
                    return v;
                }
                break;
            }
            default: break;
        }
        throw SlpParseError(lineNo, "unknown escape in terminal");
    }
    std::u32string decoded;
    try {
        decoded = decodeUtf8(body);
    } catch (const Utf8Error& e) {
        throw SlpParseError(lineNo, e.what());
    }
    if (decoded.size() != 1) throw SlpParseError(lineNo, "terminal must hold exactly one character");
    return decoded[0];
}

std::string formatTerminalChar(char32_t c) {
    switch (c) {
        case U'\n': return "\\n";
        case U'\t': return "\\t";
        case U'\r': return "\\r";
        case U'\0': return "\\0";
        case U'\\': return "\\\\";
        case U'\'': return "\\'";
        default: break;
    }
    if (c < 0x20) {
        std::ostringstream os;
        os << "\\u{" << std::hex << static_cast<std::uint32_t>(c) << "}";
        return os.str();
    }
    return encodeUtf8(c);
}

}  // namespace

Slp Slp::fromStatements(std::vector<Statement> statements, std::optional<Symbol> root) {
    if (statements.empty()) throw SlpError("program has no statements");
    const Symbol count = static_cast<Symbol>(statements.size());
    Symbol rootSym = root.value_or(count);
    if (rootSym == 0 || rootSym > count)
        throw SlpError("root symbol " + std::to_string(rootSym) + " out of range");
    std::vector<BigInt> lengths(count);
    for (Symbol r = 1; r <= count; ++r) {
        const Statement& st = statements[r - 1];
        if (const auto* cc = std::get_if<Concat>(&st)) {
            if (cc->left == 0 || cc->left >= r || cc->right == 0 || cc->right >= r)
                throw SlpError("statement " + std::to_string(r) + " references a non-earlier symbol");
            lengths[r - 1] = lengths[cc->left - 1] + lengths[cc->right - 1];
        } else {
            lengths[r - 1] = 1;
        }
    }
    return Slp(std::move(statements), std::move(lengths), rootSym);
}

Slp parseSlp(std::string_view text, std::vector<std::string>* warnings) {
    std::vector<Statement> statements;
    std::map<Symbol, Symbol> idToIndex;  // declared id -> dense 1-based index
    std::optional<Symbol> rootId;
    Symbol lastId = 0;

    std::size_t lineNo = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view rawLine = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++lineNo;

        std::string_view line = trim(rawLine);
        if (line.empty() || line.front() == '#') continue;

        if (line.substr(0, 4) == "root" &&
            (line.size() == 4 || std::isspace(static_cast<unsigned char>(line[4])))) {
            if (rootId) throw SlpParseError(lineNo, "duplicate root line");
            Symbol id;
            if (!parseId(trim(line.substr(4)), id)) throw SlpParseError(lineNo, "malformed root line");
            if (!idToIndex.count(id))
                throw SlpParseError(lineNo, "root references undeclared symbol " + std::to_string(id));
            rootId = id;
            continue;
        }
        if (rootId) throw SlpParseError(lineNo, "statement after root line");

        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw SlpParseError(lineNo, "malformed statement (no '=')");
        Symbol id;
        if (!parseId(trim(line.substr(0, eq)), id)) throw SlpParseError(lineNo, "malformed statement id");
        if (idToIndex.count(id)) throw SlpParseError(lineNo, "duplicate statement id " + std::to_string(id));
        if (id <= lastId)
            throw SlpParseError(lineNo, "statement ids must be strictly increasing");

        std::string_view rhs = trim(line.substr(eq + 1));
        if (rhs.empty()) throw SlpParseError(lineNo, "malformed statement (empty right-hand side)");
        if (rhs.front() == '\'') {
            statements.emplace_back(Terminal{parseQuotedChar(rhs, lineNo)});
        } else {
            std::size_t sp = rhs.find_first_of(" \t");
            if (sp == std::string_view::npos)
                throw SlpParseError(lineNo, "concatenation needs two symbol ids");
            Symbol a, b;
            if (!parseId(trim(rhs.substr(0, sp)), a) || !parseId(trim(rhs.substr(sp)), b))
                throw SlpParseError(lineNo, "malformed concatenation operands");
            for (Symbol ref : {a, b}) {
                if (ref == id) throw SlpParseError(lineNo, "self reference to symbol " + std::to_string(ref));
                if (!idToIndex.count(ref))
                    throw SlpParseError(lineNo, "reference to undeclared symbol " + std::to_string(ref));
            }
            statements.emplace_back(Concat{idToIndex[a], idToIndex[b]});
        }
        lastId = id;
        idToIndex[id] = static_cast<Symbol>(statements.size());
    }

    if (statements.empty()) throw SlpParseError(lineNo, "program has no statements");
    std::optional<Symbol> rootIndex;
    if (rootId) rootIndex = idToIndex[*rootId];
    Slp slp = Slp::fromStatements(std::move(statements), rootIndex);
    if (warnings) {
        for (Symbol sym : unreachableSymbols(slp))
            warnings->push_back("statement " + std::to_string(sym) + " is unreachable from the root");
    }
    return slp;
}

std::string serializeSlp(const Slp& slp) {
    std::ostringstream os;
    for (Symbol r = 1; r <= slp.size(); ++r) {
        const Statement& st = slp.statement(r);
        if (const auto* t = std::get_if<Terminal>(&st)) {
            os << r << "='" << formatTerminalChar(t->ch) << "'\n";
        } else {
            const auto& cc = std::get<Concat>(st);
            os << r << "=" << cc.left << " " << cc.right << "\n";
        }
    }
    os << "root " << slp.root() << "\n";
    return os.str();
}

std::u32string expand(const Slp& slp, Symbol sym, std::uint64_t maxLen) {
    if (sym == 0 || sym > slp.size()) throw SlpError("symbol out of range");
    const BigInt& len = slp.symbolLength(sym);
    if (len > maxLen) throw SlpTooLong(len);
    std::u32string out;
    out.reserve(static_cast<std::size_t>(len));
    std::vector<Symbol> stack{sym};
    while (!stack.empty()) {
        Symbol cur = stack.back();
        stack.pop_back();
        const Statement& st = slp.statement(cur);
        if (const auto* t = std::get_if<Terminal>(&st)) {
            out.push_back(t->ch);
        } else {
            const auto& cc = std::get<Concat>(st);
            stack.push_back(cc.right);
            stack.push_back(cc.left);
        }
    }
    return out;
}

Slp buildSlpFromText(std::u32string_view text) {
    if (text.empty()) throw SlpError("cannot build a program for the empty string");
    std::vector<Statement> statements;
    std::map<char32_t, Symbol> terminalOf;
    std::map<std::pair<Symbol, Symbol>, Symbol> pairOf;

    std::vector<Symbol> level;
    level.reserve(text.size());
    for (char32_t c : text) {
        auto it = terminalOf.find(c);
        if (it == terminalOf.end()) {
            statements.emplace_back(Terminal{c});
            it = terminalOf.emplace(c, static_cast<Symbol>(statements.size())).first;
        }
        level.push_back(it->second);
    }
    while (level.size() > 1) {
        std::vector<Symbol> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
            auto key = std::make_pair(level[i], level[i + 1]);
            auto it = pairOf.find(key);
            if (it == pairOf.end()) {
                statements.emplace_back(Concat{key.first, key.second});
                it = pairOf.emplace(key, static_cast<Symbol>(statements.size())).first;
            }
            next.push_back(it->second);
        }
        if (level.size() % 2 == 1) next.push_back(level.back());
        level = std::move(next);
    }
    return Slp::fromStatements(std::move(statements), level[0]);
}

std::vector<Symbol> unreachableSymbols(const Slp& slp) {
    std::vector<bool> seen(slp.size() + 1, false);
    std::vector<Symbol> stack{slp.root()};
    seen[slp.root()] = true;
    while (!stack.empty()) {
        Symbol cur = stack.back();
        stack.pop_back();
        if (const auto* cc = std::get_if<Concat>(&slp.statement(cur))) {
            for (Symbol ref : {cc->left, cc->right}) {
                if (!seen[ref]) {
                    seen[ref] = true;
                    stack.push_back(ref);
                }
            }
        }
    }
    std::vector<Symbol> out;
    for (Symbol r = 1; r <= slp.size(); ++r)
        if (!seen[r]) out.push_back(r);
    return out;
}

}  // namespace slpseq

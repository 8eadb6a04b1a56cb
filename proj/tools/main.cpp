#include "slpseq/oracle.hpp"
#include "slpseq/recognition.hpp"
#include "slpseq/slp.hpp"
#include "slpseq/text.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using slpseq::BigInt;
using slpseq::Slp;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void writeOutput(const std::optional<std::string>& path, const std::string& data) {
    if (!path) {
        std::cout << data;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw CliError("cannot open output file: " + *path);
    out << data;
}

Slp loadSlp(const std::string& path) {
    std::vector<std::string> warnings;
    Slp slp = slpseq::parseSlp(readFile(path), &warnings);
    for (const std::string& w : warnings) std::cerr << path << ": warning: " << w << "\n";
    return slp;
}

// Common per-query options: the program file, the pattern (inline argument or
// --pattern-file, not both), and the output mode.
struct QueryArgs {
    std::string slpPath;
    std::string patternInline;
    bool patternInlineSet = false;
    std::string patternFile;
    bool jsonOut = false;

    std::u32string pattern() const {
        if (patternInlineSet && !patternFile.empty())
            throw CliError("give the pattern inline or via --pattern-file, not both");
        if (!patternFile.empty()) {
            std::string bytes = readFile(patternFile);
            if (!bytes.empty() && bytes.back() == '\n') bytes.pop_back();
            if (!bytes.empty() && bytes.back() == '\r') bytes.pop_back();
            return slpseq::decodeUtf8(bytes);
        }
        if (patternInlineSet) return slpseq::decodeUtf8(patternInline);
        throw CliError("missing pattern (inline argument or --pattern-file)");
    }
};

void addQueryArgs(CLI::App* cmd, QueryArgs& args) {
    cmd->add_option("slp", args.slpPath, "SLP program file")->required();
    cmd->add_option("pattern", args.patternInline, "pattern (UTF-8)")
        ->trigger_on_parse()
        ->each([&args](const std::string&) { args.patternInlineSet = true; });
    cmd->add_option("--pattern-file", args.patternFile, "read the pattern from a file");
    cmd->add_flag("--json", args.jsonOut, "emit a JSON object instead of plain text");
}

BigInt parseCount(const std::string& text, const std::string& flag) {
    auto v = slpseq::parseBigInt(text);
    if (!v || *v < 0) throw CliError(flag + " must be a nonnegative decimal integer");
    return *v;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emitScalar(const std::string& query, const Slp& slp, std::size_t n, bool jsonOut,
                const std::string& result, double elapsedMs) {
    if (!jsonOut) {
        std::cout << result << "\n";
        return;
    }
    json out{{"query", query},
             {"result", result},
             {"m", slpseq::toString(slp.textLength())},
             {"n", n},
             {"mbar", slp.size()},
             {"elapsed_ms", elapsedMs}};
    std::cout << out.dump() << "\n";
}

int runScalarQuery(const std::string& name, const QueryArgs& args,
                   const std::optional<BigInt>& w) {
    const Slp slp = loadSlp(args.slpPath);
    const std::u32string pattern = args.pattern();
    slpseq::Recognizer rec(slp, pattern);
    Timer timer;
    std::string result;
    if (name == "contains") {
        result = rec.contains() ? "true" : "false";
    } else if (name == "prefix-len") {
        result = std::to_string(rec.longestPrefix());
    } else if (name == "lcs") {
        result = std::to_string(rec.lcs());
    } else if (name == "count-min") {
        result = slpseq::toString(rec.countMinimalWindows());
    } else if (name == "count-fixed") {
        result = slpseq::toString(rec.countFixedWindows(*w));
    } else {
        result = slpseq::toString(rec.countBoundedMinimal(*w));
    }
    emitScalar(name, slp, pattern.size(), args.jsonOut, result, timer.ms());
    return kExitOk;
}

int runReport(const QueryArgs& args, const std::string& mode, const std::optional<BigInt>& w,
              std::uint64_t limit) {
    const Slp slp = loadSlp(args.slpPath);
    const std::u32string pattern = args.pattern();
    slpseq::WindowMode wm;
    if (mode == "minimal")
        wm = slpseq::WindowMode::Minimal;
    else if (mode == "fixed")
        wm = slpseq::WindowMode::Fixed;
    else if (mode == "bounded")
        wm = slpseq::WindowMode::BoundedMinimal;
    else
        throw CliError("--mode must be minimal, fixed or bounded");
    if (wm != slpseq::WindowMode::Minimal && !w) throw CliError("--w is required for this mode");

    slpseq::Recognizer rec(slp, pattern);
    Timer timer;
    const auto report = rec.reportWindows(wm, w, static_cast<std::size_t>(limit));
    const double elapsed = timer.ms();

    if (args.jsonOut) {
        json windows = json::array();
        for (const auto& [s, e] : report.windows)
            windows.push_back({slpseq::toString(s), slpseq::toString(e)});
        json out{{"query", "report"},
                 {"mode", mode},
                 {"result", std::to_string(report.windows.size())},
                 {"windows", windows},
                 {"truncated", report.truncated},
                 {"m", slpseq::toString(slp.textLength())},
                 {"n", pattern.size()},
                 {"mbar", slp.size()},
                 {"elapsed_ms", elapsed}};
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& [s, e] : report.windows)
            std::cout << slpseq::toString(s) << " " << slpseq::toString(e) << "\n";
        if (report.truncated) std::cerr << "(truncated to " << limit << " windows)\n";
    }
    return kExitOk;
}

int runCompress(const std::string& textPath, const std::optional<std::string>& outPath) {
    const std::u32string text = slpseq::decodeUtf8(readFile(textPath));
    if (text.empty()) throw CliError("input text is empty");
    const Slp slp = slpseq::buildSlpFromText(text);
    writeOutput(outPath, slpseq::serializeSlp(slp));
    return kExitOk;
}

int runDecompress(const std::string& slpPath, const BigInt& maxBytes,
                  const std::optional<std::string>& outPath) {
    const Slp slp = loadSlp(slpPath);
    if (slp.textLength() > maxBytes) throw slpseq::SlpTooLong(slp.textLength());
    const std::u32string text =
        slpseq::expand(slp, static_cast<std::uint64_t>(slp.textLength()));
    std::string bytes = slpseq::encodeUtf8(text);
    if (BigInt(bytes.size()) > maxBytes) throw slpseq::SlpTooLong(BigInt(bytes.size()));
    writeOutput(outPath, bytes);
    return kExitOk;
}

int runSelfcheck(const QueryArgs& args, std::uint64_t maxExpand) {
    const Slp slp = loadSlp(args.slpPath);
    const std::u32string pattern = args.pattern();
    const std::u32string text = slpseq::expand(slp, slp.root(), maxExpand);
    slpseq::Recognizer rec(slp, pattern);
    const long long m = static_cast<long long>(text.size());
    const int n = static_cast<int>(pattern.size());

    struct Row {
        std::string name, lib, oracle;
        bool ok;
    };
    std::vector<Row> rows;
    auto add = [&rows](const std::string& name, const std::string& lib, const std::string& ora) {
        rows.push_back({name, lib, ora, lib == ora});
    };

    add("contains", rec.contains() ? "true" : "false",
        slpseq::oracle::containsSubsequence(text, pattern) ? "true" : "false");
    add("prefix-len", std::to_string(rec.longestPrefix()),
        std::to_string(slpseq::oracle::longestPrefix(text, pattern)));
    if (n >= 1) {
        add("lcs", std::to_string(rec.lcs()), std::to_string(slpseq::oracle::lcs(text, pattern)));
        add("count-min", slpseq::toString(rec.countMinimalWindows()),
            std::to_string(slpseq::oracle::countMinimalWindows(text, pattern)));
        std::vector<long long> ws{1, n, std::min<long long>(m, n + 1), (m + 1) / 2, m};
        std::sort(ws.begin(), ws.end());
        ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
        for (long long w : ws) {
            if (w < 1) continue;
            add("count-fixed w=" + std::to_string(w), slpseq::toString(rec.countFixedWindows(w)),
                std::to_string(slpseq::oracle::countFixedWindows(text, pattern, w)));
            add("count-bounded w=" + std::to_string(w),
                slpseq::toString(rec.countBoundedMinimal(w)),
                std::to_string(slpseq::oracle::countBoundedMinimal(text, pattern, w)));
        }
        const auto want = slpseq::oracle::minimalWindows(text, pattern);
        const auto got = rec.reportWindows(slpseq::WindowMode::Minimal, std::nullopt,
                                           std::max<std::size_t>(want.size(), 1));
        bool sameWindows = got.windows.size() == want.size() && !got.truncated;
        for (std::size_t i = 0; sameWindows && i < want.size(); ++i)
            sameWindows = got.windows[i].first == want[i].first &&
                          got.windows[i].second == want[i].second;
        rows.push_back({"report-min", std::to_string(got.windows.size()) + " windows",
                        std::to_string(want.size()) + " windows", sameWindows});
    }

    bool allOk = true;
    std::size_t nameWidth = 0;
    for (const Row& r : rows) nameWidth = std::max(nameWidth, r.name.size());
    for (const Row& r : rows) {
        allOk = allOk && r.ok;
        std::cout << std::left << std::setw(static_cast<int>(nameWidth) + 2) << r.name
                  << std::setw(22) << ("lib=" + r.lib) << std::setw(22) << ("oracle=" + r.oracle)
                  << (r.ok ? "PASS" : "FAIL") << "\n";
    }
    std::cout << (allOk ? "selfcheck: PASS" : "selfcheck: FAIL") << "\n";
    return allOk ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subsequence recognition and LCS queries on SLP-compressed text"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    QueryArgs qa;
    std::string wText, mode = "minimal";
    std::uint64_t limit = 0;
    bool haveW = false;

    CLI::App* contains = app.add_subcommand("contains", "is the pattern a subsequence of the text?");
    addQueryArgs(contains, qa);
    CLI::App* prefixLen =
        app.add_subcommand("prefix-len", "longest pattern prefix that embeds into the text");
    addQueryArgs(prefixLen, qa);
    CLI::App* lcsCmd = app.add_subcommand("lcs", "LCS score of text and pattern");
    addQueryArgs(lcsCmd, qa);
    CLI::App* countMin = app.add_subcommand("count-min", "count minimal windows");
    addQueryArgs(countMin, qa);
    CLI::App* countFixed = app.add_subcommand("count-fixed", "count fixed-length windows");
    addQueryArgs(countFixed, qa);
    countFixed->add_option("--w", wText, "window length")->required()->each([&](const std::string&) {
        haveW = true;
    });
    CLI::App* countBounded =
        app.add_subcommand("count-bounded", "count minimal windows of bounded length");
    addQueryArgs(countBounded, qa);
    countBounded->add_option("--w", wText, "window length bound")->required()->each(
        [&](const std::string&) { haveW = true; });

    CLI::App* report = app.add_subcommand("report", "list windows instead of counting them");
    addQueryArgs(report, qa);
    report->add_option("--mode", mode, "minimal, fixed or bounded");
    report->add_option("--w", wText, "window length (fixed/bounded modes)")->each(
        [&](const std::string&) { haveW = true; });
    report->add_option("--limit", limit, "maximum number of windows to emit")->required();

    std::string textPath;
    std::optional<std::string> outPath;
    std::string outPathStorage;
    CLI::App* compress = app.add_subcommand("compress", "build an SLP file from a text file");
    compress->add_option("text", textPath, "input text file (UTF-8)")->required();
    compress->add_option("-o,--output", outPathStorage, "output SLP file (default stdout)");

    std::string maxBytesText = "1048576";
    CLI::App* decompress = app.add_subcommand("decompress", "expand an SLP back into text");
    decompress->add_option("slp", qa.slpPath, "SLP program file")->required();
    decompress->add_option("--max-bytes", maxBytesText, "refuse to expand beyond this many bytes");
    decompress->add_option("-o,--output", outPathStorage, "output file (default stdout)");

    std::uint64_t maxExpand = 10000;
    CLI::App* selfcheck =
        app.add_subcommand("selfcheck", "expand the text and compare every query with the oracles");
    addQueryArgs(selfcheck, qa);
    selfcheck->add_option("--max-expand", maxExpand, "largest text the check will expand");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compress->parsed() || decompress->parsed())
            if (!outPathStorage.empty()) outPath = outPathStorage;
        if (contains->parsed()) return runScalarQuery("contains", qa, std::nullopt);
        if (prefixLen->parsed()) return runScalarQuery("prefix-len", qa, std::nullopt);
        if (lcsCmd->parsed()) return runScalarQuery("lcs", qa, std::nullopt);
        if (countMin->parsed()) return runScalarQuery("count-min", qa, std::nullopt);
        if (countFixed->parsed())
            return runScalarQuery("count-fixed", qa, parseCount(wText, "--w"));
        if (countBounded->parsed())
            return runScalarQuery("count-bounded", qa, parseCount(wText, "--w"));
        if (report->parsed())
            return runReport(qa, mode, haveW ? std::optional<BigInt>(parseCount(wText, "--w")) : std::nullopt,
                             limit);
        if (compress->parsed()) return runCompress(textPath, outPath);
        if (decompress->parsed())
            return runDecompress(qa.slpPath, parseCount(maxBytesText, "--max-bytes"), outPath);
        if (selfcheck->parsed()) return runSelfcheck(qa, maxExpand);
    } catch (const slpseq::SlpTooLong& e) {
        std::cerr << "error: " << e.what() << " (over the expansion limit)\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "corepath/core_maps.hpp"
#include "corepath/counting.hpp"
#include "corepath/verify.hpp"

using namespace corepath;

namespace {

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    std::size_t sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        Range r{std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 2))};
        if (r.lo > r.hi)
            throw Error(Errc::OutOfRange, "empty range " + text);
        return r;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(Errc::OutOfRange, "expected N or LO..HI, got '" + text + "'");
    }
}

Family parse_family(const std::string& name) {
    static const std::map<std::string, Family> table{
        {"free", Family::FreeMotzkinTight},
        {"fbar", Family::FreeMotzkinTight},
        {"prefix", Family::MotzkinPrefixTight},
        {"mbar", Family::MotzkinPrefixTight},
        {"free-cornerless", Family::CornerlessFreeTight},
        {"fbarc", Family::CornerlessFreeTight},
        {"prefix-cornerless", Family::CornerlessPrefixTight},
        {"mbarc", Family::CornerlessPrefixTight},
        {"cornerless", Family::CornerlessMotzkin},
        {"symmetric", Family::SymmetricCornerlessMotzkin},
    };
    auto it = table.find(name);
    if (it == table.end())
        throw Error(Errc::OutOfRange, "unknown family '" + name + "'");
    return it->second;
}

PhiMutation parse_mutation(const std::string& name) {
    static const std::map<std::string, PhiMutation> table{
        {"none", PhiMutation::None},
        {"widen-mirror-cutoff", PhiMutation::WidenMirrorCutoff},
        {"flip-parity-dispatch", PhiMutation::FlipParityDispatch},
        {"ignore-break-case1", PhiMutation::IgnoreBreakInCase1},
        {"ignore-break-case2", PhiMutation::IgnoreBreakInCase2},
        {"skip-mirror-even-width", PhiMutation::SkipMirrorOnEvenWidth},
    };
    auto it = table.find(name);
    if (it == table.end())
        throw Error(Errc::OutOfRange, "unknown mutation '" + name + "'");
    return it->second;
}

void require_not_csv(const std::string& format) {
    if (format == "csv")
        throw Error(Errc::OutOfRange, "csv output applies to count tables only");
}

int run_map(const std::string& direction, const std::string& text, const std::string& format) {
    require_not_csv(format);
    PathWord input = PathWord::parse(text);
    PathWord output = direction == "phi" ? phi(input) : psi(input);
    int k = direction == "phi" ? width_index_free(input) : width_index_prefix(input);
    if (format == "json") {
        nlohmann::json j{{"input", input.text()},
                         {"output", output.text()},
                         {"m", input.nonflat_count()},
                         {"r", input.flat_count()},
                         {"k", k}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << output.text() << "\n";
    }
    return 0;
}

void print_record_plain(const ConversionRecord& rec) {
    std::printf("t              %d\n", rec.t);
    std::printf("self_conjugate %s\n", rec.self_conjugate ? "true" : "false");
    std::printf("partition      %s\n", rec.partition.to_string().c_str());
    std::printf("corners        %d\n", rec.corners);
    std::printf("sequence       %s\n", to_string(rec.sequence).c_str());
    if (rec.self_conjugate) {
        std::printf("free_path      %s\n", rec.free_path.text().c_str());
        std::printf("prefix         %s\n", rec.prefix.text().c_str());
        std::printf("symmetric_path %s\n", rec.symmetric_path.text().c_str());
    } else {
        std::printf("motzkin_path   %s\n", rec.motzkin_path.text().c_str());
    }
    std::printf("k_min          %d\n", rec.k_min);
}

int run_convert(int t, bool self_conjugate, const std::string& from, const std::string& value,
                const std::string& format) {
    require_not_csv(format);
    ConversionRecord rec;
    if (from == "partition") {
        rec = convert_partition(Partition::parse(value), t, self_conjugate);
    } else if (from == "sequence") {
        BeadSequence seq = parse_bead_sequence(value, t, self_conjugate);
        Partition p = self_conjugate ? doubled_abacus_decode(seq) : abacus_decode(seq);
        rec = convert_partition(p, t, self_conjugate);
    } else {
        rec = convert_from_path(PathWord::parse(value), t, self_conjugate);
    }
    if (format == "json")
        std::cout << rec.to_json().dump() << "\n";
    else
        print_record_plain(rec);
    return 0;
}

int emit_table(const CountTable& table, const std::string& format) {
    if (format == "json")
        std::cout << table.to_json().dump() << "\n";
    else if (format == "csv")
        std::cout << table.to_csv();
    else
        std::cout << table.to_plain();
    return 0;
}

int run_count(const std::string& formula, const std::string& rows, const std::string& cols,
              bool paired, const std::string& format) {
    if (formula == "cc") {
        Range t = parse_range(rows.empty() ? "2..6" : rows);
        Range m = parse_range(cols.empty() ? "0..8" : cols);
        return emit_table(cc_table(t.lo, t.hi, m.lo, m.hi), format);
    }
    if (formula == "scc") {
        Range m = parse_range(cols.empty() ? (paired ? "1..8" : "0..8") : cols);
        if (paired)
            return emit_table(scc_paired_table(m.lo, m.hi), format);
        Range t = parse_range(rows.empty() ? "2..7" : rows);
        return emit_table(scc_table(t.lo, t.hi, m.lo, m.hi), format);
    }
    if (formula == "cigler") {
        Range n = parse_range(rows.empty() ? "0..10" : rows);
        Range k = parse_range(cols.empty() ? "0..6" : cols);
        return emit_table(cigler_table(n.lo, n.hi, k.lo, k.hi), format);
    }
    if (formula == "narayana") {
        Range m = parse_range(rows.empty() ? "1..8" : rows);
        Range i = parse_range(cols.empty() ? "1..8" : cols);
        return emit_table(narayana_table(m.lo, m.hi, i.lo, i.hi), format);
    }
    Range m = parse_range(rows.empty() ? "1..8" : rows);
    Range i = parse_range(cols.empty() ? "1..8" : cols);
    return emit_table(symmetric_peak_table(m.lo, m.hi, i.lo, i.hi), format);
}

long long default_cap() {
    if (const char* env = std::getenv("COREPATH_CAP")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw Error(Errc::OutOfRange, std::string("bad COREPATH_CAP '") + env + "'");
        }
    }
    return 10'000'000;
}

int run_enumerate(const FamilySpec& spec, bool count_only, long long cap,
                  const std::string& format) {
    require_not_csv(format);
    if (count_only) {
        BigCount total = count_family(spec);
        if (format == "json") {
            nlohmann::json j{{"family", family_name(spec.family)},
                             {"m", spec.m},
                             {"r", spec.r},
                             {"k", spec.k},
                             {"count", total.str()}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << total.str() << "\n";
        }
        return 0;
    }
    if (cap < 1)
        throw Error(Errc::OutOfRange, "cap must be positive");
    long long seen = 0;
    bool exceeded = false;
    nlohmann::json words = nlohmann::json::array();
    enumerate_family(spec, [&](const PathWord& word) {
        if (seen == cap) {
            exceeded = true;
            return false;
        }
        ++seen;
        if (format == "json")
            words.push_back(word.text());
        else
            std::cout << word.text() << "\n";
        return true;
    });
    if (exceeded)
        throw Error(Errc::CapExceeded,
                    "family has more than " + std::to_string(cap) + " members");
    if (format == "json") {
        nlohmann::json j{{"family", family_name(spec.family)},
                         {"m", spec.m},
                         {"r", spec.r},
                         {"k", spec.k},
                         {"count", std::to_string(seen)},
                         {"words", std::move(words)}};
        std::cout << j.dump() << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, const VerifyOptions& options, const std::string& format) {
    require_not_csv(format);
    std::vector<PropertyResult> results = run_verify_suite(suite, options);
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const PropertyResult& r : results)
            j.push_back({{"suite", r.suite},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"detail", r.detail}});
        std::cout << j.dump() << "\n";
    } else {
        for (const PropertyResult& r : results)
            std::printf("%s %s/%s: %s\n", r.passed ? "PASS" : "FAIL", r.suite.c_str(),
                        r.name.c_str(), r.detail.c_str());
    }
    return all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded Motzkin path bijections and t-core encodings"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "plain";
    app.add_option("--format", format, "plain, json or csv (csv: count tables only)")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    bool timing = false;
    app.add_flag("--timing", timing, "report elapsed time on stderr");

    auto* map_cmd = app.add_subcommand("map", "apply phi or psi to one path word");
    std::string direction, word;
    map_cmd->add_option("direction", direction, "phi (free to prefix) or psi (inverse)")
        ->required()
        ->check(CLI::IsMember({"phi", "psi"}));
    map_cmd->add_option("word", word, "path word over u, d, f")->required();

    auto* convert_cmd = app.add_subcommand("convert", "walk the core / sequence / path chain");
    int conv_t = 1;
    bool self_conjugate = false;
    std::string from = "partition", value;
    convert_cmd->add_option("--t", conv_t, "core parameter t")->required();
    convert_cmd->add_flag("--self-conjugate", self_conjugate, "use the self-conjugate chain");
    convert_cmd->add_option("--from", from, "input kind: partition, sequence or path")
        ->check(CLI::IsMember({"partition", "sequence", "path"}));
    convert_cmd->add_option("value", value, "input value; \"\" is the empty partition");

    auto* count_cmd = app.add_subcommand("count", "evaluate a counting formula as a table");
    std::string formula, row_range, col_range;
    bool paired = false;
    count_cmd->add_option("formula", formula, "cc, scc, cigler, narayana or sympeaks")
        ->required()
        ->check(CLI::IsMember({"cc", "scc", "cigler", "narayana", "sympeaks"}));
    count_cmd->add_option("--t", row_range, "t range, N or LO..HI (cc, scc)");
    count_cmd->add_option("--n", row_range, "n range (cigler)");
    count_cmd->add_option("--m", col_range, "m range (cc, scc, cigler uses --k)");
    count_cmd->add_option("--k", col_range, "k range (cigler)");
    count_cmd->add_option("--i", col_range, "i range (narayana, sympeaks)");
    count_cmd->add_flag("--paired", paired, "scc only: one row per even/odd t pair");

    auto* enum_cmd = app.add_subcommand("enumerate", "list or count a path family");
    std::string family_arg;
    int em = -1, er = -1, ek = -1, elen = -1, eflats = -1;
    bool count_only = false;
    long long cap = -1;
    enum_cmd->add_option("--family", family_arg,
                         "free | prefix | free-cornerless | prefix-cornerless | cornerless | "
                         "symmetric (aliases fbar, mbar, fbarc, mbarc)")
        ->required();
    enum_cmd->add_option("--m", em, "non-flat step count");
    enum_cmd->add_option("--r", er, "flat step count");
    enum_cmd->add_option("--k", ek, "width index (tight families)");
    enum_cmd->add_option("--len", elen, "total length (alternative to --m)");
    enum_cmd->add_option("--flats", eflats, "flat count (alternative to --r)");
    enum_cmd->add_flag("--count-only", count_only, "print the cardinality only");
    enum_cmd->add_option("--cap", cap, "maximum number of words to list (default 10^7)");

    auto* verify_cmd = app.add_subcommand("verify", "run a property-check suite");
    std::string suite, mutation = "none";
    VerifyOptions verify_options;
    verify_cmd->add_option("suite", suite,
                           "bijection, runs, cornerless, tcore, self_conjugate, counts or all")
        ->required();
    verify_cmd->add_option("--max-size", verify_options.max_size, "bound on m + r for path sweeps");
    verify_cmd->add_option("--workers", verify_options.workers, "worker threads, 0 = hardware");
    verify_cmd->add_option("--mutation", mutation, "fault injection for the forward map");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto started = std::chrono::steady_clock::now();
    int status = 0;
    try {
        if (map_cmd->parsed()) {
            status = run_map(direction, word, format);
        } else if (convert_cmd->parsed()) {
            status = run_convert(conv_t, self_conjugate, from, value, format);
        } else if (count_cmd->parsed()) {
            status = run_count(formula, row_range, col_range, paired, format);
        } else if (enum_cmd->parsed()) {
            FamilySpec spec;
            spec.family = parse_family(family_arg);
            if (elen >= 0 || eflats >= 0) {
                if (elen < 0 || eflats < 0 || eflats > elen)
                    throw Error(Errc::OutOfRange, "--len and --flats must be given together");
                spec.m = elen - eflats;
                spec.r = eflats;
            } else {
                if (em < 0 || er < 0)
                    throw Error(Errc::OutOfRange, "need --m and --r (or --len and --flats)");
                spec.m = em;
                spec.r = er;
            }
            bool tight = spec.family != Family::CornerlessMotzkin &&
                         spec.family != Family::SymmetricCornerlessMotzkin;
            if (tight) {
                if (ek < 0)
                    throw Error(Errc::OutOfRange, "tight families need --k");
                spec.k = ek;
            }
            status = run_enumerate(spec, count_only, cap < 0 ? default_cap() : cap, format);
        } else if (verify_cmd->parsed()) {
            verify_options.mutation = parse_mutation(mutation);
            status = run_verify(suite, verify_options, format);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        status = 2;
    }
    if (timing) {
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
        std::fprintf(stderr, "elapsed %.3fs\n", elapsed.count());
    }
    return status;
}

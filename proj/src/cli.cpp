#include "redword/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "redword/commgraph.hpp"
#include "redword/formulas.hpp"
#include "redword/permutation.hpp"
#include "redword/tableau.hpp"
#include "redword/words.hpp"

namespace redword {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;
constexpr int kExitUnrealizable = 4;
constexpr int kExitViolation = 5;

struct Config {
    std::uint64_t word_cap = 1'000'000;
    std::uint64_t class_cap = 100'000;
    int threads = 0;
};

std::string signature_text(const BitSignature& sig) {
    return sig.size() == 0 ? std::string("-") : sig.to_string();
}

std::string format_triples(const std::vector<Triple321>& triples) {
    std::ostringstream os;
    for (size_t i = 0; i < triples.size(); ++i) {
        if (i) os << ' ';
        os << '(' << triples[i].x << ',' << triples[i].y << ',' << triples[i].z << ')';
    }
    return os.str();
}

int cmd_info(const std::string& perm_text, bool as_json, std::ostream& out) {
    const Permutation w = Permutation::parse(perm_text);
    const auto descents = descent_set(w);
    const auto invs = inversions(w);
    const auto triples = triples_321(w);
    const auto peak = unimodal_peak(w);
    const bool fc = is_fully_commutative(w);
    if (as_json) {
        nlohmann::json j;
        j["n"] = w.size();
        j["w"] = w.oneline();
        j["length"] = length(w);
        j["descents"] = descents;
        nlohmann::json jinvs = nlohmann::json::array();
        for (const auto& inv : invs) jinvs.push_back({inv.larger, inv.smaller});
        j["inversions"] = std::move(jinvs);
        nlohmann::json jtriples = nlohmann::json::array();
        for (const auto& t : triples) jtriples.push_back({t.x, t.y, t.z});
        j["triples"] = std::move(jtriples);
        j["t_count"] = triples.size();
        if (peak) {
            j["unimodal_peak"] = *peak;
        } else {
            j["unimodal_peak"] = nullptr;
        }
        j["fully_commutative"] = fc;
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << "n: " << w.size() << '\n';
    out << "w: " << w.str() << '\n';
    out << "length: " << length(w) << '\n';
    out << "descents: {";
    for (size_t i = 0; i < descents.size(); ++i) {
        if (i) out << ',';
        out << descents[i];
    }
    out << "}\n";
    out << "inversions:";
    for (const auto& inv : invs) out << " (" << inv.larger << ',' << inv.smaller << ')';
    out << '\n';
    out << "|T_w|: " << triples.size() << '\n';
    out << "T_w: " << format_triples(triples) << '\n';
    if (peak) {
        out << "unimodal peak: " << *peak << '\n';
    } else {
        out << "unimodal peak: none\n";
    }
    out << "fully commutative: " << (fc ? "yes" : "no") << '\n';
    return kExitOk;
}

int cmd_words(const std::string& perm_text, std::uint64_t limit, bool extremes,
              const Config& cfg, std::ostream& out, std::ostream& err) {
    const Permutation w = Permutation::parse(perm_text);
    if (extremes) {
        const GammaContext ctx(w);
        const Word lo = a_min(w);
        const Word hi = a_max(w);
        out << "a_min = " << lo.str() << ", signature " << signature_text(ctx.signature_of(lo))
            << '\n';
        out << "a_max = " << hi.str() << ", signature " << signature_text(ctx.signature_of(hi))
            << '\n';
        return kExitOk;
    }
    const std::uint64_t cap = std::min(limit, cfg.word_cap);
    const EnumStatus status =
        enumerate_reduced_words(w, cap, [&](const Word& a) { out << a.str() << '\n'; });
    if (status == EnumStatus::truncated) {
        err << "truncated: word cap " << cap << " exceeded\n";
        return kExitCap;
    }
    return kExitOk;
}

int cmd_tableau(const std::string& perm_text, const std::string& word_text, bool check,
                bool invert, bool as_json, std::istream& in, std::ostream& out) {
    const Permutation w = Permutation::parse(perm_text);
    if (invert) {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("tableau json: ") + e.what());
        }
        const BalancedTableau t = tableau_from_json(w, j);
        out << word_from_tableau(t).str() << '\n';
        return kExitOk;
    }
    const Word a = Word::parse(w.size(), word_text);
    const BalancedTableau t = canonical_labelling(w, a);
    if (as_json) {
        out << tableau_to_json(t).dump() << '\n';
    } else {
        out << render_grid(t);
    }
    if (check) {
        out << "balanced: " << (is_balanced(t) ? "yes" : "no") << '\n';
    }
    return kExitOk;
}

int cmd_graph(const std::string& perm_text, const std::string& format, bool hasse,
              const Config& cfg, std::ostream& out, std::ostream& err) {
    const Permutation w = Permutation::parse(perm_text);
    BuildOptions opts;
    opts.word_cap = cfg.word_cap;
    opts.class_cap = cfg.class_cap;
    opts.threads = cfg.threads;
    CommGraph g = build_graph(w, opts);
    if (g.partial) {
        err << "cap exceeded: partial graph (word cap " << opts.word_cap << ", class cap "
            << opts.class_cap << ")\n";
        return kExitCap;
    }
    if (format == "dot") {
        out << graph_to_dot(g, hasse);
    } else {
        out << graph_to_json(g).dump() << '\n';
    }
    return kExitOk;
}

int cmd_diameter(const std::string& perm_text, const std::string& method, const Config& cfg,
                 std::ostream& out, std::ostream& err) {
    const Permutation w = Permutation::parse(perm_text);
    const int formula = diameter_formula(w);
    if (method == "formula") {
        out << formula << '\n';
        return kExitOk;
    }
    BuildOptions opts;
    opts.word_cap = cfg.word_cap;
    opts.class_cap = cfg.class_cap;
    opts.threads = cfg.threads;
    CommGraph g = build_graph(w, opts);
    if (g.partial) {
        err << "cap exceeded: partial graph\n";
        return kExitCap;
    }
    const int bfs = metrics(g, cfg.threads).diameter;
    if (method == "bfs") {
        out << bfs << '\n';
        return kExitOk;
    }
    out << "formula: " << formula << '\n';
    out << "bfs: " << bfs << '\n';
    if (formula != bfs) {
        out << "MISMATCH\n";
        err << "diameter mismatch for w = " << w.str() << ": formula " << formula << ", bfs "
            << bfs << '\n';
        return kExitViolation;
    }
    out << "match\n";
    return kExitOk;
}

int cmd_verify(int n, const std::string& mode_text, const std::string& csv_path,
               const Config& cfg, std::ostream& out, std::ostream& err) {
    const SweepMode mode =
        mode_text == "full" ? SweepMode::full_bfs : SweepMode::formula_only;
    const int limit = mode == SweepMode::full_bfs ? 6 : 10;
    if (n < 1 || n > limit) {
        throw std::invalid_argument("verify: n must be in [1," + std::to_string(limit) +
                                    "] for mode " + mode_text);
    }
    SweepOptions opts;
    opts.threads = cfg.threads;
    opts.word_cap = cfg.word_cap;
    opts.class_cap = cfg.class_cap;

    std::ofstream csv;
    std::function<void(const SweepRow&)> sink;
    if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) {
            throw std::invalid_argument("verify: cannot open CSV path " + csv_path);
        }
        write_csv_header(csv);
        sink = [&csv](const SweepRow& row) { write_csv_row(csv, row); };
    }
    const SweepSummary summary = verify_sweep(n, mode, opts, sink);
    out << "checked " << summary.total << " permutations of S_" << n << " (mode " << mode_text
        << ")\n";
    out << summary.passed << "/" << summary.total << (summary.all_pass() ? " pass" : " FAIL")
        << '\n';
    if (!summary.all_pass()) {
        err << "verification failed at w = " << *summary.first_failure << '\n';
        return kExitViolation;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"reduced words, balanced tableaux and commutation-class graphs"};
    app.name("redword");
    app.fallthrough();
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--word-cap", cfg.word_cap, "max words per enumeration or closure")
        ->check(CLI::PositiveNumber);
    app.add_option("--class-cap", cfg.class_cap, "max classes per graph")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", cfg.threads, "worker threads (0 = all available)");

    std::string perm_text;
    std::string word_text;
    std::uint64_t limit = 0;
    bool extremes = false;
    bool as_json = false;
    bool check = false;
    bool invert = false;
    std::string format = "json";
    bool hasse = false;
    std::string method = "formula";
    int verify_n = 0;
    std::string verify_mode = "formula";
    std::string csv_path;

    CLI::App* info = app.add_subcommand("info", "permutation statistics");
    info->add_option("perm", perm_text, "permutation (digits or comma form)")->required();
    info->add_flag("--json", as_json, "emit JSON");

    CLI::App* words = app.add_subcommand("words", "enumerate reduced words");
    words->add_option("perm", perm_text)->required();
    words->add_option("--limit", limit, "stop after this many words");
    words->add_flag("--extremes", extremes, "print only the extreme words with signatures");

    CLI::App* tableau = app.add_subcommand("tableau", "canonical labelling of a reduced word");
    tableau->add_option("perm", perm_text)->required();
    tableau->add_option("word", word_text, "reduced word (empty for the identity)");
    tableau->add_flag("--check", check, "verify the balance condition");
    tableau->add_flag("--invert", invert, "read a tableau JSON from stdin and emit its word");
    tableau->add_flag("--json", as_json, "emit JSON");

    CLI::App* graph = app.add_subcommand("graph", "build the commutation-class graph");
    graph->add_option("perm", perm_text)->required();
    graph->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"dot", "json"}));
    graph->add_flag("--hasse", hasse, "orient DOT edges from lower to higher rank");

    CLI::App* diameter = app.add_subcommand("diameter", "diameter of the class graph");
    diameter->add_option("perm", perm_text)->required();
    diameter->add_option("--method", method, "formula, bfs or both")
        ->check(CLI::IsMember({"formula", "bfs", "both"}));

    CLI::App* verify = app.add_subcommand("verify", "sweep all of S_n against the formulas");
    verify->add_option("--n", verify_n, "group degree")->required();
    verify->add_option("--mode", verify_mode, "formula or full")
        ->check(CLI::IsMember({"formula", "full"}));
    verify->add_option("--csv", csv_path, "write per-permutation rows to this file");

    std::vector<const char*> argv;
    argv.push_back("redword");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitValidation;
    }

    if (limit == 0) limit = cfg.word_cap;

    try {
        if (info->parsed()) return cmd_info(perm_text, as_json, out);
        if (words->parsed()) return cmd_words(perm_text, limit, extremes, cfg, out, err);
        if (tableau->parsed()) {
            return cmd_tableau(perm_text, word_text, check, invert, as_json, in, out);
        }
        if (graph->parsed()) return cmd_graph(perm_text, format, hasse, cfg, out, err);
        if (diameter->parsed()) return cmd_diameter(perm_text, method, cfg, out, err);
        if (verify->parsed()) return cmd_verify(verify_n, verify_mode, csv_path, cfg, out, err);
    } catch (const UnrealizableTableau& e) {
        err << e.what() << '\n';
        return kExitUnrealizable;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitValidation;
    }
    err << "no command\n";
    return kExitValidation;
}

}  // namespace redword

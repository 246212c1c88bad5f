#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "ebi/crown.hpp"
#include "ebi/graph_spec.hpp"
#include "ebi/search.hpp"
#include "ebi/serialize.hpp"
#include "ebi/subsets.hpp"
#include "ebi/verify.hpp"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
// truncation.
constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTruncated = 3;

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::invalid_argument("cannot write output file '" + path + "'");
}

ebi::json verify_to_json(const ebi::VerifyReport& r) {
    ebi::json params = ebi::json::object();
    for (const auto& [key, value] : r.params) params[key] = value;
    ebi::json checks = ebi::json::array();
    for (const ebi::Check& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return ebi::json{
        {"scope", r.scope}, {"params", params}, {"checks", checks}, {"pass", r.pass()}};
}

int finish_verify(const ebi::VerifyReport& r, const std::string& output) {
    emit(verify_to_json(r).dump(2) + "\n", output);
    return r.pass() ? kExitOk : kExitFail;
}

struct EbiArgs {
    std::string spec;
    std::uint64_t budget = ebi::SearchOptions{}.budget;
    unsigned jobs = 1;
    bool progress = false;
    std::string output;
};

int run_ebi(const EbiArgs& args) {
    ebi::GraphPtr g = ebi::share(ebi::parse_graph_spec(args.spec));
    ebi::SearchOptions options;
    options.budget = args.budget;
    options.jobs = args.jobs;

    std::atomic<std::uint64_t> visited{0};
    std::atomic<bool> done{false};
    std::thread ticker;
    if (args.progress) {
        options.progress = &visited;
        int q = g->edge_count();
        std::uint64_t total = q >= 1 && q <= 64 ? ebi::binomial(q, (q + 1) / 2) : 0;
        ticker = std::thread([&visited, &done, total] {
            while (!done.load()) {
                std::this_thread::sleep_for(std::chrono::seconds(1));
                std::cerr << "progress: " << visited.load() << " of " << total
                          << " labelings\n";
            }
        });
    }

    ebi::EbiReport report;
    try {
        report = ebi::compute_ebi(g, options);
    } catch (...) {
        if (ticker.joinable()) {
            done = true;
            ticker.join();
        }
        throw;
    }
    if (ticker.joinable()) {
        done = true;
        ticker.join();
        std::cerr << "visited " << report.enumerated << " labelings\n";
    }

    emit(ebi::report_to_json(report).dump(2) + "\n", args.output);
    return report.complete ? kExitOk : kExitTruncated;
}

struct ConstructArgs {
    int n = 0;
    std::optional<int> k;
    std::string format = "json";
    std::string output;
};

int run_construct(const ConstructArgs& args) {
    std::vector<int> wanted =
        args.k ? std::vector<int>{*args.k} : ebi::ebi_formula(args.n);
    std::vector<std::pair<int, ebi::EdgeLabeling>> witnesses;
    for (int k : wanted) witnesses.emplace_back(k, ebi::labeling_for_index(args.n, k));

    if (args.format == "dot") {
        std::string out;
        for (const auto& [k, l] : witnesses) {
            out += "// crown(" + std::to_string(args.n) + ") witness, index " +
                   std::to_string(k) + "\n";
            out += ebi::labeling_to_dot(l, ebi::crown_vertex_names(args.n));
        }
        emit(out, args.output);
        return kExitOk;
    }

    ebi::json doc{{"n", args.n}};
    if (args.k) {
        doc["index"] = *args.k;
        doc["witness"] = ebi::labeling_to_json(witnesses.front().second);
    } else {
        doc["index_set"] = wanted;
        ebi::json all = ebi::json::object();
        for (const auto& [k, l] : witnesses)
            all[std::to_string(k)] = ebi::labeling_to_json(l);
        doc["witnesses"] = all;
    }
    emit(doc.dump(2) + "\n", args.output);
    return kExitOk;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("range must look like FROM..TO, got '" + text + "'");
    try {
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("range must look like FROM..TO, got '" + text + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge-balanced index sets of finite simple graphs"};
    app.require_subcommand(1);

    EbiArgs ebi_args;
    CLI::App* cmd_ebi = app.add_subcommand(
        "ebi", "Exhaustively enumerate the edge-balanced index set of a graph");
    cmd_ebi->add_option("spec", ebi_args.spec, ebi::graph_spec_help())->required();
    cmd_ebi->add_option("--budget", ebi_args.budget, "Max labelings to enumerate")
        ->capture_default_str();
    cmd_ebi->add_option("--jobs", ebi_args.jobs, "Worker threads")->capture_default_str();
    cmd_ebi->add_flag("--progress", ebi_args.progress,
                      "Report visit counts on standard error");
    cmd_ebi->add_option("--output", ebi_args.output, "Write to a file instead of stdout");
    std::string ebi_format = "json";
    cmd_ebi->add_option("--format", ebi_format, "Output format")
        ->check(CLI::IsMember({"json"}));

    ConstructArgs con_args;
    int con_k = -1;
    CLI::App* cmd_construct = app.add_subcommand(
        "construct", "Emit witness labelings for the crown graph index formula");
    cmd_construct->add_option("-n,--n", con_args.n, "Crown parameter (vertices per side)")
        ->required();
    CLI::Option* k_opt =
        cmd_construct->add_option("-k,--index", con_k, "Single index (default: all)");
    cmd_construct->add_option("--format", con_args.format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();
    cmd_construct->add_option("--output", con_args.output, "Write to a file instead of stdout");

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "Re-check the library's claims at desk scale");
    cmd_verify->require_subcommand(1);

    struct {
        std::string range;
        int from = 3, to = 12;
        std::string output;
    } cr;
    CLI::App* v_crown = cmd_verify->add_subcommand(
        "crown-range", "Witness coverage and schedule replay for a range of crowns");
    v_crown->add_option("range", cr.range, "FROM..TO (alternative to --from/--to)");
    v_crown->add_option("--from", cr.from, "Smallest crown parameter")->capture_default_str();
    v_crown->add_option("--to", cr.to, "Largest crown parameter")->capture_default_str();
    v_crown->add_option("--output", cr.output, "Write to a file instead of stdout");

    struct {
        std::uint64_t budget = ebi::SearchOptions{}.budget;
        unsigned jobs = 1;
        std::string output;
    } l3, t3;
    CLI::App* v_lemma3 = cmd_verify->add_subcommand(
        "lemma3", "Exhaustive max index against the odd-regular bound");
    v_lemma3->add_option("--budget", l3.budget, "Max labelings per graph")->capture_default_str();
    v_lemma3->add_option("--jobs", l3.jobs, "Worker threads")->capture_default_str();
    v_lemma3->add_option("--output", l3.output, "Write to a file instead of stdout");

    struct {
        std::string graph = "crown:4";
        int samples = 1000;
        std::uint64_t seed = 1;
        std::string output;
    } l5;
    CLI::App* v_lemma5 = cmd_verify->add_subcommand(
        "lemma5", "Sampled parity consequences on an all-odd-degree graph");
    v_lemma5->add_option("--graph", l5.graph, ebi::graph_spec_help())->capture_default_str();
    v_lemma5->add_option("--samples", l5.samples, "Random labelings to draw")
        ->capture_default_str();
    v_lemma5->add_option("--seed", l5.seed, "Random seed")->capture_default_str();
    v_lemma5->add_option("--output", l5.output, "Write to a file instead of stdout");

    struct {
        int trials = 100;
        int max_p = 8;
        std::uint64_t seed = 1;
        std::string output;
    } p2;
    CLI::App* v_prop2 = cmd_verify->add_subcommand(
        "prop2", "Product size identities on random graph pairs");
    v_prop2->add_option("--trials", p2.trials, "Random pairs to draw")->capture_default_str();
    v_prop2->add_option("--max-p", p2.max_p, "Max vertices per factor")->capture_default_str();
    v_prop2->add_option("--seed", p2.seed, "Random seed")->capture_default_str();
    v_prop2->add_option("--output", p2.output, "Write to a file instead of stdout");

    CLI::App* v_theorem3 = cmd_verify->add_subcommand(
        "theorem3", "Strongly edge-balanced labelings across a small product corpus");
    v_theorem3->add_option("--budget", t3.budget, "Max labelings per product")
        ->capture_default_str();
    v_theorem3->add_option("--jobs", t3.jobs, "Worker threads")->capture_default_str();
    v_theorem3->add_option("--output", t3.output, "Write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_ebi->parsed()) return run_ebi(ebi_args);
        if (cmd_construct->parsed()) {
            if (k_opt->count() > 0) con_args.k = con_k;
            return run_construct(con_args);
        }
        if (v_crown->parsed()) {
            if (!cr.range.empty()) std::tie(cr.from, cr.to) = parse_range(cr.range);
            return finish_verify(ebi::verify_crown_range(cr.from, cr.to), cr.output);
        }
        if (v_lemma3->parsed()) {
            ebi::SearchOptions options;
            options.budget = l3.budget;
            options.jobs = l3.jobs;
            return finish_verify(ebi::verify_lemma3(options), l3.output);
        }
        if (v_lemma5->parsed()) {
            ebi::GraphPtr g = ebi::share(ebi::parse_graph_spec(l5.graph));
            ebi::VerifyReport r = ebi::verify_lemma5(g, l5.samples, l5.seed);
            r.params.insert(r.params.begin(), {"graph", l5.graph});
            return finish_verify(r, l5.output);
        }
        if (v_prop2->parsed())
            return finish_verify(ebi::verify_prop2(p2.trials, p2.max_p, p2.seed), p2.output);
        if (v_theorem3->parsed()) {
            ebi::SearchOptions options;
            options.budget = t3.budget;
            options.jobs = t3.jobs;
            return finish_verify(ebi::verify_theorem3(options), t3.output);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

#include "atfp/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "atfp/atfree.hpp"
#include "atfp/errors.hpp"
#include "atfp/fuzz.hpp"
#include "atfp/generators.hpp"
#include "atfp/hardness.hpp"
#include "atfp/instance_io.hpp"
#include "atfp/oracles.hpp"
#include "atfp/subgraph_solvers.hpp"

namespace atfp {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kPrecondition = 3;
constexpr int kInvariant = 4;

Instance load(const std::string& path) { return parse_instance(read_file(path)); }

std::string join(const VertexSeq& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
    return os.str();
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        out << text;
    else
        write_file(path, text);
}

std::vector<Edge> edge_pairs(const Instance& inst) {
    std::vector<Edge> out;
    for (const auto& p : inst.pairs) out.emplace_back(p.s, p.t);
    return out;
}

}  // namespace

int cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Induced disjoint paths and related problems on AT-free graphs", "atfp_cli"};
    app.require_subcommand(1);
    int code = kYes;

    std::string file, file2, kind, out_path, anchors_arg, pattern_out;
    std::string repro_path = "fuzz_reproducer.idp";
    bool emit_paths = false, as_json = false, timing = false;
    std::uint64_t seed = default_seed();
    int s = -1, t = -1, k = 1, n = 8, budget = 4, trials = 100, workers = 1, max_n = 12, pad = 0;

    auto* check = app.add_subcommand("check-atfree", "Report an asteroidal triple if there is one");
    check->add_option("file", file, "Instance file")->required();

    auto* solve = app.add_subcommand("solve", "Decide induced disjoint paths");
    solve->add_option("file", file, "Instance file")->required();
    solve->add_flag("--emit-paths", emit_paths, "Print the paths on yes");
    solve->add_flag("--json", as_json, "Structured report");
    solve->add_flag("--timing", timing, "Include wall time in the report");
    solve->add_option("--seed", seed, "Seed recorded in the report");

    auto* orc = app.add_subcommand("oracle", "Exhaustive reference answer");
    orc->add_option("problem", kind, "idp, path, tree or cycle")->required()->check(CLI::IsMember({"idp", "path", "tree", "cycle"}));
    orc->add_option("file", file, "Instance file")->required();
    orc->add_option("--max-n", max_n, "Refuse larger graphs");

    CLI::App* kcmd[3];
    const char* knames[3] = {"kpath", "ktree", "kcycle"};
    const char* kdesc[3] = {"Induced path through the pair terminals", "Induced tree through the pair terminals",
                            "Induced cycle through the pair terminals"};
    for (int i = 0; i < 3; ++i) {
        kcmd[i] = app.add_subcommand(knames[i], kdesc[i]);
        kcmd[i]->add_option("file", file, "Instance file; pair ends form the terminal set")->required();
    }

    auto* coin = app.add_subcommand("coinciding", "k mutually induced paths between one pair");
    coin->add_option("file", file, "Instance file (pairs ignored)")->required();
    coin->add_option("--s", s)->required();
    coin->add_option("--t", t)->required();
    coin->add_option("--k", k)->required();

    auto* itm_cmd = app.add_subcommand("itm", "Induced topological minor test");
    itm_cmd->add_option("graph", file, "Host instance file (pairs ignored)")->required();
    itm_cmd->add_option("pattern", file2, "Pattern instance file (pairs ignored)")->required();
    itm_cmd->add_option("--anchors", anchors_arg, "Comma-separated host image of each pattern vertex");
    itm_cmd->add_option("--budget", budget, "Largest unanchored pattern");

    auto* gen = app.add_subcommand("gen", "Write a generated instance");
    gen->add_option("model", kind, "interval, permutation, cobipartite, rejection or hardness")
        ->required()
        ->check(CLI::IsMember({"interval", "permutation", "cobipartite", "rejection", "hardness"}));
    gen->add_option("--n", n, "Vertices");
    gen->add_option("--k", k, "Pairs, or clique size for hardness");
    gen->add_option("--seed", seed);
    gen->add_option("--graph", file, "Clique instance for hardness");
    gen->add_option("--pad", pad, "Add a dominating clique of this size first (changes the instance)");
    gen->add_option("-o,--out", out_path, "Output file (default stdout)");
    gen->add_option("--pattern-out", pattern_out, "Where hardness writes H");

    auto* ver = app.add_subcommand("verify", "Check a solution file against an instance");
    ver->add_option("file", file)->required();
    ver->add_option("solution", file2)->required();

    auto* fz = app.add_subcommand("fuzz", "Differential test of the solver against the oracle");
    fz->add_option("--trials", trials);
    fz->add_option("--seed", seed);
    fz->add_option("--workers", workers);
    fz->add_option("-o,--out", repro_path, "Reproducer file")->capture_default_str();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kYes;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (check->parsed()) {
            const auto inst = load(file);
            if (auto at = find_asteroidal_triple(inst.g)) {
                out << "asteroidal triple: " << at->a << ' ' << at->b << ' ' << at->c << '\n';
                return kNo;
            }
            out << "at-free\n";
        } else if (solve->parsed()) {
            const auto inst = load(file);
            const auto start = std::chrono::steady_clock::now();
            const auto res = solve_idp(inst);
            ResultReport rep{"idp-dp", seed, res.yes, {}, res.stats, std::nullopt};
            if (res.solution) rep.paths = res.solution->paths;
            if (timing) rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            out << (as_json ? report_json(rep) : report_text(rep, emit_paths));
            code = res.yes ? kYes : kNo;
        } else if (orc->parsed()) {
            const auto inst = load(file);
            const auto terms = terminal_set(inst);
            bool yes = false;
            if (kind == "idp") {
                const auto ans = oracle::idp(inst.g, edge_pairs(inst), max_n);
                yes = ans.yes;
                if (yes) out << serialize_paths(ans.paths);
            } else if (kind == "path") {
                yes = oracle::k_in_a_path(inst.g, terms, max_n);
            } else if (kind == "tree") {
                yes = oracle::k_in_a_tree(inst.g, terms, max_n);
            } else {
                yes = oracle::k_in_a_cycle(inst.g, terms, max_n);
            }
            out << (yes ? "yes" : "no") << '\n';
            code = yes ? kYes : kNo;
        } else if (kcmd[0]->parsed() || kcmd[1]->parsed() || kcmd[2]->parsed()) {
            const auto inst = load(file);
            const auto terms = terminal_set(inst);
            bool yes = false;
            std::string witness;
            if (kcmd[0]->parsed()) {
                const auto a = k_in_a_path(inst.g, terms);
                yes = a.yes;
                if (yes) witness = join(*a.path);
            } else if (kcmd[1]->parsed()) {
                const auto a = k_in_a_tree(inst.g, terms);
                yes = a.yes;
                if (yes) witness = join(*a.vertices);
            } else {
                const auto a = k_in_a_cycle(inst.g, terms);
                yes = a.yes;
                if (yes) witness = join(*a.cycle);
            }
            out << (yes ? "yes" : "no") << '\n';
            if (yes) out << witness << '\n';
            code = yes ? kYes : kNo;
        } else if (coin->parsed()) {
            const auto inst = load(file);
            const auto a = coinciding_pairs(inst.g, s, t, k);
            out << (a.yes ? "yes" : "no") << '\n';
            if (a.yes) out << serialize_paths(a.solution->paths);
            code = a.yes ? kYes : kNo;
        } else if (itm_cmd->parsed()) {
            const auto host = load(file);
            const auto pat = load(file2);
            bool yes = false;
            if (!anchors_arg.empty()) {
                AnchoredPattern p{pat.g, {}};
                std::stringstream ss(anchors_arg);
                std::string item;
                Vertex hv = 0;
                while (std::getline(ss, item, ',')) {
                    try {
                        p.anchors.emplace_back(std::stoi(item), hv++);
                    } catch (const std::exception&) {
                        err << "--anchors: not an integer: '" << item << "'\n";
                        return kUsage;
                    }
                }
                yes = anchored_itm(host.g, p);
            } else {
                yes = itm(host.g, pat.g, budget);
            }
            out << (yes ? "yes" : "no") << '\n';
            code = yes ? kYes : kNo;
        } else if (gen->parsed()) {
            if (kind == "hardness") {
                if (file.empty()) {
                    err << "gen hardness needs --graph FILE\n";
                    return kUsage;
                }
                Graph g = load(file).g;
                if (pad > 0) g = pad_with_dominating_clique(g, pad);
                const auto r = reduce_clique_to_itm(g, k);
                emit(out, out_path, serialize_instance(Instance{r.g_prime, {}}));
                if (!pattern_out.empty()) write_file(pattern_out, serialize_instance(Instance{r.h, {}}));
            } else {
                emit(out, out_path, serialize_instance(gen_random(*parse_model(kind), n, k, seed)));
            }
        } else if (ver->parsed()) {
            const auto inst = load(file);
            const Solution sol{parse_paths(read_file(file2))};
            if (auto defect = solution_defect(inst, sol)) {
                out << "invalid: " << *defect << '\n';
                return kNo;
            }
            out << "valid\n";
        } else if (fz->parsed()) {
            const auto rep = run_fuzz(trials, seed, workers);
            if (rep.failed_trial) {
                write_file(repro_path, serialize_instance(*rep.reproducer));
                out << "mismatch at trial " << *rep.failed_trial << ": " << rep.detail << "\nreproducer: " << repro_path
                    << '\n';
                return kInvariant;
            }
            out << "ok: " << rep.trials << " trials, " << rep.yes << " yes, seed " << seed << '\n';
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidInstance& e) {
        err << "invalid instance: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << '\n';
        return kPrecondition;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return kInvariant;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return code;
}

}  // namespace atfp

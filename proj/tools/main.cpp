// hypershift: desk-scale toolkit for shifting, sunflower counting, matchings
// and exact extremal search in uniform hypergraphs.
//
// Exit codes: 0 success, 1 verification failure / not found,
//             2 usage or input parse error, 3 size guard exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hypershift/hypergraph.hpp"
#include "hypershift/matching.hpp"
#include "hypershift/norms.hpp"
#include "hypershift/search.hpp"
#include "hypershift/shifting.hpp"
#include "hypershift/sunflower.hpp"
#include "hypershift/verify.hpp"

namespace hs = hypershift;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

hs::Hypergraph load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hs::parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return hs::parse_hypergraph(buf.str());
}

std::string search_table(const hs::SearchReport& rep) {
    std::string out;
    out += "objective        " + std::string(hs::objective_name(rep.objective)) + "\n";
    out += "n r s k          " + std::to_string(rep.n) + " " + std::to_string(rep.r) +
           " " + std::to_string(rep.s) + " " + std::to_string(rep.k) + "\n";
    out += "shifted-only     " + std::string(rep.restricted_to_shifted ? "yes" : "no") + "\n";
    out += "explored         " + std::to_string(rep.explored) + "\n";
    out += "max value        " + std::to_string(rep.max_value) + "\n";
    out += "witnesses        " + std::to_string(rep.witnesses.size()) +
           (rep.witnesses_truncated ? " (truncated)" : "") + "\n";
    out += "seed             " + std::to_string(rep.seed) + "\n";
    for (std::size_t w = 0; w < rep.witnesses.size(); ++w) {
        out += "witness " + std::to_string(w + 1) + ":\n";
        out += hs::serialize(rep.witnesses[w]);
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"desk-scale shifting / sunflower-counting toolkit for uniform hypergraphs"};
    app.require_subcommand(1);

    // ---- count ----
    std::string count_file;
    int count_kernel = 0, count_petals = 0;
    auto* cmd_count = app.add_subcommand("count", "count sunflower copies S_{t,k} in a hypergraph file");
    cmd_count->add_option("file", count_file, "hypergraph file (header 'n r', one edge per line)")->required();
    cmd_count->add_option("--kernel", count_kernel, "kernel size t")->required();
    cmd_count->add_option("--petals", count_petals, "petal count k")->required();

    // ---- norm ----
    std::string norm_file;
    int norm_kernel = 0, norm_power = 0;
    auto* cmd_norm = app.add_subcommand("norm", "sum of d(T)^k over all t-subsets T");
    cmd_norm->add_option("file", norm_file, "hypergraph file")->required();
    cmd_norm->add_option("--kernel", norm_kernel, "subset size t")->required();
    cmd_norm->add_option("--power", norm_power, "power k")->required();

    // ---- matching ----
    std::string match_file;
    auto* cmd_matching = app.add_subcommand(
        "matching", "maximum matching: first line its size, then one witness edge per line");
    cmd_matching->add_option("file", match_file, "hypergraph file")->required();

    // ---- shift ----
    std::string shift_file;
    int shift_i = 0, shift_j = 0;
    auto* cmd_shift = app.add_subcommand(
        "shift", "apply the (i,j)-shift (replace vertex j by i where possible) and print the result");
    cmd_shift->add_option("file", shift_file, "hypergraph file")->required();
    cmd_shift->add_option("--i", shift_i, "receiving vertex i (i < j)")->required();
    cmd_shift->add_option("--j", shift_j, "donating vertex j")->required();

    // ---- stabilize ----
    std::string stab_file;
    auto* cmd_stab = app.add_subcommand(
        "stabilize", "apply shifts in lexicographic pair order until stable; the trace is "
                     "appended as comment lines");
    cmd_stab->add_option("file", stab_file, "hypergraph file")->required();

    // ---- verify ----
    std::string ver_suite;
    std::uint64_t ver_seed = kDefaultSeed, ver_trials = 1000;
    auto* cmd_verify = app.add_subcommand("verify", "run a named property suite");
    cmd_verify->add_option("--suite", ver_suite,
                           "one of: lemma21 (matching never grows under shifts), "
                           "lemma24 (kernel-(r-1) sunflower counts never drop), "
                           "phi-injective (copy transport is valid and injective), "
                           "identity11 (degree-power norm equals the weighted count form), "
                           "lemma31 (deletion-link counting recursion), "
                           "formulas (closed forms match enumeration)")
        ->required();
    cmd_verify->add_option("--seed", ver_seed, "RNG seed (default 1), echoed in output");
    cmd_verify->add_option("--trials", ver_trials, "number of random instances");

    // ---- search ----
    std::string srch_objective = "sunflower-count", srch_format = "table";
    int srch_n = 0, srch_r = 0, srch_s = 0, srch_k = 1, srch_jobs = 1;
    std::uint64_t srch_seed = kDefaultSeed;
    std::size_t srch_cap = 4096;
    bool srch_shifted = false;
    auto* cmd_search = app.add_subcommand(
        "search", "exact maximum of an objective over all r-graphs on [n] with matching "
                  "number below the bound");
    cmd_search->add_option("--objective", srch_objective, "sunflower-count | norm | edge-count");
    cmd_search->add_option("--n", srch_n, "number of vertices")->required();
    cmd_search->add_option("--r", srch_r, "uniformity")->required();
    cmd_search->add_option("--forbid-matching", srch_s, "forbid matchings of this size s (keep nu < s)")->required();
    cmd_search->add_option("--petals", srch_k, "petals / power k for the counting objectives");
    cmd_search->add_flag("--shifted-only", srch_shifted,
                         "enumerate only shifted families (sound for all three objectives)");
    cmd_search->add_option("--seed", srch_seed, "seed echoed in the report (default 1)");
    cmd_search->add_option("--jobs", srch_jobs, "worker threads for the unrestricted scan");
    cmd_search->add_option("--format", srch_format, "table | csv | report");
    cmd_search->add_option("--witness-cap", srch_cap, "cap on collected extremal witnesses");

    // ---- counterexample ----
    std::string cx_target, cx_format = "report";
    int cx_r = 3, cx_nmax = 7;
    std::uint64_t cx_seed = kDefaultSeed, cx_trials = 400;
    auto* cmd_cx = app.add_subcommand(
        "counterexample", "search for a family and shift pair witnessing a non-preserved property");
    cmd_cx->add_option("--target", cx_target,
                       "S_{a,k}-decrease | P_<l>-freeness | C_<l>-freeness | S_<l>-freeness "
                       "| K_3-freeness (optional ^r suffix)")
        ->required();
    cmd_cx->add_option("--r", cx_r, "uniformity (default 3)");
    cmd_cx->add_option("--n-max", cx_nmax, "largest vertex count to try (default 7)");
    cmd_cx->add_option("--seed", cx_seed, "RNG seed (default 1), echoed in output");
    cmd_cx->add_option("--trials", cx_trials, "random families per vertex count");
    cmd_cx->add_option("--format", cx_format, "report | csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cmd_count->parsed()) {
        std::cout << hs::count_sunflowers(load(count_file), count_kernel, count_petals)
                  << "\n";
        return 0;
    }
    if (cmd_norm->parsed()) {
        std::cout << hs::norm_direct(load(norm_file), norm_kernel, norm_power) << "\n";
        return 0;
    }
    if (cmd_matching->parsed()) {
        const hs::MatchingResult res = hs::matching_number(load(match_file));
        std::cout << res.size << "\n";
        for (hs::VertexSet e : res.witness) {
            bool first = true;
            for (int v : hs::to_vertices(e)) {
                if (!first) std::cout << ' ';
                std::cout << v;
                first = false;
            }
            std::cout << "\n";
        }
        return 0;
    }
    if (cmd_shift->parsed()) {
        std::cout << hs::serialize(hs::shift(load(shift_file), hs::ShiftPair{shift_i, shift_j}));
        return 0;
    }
    if (cmd_stab->parsed()) {
        auto [stable, trace] = hs::shift_to_stable(load(stab_file));
        std::cout << hs::serialize(stable);
        std::cout << "# steps: " << trace.steps.size() << "\n";
        for (const auto& step : trace.steps)
            std::cout << "# shift " << step.pair.i << " " << step.pair.j << " moved "
                      << step.moved << "\n";
        return 0;
    }
    if (cmd_verify->parsed()) {
        const hs::SuiteResult res = hs::run_suite(ver_suite, ver_seed, ver_trials);
        std::cout << "suite: " << res.name << "\n";
        std::cout << "seed: " << ver_seed << "\n";
        std::cout << "trials: " << ver_trials << "\n";
        std::cout << "pass: " << res.pass << "\n";
        std::cout << "fail: " << res.fail << "\n";
        for (const auto& f : res.failures) std::cout << "failure: " << f << "\n";
        return res.ok() ? 0 : 1;
    }
    if (cmd_search->parsed()) {
        const auto obj = hs::parse_objective(srch_objective);
        if (!obj) throw std::invalid_argument("unknown objective '" + srch_objective + "'");
        hs::SearchOptions opt;
        opt.n = srch_n;
        opt.r = srch_r;
        opt.s = srch_s;
        opt.k = srch_k;
        opt.objective = *obj;
        opt.restrict_shifted = srch_shifted;
        opt.jobs = srch_jobs;
        opt.seed = srch_seed;
        opt.witness_cap = srch_cap;
        const hs::SearchReport rep = hs::brute_force_max(opt);
        if (srch_format == "csv")
            std::cout << hs::to_csv(rep);
        else if (srch_format == "report")
            std::cout << hs::to_report_text(rep);
        else if (srch_format == "table")
            std::cout << search_table(rep);
        else
            throw std::invalid_argument("unknown format '" + srch_format + "'");
        return 0;
    }
    if (cmd_cx->parsed()) {
        hs::CounterexampleQuery q;
        q.target = cx_target;
        q.r = cx_r;
        q.n_max = cx_nmax;
        q.seed = cx_seed;
        q.trials = cx_trials;
        const hs::CounterexampleReport rep = hs::find_shift_counterexample(q);
        if (cx_format == "csv") {
            std::cout << "target,found,pair_i,pair_j,before,after,explored,seed\n";
            std::cout << rep.target << "," << (rep.found ? "true" : "false") << ","
                      << rep.pair.i << "," << rep.pair.j << "," << rep.value_before << ","
                      << rep.value_after << "," << rep.explored << "," << rep.seed << "\n";
        } else {
            std::cout << hs::to_report_text(rep);
        }
        return rep.found ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hs::guard_error& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const hs::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

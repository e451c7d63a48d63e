#include <fiedler/degree_sequence.hh>
#include <fiedler/enumerate.hh>
#include <fiedler/io.hh>
#include <fiedler/nodal.hh>
#include <fiedler/search.hh>
#include <fiedler/spectral.hh>
#include <fiedler/verify.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using nlohmann::json;
using std::string;

namespace
{
    enum ExitCode : int
    {
        ok = 0,
        parse_error = 2,
        not_a_tree = 3,
        bad_boundary_weight = 4,
        verify_failed = 5,
        cap_exceeded = 6
    };

    struct RunConfig
    {
        string input;
        string sequence;
        int root = -1;
        double w0 = 1.0;
        int w0_neighbor = -1;
        unsigned jobs = 1;
        double tau_zero = fiedler::default_tau_zero_rel;
        double strict_margin = 1e-10;
        std::uint64_t cap = 10'000'000;
        std::uint64_t rng_seed = 1;
        int nmax = 8;
        int samples = 100;
        string suite = "all";
        string out;
        bool timing = false;
    };

    auto default_jobs() -> unsigned
    {
        if (auto env = std::getenv("FIEDLER_JOBS")) {
            char * end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (*end == '\0' && v >= 1)
                return static_cast<unsigned>(v);
        }
        return 1;
    }

    auto emit(const RunConfig & config, const string & text) -> void
    {
        if (config.out.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream file{config.out};
        if (! file)
            throw fiedler::ParseError{"cannot write '" + config.out + "'"};
        file << text;
    }

    auto emit(const RunConfig & config, const json & j) -> void
    {
        emit(config, j.dump(2) + "\n");
    }

    auto search_options(const RunConfig & config) -> fiedler::SearchOptions
    {
        return {config.jobs, config.cap, 1e-9, config.tau_zero};
    }

    auto cmd_alpha(const RunConfig & config) -> int
    {
        auto t = fiedler::read_edge_list_file(config.input);
        emit(config, fiedler::to_json(fiedler::analyze(t, config.tau_zero)));
        return ok;
    }

    auto cmd_nu(const RunConfig & config) -> int
    {
        if (! (config.w0 >= 1.0)) {
            std::cerr << "error: --w0 must be at least 1, got " << config.w0 << '\n';
            return bad_boundary_weight;
        }
        auto t = fiedler::read_edge_list_file(config.input);
        if (config.root < 0 || config.root >= t.order()) {
            std::cerr << "error: --root " << config.root << " is not a vertex\n";
            return parse_error;
        }
        auto neighbor = config.w0_neighbor >= 0 ? config.w0_neighbor : t.neighbors(config.root).front().vertex;
        auto rbt = config.w0 == 1.0 ? fiedler::RootedBoundaryTree{t, config.root}
                                    : fiedler::RootedBoundaryTree::with_boundary_weight(t, config.root, neighbor, config.w0);

        auto d = fiedler::dirichlet_nu(rbt);
        auto g = d.on_tree(rbt.order());
        json out{{"nu", fiedler::round12(d.nu)}, {"root", rbt.root()}, {"w0", fiedler::round12(rbt.boundary_weight())},
            {"interior", d.interior}, {"vector", json::array()},
            {"monotone_paths", fiedler::check_monotone_paths(rbt, g, config.tau_zero)}};
        for (auto x : g)
            out["vector"].push_back(fiedler::round12(x));
        emit(config, out);
        return ok;
    }

    auto cmd_split(const RunConfig & config) -> int
    {
        auto t = fiedler::read_edge_list_file(config.input);
        auto analysis = fiedler::analyze(t, config.tau_zero);
        auto split = fiedler::geometric_split(t, analysis);
        auto check = fiedler::verify_split(split, analysis.alpha);
        auto j = fiedler::to_json(split, check);
        j["alpha"] = fiedler::round12(analysis.alpha);
        emit(config, j);
        return ok;
    }

    auto parse_sequence(const RunConfig & config) -> fiedler::DegreeSequence
    {
        auto seq = fiedler::DegreeSequence::parse(config.sequence);
        fiedler::require_tree_sequence(seq);
        return seq;
    }

    auto cmd_min_tree(const RunConfig & config) -> int
    {
        auto report = fiedler::min_alpha_tree(parse_sequence(config), search_options(config));
        emit(config, fiedler::to_json(report, config.timing));
        return ok;
    }

    auto cmd_min_cat(const RunConfig & config) -> int
    {
        auto report = fiedler::min_alpha_caterpillar(parse_sequence(config), search_options(config));
        emit(config, fiedler::to_json(report, config.timing));
        return ok;
    }

    auto cmd_min_rooted(const RunConfig & config) -> int
    {
        if (! (config.w0 >= 1.0)) {
            std::cerr << "error: --w0 must be at least 1, got " << config.w0 << '\n';
            return bad_boundary_weight;
        }
        auto report = fiedler::min_nu_rooted(parse_sequence(config), config.w0, search_options(config));
        emit(config, fiedler::to_json(report, config.timing));
        return ok;
    }

    auto cmd_explore(const RunConfig & config) -> int
    {
        auto rows = fiedler::explore_partitions(parse_sequence(config), search_options(config));
        emit(config, fiedler::partitions_csv(rows));
        return ok;
    }

    auto cmd_verify(const RunConfig & config) -> int
    {
        fiedler::VerifyOptions options;
        options.suite = config.suite;
        options.nmax = config.nmax;
        options.samples = config.samples;
        options.rng_seed = config.rng_seed;
        options.jobs = config.jobs;
        options.tau_zero_rel = config.tau_zero;
        options.strict_margin = config.strict_margin;
        auto report = fiedler::verify_suite(options);
        emit(config, fiedler::to_json(report));
        if (! report.pass()) {
            for (auto & p : report.properties)
                if (! p.pass)
                    std::cerr << "FAIL " << p.name << ": " << p.counterexample << '\n';
            return verify_failed;
        }
        return ok;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Algebraic connectivity, Fiedler vectors and Dirichlet eigenvalues of trees"};
    app.require_subcommand(1);

    RunConfig config;
    config.jobs = default_jobs();

    auto add_common = [&](CLI::App * cmd) {
        cmd->add_option("--out", config.out, "write output to this file instead of stdout");
        cmd->add_option("--tau-zero", config.tau_zero, "relative zero threshold for eigenvector entries")
            ->check(CLI::PositiveNumber);
    };
    auto add_file = [&](CLI::App * cmd) {
        cmd->add_option("file", config.input, "edge list: one 'u v [w]' per line")->required();
        add_common(cmd);
    };
    auto add_search = [&](CLI::App * cmd) {
        cmd->add_option("--seq", config.sequence, "degree sequence, e.g. 3,2,2,2,1,1,1")->required();
        cmd->add_option("--jobs", config.jobs, "worker threads (default $FIEDLER_JOBS or 1)")->check(CLI::PositiveNumber);
        cmd->add_option("--cap", config.cap, "maximum number of labelled trees to decode");
        cmd->add_flag("--timing", config.timing, "include elapsed seconds in the report");
        add_common(cmd);
    };

    auto alpha = app.add_subcommand("alpha", "algebraic connectivity and Fiedler analysis of a tree");
    add_file(alpha);

    auto nu = app.add_subcommand("nu", "first Dirichlet eigenvalue of a rooted tree");
    add_file(nu);
    nu->add_option("--root", config.root, "boundary vertex")->required();
    nu->add_option("--w0", config.w0, "boundary edge weight (>= 1)");
    nu->add_option("--w0-neighbor", config.w0_neighbor, "root neighbour whose edge carries w0 (default: smallest id)");

    auto split = app.add_subcommand("split", "geometric nodal domains of a tree");
    add_file(split);

    auto min_tree = app.add_subcommand("min-tree", "exhaustive minimum of alpha over trees with a degree sequence");
    add_search(min_tree);

    auto min_cat = app.add_subcommand("min-cat", "minimum of alpha over caterpillars with a degree sequence");
    add_search(min_cat);

    auto min_rooted = app.add_subcommand("min-rooted", "exhaustive minimum of nu over rooted trees");
    add_search(min_rooted);
    min_rooted->add_option("--w0", config.w0, "boundary edge weight (>= 1)");

    auto explore = app.add_subcommand("explore", "CSV of every caterpillar arrangement and its degree partition");
    add_search(explore);
    explore->add_option("--rng-seed", config.rng_seed, "accepted for symmetry with verify; explore is deterministic");

    auto verify = app.add_subcommand("verify", "property suites over enumerated and random trees");
    verify->add_option("--suite", config.suite, "theorem1, lemma2, lemma5, perturb, glue, split or all")
        ->check(CLI::IsMember(fiedler::suite_names()));
    verify->add_option("--nmax", config.nmax, "largest tree order")->check(CLI::Range(2, 14));
    verify->add_option("--samples", config.samples, "random instances per sampled property")->check(CLI::NonNegativeNumber);
    verify->add_option("--rng-seed", config.rng_seed, "seed for sampled properties");
    verify->add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--strict-margin", config.strict_margin, "relative margin for strict decreases")
        ->check(CLI::PositiveNumber);
    add_common(verify);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return parse_error;
    }

    try {
        if (*alpha)
            return cmd_alpha(config);
        if (*nu)
            return cmd_nu(config);
        if (*split)
            return cmd_split(config);
        if (*min_tree)
            return cmd_min_tree(config);
        if (*min_cat)
            return cmd_min_cat(config);
        if (*min_rooted)
            return cmd_min_rooted(config);
        if (*explore)
            return cmd_explore(config);
        if (*verify)
            return cmd_verify(config);
    }
    catch (const fiedler::ParseError & e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return parse_error;
    }
    catch (const fiedler::InvalidSequence & e) {
        std::cerr << "invalid sequence: " << e.what() << '\n';
        return parse_error;
    }
    catch (const fiedler::InvalidTree & e) {
        std::cerr << "not a tree: " << e.what() << '\n';
        return not_a_tree;
    }
    catch (const fiedler::CapExceeded & e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return cap_exceeded;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return parse_error;
}

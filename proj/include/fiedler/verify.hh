#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <fiedler/rooted.hh>
#include <fiedler/tree.hh>

namespace fiedler
{
    struct PropertyResult
    {
        std::string name;
        bool pass = true;
        std::size_t checked = 0;
        double worst = 0.0;         // largest residual / smallest margin seen, property specific
        std::string counterexample; // first failure, empty on pass
    };

    struct VerifyOptions
    {
        std::string suite = "all";
        int nmax = 8;
        int samples = 100;
        std::uint64_t rng_seed = 1;
        unsigned jobs = 1;
        double tau_zero_rel = 1e-7;
        double strict_margin = 1e-10;
        double tie_rel = 1e-9;
    };

    struct VerifyReport
    {
        std::string suite;
        VerifyOptions options;
        std::vector<PropertyResult> properties;

        auto pass() const -> bool;
    };

    /// Names accepted by verify_suite.
    auto suite_names() -> std::vector<std::string>;

    /// Runs one suite ("theorem1", "lemma2", "lemma5", "perturb", "glue",
    /// "split") or all of them. Failures are report content, never
    /// exceptions; the report is a pure function of the options.
    auto verify_suite(const VerifyOptions & options) -> VerifyReport;

    /// Uniform labelled tree on n vertices from a random Pruefer word.
    auto random_tree(int n, std::mt19937_64 & rng) -> Tree;

    /// Random rooted caterpillar on at most nmax vertices whose root has at
    /// most one non-pendant neighbour; with probability 1/2 the root edge
    /// carries a weight drawn from [1, 3].
    auto random_trunk_tree(int nmax, std::mt19937_64 & rng) -> RootedBoundaryTree;

    /// Random tree on 2..nmax vertices with a random root; with probability
    /// 1/2 a random root edge carries a weight drawn from [1, 3].
    auto random_rooted_tree(int nmax, std::mt19937_64 & rng) -> RootedBoundaryTree;

    /// "u-v[:w] ..." rendering used in counterexample dumps.
    auto describe_tree(const Tree & t) -> std::string;
}

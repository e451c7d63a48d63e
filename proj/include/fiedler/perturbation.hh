#pragma once

#include <fiedler/degree_sequence.hh>
#include <fiedler/nodal.hh>
#include <fiedler/rooted.hh>
#include <fiedler/tree.hh>

#include <span>
#include <vector>

namespace fiedler
{
    enum class PerturbationKind
    {
        p1,
        p2,
        rearrange
    };

    auto kind_name(PerturbationKind kind) -> const char *;

    struct PerturbationRecord
    {
        PerturbationKind kind;
        double before_nu;
        double after_nu;
        std::vector<Edge> removed;
        std::vector<Edge> added;

        /// after_nu < before_nu - margin * before_nu
        auto strictly_decreases(double margin = 1e-10) const -> bool;
    };

    /// Evaluates nu on both trees and lists the edges that differ.
    auto describe(PerturbationKind kind, const RootedBoundaryTree & before, const RootedBoundaryTree & after)
        -> PerturbationRecord;

    /// Moves pendant w from trunk vertex vi to trunk vertex vj, where
    /// height(vi) < height(vj). Vertex ids are unchanged.
    auto perturb_p1(const RootedBoundaryTree & rbt, Vertex w, Vertex vi, Vertex vj) -> RootedBoundaryTree;

    /// Attaches a new pendant (id n) to trunk vertex vj != root.
    auto perturb_p2(const RootedBoundaryTree & rbt, Vertex vj) -> RootedBoundaryTree;

    /// Branch rearrangement for two root paths x and y that diverge after a
    /// common prefix ending at v_{i-1}: every edge y_i t with t != v_{i-1}
    /// becomes x_j t, where x_j is the (pendant) end of x. Needs
    /// f(x_j) > f(y_i); otherwise the roles of x and y are exchanged, which
    /// then needs f(y_k) > f(x_i). f is indexed by tree vertex.
    auto rearrange_branches(const RootedBoundaryTree & rbt, std::span<const double> f, std::span<const Vertex> x_path,
        std::span<const Vertex> y_path) -> RootedBoundaryTree;

    /// As above with f the first Dirichlet eigenvector of rbt.
    auto rearrange_branches(const RootedBoundaryTree & rbt, std::span<const Vertex> x_path,
        std::span<const Vertex> y_path) -> RootedBoundaryTree;

    /// Identifies the two roots into one interior vertex. t1 keeps its ids;
    /// the interior of t2 follows in increasing id order.
    auto glue(const RootedBoundaryTree & t1, const RootedBoundaryTree & t2) -> Tree;

    /// Rooted caterpillar whose root has degree root_choice (at most one
    /// non-pendant neighbour) and whose spine degrees increase away from the
    /// root. Root is vertex 0, the spine follows, pendants are numbered from
    /// the head backwards.
    auto build_monotone_rooted_caterpillar(const DegreeSequence & seq, int root_choice) -> RootedBoundaryTree;

    /// Pendant root, every vertex has at most one non-pendant child, and
    /// degrees along the resulting non-pendant path from the root are
    /// non-decreasing.
    auto is_minimal_shape_rooted(const RootedBoundaryTree & rbt) -> bool;

    /// Caterpillar whose spine degrees are non-decreasing moving away from the
    /// characteristic vertex or edge in both directions.
    auto is_valley_caterpillar(const Tree & t, const FiedlerAnalysis & analysis) -> bool;
}

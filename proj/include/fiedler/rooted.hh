#pragma once

#include <fiedler/tree.hh>

#include <vector>

namespace fiedler
{
    /// A tree whose root v0 is its only boundary vertex.
    ///
    /// At most one edge may carry a weight other than 1; that edge must be
    /// incident to the root and its weight w0 must satisfy w0 >= 1. All other
    /// vertices form the interior.
    class RootedBoundaryTree
    {
    public:
        RootedBoundaryTree(Tree tree, Vertex root);

        /// Unit-weight tree with w0 placed on the edge {root, boundary_neighbor}.
        static auto with_boundary_weight(const Tree & tree, Vertex root, Vertex boundary_neighbor, double w0)
            -> RootedBoundaryTree;

        auto tree() const -> const Tree & { return tree_; }
        auto root() const -> Vertex { return root_; }
        auto order() const -> int { return tree_.order(); }

        /// w0; 1 when every edge has unit weight.
        auto boundary_weight() const -> double;

        /// Interior vertices in increasing id order.
        auto interior() const -> std::vector<Vertex>;

        auto height(Vertex v) const -> int;

    private:
        Tree tree_;
        Vertex root_;
    };

    class PreconditionViolated : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Geodetic distance from the root.
    auto height(const RootedBoundaryTree & rbt, Vertex v) -> int;

    /// Caterpillar with at most one non-pendant neighbour of the root.
    auto is_trunk_shaped(const RootedBoundaryTree & rbt) -> bool;

    /// Longest simple path from the root, ending at a pendant vertex (the
    /// head). Ties go to the lexicographically smallest id sequence. Throws
    /// PreconditionViolated unless is_trunk_shaped(rbt).
    auto trunk(const RootedBoundaryTree & rbt) -> std::vector<Vertex>;
}

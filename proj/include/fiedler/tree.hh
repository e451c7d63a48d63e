#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fiedler
{
    using Vertex = int;

    struct Edge
    {
        Vertex u;
        Vertex v;
        double weight = 1.0;

        auto operator<=>(const Edge &) const = default;
    };

    struct Neighbor
    {
        Vertex vertex;
        double weight;
    };

    class InvalidTree : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// A weighted undirected tree on vertices 0..n-1 (n >= 2).
    ///
    /// Construction validates the tree invariants: exactly n-1 edges, no
    /// self-loops or parallel edges, connected, strictly positive weights.
    /// Adjacency lists are kept sorted by neighbour id so that every walk
    /// over the tree is deterministic.
    class Tree
    {
    public:
        Tree(int order, std::span<const Edge> edges);

        auto order() const -> int { return static_cast<int>(adjacency_.size()); }
        auto neighbors(Vertex v) const -> const std::vector<Neighbor> & { return adjacency_.at(v); }
        auto degree(Vertex v) const -> int { return static_cast<int>(adjacency_.at(v).size()); }
        auto is_pendant(Vertex v) const -> bool { return degree(v) == 1; }

        /// 0 when u and v are not adjacent.
        auto weight(Vertex u, Vertex v) const -> double;

        /// Edges with u < v, sorted.
        auto edges() const -> std::vector<Edge>;

        auto has_unit_weights() const -> bool;

        auto operator==(const Tree & other) const -> bool { return edges() == other.edges(); }

    private:
        std::vector<std::vector<Neighbor>> adjacency_;
    };

    auto make_path(int order) -> Tree;
    auto make_star(int order) -> Tree;

    /// Centre joined to `legs.size()` paths, leg i having legs[i] vertices.
    auto make_spider(std::span<const int> legs) -> Tree;

    /// Returns a copy of t with edge {u, v} reweighted.
    auto with_edge_weight(const Tree & t, Vertex u, Vertex v, double weight) -> Tree;

    /// Ordered spine (the path left after deleting all pendant vertices), or
    /// nullopt when t is not a caterpillar. The spine starts at its endpoint
    /// with the smaller id and is empty for the single edge.
    auto spine_path(const Tree & t) -> std::optional<std::vector<Vertex>>;

    auto is_caterpillar(const Tree & t) -> bool;

    /// Spine degrees of a caterpillar, in spine order. Every entry is >= 2.
    struct CaterpillarSpec
    {
        std::vector<int> spine_degrees;
    };

    /// Caterpillar with the given spine. Spine vertices take ids 0..k-1 in
    /// order, pendants follow and are handed out to spine vertices in
    /// increasing order. An empty spine yields the single edge.
    auto build_caterpillar(const CaterpillarSpec & spec) -> Tree;

    /// Vertex sets of the branches at u: the components of t - u, excluding
    /// the one containing root unless u == root. Each set is sorted; sets
    /// are ordered by their smallest member.
    auto branches_at(const Tree & t, Vertex root, Vertex u) -> std::vector<std::vector<Vertex>>;

    /// Number of edges from root to every vertex.
    auto distances_from(const Tree & t, Vertex root) -> std::vector<int>;

    /// Parent of every vertex when t hangs from root; -1 at the root.
    auto parents_from(const Tree & t, Vertex root) -> std::vector<Vertex>;

    /// True when the vertex set induces a connected subgraph of t.
    auto induces_connected(const Tree & t, std::span<const Vertex> vertices) -> bool;
}

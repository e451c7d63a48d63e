#include <fiedler/rooted.hh>

#include <algorithm>
#include <string>

using std::to_string;
using std::vector;

namespace fiedler
{
    RootedBoundaryTree::RootedBoundaryTree(Tree tree, Vertex root) :
        tree_(std::move(tree)),
        root_(root)
    {
        if (root_ < 0 || root_ >= tree_.order())
            throw InvalidTree{"root " + to_string(root_) + " is not a vertex"};

        int weighted = 0;
        for (auto & e : tree_.edges()) {
            if (e.weight == 1.0)
                continue;
            ++weighted;
            if (e.u != root_ && e.v != root_)
                throw InvalidTree{"edge " + to_string(e.u) + " " + to_string(e.v)
                    + " carries a non-unit weight but is not a boundary edge"};
            if (e.weight < 1.0)
                throw InvalidTree{"boundary weight " + std::to_string(e.weight) + " is below 1"};
        }
        if (weighted > 1)
            throw InvalidTree{"more than one edge carries a non-unit weight"};
    }

    auto RootedBoundaryTree::with_boundary_weight(const Tree & tree, Vertex root, Vertex boundary_neighbor, double w0)
        -> RootedBoundaryTree
    {
        if (! (w0 >= 1.0))
            throw InvalidTree{"boundary weight " + std::to_string(w0) + " is below 1"};
        if (tree.weight(root, boundary_neighbor) == 0.0)
            throw InvalidTree{to_string(boundary_neighbor) + " is not adjacent to the root"};
        if (w0 == 1.0)
            return RootedBoundaryTree{tree, root};
        return RootedBoundaryTree{with_edge_weight(tree, root, boundary_neighbor, w0), root};
    }

    auto RootedBoundaryTree::boundary_weight() const -> double
    {
        double w0 = 1.0;
        for (auto & nb : tree_.neighbors(root_))
            w0 = std::max(w0, nb.weight);
        return w0;
    }

    auto RootedBoundaryTree::interior() const -> vector<Vertex>
    {
        vector<Vertex> result;
        for (Vertex v = 0; v < order(); ++v)
            if (v != root_)
                result.push_back(v);
        return result;
    }

    auto RootedBoundaryTree::height(Vertex v) const -> int
    {
        return fiedler::height(*this, v);
    }

    auto height(const RootedBoundaryTree & rbt, Vertex v) -> int
    {
        if (v < 0 || v >= rbt.order())
            throw InvalidTree{"vertex " + to_string(v) + " is not in the tree"};
        return distances_from(rbt.tree(), rbt.root())[v];
    }

    auto is_trunk_shaped(const RootedBoundaryTree & rbt) -> bool
    {
        auto & t = rbt.tree();
        if (! is_caterpillar(t))
            return false;
        auto & nbs = t.neighbors(rbt.root());
        auto inner = std::count_if(nbs.begin(), nbs.end(), [&](const Neighbor & nb) { return ! t.is_pendant(nb.vertex); });
        return inner <= 1;
    }

    auto trunk(const RootedBoundaryTree & rbt) -> vector<Vertex>
    {
        if (! is_trunk_shaped(rbt))
            throw PreconditionViolated{"trunk needs a caterpillar with at most one non-pendant root neighbour"};

        auto & t = rbt.tree();
        auto dist = distances_from(t, rbt.root());
        auto parent = parents_from(t, rbt.root());
        int longest = *std::max_element(dist.begin(), dist.end());

        vector<Vertex> best;
        for (Vertex v = 0; v < t.order(); ++v) {
            if (dist[v] != longest)
                continue;
            vector<Vertex> path;
            for (Vertex x = v; x != -1; x = parent[x])
                path.push_back(x);
            std::reverse(path.begin(), path.end());
            if (best.empty() || path < best)
                best = std::move(path);
        }
        return best;
    }
}

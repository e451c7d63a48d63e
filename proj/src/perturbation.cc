#include <fiedler/perturbation.hh>
#include <fiedler/spectral.hh>

#include <algorithm>
#include <string>

using std::span;
using std::to_string;
using std::vector;

namespace fiedler
{
    namespace
    {
        auto same_endpoints(const Edge & a, const Edge & b) -> bool
        {
            return std::minmax(a.u, a.v) == std::minmax(b.u, b.v);
        }

        auto on_path(span<const Vertex> path, Vertex v) -> bool
        {
            return std::find(path.begin(), path.end(), v) != path.end();
        }

        auto require_root_path(const Tree & t, Vertex root, span<const Vertex> path, const char * name) -> void
        {
            if (path.empty() || path.front() != root)
                throw PreconditionViolated{std::string{name} + " path does not start at the root"};
            for (std::size_t i = 0; i < path.size(); ++i) {
                if (path[i] < 0 || path[i] >= t.order())
                    throw PreconditionViolated{std::string{name} + " path leaves the tree"};
                if (i > 0 && t.weight(path[i - 1], path[i]) == 0.0)
                    throw PreconditionViolated{std::string{name} + " path uses a non-edge"};
                if (std::find(path.begin(), path.begin() + i, path[i]) != path.begin() + i)
                    throw PreconditionViolated{std::string{name} + " path is not simple"};
            }
        }
    }

    auto kind_name(PerturbationKind kind) -> const char *
    {
        switch (kind) {
        case PerturbationKind::p1: return "P1";
        case PerturbationKind::p2: return "P2";
        case PerturbationKind::rearrange: return "rearrange";
        }
        return "?";
    }

    auto PerturbationRecord::strictly_decreases(double margin) const -> bool
    {
        return after_nu < before_nu - margin * before_nu;
    }

    auto describe(PerturbationKind kind, const RootedBoundaryTree & before, const RootedBoundaryTree & after)
        -> PerturbationRecord
    {
        PerturbationRecord record{kind, dirichlet_nu(before).nu, dirichlet_nu(after).nu, {}, {}};
        auto old_edges = before.tree().edges(), new_edges = after.tree().edges();
        for (auto & e : old_edges)
            if (std::none_of(new_edges.begin(), new_edges.end(), [&](const Edge & x) { return same_endpoints(e, x); }))
                record.removed.push_back(e);
        for (auto & e : new_edges)
            if (std::none_of(old_edges.begin(), old_edges.end(), [&](const Edge & x) { return same_endpoints(e, x); }))
                record.added.push_back(e);
        return record;
    }

    auto perturb_p1(const RootedBoundaryTree & rbt, Vertex w, Vertex vi, Vertex vj) -> RootedBoundaryTree
    {
        auto & t = rbt.tree();
        auto path = trunk(rbt);
        if (! on_path(path, vi) || ! on_path(path, vj))
            throw PreconditionViolated{"P1 needs both endpoints on the trunk"};
        if (w < 0 || w >= t.order() || w == rbt.root() || ! t.is_pendant(w))
            throw PreconditionViolated{"P1 moves a pendant vertex other than the root"};
        if (w == vj || t.weight(w, vi) == 0.0)
            throw PreconditionViolated{"P1 pendant " + to_string(w) + " is not attached to " + to_string(vi)};
        if (t.weight(w, vi) != 1.0)
            throw PreconditionViolated{"P1 cannot move the weighted boundary edge"};
        if (! (rbt.height(vi) < rbt.height(vj)))
            throw PreconditionViolated{"P1 needs height(vi) < height(vj)"};

        auto edges = t.edges();
        for (auto & e : edges)
            if (same_endpoints(e, {w, vi}))
                e = {w, vj, 1.0};
        return RootedBoundaryTree{Tree{t.order(), edges}, rbt.root()};
    }

    auto perturb_p2(const RootedBoundaryTree & rbt, Vertex vj) -> RootedBoundaryTree
    {
        auto & t = rbt.tree();
        if (vj == rbt.root())
            throw PreconditionViolated{"P2 cannot attach to the root"};
        if (! on_path(trunk(rbt), vj))
            throw PreconditionViolated{"P2 needs a trunk vertex"};
        auto edges = t.edges();
        edges.push_back({vj, t.order(), 1.0});
        return RootedBoundaryTree{Tree{t.order() + 1, edges}, rbt.root()};
    }

    auto rearrange_branches(const RootedBoundaryTree & rbt, span<const double> f, span<const Vertex> x_path,
        span<const Vertex> y_path) -> RootedBoundaryTree
    {
        auto & t = rbt.tree();
        if (static_cast<int>(f.size()) != t.order())
            throw std::invalid_argument{"vector dimension does not match tree order"};
        require_root_path(t, rbt.root(), x_path, "x");
        require_root_path(t, rbt.root(), y_path, "y");

        std::size_t i = 0;
        while (i < x_path.size() && i < y_path.size() && x_path[i] == y_path[i])
            ++i;
        if (i == 0 || i >= x_path.size() || i >= y_path.size())
            throw PreconditionViolated{"paths do not diverge"};
        if (x_path.size() - 1 <= i || y_path.size() - 1 <= i)
            throw PreconditionViolated{"both paths must continue past the divergence point"};

        auto x = x_path, y = y_path;
        if (! (f[x.back()] > f[y[i]])) {
            std::swap(x, y);
            if (! (f[x.back()] > f[y[i]]))
                throw PreconditionViolated{"neither path end dominates the other branch"};
        }
        auto xj = x.back(), yi = y[i], anchor = y[i - 1];
        if (! t.is_pendant(xj))
            throw PreconditionViolated{"path end " + to_string(xj) + " is not pendant"};

        auto edges = t.edges();
        for (auto & e : edges) {
            if (e.u == yi && e.v != anchor)
                e = {xj, e.v, e.weight};
            else if (e.v == yi && e.u != anchor)
                e = {e.u, xj, e.weight};
        }
        return RootedBoundaryTree{Tree{t.order(), edges}, rbt.root()};
    }

    auto rearrange_branches(const RootedBoundaryTree & rbt, span<const Vertex> x_path, span<const Vertex> y_path)
        -> RootedBoundaryTree
    {
        auto g = dirichlet_nu(rbt).on_tree(rbt.order());
        return rearrange_branches(rbt, g, x_path, y_path);
    }

    auto glue(const RootedBoundaryTree & t1, const RootedBoundaryTree & t2) -> Tree
    {
        int n1 = t1.order();
        vector<int> id(t2.order(), -1);
        id[t2.root()] = t1.root();
        int next = n1;
        for (Vertex v = 0; v < t2.order(); ++v)
            if (v != t2.root())
                id[v] = next++;

        auto edges = t1.tree().edges();
        for (auto & e : t2.tree().edges())
            edges.push_back({id[e.u], id[e.v], e.weight});
        return Tree{next, edges};
    }

    auto build_monotone_rooted_caterpillar(const DegreeSequence & seq, int root_choice) -> RootedBoundaryTree
    {
        require_tree_sequence(seq);
        auto rest = seq.degrees();
        auto it = std::find(rest.begin(), rest.end(), root_choice);
        if (it == rest.end())
            throw InvalidSequence{"root degree " + to_string(root_choice) + " does not occur in (" + seq.to_string() + ")"};
        rest.erase(it);

        vector<int> spine;
        int pendants = 0;
        for (auto d : rest)
            (d >= 2 ? spine.push_back(d) : void(++pendants));
        std::sort(spine.begin(), spine.end());

        int k = static_cast<int>(spine.size());
        // pendants wanted by the root and each spine vertex
        vector<int> want(k + 1);
        want[0] = k == 0 ? root_choice : root_choice - 1;
        for (int i = 0; i < k; ++i)
            want[i + 1] = spine[i] - (i + 1 < k ? 2 : 1);
        int needed = 0;
        for (auto x : want)
            needed += x;
        if (needed != pendants)
            throw InvalidSequence{"(" + seq.to_string() + ") has no caterpillar rooted at degree " + to_string(root_choice)};

        vector<Edge> edges;
        for (Vertex s = 0; s < k; ++s)
            edges.push_back({s, s + 1});
        Vertex next = k + 1;
        for (int s = k; s >= 0; --s)
            for (int p = 0; p < want[s]; ++p)
                edges.push_back({s, next++});
        return RootedBoundaryTree{Tree{next, edges}, 0};
    }

    auto is_minimal_shape_rooted(const RootedBoundaryTree & rbt) -> bool
    {
        auto & t = rbt.tree();
        if (! t.is_pendant(rbt.root()))
            return false;

        Vertex prev = rbt.root(), cur = t.neighbors(rbt.root()).front().vertex;
        int last_degree = 0;
        while (! t.is_pendant(cur)) {
            if (t.degree(cur) < last_degree)
                return false;
            last_degree = t.degree(cur);
            Vertex next = -1;
            for (auto & nb : t.neighbors(cur)) {
                if (nb.vertex == prev || t.is_pendant(nb.vertex))
                    continue;
                if (next != -1)
                    return false;
                next = nb.vertex;
            }
            if (next == -1)
                break;
            prev = cur;
            cur = next;
        }
        return true;
    }

    auto is_valley_caterpillar(const Tree & t, const FiedlerAnalysis & analysis) -> bool
    {
        auto spine = spine_path(t);
        if (! spine)
            return false;
        if (spine->empty())
            return true;

        auto position = [&](Vertex v) -> int {
            auto it = std::find(spine->begin(), spine->end(), v);
            return it == spine->end() ? -1 : static_cast<int>(it - spine->begin());
        };

        int left, right;
        auto & cs = analysis.charset;
        if (cs.kind == CharacteristicSet::Kind::vertex) {
            left = right = position(cs.vertex);
            if (left < 0)
                return false;
        }
        else {
            auto a = position(cs.negative), b = position(cs.positive);
            if (a < 0 || b < 0 || std::abs(a - b) != 1)
                return false;
            left = std::min(a, b);
            right = std::max(a, b);
        }

        auto & s = *spine;
        for (int i = left; i > 0; --i)
            if (t.degree(s[i - 1]) < t.degree(s[i]))
                return false;
        for (int i = right; i + 1 < static_cast<int>(s.size()); ++i)
            if (t.degree(s[i + 1]) < t.degree(s[i]))
                return false;
        return true;
    }
}

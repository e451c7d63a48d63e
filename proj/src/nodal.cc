#include <fiedler/nodal.hh>
#include <fiedler/spectral.hh>

#include <algorithm>
#include <cmath>
#include <string>

using std::span;
using std::to_string;
using std::vector;

namespace fiedler
{
    auto zero_threshold(span<const double> f, double tau_zero_rel) -> double
    {
        double largest = 0.0;
        for (auto x : f)
            largest = std::max(largest, std::abs(x));
        return tau_zero_rel * largest;
    }

    auto CharacteristicSet::ids() const -> vector<Vertex>
    {
        if (kind == Kind::vertex)
            return {vertex};
        return {std::min(negative, positive), std::max(negative, positive)};
    }

    auto CharacteristicSet::kind_name() const -> const char *
    {
        return kind == Kind::vertex ? "vertex" : "edge";
    }

    namespace
    {
        auto sign_of(double x, double tau) -> int
        {
            return x > tau ? 1 : x < -tau ? -1 : 0;
        }

        // true when v lies on every path between a positive and a negative vertex
        auto separates_signs(const Tree & t, Vertex v, span<const int> sign) -> bool
        {
            for (auto & branch : branches_at(t, v, v)) {
                bool pos = false, neg = false;
                for (auto x : branch) {
                    pos = pos || sign[x] > 0;
                    neg = neg || sign[x] < 0;
                }
                if (pos && neg)
                    return false;
            }
            return true;
        }

        auto make_side(const Tree & t, const vector<Vertex> & members, Vertex boundary_origin,
            const vector<Neighbor> & boundary_edges) -> std::pair<RootedBoundaryTree, vector<Vertex>>
        {
            vector<int> local(t.order(), -1);
            vector<Vertex> origin{boundary_origin};
            for (auto v : members) {
                local[v] = static_cast<int>(origin.size());
                origin.push_back(v);
            }

            vector<Edge> edges;
            for (auto & e : t.edges())
                if (local[e.u] > 0 && local[e.v] > 0)
                    edges.push_back({local[e.u], local[e.v], e.weight});
            for (auto & [v, w] : boundary_edges)
                edges.push_back({0, local.at(v), w});

            Tree side{static_cast<int>(origin.size()), edges};
            return {RootedBoundaryTree{std::move(side), 0}, std::move(origin)};
        }
    }

    auto characteristic_set(const Tree & t, span<const double> f, double tau_zero_rel) -> CharacteristicSet
    {
        if (static_cast<int>(f.size()) != t.order())
            throw std::invalid_argument{"vector dimension does not match tree order"};
        auto tau = zero_threshold(f, tau_zero_rel);

        vector<int> sign(t.order());
        for (Vertex v = 0; v < t.order(); ++v)
            sign[v] = sign_of(f[v], tau);

        vector<CharacteristicSet> edges;
        for (auto & e : t.edges())
            if (sign[e.u] * sign[e.v] < 0) {
                auto neg = sign[e.u] < 0 ? e.u : e.v;
                auto pos = sign[e.u] < 0 ? e.v : e.u;
                edges.push_back({CharacteristicSet::Kind::edge, -1, neg, pos});
            }
        if (edges.size() == 1)
            return edges.front();
        if (edges.size() > 1)
            throw AmbiguousCharacteristicSet{to_string(edges.size()) + " sign-change edges"};

        bool any_pos = std::count(sign.begin(), sign.end(), 1) > 0;
        bool any_neg = std::count(sign.begin(), sign.end(), -1) > 0;
        if (! any_pos || ! any_neg)
            throw AmbiguousCharacteristicSet{"vector does not change sign"};

        vector<Vertex> candidates;
        for (Vertex v = 0; v < t.order(); ++v)
            if (sign[v] == 0 && separates_signs(t, v, sign))
                candidates.push_back(v);
        if (candidates.size() != 1)
            throw AmbiguousCharacteristicSet{to_string(candidates.size()) + " candidate characteristic vertices"};
        return {CharacteristicSet::Kind::vertex, candidates.front(), -1, -1};
    }

    auto nodal_domains(const Tree & t, span<const double> f, double tau_zero_rel) -> NodalDomains
    {
        if (static_cast<int>(f.size()) != t.order())
            throw std::invalid_argument{"vector dimension does not match tree order"};
        auto tau = zero_threshold(f, tau_zero_rel);
        NodalDomains d;
        for (Vertex v = 0; v < t.order(); ++v) {
            if (f[v] >= -tau)
                d.pos.push_back(v);
            if (f[v] <= tau)
                d.neg.push_back(v);
        }
        if (! induces_connected(t, d.pos))
            throw DisconnectedNodalDomain{"non-negative domain is not connected"};
        if (! induces_connected(t, d.neg))
            throw DisconnectedNodalDomain{"non-positive domain is not connected"};
        return d;
    }

    auto analyze(const Tree & t, double tau_zero_rel) -> FiedlerAnalysis
    {
        auto [alpha, f] = algebraic_connectivity(t);
        auto charset = characteristic_set(t, f, tau_zero_rel);
        auto domains = nodal_domains(t, f, tau_zero_rel);
        return {alpha, std::move(f), charset, std::move(domains.pos), std::move(domains.neg), tau_zero_rel};
    }

    auto geometric_split(const Tree & t, const FiedlerAnalysis & analysis) -> GeometricSplit
    {
        if (! t.has_unit_weights())
            throw InvalidTree{"geometric split needs a unit-weight tree"};
        auto & f = analysis.fiedler;
        auto & cs = analysis.charset;

        if (cs.kind == CharacteristicSet::Kind::edge) {
            auto u = cs.negative, w = cs.positive;
            double gap = std::abs(f[w] - f[u]);
            double w1 = gap / std::abs(f[u]);
            double w2 = gap / std::abs(f[w]);

            // the branch at u containing w is the positive side
            vector<Vertex> pos_side, neg_side{u};
            for (auto & branch : branches_at(t, u, u))
                if (std::binary_search(branch.begin(), branch.end(), w))
                    pos_side = branch;
                else
                    neg_side.insert(neg_side.end(), branch.begin(), branch.end());
            std::sort(neg_side.begin(), neg_side.end());

            auto [t1, origin1] = make_side(t, pos_side, -1, {{w, w2}});
            auto [t2, origin2] = make_side(t, neg_side, -1, {{u, w1}});
            return {std::move(t1), std::move(t2), std::move(origin1), std::move(origin2), w1, w2, cs};
        }

        auto v0 = cs.vertex;
        auto tau = zero_threshold(f, analysis.tau_zero_rel);
        vector<vector<Vertex>> pos_branches, neg_branches, zero_branches;
        for (auto & branch : branches_at(t, v0, v0)) {
            bool pos = false, neg = false;
            for (auto x : branch) {
                pos = pos || f[x] > tau;
                neg = neg || f[x] < -tau;
            }
            if (pos && neg)
                throw AmbiguousCharacteristicSet{"branch at the characteristic vertex changes sign"};
            (pos ? pos_branches : neg ? neg_branches : zero_branches).push_back(branch);
        }

        auto total = [](const vector<vector<Vertex>> & bs) {
            std::size_t s = 0;
            for (auto & b : bs)
                s += b.size();
            return s;
        };
        for (auto & branch : zero_branches)
            (total(neg_branches) < total(pos_branches) ? neg_branches : pos_branches).push_back(branch);

        auto side = [&](const vector<vector<Vertex>> & bs) {
            vector<Vertex> members;
            vector<Neighbor> boundary;
            for (auto & b : bs) {
                members.insert(members.end(), b.begin(), b.end());
                for (auto & nb : t.neighbors(v0))
                    if (std::binary_search(b.begin(), b.end(), nb.vertex))
                        boundary.push_back({nb.vertex, 1.0});
            }
            std::sort(members.begin(), members.end());
            return make_side(t, members, v0, boundary);
        };
        auto [t1, origin1] = side(pos_branches);
        auto [t2, origin2] = side(neg_branches);
        return {std::move(t1), std::move(t2), std::move(origin1), std::move(origin2), 1.0, 1.0, cs};
    }

    auto verify_split(const GeometricSplit & split, double alpha) -> SplitCheck
    {
        auto nu1 = dirichlet_nu(split.t1).nu;
        auto nu2 = dirichlet_nu(split.t2).nu;
        return {nu1, nu2, std::abs(nu1 - alpha) / alpha, std::abs(nu2 - alpha) / alpha};
    }

    auto check_monotone_paths(const RootedBoundaryTree & rbt, span<const double> g, double tau_zero_rel) -> bool
    {
        auto & t = rbt.tree();
        if (static_cast<int>(g.size()) != t.order())
            throw std::invalid_argument{"vector dimension does not match tree order"};

        vector<double> values(g.begin(), g.end());
        values[rbt.root()] = 0.0;
        auto tau = zero_threshold(values, tau_zero_rel);

        auto parent = parents_from(t, rbt.root());
        vector<Vertex> order{rbt.root()};
        for (std::size_t i = 0; i < order.size(); ++i)
            for (auto & nb : t.neighbors(order[i]))
                if (nb.vertex != parent[order[i]])
                    order.push_back(nb.vertex);

        // per vertex: is the root path so far all zero / strictly increasing
        vector<char> zero(t.order(), 1), increasing(t.order(), 1);
        for (auto v : order) {
            if (v == rbt.root())
                continue;
            auto p = parent[v];
            zero[v] = zero[p] && std::abs(values[v]) <= tau;
            increasing[v] = increasing[p] && values[v] > values[p] + tau;
            if (t.is_pendant(v) && ! zero[v] && ! increasing[v])
                return false;
        }
        return true;
    }
}

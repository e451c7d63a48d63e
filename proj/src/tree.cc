#include <fiedler/tree.hh>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

using std::span;
using std::to_string;
using std::vector;

namespace fiedler
{
    Tree::Tree(int order, span<const Edge> edges)
    {
        if (order < 2)
            throw InvalidTree{"a tree needs at least two vertices, got " + to_string(order)};
        if (static_cast<int>(edges.size()) != order - 1)
            throw InvalidTree{"a tree on " + to_string(order) + " vertices has " + to_string(order - 1) + " edges, got "
                + to_string(edges.size())};

        adjacency_.resize(order);
        for (auto & e : edges) {
            if (e.u < 0 || e.u >= order || e.v < 0 || e.v >= order)
                throw InvalidTree{"edge " + to_string(e.u) + " " + to_string(e.v) + " references a missing vertex"};
            if (e.u == e.v)
                throw InvalidTree{"self-loop at vertex " + to_string(e.u)};
            if (! (e.weight > 0.0) || ! std::isfinite(e.weight))
                throw InvalidTree{"edge " + to_string(e.u) + " " + to_string(e.v) + " has non-positive weight"};
            adjacency_[e.u].push_back({e.v, e.weight});
            adjacency_[e.v].push_back({e.u, e.weight});
        }

        for (Vertex v = 0; v < order; ++v) {
            auto & adj = adjacency_[v];
            std::sort(adj.begin(), adj.end(), [](const Neighbor & a, const Neighbor & b) { return a.vertex < b.vertex; });
            auto dup = std::adjacent_find(adj.begin(), adj.end(),
                [](const Neighbor & a, const Neighbor & b) { return a.vertex == b.vertex; });
            if (dup != adj.end())
                throw InvalidTree{"parallel edges between " + to_string(v) + " and " + to_string(dup->vertex)};
        }

        // n-1 edges and connected <=> tree
        vector<bool> seen(order, false);
        vector<Vertex> stack{0};
        seen[0] = true;
        int reached = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto & [w, _] : adjacency_[v])
                if (! seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != order)
            throw InvalidTree{"graph is not connected (contains a cycle or isolated part)"};
    }

    auto Tree::weight(Vertex u, Vertex v) const -> double
    {
        for (auto & [w, weight] : adjacency_.at(u))
            if (w == v)
                return weight;
        return 0.0;
    }

    auto Tree::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(adjacency_.size() - 1);
        for (Vertex v = 0; v < order(); ++v)
            for (auto & [w, weight] : adjacency_[v])
                if (v < w)
                    result.push_back({v, w, weight});
        return result;
    }

    auto Tree::has_unit_weights() const -> bool
    {
        for (auto & adj : adjacency_)
            for (auto & nb : adj)
                if (nb.weight != 1.0)
                    return false;
        return true;
    }

    auto make_path(int order) -> Tree
    {
        vector<Edge> edges;
        for (Vertex v = 0; v + 1 < order; ++v)
            edges.push_back({v, v + 1});
        return Tree{order, edges};
    }

    auto make_star(int order) -> Tree
    {
        vector<Edge> edges;
        for (Vertex v = 1; v < order; ++v)
            edges.push_back({0, v});
        return Tree{order, edges};
    }

    auto make_spider(span<const int> legs) -> Tree
    {
        vector<Edge> edges;
        Vertex next = 1;
        for (int len : legs) {
            Vertex prev = 0;
            for (int i = 0; i < len; ++i) {
                edges.push_back({prev, next});
                prev = next++;
            }
        }
        return Tree{next, edges};
    }

    auto with_edge_weight(const Tree & t, Vertex u, Vertex v, double weight) -> Tree
    {
        auto edges = t.edges();
        bool found = false;
        for (auto & e : edges)
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
                e.weight = weight;
                found = true;
            }
        if (! found)
            throw InvalidTree{"no edge between " + to_string(u) + " and " + to_string(v)};
        return Tree{t.order(), edges};
    }

    auto spine_path(const Tree & t) -> std::optional<vector<Vertex>>
    {
        vector<Vertex> spine;
        for (Vertex v = 0; v < t.order(); ++v)
            if (! t.is_pendant(v))
                spine.push_back(v);
        if (spine.empty())
            return vector<Vertex>{};

        // spine neighbours of each spine vertex
        auto spine_degree = [&](Vertex v) {
            return std::count_if(t.neighbors(v).begin(), t.neighbors(v).end(),
                [&](const Neighbor & nb) { return ! t.is_pendant(nb.vertex); });
        };

        Vertex start = -1;
        for (auto v : spine) {
            auto d = spine_degree(v);
            if (d > 2)
                return std::nullopt;
            if (d <= 1 && start == -1)
                start = v;
        }
        if (start == -1)
            return std::nullopt;

        vector<Vertex> ordered{start};
        Vertex prev = -1, cur = start;
        while (true) {
            Vertex next = -1;
            for (auto & nb : t.neighbors(cur))
                if (nb.vertex != prev && ! t.is_pendant(nb.vertex))
                    next = nb.vertex;
            if (next == -1)
                break;
            ordered.push_back(next);
            prev = cur;
            cur = next;
        }
        return ordered;
    }

    auto is_caterpillar(const Tree & t) -> bool
    {
        return spine_path(t).has_value();
    }

    auto build_caterpillar(const CaterpillarSpec & spec) -> Tree
    {
        auto & spine = spec.spine_degrees;
        if (spine.empty())
            return make_path(2);
        for (auto d : spine)
            if (d < 2)
                throw InvalidTree{"spine degree " + to_string(d) + " is below 2"};

        int k = static_cast<int>(spine.size());
        vector<int> pendants(k);
        for (int i = 0; i < k; ++i) {
            int spine_neighbours = (k == 1) ? 0 : (i == 0 || i == k - 1) ? 1 : 2;
            pendants[i] = spine[i] - spine_neighbours;
            if (pendants[i] < 0 || (k > 1 && (i == 0 || i == k - 1) && pendants[i] < 1))
                throw InvalidTree{"spine degree " + to_string(spine[i]) + " cannot be realised at position " + to_string(i)};
        }

        vector<Edge> edges;
        for (Vertex i = 0; i + 1 < k; ++i)
            edges.push_back({i, i + 1});
        Vertex next = k;
        for (int i = 0; i < k; ++i)
            for (int p = 0; p < pendants[i]; ++p)
                edges.push_back({i, next++});
        return Tree{next, edges};
    }

    namespace
    {
        auto component_without(const Tree & t, Vertex start, Vertex removed, vector<int> & label, int id) -> void
        {
            vector<Vertex> stack{start};
            label[start] = id;
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto & nb : t.neighbors(v))
                    if (nb.vertex != removed && label[nb.vertex] == -1) {
                        label[nb.vertex] = id;
                        stack.push_back(nb.vertex);
                    }
            }
        }
    }

    auto branches_at(const Tree & t, Vertex root, Vertex u) -> vector<vector<Vertex>>
    {
        if (u < 0 || u >= t.order())
            throw InvalidTree{"vertex " + to_string(u) + " is not in the tree"};
        if (root < 0 || root >= t.order())
            throw InvalidTree{"root " + to_string(root) + " is not in the tree"};

        vector<int> label(t.order(), -1);
        label[u] = -2;
        int id = 0;
        for (auto & nb : t.neighbors(u))
            component_without(t, nb.vertex, u, label, id++);

        int root_label = (u == root) ? -1 : label[root];
        vector<vector<Vertex>> branches(id);
        for (Vertex v = 0; v < t.order(); ++v)
            if (label[v] >= 0 && label[v] != root_label)
                branches[label[v]].push_back(v);
        std::erase_if(branches, [](const auto & b) { return b.empty(); });
        std::sort(branches.begin(), branches.end());
        return branches;
    }

    auto distances_from(const Tree & t, Vertex root) -> vector<int>
    {
        vector<int> dist(t.order(), -1);
        vector<Vertex> queue{root};
        dist.at(root) = 0;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (auto & nb : t.neighbors(queue[i]))
                if (dist[nb.vertex] == -1) {
                    dist[nb.vertex] = dist[queue[i]] + 1;
                    queue.push_back(nb.vertex);
                }
        return dist;
    }

    auto parents_from(const Tree & t, Vertex root) -> vector<Vertex>
    {
        vector<Vertex> parent(t.order(), -2);
        vector<Vertex> queue{root};
        parent.at(root) = -1;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (auto & nb : t.neighbors(queue[i]))
                if (parent[nb.vertex] == -2) {
                    parent[nb.vertex] = queue[i];
                    queue.push_back(nb.vertex);
                }
        return parent;
    }

    auto induces_connected(const Tree & t, span<const Vertex> vertices) -> bool
    {
        if (vertices.empty())
            return true;
        vector<bool> member(t.order(), false);
        for (auto v : vertices)
            member.at(v) = true;
        vector<bool> seen(t.order(), false);
        vector<Vertex> stack{vertices.front()};
        seen[vertices.front()] = true;
        std::size_t reached = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto & nb : t.neighbors(v))
                if (member[nb.vertex] && ! seen[nb.vertex]) {
                    seen[nb.vertex] = true;
                    ++reached;
                    stack.push_back(nb.vertex);
                }
        }
        auto distinct = static_cast<std::size_t>(std::count(member.begin(), member.end(), true));
        return reached == distinct;
    }
}

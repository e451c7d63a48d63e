#include <fiedler/canonical.hh>

#include <algorithm>

using std::string;
using std::vector;

namespace fiedler
{
    auto rooted_code(const Tree & t, Vertex root) -> string
    {
        auto parent = parents_from(t, root);

        // BFS order, then fold children into parents from the bottom up
        vector<Vertex> order{root};
        for (std::size_t i = 0; i < order.size(); ++i)
            for (auto & nb : t.neighbors(order[i]))
                if (nb.vertex != parent[order[i]])
                    order.push_back(nb.vertex);

        vector<vector<string>> child_codes(t.order());
        vector<string> code(t.order());
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto v = *it;
            auto & kids = child_codes[v];
            std::sort(kids.begin(), kids.end());
            string c = "(";
            for (auto & k : kids)
                c += k;
            c += ')';
            if (parent[v] >= 0) {
                if (t.weight(v, parent[v]) != 1.0)
                    c.insert(c.begin(), '*');
                child_codes[parent[v]].push_back(std::move(c));
            }
            else
                code[v] = std::move(c);
            kids.clear();
        }
        return code[root];
    }

    auto rooted_code(const RootedBoundaryTree & rbt) -> string
    {
        return rooted_code(rbt.tree(), rbt.root());
    }

    auto centers(const Tree & t) -> vector<Vertex>
    {
        // peel leaves layer by layer
        int n = t.order();
        vector<int> deg(n);
        vector<Vertex> layer;
        for (Vertex v = 0; v < n; ++v) {
            deg[v] = t.degree(v);
            if (deg[v] <= 1)
                layer.push_back(v);
        }
        int remaining = n;
        while (remaining > 2) {
            remaining -= static_cast<int>(layer.size());
            vector<Vertex> next;
            for (auto v : layer)
                for (auto & nb : t.neighbors(v))
                    if (--deg[nb.vertex] == 1)
                        next.push_back(nb.vertex);
            layer = std::move(next);
        }
        std::sort(layer.begin(), layer.end());
        return layer;
    }

    auto canonical_code(const Tree & t) -> string
    {
        string best;
        for (auto c : centers(t)) {
            auto code = rooted_code(t, c);
            if (best.empty() || code < best)
                best = std::move(code);
        }
        return best;
    }
}

#include <fiedler/canonical.hh>
#include <fiedler/enumerate.hh>

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <thread>

using std::map;
using std::string;
using std::uint64_t;
using std::vector;

namespace fiedler
{
    namespace
    {
        constexpr auto saturated = std::numeric_limits<uint64_t>::max();

        auto binomial(uint64_t n, uint64_t k) -> uint64_t
        {
            if (k > n)
                return 0;
            k = std::min(k, n - k);
            unsigned __int128 result = 1;
            for (uint64_t i = 1; i <= k; ++i) {
                result = result * (n - k + i) / i;
                if (result > saturated)
                    return saturated;
            }
            return static_cast<uint64_t>(result);
        }

        auto multinomial(const vector<int> & counts) -> uint64_t
        {
            uint64_t total = 0;
            unsigned __int128 result = 1;
            for (auto c : counts) {
                total += c;
                result *= binomial(total, c);
                if (result > saturated)
                    return saturated;
            }
            return static_cast<uint64_t>(result);
        }

        auto word_counts(const DegreeSequence & seq) -> vector<int>
        {
            vector<int> counts(seq.size());
            for (int i = 0; i < seq.size(); ++i)
                counts[i] = seq[i] - 1;
            return counts;
        }

        template <typename Item_, typename Work_>
        auto merge_by_code(uint64_t total, unsigned jobs, Work_ work) -> map<string, Item_>
        {
            auto ranges = split_ranges(total, std::max(1u, jobs));
            vector<map<string, Item_>> partial(ranges.size());
            if (ranges.size() <= 1) {
                if (! ranges.empty())
                    work(ranges[0].first, ranges[0].second, partial[0]);
            }
            else {
                vector<std::jthread> workers;
                for (std::size_t i = 0; i < ranges.size(); ++i)
                    workers.emplace_back([&, i] { work(ranges[i].first, ranges[i].second, partial[i]); });
            }
            map<string, Item_> merged;
            for (auto & p : partial)
                merged.merge(p);
            return merged;
        }
    }

    auto labeled_tree_count(const DegreeSequence & seq) -> uint64_t
    {
        require_tree_sequence(seq);
        return multinomial(word_counts(seq));
    }

    auto decode_pruefer(std::span<const int> word, int n) -> Tree
    {
        if (n < 2 || static_cast<int>(word.size()) != n - 2)
            throw InvalidTree{"Pruefer word length must be n - 2"};

        vector<int> degree(n, 1);
        for (auto x : word) {
            if (x < 0 || x >= n)
                throw InvalidTree{"Pruefer symbol out of range"};
            ++degree[x];
        }

        std::priority_queue<Vertex, vector<Vertex>, std::greater<>> leaves;
        for (Vertex v = 0; v < n; ++v)
            if (degree[v] == 1)
                leaves.push(v);

        vector<Edge> edges;
        edges.reserve(n - 1);
        for (auto x : word) {
            auto leaf = leaves.top();
            leaves.pop();
            edges.push_back({std::min(leaf, x), std::max(leaf, x)});
            if (--degree[x] == 1)
                leaves.push(x);
        }
        auto a = leaves.top();
        leaves.pop();
        auto b = leaves.top();
        edges.push_back({std::min(a, b), std::max(a, b)});
        return Tree{n, edges};
    }

    auto pruefer_word_at(const DegreeSequence & seq, uint64_t rank) -> vector<int>
    {
        auto counts = word_counts(seq);
        auto total = multinomial(counts);
        if (rank >= total)
            throw std::out_of_range{"Pruefer rank out of range"};

        int length = seq.size() - 2;
        vector<int> word;
        word.reserve(length);
        for (int pos = 0; pos < length; ++pos) {
            for (int s = 0; s < static_cast<int>(counts.size()); ++s) {
                if (counts[s] == 0)
                    continue;
                --counts[s];
                auto block = multinomial(counts);
                if (rank < block) {
                    word.push_back(s);
                    break;
                }
                rank -= block;
                ++counts[s];
            }
        }
        return word;
    }

    auto for_each_labeled_tree(const DegreeSequence & seq, uint64_t first, uint64_t last,
        const std::function<void(const Tree &)> & visit) -> void
    {
        require_tree_sequence(seq);
        if (first >= last)
            return;
        int n = seq.size();
        auto word = pruefer_word_at(seq, first);
        for (auto r = first; r < last; ++r) {
            visit(decode_pruefer(word, n));
            std::next_permutation(word.begin(), word.end());
        }
    }

    auto split_ranges(uint64_t total, unsigned parts) -> vector<std::pair<uint64_t, uint64_t>>
    {
        vector<std::pair<uint64_t, uint64_t>> ranges;
        if (total == 0)
            return ranges;
        parts = static_cast<unsigned>(std::min<uint64_t>(std::max(1u, parts), total));
        uint64_t base = total / parts, extra = total % parts, lo = 0;
        for (unsigned i = 0; i < parts; ++i) {
            uint64_t hi = lo + base + (i < extra ? 1 : 0);
            ranges.emplace_back(lo, hi);
            lo = hi;
        }
        return ranges;
    }

    auto enumerate_trees(const DegreeSequence & seq, const EnumerationOptions & options) -> vector<CodedTree>
    {
        auto total = labeled_tree_count(seq);
        if (total > options.cap)
            throw CapExceeded{"sequence (" + seq.to_string() + ") has " + std::to_string(total)
                + " labelled trees, above the cap of " + std::to_string(options.cap)
                + "; the caterpillar-restricted search covers minimisation"};

        auto merged = merge_by_code<Tree>(total, options.jobs, [&](uint64_t lo, uint64_t hi, map<string, Tree> & out) {
            for_each_labeled_tree(seq, lo, hi, [&](const Tree & t) {
                auto code = canonical_code(t);
                if (! out.contains(code))
                    out.emplace(std::move(code), t);
            });
        });

        vector<CodedTree> result;
        result.reserve(merged.size());
        for (auto & [code, tree] : merged)
            result.push_back({code, tree});
        return result;
    }

    auto enumerate_rooted_trees(const DegreeSequence & seq, double w0, const EnumerationOptions & options)
        -> vector<CodedRootedTree>
    {
        if (! (w0 >= 1.0))
            throw InvalidTree{"boundary weight " + std::to_string(w0) + " is below 1"};

        map<string, RootedBoundaryTree> rooted;
        for (auto & [_, tree] : enumerate_trees(seq, options)) {
            for (Vertex root = 0; root < tree.order(); ++root) {
                if (w0 == 1.0) {
                    RootedBoundaryTree rbt{tree, root};
                    rooted.try_emplace(rooted_code(rbt), rbt);
                    continue;
                }
                for (auto & nb : tree.neighbors(root)) {
                    auto rbt = RootedBoundaryTree::with_boundary_weight(tree, root, nb.vertex, w0);
                    rooted.try_emplace(rooted_code(rbt), rbt);
                }
            }
        }

        vector<CodedRootedTree> result;
        result.reserve(rooted.size());
        for (auto & [code, rbt] : rooted)
            result.push_back({code, rbt});
        return result;
    }
}

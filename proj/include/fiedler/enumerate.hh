#pragma once

#include <fiedler/degree_sequence.hh>
#include <fiedler/rooted.hh>
#include <fiedler/tree.hh>

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fiedler
{
    class CapExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct CodedTree
    {
        std::string code;
        Tree tree;
    };

    struct CodedRootedTree
    {
        std::string code;
        RootedBoundaryTree tree;
    };

    /// (n-2)! / prod (d_i - 1)!, saturating at UINT64_MAX.
    auto labeled_tree_count(const DegreeSequence & seq) -> std::uint64_t;

    /// Decodes a Pruefer word over vertices 0..n-1 (word length n-2).
    auto decode_pruefer(std::span<const int> word, int n) -> Tree;

    /// The rank-th Pruefer word, in lexicographic order, among those in which
    /// vertex i occurs d_i - 1 times.
    auto pruefer_word_at(const DegreeSequence & seq, std::uint64_t rank) -> std::vector<int>;

    /// Calls visit on the labelled trees with ranks [first, last).
    auto for_each_labeled_tree(const DegreeSequence & seq, std::uint64_t first, std::uint64_t last,
        const std::function<void(const Tree &)> & visit) -> void;

    struct EnumerationOptions
    {
        unsigned jobs = 1;
        std::uint64_t cap = 10'000'000;
    };

    /// Every unlabelled tree with the degree multiset of seq, once each,
    /// ordered by canonical code. Labelled decodings are split into rank
    /// ranges over `jobs` workers and merged by code.
    auto enumerate_trees(const DegreeSequence & seq, const EnumerationOptions & options = {}) -> std::vector<CodedTree>;

    /// Every (tree, root) pair up to rooted isomorphism, ordered by rooted
    /// code. For w0 != 1 every inequivalent placement of the boundary weight
    /// on a root edge is a separate entry.
    auto enumerate_rooted_trees(const DegreeSequence & seq, double w0, const EnumerationOptions & options = {})
        -> std::vector<CodedRootedTree>;

    /// Splits [0, total) into `parts` contiguous ranges of near-equal size.
    auto split_ranges(std::uint64_t total, unsigned parts) -> std::vector<std::pair<std::uint64_t, std::uint64_t>>;
}

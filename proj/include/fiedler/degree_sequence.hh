#pragma once

#include <fiedler/tree.hh>

#include <string>
#include <string_view>
#include <vector>

namespace fiedler
{
    class InvalidSequence : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Vertex degrees d_0..d_{n-1}. Order is kept as given; vertex i of a
    /// labelled realisation has degree d_i.
    class DegreeSequence
    {
    public:
        DegreeSequence() = default;
        explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {}

        /// Parses "3,2,2,1,1" (whitespace around entries is allowed).
        static auto parse(std::string_view text) -> DegreeSequence;

        auto degrees() const -> const std::vector<int> & { return degrees_; }
        auto size() const -> int { return static_cast<int>(degrees_.size()); }
        auto operator[](int i) const -> int { return degrees_.at(i); }

        auto sorted_descending() const -> DegreeSequence;
        auto count_of(int degree) const -> int;

        /// Degrees >= 2, i.e. the spine multiset of any caterpillar realisation.
        auto interior_degrees() const -> std::vector<int>;

        auto to_string(char separator = ',') const -> std::string;

        auto operator<=>(const DegreeSequence &) const = default;

    private:
        std::vector<int> degrees_;
    };

    /// n >= 2, every d_i >= 1 and the degrees sum to 2(n-1).
    auto validate_tree_sequence(const DegreeSequence & seq) -> bool;

    /// Throws InvalidSequence naming the violated rule.
    auto require_tree_sequence(const DegreeSequence & seq) -> void;

    /// Degree multiset of t, sorted non-increasing.
    auto degree_sequence(const Tree & t) -> DegreeSequence;

    /// Every tree sequence on n vertices, each sorted non-increasing, in
    /// lexicographically decreasing order.
    auto tree_sequences(int n) -> std::vector<DegreeSequence>;

    /// True when the caterpillar built from spec has exactly the degree
    /// multiset of seq.
    auto caterpillar_realises(const CaterpillarSpec & spec, const DegreeSequence & seq) -> bool;
}

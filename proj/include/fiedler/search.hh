#pragma once

#include <fiedler/degree_sequence.hh>
#include <fiedler/enumerate.hh>
#include <fiedler/nodal.hh>
#include <fiedler/rooted.hh>

#include <optional>
#include <string>
#include <vector>

namespace fiedler
{
    struct SearchOptions
    {
        unsigned jobs = 1;
        std::uint64_t cap = 10'000'000;
        double tie_rel = 1e-9;
        double tau_zero_rel = default_tau_zero_rel;
    };

    struct Minimizer
    {
        std::string code;
        Tree tree;
        double value;
        std::optional<Vertex> root;          // rooted searches
        std::vector<int> arrangement;        // caterpillar searches
        bool caterpillar = false;
        bool shape = false;                  // valley shape, or minimal rooted shape
    };

    enum class SearchKind
    {
        alpha_tree,
        alpha_caterpillar,
        nu_rooted
    };

    struct SearchReport
    {
        SearchKind kind;
        DegreeSequence sequence;
        double w0 = 1.0;
        std::vector<Minimizer> minimizers;
        double min_value = 0.0;
        bool all_caterpillars = true;
        bool all_shape = true;
        std::size_t instance_count = 0;
        double elapsed = 0.0; // seconds
    };

    /// Exact argmin of the algebraic connectivity over every unlabelled tree
    /// with the given degrees. Co-minimisers within tie_rel of the minimum are
    /// all reported, ordered by (value, code).
    auto min_alpha_tree(const DegreeSequence & seq, const SearchOptions & options = {}) -> SearchReport;

    /// Spine arrangements of the interior degrees, one per reversal class,
    /// in lexicographically decreasing order.
    auto spine_arrangements(const DegreeSequence & seq) -> std::vector<std::vector<int>>;

    /// Argmin of the algebraic connectivity over caterpillars with the given
    /// degrees.
    auto min_alpha_caterpillar(const DegreeSequence & seq, const SearchOptions & options = {}) -> SearchReport;

    /// Argmin of the first Dirichlet eigenvalue over rooted trees.
    auto min_nu_rooted(const DegreeSequence & seq, double w0, const SearchOptions & options = {}) -> SearchReport;

    struct PartitionRow
    {
        DegreeSequence sequence;
        std::vector<int> arrangement;
        double alpha;
        CharacteristicSet::Kind charset_kind;
        std::vector<int> charset_position; // spine indices
        std::vector<int> left_degrees;     // non-negative side, outward
        std::vector<int> right_degrees;    // non-positive side, outward
    };

    /// One row per spine arrangement, sorted by alpha (then arrangement).
    /// The characteristic vertex's own degree is in neither side list.
    auto explore_partitions(const DegreeSequence & seq, const SearchOptions & options = {}) -> std::vector<PartitionRow>;

    auto partitions_csv(const std::vector<PartitionRow> & rows) -> std::string;
}

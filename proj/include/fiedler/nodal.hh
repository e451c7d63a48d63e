#pragma once

#include <fiedler/rooted.hh>
#include <fiedler/tree.hh>

#include <span>
#include <stdexcept>
#include <vector>

namespace fiedler
{
    /// Relative zero threshold: |f(v)| <= tau_zero_rel * max|f| counts as 0.
    inline constexpr double default_tau_zero_rel = 1e-7;

    auto zero_threshold(std::span<const double> f, double tau_zero_rel = default_tau_zero_rel) -> double;

    class AmbiguousCharacteristicSet : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class DisconnectedNodalDomain : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct CharacteristicSet
    {
        enum class Kind
        {
            vertex,
            edge
        };

        Kind kind;
        Vertex vertex = -1;   // vertex case
        Vertex negative = -1; // edge case: f(negative) < 0 < f(positive)
        Vertex positive = -1;

        /// [vertex] or the two edge endpoints in increasing order.
        auto ids() const -> std::vector<Vertex>;
        auto kind_name() const -> const char *;
    };

    /// The sign-change edge, or, when there is none, the unique zero vertex
    /// separating the strictly positive from the strictly negative vertices.
    auto characteristic_set(const Tree & t, std::span<const double> f, double tau_zero_rel = default_tau_zero_rel)
        -> CharacteristicSet;

    struct NodalDomains
    {
        std::vector<Vertex> pos; // f >= -tau
        std::vector<Vertex> neg; // f <= +tau
    };

    /// Weak nodal domains; throws DisconnectedNodalDomain if either is not
    /// connected.
    auto nodal_domains(const Tree & t, std::span<const double> f, double tau_zero_rel = default_tau_zero_rel)
        -> NodalDomains;

    struct FiedlerAnalysis
    {
        double alpha;
        std::vector<double> fiedler;
        CharacteristicSet charset;
        std::vector<Vertex> domain_pos;
        std::vector<Vertex> domain_neg;
        double tau_zero_rel = default_tau_zero_rel;
    };

    auto analyze(const Tree & t, double tau_zero_rel = default_tau_zero_rel) -> FiedlerAnalysis;

    /// The two geometric nodal domains.
    ///
    /// Each side is a rooted boundary tree with the new boundary vertex v0 at
    /// local id 0 and its interior at 1..m in increasing original id order.
    /// origin1/origin2 map local ids to original ids; origin[0] is the
    /// characteristic vertex, or -1 for a vertex inserted on the
    /// characteristic edge. In the edge case w1 is the weight of the half
    /// edge next to the negative endpoint and w2 the one next to the positive
    /// endpoint; both are 1 in the vertex case.
    struct GeometricSplit
    {
        RootedBoundaryTree t1; // non-negative side
        RootedBoundaryTree t2; // non-positive side
        std::vector<Vertex> origin1;
        std::vector<Vertex> origin2;
        double w1 = 1.0;
        double w2 = 1.0;
        CharacteristicSet charset;
    };

    /// Requires a unit-weight tree. Branches at a characteristic vertex on
    /// which f vanishes go to the side with fewer interior vertices (ties to
    /// the non-negative side), in order of their smallest vertex.
    auto geometric_split(const Tree & t, const FiedlerAnalysis & analysis) -> GeometricSplit;

    struct SplitCheck
    {
        double nu1;
        double nu2;
        double r1; // |nu1 - alpha| / alpha
        double r2;
    };

    auto verify_split(const GeometricSplit & split, double alpha) -> SplitCheck;

    /// g indexed by tree vertex (root entry ignored). True when along every
    /// root-to-leaf path g is strictly increasing by more than tau, or the
    /// whole path is zero within tau.
    auto check_monotone_paths(const RootedBoundaryTree & rbt, std::span<const double> g,
        double tau_zero_rel = default_tau_zero_rel) -> bool;
}

#pragma once

#include <fiedler/rooted.hh>
#include <fiedler/tree.hh>

#include <string>

namespace fiedler
{
    /// Parenthesis encoding of t hanging from root, children sorted
    /// lexicographically. A child reached over an edge whose weight is not 1
    /// is prefixed with '*', which is enough to tell apart the placements of
    /// a single boundary weight.
    auto rooted_code(const Tree & t, Vertex root) -> std::string;

    auto rooted_code(const RootedBoundaryTree & rbt) -> std::string;

    /// Isomorphism invariant of an unweighted tree: the rooted code at the
    /// centre, or the smaller of the two codes for a bicentral tree.
    auto canonical_code(const Tree & t) -> std::string;

    /// One or two centre vertices (minimisers of eccentricity).
    auto centers(const Tree & t) -> std::vector<Vertex>;
}

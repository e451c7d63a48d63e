#pragma once

#include <fiedler/nodal.hh>
#include <fiedler/perturbation.hh>
#include <fiedler/search.hh>
#include <fiedler/spectral.hh>
#include <fiedler/tree.hh>
#include <fiedler/verify.hh>

#include <json.hpp>

#include <istream>
#include <stdexcept>
#include <string>

namespace fiedler
{
    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Reads "u v [w]" lines ('#' comments, blank lines ignored). Throws
    /// ParseError for malformed lines and InvalidTree when the edges do not
    /// form a tree.
    auto read_edge_list(std::istream & in) -> Tree;
    auto read_edge_list_file(const std::string & path) -> Tree;

    /// One "u v" or "u v w" line per edge; weights printed only when not 1.
    auto write_edge_list(const Tree & t) -> std::string;

    /// x rounded to 12 significant digits, so that JSON output diffs cleanly.
    auto round12(double x) -> double;

    auto to_json(const FiedlerAnalysis & analysis) -> nlohmann::json;
    auto to_json(const CharacteristicSet & charset) -> nlohmann::json;
    auto to_json(const Tree & t) -> nlohmann::json;
    auto to_json(const GeometricSplit & split, const SplitCheck & check) -> nlohmann::json;
    auto to_json(const PerturbationRecord & record) -> nlohmann::json;
    auto to_json(const SearchReport & report, bool include_elapsed = false) -> nlohmann::json;
    auto to_json(const VerifyReport & report) -> nlohmann::json;
}

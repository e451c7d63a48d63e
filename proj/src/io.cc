#include <fiedler/io.hh>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using nlohmann::json;
using std::string;
using std::vector;

namespace fiedler
{
    auto read_edge_list(std::istream & in) -> Tree
    {
        vector<Edge> edges;
        int max_id = -1;
        string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            auto first = line.find_first_not_of(" \t\r");
            if (first == string::npos || line[first] == '#')
                continue;

            std::istringstream fields{line};
            vector<string> tokens;
            for (string tok; fields >> tok;)
                tokens.push_back(tok);
            if (tokens.size() != 2 && tokens.size() != 3)
                throw ParseError{"line " + std::to_string(line_no) + ": expected 'u v [w]'"};

            auto parse_id = [&](const string & s) {
                char * end = nullptr;
                long v = std::strtol(s.c_str(), &end, 10);
                if (*end != '\0' || v < 0 || v > 1'000'000)
                    throw ParseError{"line " + std::to_string(line_no) + ": bad vertex id '" + s + "'"};
                return static_cast<int>(v);
            };
            Edge e{parse_id(tokens[0]), parse_id(tokens[1]), 1.0};
            if (tokens.size() == 3) {
                char * end = nullptr;
                e.weight = std::strtod(tokens[2].c_str(), &end);
                if (*end != '\0' || ! std::isfinite(e.weight) || e.weight <= 0.0)
                    throw ParseError{"line " + std::to_string(line_no) + ": bad weight '" + tokens[2] + "'"};
            }
            max_id = std::max({max_id, e.u, e.v});
            edges.push_back(e);
        }
        if (edges.empty())
            throw ParseError{"no edges"};
        return Tree{max_id + 1, edges};
    }

    auto read_edge_list_file(const string & path) -> Tree
    {
        std::ifstream in{path};
        if (! in)
            throw ParseError{"cannot open '" + path + "'"};
        return read_edge_list(in);
    }

    auto write_edge_list(const Tree & t) -> string
    {
        string out;
        char buf[64];
        for (auto & e : t.edges()) {
            out += std::to_string(e.u) + ' ' + std::to_string(e.v);
            if (e.weight != 1.0) {
                std::snprintf(buf, sizeof buf, " %.17g", e.weight);
                out += buf;
            }
            out += '\n';
        }
        return out;
    }

    auto round12(double x) -> double
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", x);
        return std::strtod(buf, nullptr);
    }

    namespace
    {
        auto rounded(const vector<double> & xs) -> json
        {
            auto out = json::array();
            for (auto x : xs)
                out.push_back(round12(x));
            return out;
        }
    }

    auto to_json(const CharacteristicSet & charset) -> json
    {
        return {{"kind", charset.kind_name()}, {"ids", charset.ids()}};
    }

    auto to_json(const FiedlerAnalysis & analysis) -> json
    {
        return {{"alpha", round12(analysis.alpha)}, {"fiedler", rounded(analysis.fiedler)},
            {"characteristic", to_json(analysis.charset)}, {"domain_pos", analysis.domain_pos},
            {"domain_neg", analysis.domain_neg}};
    }

    auto to_json(const Tree & t) -> json
    {
        auto edges = json::array();
        for (auto & e : t.edges()) {
            if (e.weight == 1.0)
                edges.push_back({e.u, e.v});
            else
                edges.push_back({e.u, e.v, round12(e.weight)});
        }
        return {{"n", t.order()}, {"edges", edges}};
    }

    auto to_json(const GeometricSplit & split, const SplitCheck & check) -> json
    {
        auto side = [](const RootedBoundaryTree & rbt, const vector<Vertex> & origin, double nu, double r) {
            auto j = to_json(rbt.tree());
            j["root"] = rbt.root();
            j["boundary_weight"] = round12(rbt.boundary_weight());
            j["origin"] = origin;
            j["nu"] = round12(nu);
            j["residual"] = round12(r);
            return j;
        };
        json j{{"characteristic", to_json(split.charset)}, {"t1", side(split.t1, split.origin1, check.nu1, check.r1)},
            {"t2", side(split.t2, split.origin2, check.nu2, check.r2)}};
        if (split.charset.kind == CharacteristicSet::Kind::edge) {
            j["w1"] = round12(split.w1);
            j["w2"] = round12(split.w2);
        }
        return j;
    }

    auto to_json(const PerturbationRecord & record) -> json
    {
        auto edges = [](const vector<Edge> & es) {
            auto out = json::array();
            for (auto & e : es)
                out.push_back({e.u, e.v});
            return out;
        };
        return {{"kind", kind_name(record.kind)}, {"before_nu", round12(record.before_nu)},
            {"after_nu", round12(record.after_nu)}, {"removed", edges(record.removed)}, {"added", edges(record.added)}};
    }

    auto to_json(const SearchReport & report, bool include_elapsed) -> json
    {
        const char * kind = report.kind == SearchKind::alpha_tree ? "min-tree"
            : report.kind == SearchKind::alpha_caterpillar        ? "min-cat"
                                                                  : "min-rooted";
        bool rooted = report.kind == SearchKind::nu_rooted;

        auto minimizers = json::array();
        for (auto & m : report.minimizers) {
            auto j = to_json(m.tree);
            j["code"] = m.code;
            j["value"] = round12(m.value);
            j["caterpillar"] = m.caterpillar;
            j[rooted ? "minimal_shape_rooted" : "valley_shape"] = m.shape;
            if (m.root)
                j["root"] = *m.root;
            if (report.kind == SearchKind::alpha_caterpillar)
                j["arrangement"] = m.arrangement;
            minimizers.push_back(j);
        }

        json j{{"command", kind}, {"sequence", report.sequence.degrees()},
            {rooted ? "min_nu" : "min_alpha", round12(report.min_value)}, {"minimizers", minimizers},
            {"all_caterpillars", report.all_caterpillars},
            {rooted ? "all_minimal_shape_rooted" : "all_valley_shape", report.all_shape},
            {"instance_count", report.instance_count}};
        if (rooted)
            j["w0"] = round12(report.w0);
        if (include_elapsed)
            j["elapsed"] = report.elapsed;
        return j;
    }

    auto to_json(const VerifyReport & report) -> json
    {
        auto properties = json::array();
        for (auto & p : report.properties) {
            json j{{"name", p.name}, {"pass", p.pass}, {"checked", p.checked}, {"worst", round12(p.worst)}};
            if (! p.pass)
                j["counterexample"] = p.counterexample;
            properties.push_back(j);
        }
        auto & o = report.options;
        return {{"suite", report.suite}, {"pass", report.pass()}, {"nmax", o.nmax}, {"samples", o.samples},
            {"rng_seed", o.rng_seed}, {"properties", properties}};
    }
}

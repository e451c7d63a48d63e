#include <fiedler/canonical.hh>
#include <fiedler/perturbation.hh>
#include <fiedler/search.hh>
#include <fiedler/spectral.hh>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <thread>

using std::string;
using std::vector;

namespace fiedler
{
    namespace
    {
        using clock = std::chrono::steady_clock;

        auto seconds_since(clock::time_point start) -> double
        {
            return std::chrono::duration<double>(clock::now() - start).count();
        }

        // evaluate(i) for i in [0, count), spread over jobs workers
        auto parallel_map(std::size_t count, unsigned jobs, const std::function<void(std::size_t)> & evaluate) -> void
        {
            auto ranges = split_ranges(count, std::max(1u, jobs));
            if (ranges.size() <= 1) {
                for (std::size_t i = 0; i < count; ++i)
                    evaluate(i);
                return;
            }
            vector<std::jthread> workers;
            for (auto [lo, hi] : ranges)
                workers.emplace_back([&, lo, hi] {
                    for (auto i = lo; i < hi; ++i)
                        evaluate(i);
                });
        }

        // keeps everything within tie_rel of the minimum, ordered by (value, code)
        auto select_minimizers(vector<Minimizer> candidates, double tie_rel, SearchReport & report) -> void
        {
            report.instance_count = candidates.size();
            if (candidates.empty())
                return;
            double best = std::min_element(candidates.begin(), candidates.end(),
                [](const Minimizer & a, const Minimizer & b) { return a.value < b.value; })->value;
            report.min_value = best;
            for (auto & c : candidates)
                if (c.value <= best + tie_rel * std::abs(best))
                    report.minimizers.push_back(std::move(c));
            std::sort(report.minimizers.begin(), report.minimizers.end(), [](const Minimizer & a, const Minimizer & b) {
                return std::tie(a.value, a.code) < std::tie(b.value, b.code);
            });
            for (auto & m : report.minimizers) {
                report.all_caterpillars = report.all_caterpillars && m.caterpillar;
                report.all_shape = report.all_shape && m.shape;
            }
        }

        auto unrooted_candidate(string code, const Tree & t, double tau_zero_rel) -> Minimizer
        {
            auto analysis = analyze(t, tau_zero_rel);
            bool caterpillar = is_caterpillar(t);
            return {std::move(code), t, analysis.alpha, std::nullopt, {}, caterpillar,
                caterpillar && is_valley_caterpillar(t, analysis)};
        }
    }

    auto min_alpha_tree(const DegreeSequence & seq, const SearchOptions & options) -> SearchReport
    {
        auto start = clock::now();
        auto trees = enumerate_trees(seq, {options.jobs, options.cap});

        vector<std::optional<Minimizer>> evaluated(trees.size());
        parallel_map(trees.size(), options.jobs, [&](std::size_t i) {
            evaluated[i] = unrooted_candidate(trees[i].code, trees[i].tree, options.tau_zero_rel);
        });

        vector<Minimizer> candidates;
        for (auto & e : evaluated)
            candidates.push_back(std::move(*e));

        SearchReport report{.kind = SearchKind::alpha_tree, .sequence = seq};
        select_minimizers(std::move(candidates), options.tie_rel, report);
        report.elapsed = seconds_since(start);
        return report;
    }

    auto spine_arrangements(const DegreeSequence & seq) -> vector<vector<int>>
    {
        require_tree_sequence(seq);
        auto interior = seq.interior_degrees();
        std::sort(interior.begin(), interior.end(), std::greater<>{});
        vector<vector<int>> result;
        do {
            vector<int> reversed(interior.rbegin(), interior.rend());
            if (interior >= reversed)
                result.push_back(interior);
        } while (std::prev_permutation(interior.begin(), interior.end()));
        return result;
    }

    auto min_alpha_caterpillar(const DegreeSequence & seq, const SearchOptions & options) -> SearchReport
    {
        auto start = clock::now();
        if (seq.count_of(1) < 2)
            throw InvalidSequence{"(" + seq.to_string() + ") has fewer than two pendant vertices"};
        auto arrangements = spine_arrangements(seq);

        vector<std::optional<Minimizer>> evaluated(arrangements.size());
        parallel_map(arrangements.size(), options.jobs, [&](std::size_t i) {
            auto t = build_caterpillar({arrangements[i]});
            auto m = unrooted_candidate(canonical_code(t), t, options.tau_zero_rel);
            m.arrangement = arrangements[i];
            evaluated[i] = std::move(m);
        });

        vector<Minimizer> candidates;
        for (auto & e : evaluated)
            candidates.push_back(std::move(*e));

        SearchReport report{.kind = SearchKind::alpha_caterpillar, .sequence = seq};
        select_minimizers(std::move(candidates), options.tie_rel, report);
        report.elapsed = seconds_since(start);
        return report;
    }

    auto min_nu_rooted(const DegreeSequence & seq, double w0, const SearchOptions & options) -> SearchReport
    {
        auto start = clock::now();
        auto rooted = enumerate_rooted_trees(seq, w0, {options.jobs, options.cap});

        vector<std::optional<Minimizer>> evaluated(rooted.size());
        parallel_map(rooted.size(), options.jobs, [&](std::size_t i) {
            auto & rbt = rooted[i].tree;
            evaluated[i] = Minimizer{rooted[i].code, rbt.tree(), dirichlet_nu(rbt).nu, rbt.root(), {},
                is_caterpillar(rbt.tree()), is_minimal_shape_rooted(rbt)};
        });

        vector<Minimizer> candidates;
        for (auto & e : evaluated)
            candidates.push_back(std::move(*e));

        SearchReport report{.kind = SearchKind::nu_rooted, .sequence = seq, .w0 = w0};
        select_minimizers(std::move(candidates), options.tie_rel, report);
        report.elapsed = seconds_since(start);
        return report;
    }

    auto explore_partitions(const DegreeSequence & seq, const SearchOptions & options) -> vector<PartitionRow>
    {
        if (seq.count_of(1) < 2)
            throw InvalidSequence{"(" + seq.to_string() + ") has fewer than two pendant vertices"};
        auto arrangements = spine_arrangements(seq);
        auto canonical_seq = seq.sorted_descending();

        vector<std::optional<PartitionRow>> rows(arrangements.size());
        parallel_map(arrangements.size(), options.jobs, [&](std::size_t i) {
            auto & spine = arrangements[i];
            auto t = build_caterpillar({spine});
            auto analysis = analyze(t, options.tau_zero_rel);
            auto split = geometric_split(t, analysis);

            // build_caterpillar puts spine vertex s at id s
            int k = static_cast<int>(spine.size());
            vector<int> position;
            for (auto v : analysis.charset.ids())
                if (v < k)
                    position.push_back(v);

            auto outward = [&](const vector<Vertex> & origin) {
                vector<int> members;
                for (std::size_t j = 1; j < origin.size(); ++j)
                    if (origin[j] >= 0 && origin[j] < k)
                        members.push_back(origin[j]);
                auto distance = [&](int s) {
                    int d = k;
                    for (auto p : position)
                        d = std::min(d, std::abs(s - p));
                    return d;
                };
                std::stable_sort(members.begin(), members.end(), [&](int a, int b) { return distance(a) < distance(b); });
                vector<int> degrees;
                for (auto s : members)
                    degrees.push_back(spine[s]);
                return degrees;
            };

            rows[i] = PartitionRow{canonical_seq, spine, analysis.alpha, analysis.charset.kind, position,
                outward(split.origin1), outward(split.origin2)};
        });

        vector<PartitionRow> result;
        for (auto & r : rows)
            result.push_back(std::move(*r));
        std::stable_sort(result.begin(), result.end(), [](const PartitionRow & a, const PartitionRow & b) {
            return std::tie(a.alpha, a.arrangement) < std::tie(b.alpha, b.arrangement);
        });
        return result;
    }

    namespace
    {
        auto join(const vector<int> & xs) -> string
        {
            string out;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                if (i)
                    out += '|';
                out += std::to_string(xs[i]);
            }
            return out;
        }
    }

    auto partitions_csv(const vector<PartitionRow> & rows) -> string
    {
        string out = "sequence,arrangement,alpha,charset_kind,charset_pos,left_degrees,right_degrees\n";
        char alpha[64];
        for (auto & r : rows) {
            std::snprintf(alpha, sizeof alpha, "%.12g", r.alpha);
            out += r.sequence.to_string('|') + ',' + join(r.arrangement) + ',' + alpha + ','
                + (r.charset_kind == CharacteristicSet::Kind::vertex ? "vertex" : "edge") + ','
                + join(r.charset_position) + ',' + join(r.left_degrees) + ',' + join(r.right_degrees) + '\n';
        }
        return out;
    }
}

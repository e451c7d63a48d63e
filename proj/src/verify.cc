#include <fiedler/canonical.hh>
#include <fiedler/enumerate.hh>
#include <fiedler/perturbation.hh>
#include <fiedler/search.hh>
#include <fiedler/spectral.hh>
#include <fiedler/verify.hh>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>

using std::mt19937_64;
using std::string;
using std::vector;

namespace fiedler
{
    namespace
    {
        auto uniform_int(mt19937_64 & rng, int lo, int hi) -> int
        {
            return std::uniform_int_distribution<int>{lo, hi}(rng);
        }

        auto format_double(double x) -> string
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.12g", x);
            return buf;
        }

        auto describe_rooted(const RootedBoundaryTree & rbt) -> string
        {
            return "root " + std::to_string(rbt.root()) + ": " + describe_tree(rbt.tree());
        }

        // records the first failure only
        auto fail(PropertyResult & p, const string & detail) -> void
        {
            if (p.pass)
                p.counterexample = detail;
            p.pass = false;
        }

        // runs check, turning any exception into a failure of p
        auto guarded(PropertyResult & p, const string & context, const std::function<void()> & check) -> void
        {
            try {
                check();
            }
            catch (const std::exception & e) {
                fail(p, context + " threw: " + e.what());
            }
        }

        auto sequences_up_to(int nmax) -> vector<DegreeSequence>
        {
            vector<DegreeSequence> all;
            for (int n = 2; n <= nmax; ++n)
                for (auto & s : tree_sequences(n))
                    all.push_back(s);
            return all;
        }

        auto theorem1_suite(const VerifyOptions & o, vector<PropertyResult> & out) -> void
        {
            PropertyResult caterpillars{.name = "minimizers_are_caterpillars"}, valley{.name = "minimizers_have_valley_shape"},
                agree{.name = "caterpillar_search_agrees"};
            SearchOptions so{o.jobs, 10'000'000, o.tie_rel, o.tau_zero_rel};

            for (auto & seq : sequences_up_to(o.nmax)) {
                auto context = "sequence (" + seq.to_string() + ")";
                guarded(caterpillars, context, [&] {
                    auto full = min_alpha_tree(seq, so);
                    for (auto & m : full.minimizers) {
                        ++caterpillars.checked;
                        ++valley.checked;
                        if (! m.caterpillar)
                            fail(caterpillars, context + " minimizer " + describe_tree(m.tree));
                        if (! m.shape)
                            fail(valley, context + " minimizer " + describe_tree(m.tree));
                    }
                    auto cat = min_alpha_caterpillar(seq, so);
                    ++agree.checked;
                    double gap = std::abs(cat.min_value - full.min_value) / full.min_value;
                    agree.worst = std::max(agree.worst, gap);
                    if (gap > 1e-10)
                        fail(agree, context + " caterpillar min " + format_double(cat.min_value) + " vs tree min "
                                + format_double(full.min_value));
                });
            }
            out.push_back(caterpillars);
            out.push_back(valley);
            out.push_back(agree);

            if (o.nmax >= 7) {
                PropertyResult spider{.name = "spider_never_minimizer"};
                DegreeSequence seq{{3, 2, 2, 2, 1, 1, 1}};
                int legs[] = {2, 2, 2};
                auto spider_code = canonical_code(make_spider(legs));
                guarded(spider, "sequence (3,2,2,2,1,1,1)", [&] {
                    for (auto & m : min_alpha_tree(seq, so).minimizers) {
                        ++spider.checked;
                        if (m.code == spider_code)
                            fail(spider, "spider is a minimizer of (3,2,2,2,1,1,1)");
                    }
                });
                out.push_back(spider);
            }
        }

        auto lemma2_suite(const VerifyOptions & o, vector<PropertyResult> & out) -> void
        {
            PropertyResult monotone{.name = "dirichlet_vectors_monotone"};
            for (auto & seq : sequences_up_to(o.nmax))
                guarded(monotone, "sequence (" + seq.to_string() + ")", [&] {
                    for (auto & [code, rbt] : enumerate_rooted_trees(seq, 1.0)) {
                        ++monotone.checked;
                        auto g = dirichlet_nu(rbt).on_tree(rbt.order());
                        if (! check_monotone_paths(rbt, g, o.tau_zero_rel))
                            fail(monotone, describe_rooted(rbt));
                    }
                });
            out.push_back(monotone);
        }

        auto lemma5_suite(const VerifyOptions & o, vector<PropertyResult> & out) -> void
        {
            SearchOptions so{o.jobs, 10'000'000, o.tie_rel, o.tau_zero_rel};
            for (double w0 : {1.0, 1.5, 3.0}) {
                PropertyResult iff{.name = "argmin_equals_minimal_shape_w0_" + format_double(w0)};
                for (auto & seq : sequences_up_to(o.nmax)) {
                    auto context = "sequence (" + seq.to_string() + "), w0 " + format_double(w0);
                    guarded(iff, context, [&] {
                        ++iff.checked;
                        std::set<string> argmin, shaped;
                        for (auto & m : min_nu_rooted(seq, w0, so).minimizers)
                            argmin.insert(m.code);
                        for (auto & [code, rbt] : enumerate_rooted_trees(seq, w0))
                            if (is_minimal_shape_rooted(rbt))
                                shaped.insert(code);
                        if (argmin != shaped)
                            fail(iff, context + ": " + std::to_string(argmin.size()) + " minimizers vs "
                                    + std::to_string(shaped.size()) + " minimal-shape trees");
                    });
                }
                out.push_back(iff);
            }
        }

        struct P1Move
        {
            Vertex w, vi, vj;
        };

        auto p1_moves(const RootedBoundaryTree & rbt) -> vector<P1Move>
        {
            auto & t = rbt.tree();
            auto path = trunk(rbt);
            auto dist = distances_from(t, rbt.root());
            vector<P1Move> moves;
            for (auto vi : path)
                for (auto & nb : t.neighbors(vi)) {
                    auto w = nb.vertex;
                    if (w == rbt.root() || ! t.is_pendant(w) || nb.weight != 1.0)
                        continue;
                    for (auto vj : path)
                        if (vj != w && dist[vj] > dist[vi])
                            moves.push_back({w, vi, vj});
                }
            return moves;
        }

        auto perturb_suite(const VerifyOptions & o, vector<PropertyResult> & out) -> void
        {
            mt19937_64 rng{o.rng_seed};
            int nmax = std::max(o.nmax, 3);
            PropertyResult p1{.name = "p1_strict_decrease"}, p2{.name = "p2_strict_decrease"}, degrees{.name = "degree_bookkeeping"};
            p1.worst = p2.worst = 1.0;

            while (static_cast<int>(p1.checked) < o.samples) {
                auto rbt = random_trunk_tree(nmax, rng);
                auto moves = p1_moves(rbt);
                if (moves.empty())
                    continue;
                auto m = moves[uniform_int(rng, 0, static_cast<int>(moves.size()) - 1)];
                ++p1.checked;
                auto context = describe_rooted(rbt) + " P1 w=" + std::to_string(m.w) + " vi=" + std::to_string(m.vi)
                    + " vj=" + std::to_string(m.vj);
                guarded(p1, context, [&] {
                    auto after = perturb_p1(rbt, m.w, m.vi, m.vj);
                    auto rec = describe(PerturbationKind::p1, rbt, after);
                    p1.worst = std::min(p1.worst, (rec.before_nu - rec.after_nu) / rec.before_nu);
                    if (! rec.strictly_decreases(o.strict_margin))
                        fail(p1, context + ": nu " + format_double(rec.before_nu) + " -> " + format_double(rec.after_nu));
                    ++degrees.checked;
                    // only vi and vj change: vi loses the pendant, vj gains it
                    bool bookkeeping = after.order() == rbt.order();
                    for (Vertex v = 0; bookkeeping && v < rbt.order(); ++v) {
                        int delta = (v == m.vj) - (v == m.vi);
                        bookkeeping = after.tree().degree(v) == rbt.tree().degree(v) + delta;
                    }
                    if (! bookkeeping)
                        fail(degrees, context + " changed degrees other than vi and vj");
                });
            }

            while (static_cast<int>(p2.checked) < o.samples) {
                auto rbt = random_trunk_tree(nmax, rng);
                auto path = trunk(rbt);
                auto vj = path[uniform_int(rng, 1, static_cast<int>(path.size()) - 1)];
                ++p2.checked;
                auto context = describe_rooted(rbt) + " P2 vj=" + std::to_string(vj);
                guarded(p2, context, [&] {
                    auto after = perturb_p2(rbt, vj);
                    auto rec = describe(PerturbationKind::p2, rbt, after);
                    p2.worst = std::min(p2.worst, (rec.before_nu - rec.after_nu) / rec.before_nu);
                    if (! rec.strictly_decreases(o.strict_margin))
                        fail(p2, context + ": nu " + format_double(rec.before_nu) + " -> " + format_double(rec.after_nu));
                    ++degrees.checked;
                    auto expected = degree_sequence(rbt.tree()).degrees();
                    auto before_vj = rbt.tree().degree(vj);
                    *std::find(expected.begin(), expected.end(), before_vj) += 1;
                    expected.push_back(1);
                    if (DegreeSequence{expected}.sorted_descending() != degree_sequence(after.tree()))
                        fail(degrees, context + " did not add exactly one pendant");
                });
            }

            out.push_back(p1);
            out.push_back(p2);
            out.push_back(degrees);
        }

        auto glue_suite(const VerifyOptions & o, vector<PropertyResult> & out) -> void
        {
            mt19937_64 rng{o.rng_seed + 1};
            int nmax = std::max(o.nmax, 2);
            PropertyResult inequality{.name = "glue_inequality"}, strict{.name = "glue_strict_when_unequal"},
                equality{.name = "glue_equality_case"};
            inequality.worst = -1.0;

            for (int s = 0; s < o.samples; ++s) {
                auto t1 = random_rooted_tree(nmax, rng);
                auto t2 = random_rooted_tree(nmax, rng);
                auto context = "T1 " + describe_rooted(t1) + "; T2 " + describe_rooted(t2);
                guarded(inequality, context, [&] {
                    auto nu1 = dirichlet_nu(t1).nu, nu2 = dirichlet_nu(t2).nu;
                    auto alpha = algebraic_connectivity(glue(t1, t2)).alpha;
                    auto top = std::max(nu1, nu2);
                    ++inequality.checked;
                    inequality.worst = std::max(inequality.worst, alpha - top);
                    if (! (alpha <= top + 1e-10))
                        fail(inequality, context + ": alpha " + format_double(alpha) + " > max nu " + format_double(top));
                    if (std::abs(nu1 - nu2) > 1e-8) {
                        ++strict.checked;
                        if (! (alpha < top))
                            fail(strict, context + ": alpha " + format_double(alpha) + " not below " + format_double(top));
                    }
                });
            }

            guarded(equality, "two 2-interior rooted paths", [&] {
                RootedBoundaryTree side{make_path(3), 0};
                auto alpha = algebraic_connectivity(glue(side, side)).alpha;
                auto nu = dirichlet_nu(side).nu;
                double expected = (3.0 - std::sqrt(5.0)) / 2.0;
                ++equality.checked;
                equality.worst = std::max(std::abs(alpha - expected), std::abs(nu - expected));
                if (equality.worst > 1e-10)
                    fail(equality, "alpha " + format_double(alpha) + ", nu " + format_double(nu));
            });

            out.push_back(inequality);
            out.push_back(strict);
            out.push_back(equality);
        }

        auto split_suite(const VerifyOptions & o, vector<PropertyResult> & out) -> void
        {
            PropertyResult residuals{.name = "split_residuals"}, weights{.name = "split_weights_at_least_one"};
            auto check = [&](const Tree & t) {
                auto context = describe_tree(t);
                guarded(residuals, context, [&] {
                    auto analysis = analyze(t, o.tau_zero_rel);
                    auto split = geometric_split(t, analysis);
                    auto r = verify_split(split, analysis.alpha);
                    ++residuals.checked;
                    residuals.worst = std::max({residuals.worst, r.r1, r.r2});
                    if (r.r1 > 1e-8 || r.r2 > 1e-8)
                        fail(residuals, context + ": r1 " + format_double(r.r1) + ", r2 " + format_double(r.r2));
                    ++weights.checked;
                    if (split.w1 < 1.0 || split.w2 < 1.0)
                        fail(weights, context + ": w1 " + format_double(split.w1) + ", w2 " + format_double(split.w2));
                });
            };

            for (auto & seq : sequences_up_to(std::min(o.nmax, 8)))
                for (auto & [code, t] : enumerate_trees(seq))
                    check(t);

            mt19937_64 rng{o.rng_seed + 2};
            for (int s = 0; s < o.samples; ++s)
                check(random_tree(uniform_int(rng, 2, std::max(o.nmax, 2)), rng));

            out.push_back(residuals);
            out.push_back(weights);
        }
    }

    auto VerifyReport::pass() const -> bool
    {
        return std::all_of(properties.begin(), properties.end(), [](const PropertyResult & p) { return p.pass; });
    }

    auto suite_names() -> vector<string>
    {
        return {"theorem1", "lemma2", "lemma5", "perturb", "glue", "split", "all"};
    }

    auto verify_suite(const VerifyOptions & options) -> VerifyReport
    {
        VerifyReport report{options.suite, options, {}};
        auto & s = options.suite;
        auto names = suite_names();
        if (std::find(names.begin(), names.end(), s) == names.end())
            throw std::invalid_argument{"unknown suite '" + s + "'"};

        auto wants = [&](const char * name) { return s == "all" || s == name; };
        if (wants("theorem1"))
            theorem1_suite(options, report.properties);
        if (wants("lemma2"))
            lemma2_suite(options, report.properties);
        if (wants("lemma5"))
            lemma5_suite(options, report.properties);
        if (wants("perturb"))
            perturb_suite(options, report.properties);
        if (wants("glue"))
            glue_suite(options, report.properties);
        if (wants("split"))
            split_suite(options, report.properties);
        return report;
    }

    auto random_tree(int n, mt19937_64 & rng) -> Tree
    {
        if (n == 2)
            return make_path(2);
        vector<int> word(n - 2);
        for (auto & x : word)
            x = uniform_int(rng, 0, n - 1);
        return decode_pruefer(word, n);
    }

    auto random_trunk_tree(int nmax, mt19937_64 & rng) -> RootedBoundaryTree
    {
        int n = uniform_int(rng, 3, std::max(nmax, 3));
        int k = uniform_int(rng, 1, n - 2);
        vector<int> pendants(k, 0);
        pendants.front() += 1;
        pendants.back() += 1;
        for (int extra = n - k - 2; extra > 0; --extra)
            ++pendants[uniform_int(rng, 0, k - 1)];

        vector<int> spine(k);
        for (int i = 0; i < k; ++i)
            spine[i] = pendants[i] + (k == 1 ? 0 : (i == 0 || i == k - 1) ? 1 : 2);
        auto t = build_caterpillar({spine});

        vector<Vertex> roots;
        for (Vertex v = 0; v < t.order(); ++v)
            if (is_trunk_shaped(RootedBoundaryTree{t, v}) && trunk(RootedBoundaryTree{t, v}).size() >= 2)
                roots.push_back(v);
        auto root = roots[uniform_int(rng, 0, static_cast<int>(roots.size()) - 1)];

        if (uniform_int(rng, 0, 1) == 0)
            return RootedBoundaryTree{t, root};
        auto & nbs = t.neighbors(root);
        auto target = nbs[uniform_int(rng, 0, static_cast<int>(nbs.size()) - 1)].vertex;
        double w0 = std::uniform_real_distribution<double>{1.0, 3.0}(rng);
        return RootedBoundaryTree::with_boundary_weight(t, root, target, w0);
    }

    auto random_rooted_tree(int nmax, mt19937_64 & rng) -> RootedBoundaryTree
    {
        auto t = random_tree(uniform_int(rng, 2, std::max(nmax, 2)), rng);
        auto root = uniform_int(rng, 0, t.order() - 1);
        if (uniform_int(rng, 0, 1) == 0)
            return RootedBoundaryTree{t, root};
        auto & nbs = t.neighbors(root);
        auto target = nbs[uniform_int(rng, 0, static_cast<int>(nbs.size()) - 1)].vertex;
        double w0 = std::uniform_real_distribution<double>{1.0, 3.0}(rng);
        return RootedBoundaryTree::with_boundary_weight(t, root, target, w0);
    }

    auto describe_tree(const Tree & t) -> string
    {
        string out;
        for (auto & e : t.edges()) {
            if (! out.empty())
                out += ' ';
            out += std::to_string(e.u) + '-' + std::to_string(e.v);
            if (e.weight != 1.0)
                out += ':' + format_double(e.weight);
        }
        return out;
    }
}

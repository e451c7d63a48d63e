#include <doctest.h>

#include "oracle.hh"

#include <fiedler/canonical.hh>
#include <fiedler/enumerate.hh>
#include <fiedler/perturbation.hh>
#include <fiedler/search.hh>
#include <fiedler/spectral.hh>

#include <cmath>

using namespace fiedler;
using doctest::Approx;

namespace
{
    auto nu(const RootedBoundaryTree & rbt) -> double
    {
        return dirichlet_nu(rbt).nu;
    }

    auto spider222() -> Tree
    {
        int legs[] = {2, 2, 2};
        return make_spider(legs);
    }

    auto trunk_degrees(const RootedBoundaryTree & rbt) -> std::vector<int>
    {
        std::vector<int> degrees;
        for (auto v : trunk(rbt))
            if (! rbt.tree().is_pendant(v))
                degrees.push_back(rbt.tree().degree(v));
        return degrees;
    }

    // spine (3,2) rooted at a pendant of the degree-3 end
    struct Spine32
    {
        RootedBoundaryTree rbt;
        Vertex other_pendant;
        Vertex head;
    };

    auto spine32() -> Spine32
    {
        auto t = build_caterpillar({{3, 2}});
        std::vector<Vertex> pendants;
        for (auto & nb : t.neighbors(0))
            if (t.is_pendant(nb.vertex))
                pendants.push_back(nb.vertex);
        RootedBoundaryTree rbt{t, pendants[0]};
        return {rbt, pendants[1], trunk(rbt).back()};
    }
}

TEST_CASE("P1 onto the head")
{
    auto [rbt, w, head] = spine32();
    auto after = perturb_p1(rbt, w, 0, head);
    CHECK(rooted_code(after) == rooted_code(make_path(5), 0));
    CHECK(after.order() == rbt.order());

    auto record = describe(PerturbationKind::p1, rbt, after);
    CHECK(record.before_nu == Approx(oracle::nu(rbt.tree(), rbt.root())).epsilon(1e-10));
    CHECK(record.after_nu == Approx(2.0 * (1.0 - std::cos(M_PI / 9))).epsilon(1e-10));
    CHECK(record.after_nu == Approx(0.1206148).epsilon(1e-6));
    CHECK(record.strictly_decreases());
    CHECK(record.removed == std::vector<Edge>{{std::min(0, w), std::max(0, w)}});
    CHECK(record.added == std::vector<Edge>{{std::min(head, w), std::max(head, w)}});
}

TEST_CASE("P1 between non-head trunk vertices")
{
    // spine (3,2,2) rooted at a pendant of the 3: move the spare pendant to spine vertex 1
    auto t = build_caterpillar({{3, 2, 2}});
    std::vector<Vertex> pendants;
    for (auto & nb : t.neighbors(0))
        if (t.is_pendant(nb.vertex))
            pendants.push_back(nb.vertex);
    RootedBoundaryTree rbt{t, pendants[0]};
    auto after = perturb_p1(rbt, pendants[1], 0, 1);
    CHECK(nu(after) < nu(rbt) * (1.0 - 1e-10));
    CHECK(nu(after) == Approx(oracle::nu(after.tree(), after.root())).epsilon(1e-10));
}

TEST_CASE("P1 preconditions")
{
    auto [rbt, w, head] = spine32();
    CHECK_THROWS_AS(perturb_p1(rbt, w, head, 0), PreconditionViolated);
    CHECK_THROWS_AS(perturb_p1(rbt, rbt.root(), 0, head), PreconditionViolated);
    CHECK_THROWS_AS(perturb_p1(rbt, w, 1, head), PreconditionViolated);
}

TEST_CASE("P2")
{
    RootedBoundaryTree p2{make_path(3), 0};
    auto longer = perturb_p2(p2, 2);
    CHECK(longer.order() == 4);
    CHECK(nu(p2) == Approx(0.3819660).epsilon(1e-7));
    CHECK(nu(longer) == Approx(0.1980623).epsilon(1e-7));

    RootedBoundaryTree p1{make_path(2), 0};
    CHECK(nu(perturb_p2(p1, 1)) == Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-12));

    RootedBoundaryTree p3{make_path(4), 0};
    auto mid = perturb_p2(p3, 2);
    CHECK(mid.tree().degree(2) == 3);
    CHECK(nu(mid) < oracle::rooted_path_nu(3));
    CHECK(describe(PerturbationKind::p2, p3, mid).strictly_decreases());

    CHECK_THROWS_AS(perturb_p2(p3, 0), PreconditionViolated);
}

TEST_CASE("branch rearrangement on the spider")
{
    // centre 0, legs 1-2, 3-4, 5-6; rooted at the leaf of leg one
    RootedBoundaryTree spider{spider222(), 2};
    Vertex x[] = {2, 1, 0, 3, 4};
    Vertex y[] = {2, 1, 0, 5, 6};
    auto after = rearrange_branches(spider, x, y);
    CHECK(degree_sequence(after.tree()) == degree_sequence(spider.tree()));
    CHECK(is_caterpillar(after.tree()));
    CHECK(after.tree().weight(4, 6) == 1.0);
    CHECK(after.tree().weight(5, 6) == 0.0);
    CHECK(nu(after) < nu(spider) * (1.0 - 1e-10));

    Vertex bad[] = {1, 0, 3};
    CHECK_THROWS_AS(rearrange_branches(spider, bad, y), PreconditionViolated);
}

TEST_CASE("branch rearrangement of two-branch trees gives a caterpillar")
{
    // every rooted tree n <= 8 whose root has one neighbour u with exactly two
    // branches, each a path: one move straightens it
    for (int n = 4; n <= 8; ++n)
        for (auto & seq : tree_sequences(n))
            for (auto & [code, rbt] : enumerate_rooted_trees(seq, 1.0)) {
                auto & t = rbt.tree();
                if (! t.is_pendant(rbt.root()))
                    continue;
                auto u = t.neighbors(rbt.root()).front().vertex;
                auto branches = branches_at(t, rbt.root(), u);
                if (branches.size() != 2 || branches[0].size() < 2 || branches[1].size() < 2)
                    continue;
                auto parents = parents_from(t, rbt.root());
                auto root_path = [&](Vertex leaf) {
                    std::vector<Vertex> path;
                    for (auto v = leaf; v != -1; v = parents[v])
                        path.insert(path.begin(), v);
                    return path;
                };
                bool paths = true;
                Vertex ends[2];
                for (int b = 0; b < 2; ++b) {
                    int leaves = 0;
                    for (auto v : branches[b])
                        if (t.is_pendant(v)) {
                            ++leaves;
                            ends[b] = v;
                        }
                    paths = paths && leaves == 1;
                }
                if (! paths)
                    continue;
                auto after = rearrange_branches(rbt, root_path(ends[0]), root_path(ends[1]));
                CAPTURE(code);
                CHECK(is_caterpillar(after.tree()));
                CHECK(degree_sequence(after.tree()) == degree_sequence(t));
                CHECK(nu(after) < nu(rbt));
            }
}

TEST_CASE("glue")
{
    RootedBoundaryTree one{make_path(2), 0}, two{make_path(3), 0};

    auto p5 = glue(two, two);
    CHECK(p5.order() == 5);
    CHECK(canonical_code(p5) == canonical_code(make_path(5)));
    CHECK(algebraic_connectivity(p5).alpha == Approx(0.3819660).epsilon(1e-7));
    CHECK(algebraic_connectivity(p5).alpha == Approx(nu(two)).epsilon(1e-10));

    auto p4 = glue(one, two);
    CHECK(canonical_code(p4) == canonical_code(make_path(4)));
    CHECK(algebraic_connectivity(p4).alpha == Approx(0.5857864).epsilon(1e-7));
    CHECK(algebraic_connectivity(p4).alpha < std::max(nu(one), nu(two)));

    auto p3 = glue(one, one);
    CHECK(canonical_code(p3) == canonical_code(make_path(3)));
    CHECK(algebraic_connectivity(p3).alpha == Approx(1.0).epsilon(1e-12));

    // weights survive the glue
    auto weighted = RootedBoundaryTree::with_boundary_weight(make_path(3), 0, 1, 2.0);
    auto g = glue(weighted, one);
    double total = 0.0;
    for (auto & e : g.edges())
        total += e.weight;
    CHECK(total == Approx(4.0));
}

TEST_CASE("build_monotone_rooted_caterpillar")
{
    auto p4 = build_monotone_rooted_caterpillar(DegreeSequence{{2, 2, 1, 1}}, 1);
    CHECK(rooted_code(p4) == rooted_code(make_path(4), 0));

    auto c = build_monotone_rooted_caterpillar(DegreeSequence{{3, 2, 2, 2, 1, 1, 1}}, 1);
    CHECK(degree_sequence(c.tree()).degrees() == std::vector<int>{3, 2, 2, 2, 1, 1, 1});
    CHECK(trunk_degrees(c) == std::vector<int>{2, 2, 2, 3});
    CHECK(is_minimal_shape_rooted(c));

    auto h = build_monotone_rooted_caterpillar(DegreeSequence{{3, 3, 1, 1, 1, 1}}, 1);
    CHECK(trunk_degrees(h) == std::vector<int>{3, 3});

    CHECK_THROWS_AS(build_monotone_rooted_caterpillar(DegreeSequence{{2, 2, 1, 1}}, 3), InvalidSequence);
}

TEST_CASE("minimal rooted shape predicate")
{
    for (int n = 2; n <= 9; ++n)
        for (auto & seq : tree_sequences(n))
            CHECK(is_minimal_shape_rooted(build_monotone_rooted_caterpillar(seq, 1)));

    CHECK_FALSE(is_minimal_shape_rooted(spine32().rbt));
    CHECK_FALSE(is_minimal_shape_rooted(RootedBoundaryTree{spider222(), 2}));
    CHECK_FALSE(is_minimal_shape_rooted(RootedBoundaryTree{make_star(4), 0}));
    CHECK_FALSE(is_minimal_shape_rooted(RootedBoundaryTree{make_path(4), 1}));
}

TEST_CASE("valley shape predicate")
{
    for (int n = 2; n <= 10; ++n) {
        auto p = make_path(n);
        CHECK(is_valley_caterpillar(p, analyze(p)));
    }
    auto spider = spider222();
    CHECK_FALSE(is_valley_caterpillar(spider, analyze(spider)));

    auto report = min_alpha_tree(DegreeSequence{{3, 2, 2, 2, 1, 1, 1}});
    for (auto & m : report.minimizers)
        CHECK(is_valley_caterpillar(m.tree, analyze(m.tree)));

    // spine (2,3,2,2,3,2): each side rises then falls
    auto zigzag = build_caterpillar({{2, 3, 2, 2, 3, 2}});
    CHECK_FALSE(is_valley_caterpillar(zigzag, analyze(zigzag)));
}

#include <doctest.h>

#include "oracle.hh"

#include <fiedler/canonical.hh>
#include <fiedler/degree_sequence.hh>
#include <fiedler/rooted.hh>
#include <fiedler/tree.hh>

#include <random>

using namespace fiedler;

namespace
{
    auto spider222() -> Tree
    {
        int legs[] = {2, 2, 2};
        return make_spider(legs);
    }

    auto relabel(const Tree & t, const std::vector<int> & perm) -> Tree
    {
        auto edges = t.edges();
        for (auto & e : edges)
            e = {perm[e.u], perm[e.v], e.weight};
        return Tree{t.order(), edges};
    }
}

TEST_CASE("tree construction rejects non-trees")
{
    std::vector<Edge> cycle{{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(Tree(3, cycle), InvalidTree);

    std::vector<Edge> disconnected{{0, 1}, {2, 3}, {0, 1}};
    CHECK_THROWS_AS(Tree(4, disconnected), InvalidTree);

    std::vector<Edge> loop{{0, 0}};
    CHECK_THROWS_AS(Tree(2, loop), InvalidTree);

    std::vector<Edge> negative{{0, 1, -1.0}};
    CHECK_THROWS_AS(Tree(2, negative), InvalidTree);

    std::vector<Edge> too_few{{0, 1}};
    CHECK_THROWS_AS(Tree(3, too_few), InvalidTree);

    std::vector<Edge> ok{{1, 0, 2.5}};
    Tree t{2, ok};
    CHECK(t.weight(0, 1) == 2.5);
    CHECK(t.weight(1, 0) == 2.5);
}

TEST_CASE("validate_tree_sequence")
{
    CHECK(validate_tree_sequence(DegreeSequence{{1, 1}}));
    CHECK(validate_tree_sequence(DegreeSequence{{3, 2, 2, 2, 1, 1, 1}}));
    CHECK_FALSE(validate_tree_sequence(DegreeSequence{{2, 2, 2}}));
    CHECK_FALSE(validate_tree_sequence(DegreeSequence{{1}}));
    CHECK_FALSE(validate_tree_sequence(DegreeSequence{{2, 0, 1, 1}}));
    CHECK_THROWS_AS(require_tree_sequence(DegreeSequence{{2, 2, 2}}), InvalidSequence);
}

TEST_CASE("degree sequence parsing")
{
    CHECK(DegreeSequence::parse("3,2,2,2,1,1,1").degrees() == std::vector<int>{3, 2, 2, 2, 1, 1, 1});
    CHECK(DegreeSequence::parse(" 2 , 1,1 ").degrees() == std::vector<int>{2, 1, 1});
    CHECK_THROWS_AS(DegreeSequence::parse("3,,1"), InvalidSequence);
    CHECK_THROWS_AS(DegreeSequence::parse("3,x"), InvalidSequence);
}

TEST_CASE("degree_sequence of small trees")
{
    CHECK(degree_sequence(make_path(4)).degrees() == std::vector<int>{2, 2, 1, 1});
    CHECK(degree_sequence(make_star(4)).degrees() == std::vector<int>{3, 1, 1, 1});
    CHECK(degree_sequence(spider222()).degrees() == std::vector<int>{3, 2, 2, 2, 1, 1, 1});
}

TEST_CASE("tree_sequences enumerates partitions")
{
    // n=6: surplus 4 over 6 slots -> partitions of 4: 4, 31, 22, 211, 1111
    CHECK(tree_sequences(6).size() == 5);
    for (int n = 2; n <= 10; ++n)
        for (auto & s : tree_sequences(n)) {
            CHECK(validate_tree_sequence(s));
            CHECK(s == s.sorted_descending());
        }
}

TEST_CASE("is_caterpillar")
{
    CHECK(is_caterpillar(make_path(5)));
    CHECK(is_caterpillar(make_star(5)));
    CHECK(is_caterpillar(make_path(2)));
    CHECK_FALSE(is_caterpillar(spider222()));
}

TEST_CASE("build_caterpillar")
{
    auto p4 = build_caterpillar({{2, 2}});
    CHECK(canonical_code(p4) == canonical_code(make_path(4)));

    auto c = build_caterpillar({{3, 2, 2, 2}});
    CHECK(degree_sequence(c).degrees() == std::vector<int>{3, 2, 2, 2, 1, 1, 1});
    CHECK(is_caterpillar(c));

    auto h = build_caterpillar({{3, 3}});
    CHECK(degree_sequence(h).degrees() == std::vector<int>{3, 3, 1, 1, 1, 1});

    CHECK_THROWS_AS(build_caterpillar({{3, 1}}), InvalidTree);
    CHECK(caterpillar_realises({{2, 3, 2, 2}}, DegreeSequence{{3, 2, 2, 2, 1, 1, 1}}));
    CHECK_FALSE(caterpillar_realises({{3, 3}}, DegreeSequence{{3, 2, 2, 2, 1, 1, 1}}));

    auto spine = spine_path(c);
    REQUIRE(spine);
    CHECK(*spine == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("build_caterpillar output is always a caterpillar")
{
    std::mt19937_64 rng{5};
    for (int trial = 0; trial < 200; ++trial) {
        int k = std::uniform_int_distribution<int>{1, 6}(rng);
        std::vector<int> spine(k);
        for (auto & d : spine)
            d = std::uniform_int_distribution<int>{2, 5}(rng);
        auto t = build_caterpillar({spine});
        CHECK(is_caterpillar(t));
        auto path = spine_path(t);
        REQUIRE(path);
        REQUIRE(path->size() == spine.size());
        for (int i = 0; i < k; ++i)
            CHECK(t.degree((*path)[i]) == spine[i]);
    }
}

TEST_CASE("canonical_code distinguishes exactly the isomorphism classes")
{
    CHECK(canonical_code(make_path(4)) == canonical_code(relabel(make_path(4), {2, 0, 3, 1})));
    CHECK(canonical_code(make_path(4)) != canonical_code(make_star(4)));
    CHECK(canonical_code(spider222()) != canonical_code(build_caterpillar({{2, 3, 2, 2}})));

    // against brute-force isomorphism on random pairs of small trees
    std::mt19937_64 rng{11};
    for (int trial = 0; trial < 300; ++trial) {
        int n = std::uniform_int_distribution<int>{2, 8}(rng);
        auto random = [&] {
            if (n == 2)
                return make_path(2);
            std::vector<Edge> edges;
            for (int v = 1; v < n; ++v)
                edges.push_back({v, std::uniform_int_distribution<int>{0, v - 1}(rng)});
            return Tree{n, edges};
        };
        auto a = random(), b = random();
        CHECK((canonical_code(a) == canonical_code(b)) == oracle::isomorphic(a, b));
    }
}

TEST_CASE("centers")
{
    CHECK(centers(make_path(5)) == std::vector<Vertex>{2});
    CHECK(centers(make_path(4)) == std::vector<Vertex>{1, 2});
    CHECK(centers(make_star(6)) == std::vector<Vertex>{0});
    CHECK(centers(make_path(2)) == std::vector<Vertex>{0, 1});
}

TEST_CASE("branches_at")
{
    auto p4 = make_path(4);
    CHECK(branches_at(p4, 0, 2) == std::vector<std::vector<Vertex>>{{3}});

    // star centre 0, root leaf 1
    auto star = make_star(4);
    CHECK(branches_at(star, 1, 0) == std::vector<std::vector<Vertex>>{{2}, {3}});

    // spider: centre 0, legs 1-2, 3-4, 5-6; root the leaf of leg one
    auto spider = spider222();
    auto b = branches_at(spider, 2, 0);
    CHECK(b == std::vector<std::vector<Vertex>>{{3, 4}, {5, 6}});

    CHECK(branches_at(spider, 0, 0).size() == 3);
    CHECK_THROWS_AS(branches_at(spider, 0, 9), InvalidTree);
}

TEST_CASE("branches_at partitions the vertices away from the root")
{
    std::mt19937_64 rng{3};
    for (int trial = 0; trial < 100; ++trial) {
        int n = std::uniform_int_distribution<int>{2, 12}(rng);
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v)
            edges.push_back({v, std::uniform_int_distribution<int>{0, v - 1}(rng)});
        Tree t{n, edges};
        int root = std::uniform_int_distribution<int>{0, n - 1}(rng);
        int u = std::uniform_int_distribution<int>{0, n - 1}(rng);

        std::vector<int> seen(n, 0);
        for (auto & branch : branches_at(t, root, u))
            for (auto v : branch)
                ++seen[v];

        auto dist_root = distances_from(t, root);
        auto dist_u = distances_from(t, u);
        for (int v = 0; v < n; ++v) {
            // v is beyond u (away from the root) iff the root path passes u
            bool expected = v != u && (u == root || dist_root[v] == dist_root[u] + dist_u[v]);
            CHECK(seen[v] == (expected ? 1 : 0));
        }
    }
}

TEST_CASE("rooted boundary trees")
{
    auto p3 = make_path(3);
    RootedBoundaryTree rbt{p3, 0};
    CHECK(rbt.boundary_weight() == 1.0);
    CHECK(rbt.interior() == std::vector<Vertex>{1, 2});

    auto weighted = RootedBoundaryTree::with_boundary_weight(p3, 0, 1, 2.0);
    CHECK(weighted.boundary_weight() == 2.0);

    CHECK_THROWS_AS(RootedBoundaryTree::with_boundary_weight(p3, 0, 1, 0.5), InvalidTree);
    CHECK_THROWS_AS(RootedBoundaryTree::with_boundary_weight(p3, 0, 2, 2.0), InvalidTree);
    // non-unit weight away from the root
    CHECK_THROWS_AS(RootedBoundaryTree(with_edge_weight(p3, 1, 2, 2.0), 0), InvalidTree);
    CHECK_THROWS_AS(RootedBoundaryTree(p3, 5), InvalidTree);
}

TEST_CASE("height and trunk")
{
    RootedBoundaryTree p4{make_path(4), 0};
    CHECK(height(p4, 0) == 0);
    CHECK(height(p4, 3) == 3);
    CHECK(trunk(p4) == std::vector<Vertex>{0, 1, 2, 3});

    RootedBoundaryTree star{make_star(4), 1};
    CHECK(height(star, 3) == 2);
    CHECK(trunk(star) == std::vector<Vertex>{1, 0, 2});

    // spine (2,3): spine 0-1, pendants 2 on 0 and 3,4 on 1
    auto cat = build_caterpillar({{2, 3}});
    RootedBoundaryTree far{cat, 2};
    CHECK(trunk(far) == std::vector<Vertex>{2, 0, 1, 3});

    RootedBoundaryTree inner{make_path(5), 2};
    CHECK_THROWS_AS(trunk(inner), PreconditionViolated);
    RootedBoundaryTree spider{spider222(), 2};
    CHECK_THROWS_AS(trunk(spider), PreconditionViolated);
}

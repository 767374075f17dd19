#include "doctest.h"
#include "support.hpp"

#include "mvis/geodesic.hpp"
#include "mvis/visibility.hpp"

using namespace mvis;

TEST_CASE("family specs")
{
    auto s = parse_family("strong(path:3, cycle:4)");
    CHECK(s.name == "strong");
    REQUIRE(s.args.size() == 2);
    CHECK(s.args[0].params == std::vector<long long>{3});
    CHECK(build(s).order() == 12);
    CHECK(build("hamming:2,3").order() == 6);
    CHECK(build("biclique:2,3").size() == 6);
    CHECK(build("petersen").size() == 15);
    CHECK(build("star:4").order() == 5);
    CHECK(build("tree:3,7").is_tree());
    CHECK(build("tree:3,7").order() == 7);
    for (const char * bad : {"", "path:0", "path", "cycle:2", "strong(path:3)", "frobnicate:3", "path:3)", "lex(path:2,", "complete:-1", "path:x"})
        CHECK_THROWS_AS(build(bad), InputError);
    CHECK_THROWS_AS(build("strong(path:2000,path:2000)"), InputError);
}

TEST_CASE("subdivision and corona sizes")
{
    auto sk4 = build("subdivision(complete:4)");
    CHECK(sk4.order() == 10);
    CHECK(sk4.size() == 12);
    CHECK(sk4.label(4) == "e_{0,1}");
    auto c = build("corona(path:3, complete:2)");
    CHECK(c.order() == 9);
    auto g = random_tree(7, 5);
    auto h = cycle_graph(4);
    auto gc = corona(g, h);
    CHECK(gc.order() == g.order() * (1 + h.order()));
    CHECK(gc.size() == g.size() + g.order() * (h.size() + h.order()));
}

TEST_CASE("products carry coordinate labels and fibres")
{
    auto p = strong_product(path_graph(2), cycle_graph(3));
    CHECK(p.order() == 6);
    CHECK(p.label(testing::by_label(p, "(1,2)")) == "(1,2)");
    REQUIRE(p.product());
    CHECK(p.product()->kind == ProductKind::strong);
    auto f = fiber(p, FiberKind::h_fiber, 1);
    CHECK(f.size() == 3);
    f.for_each([&](Vertex v) { CHECK(p.label(v).rfind("(1,", 0) == 0); });
    CHECK(fiber(p, FiberKind::g_fiber, 2).size() == 2);
    CHECK_THROWS_AS(fiber(path_graph(3), FiberKind::g_fiber, 0), PreconditionError);
}

TEST_CASE("strong product of a path with P2 is the lexicographic product with K2")
{
    for (std::size_t t = 1; t <= 6; ++t)
        CHECK(isomorphic(strong_product(path_graph(t), path_graph(2)), lexicographic_product(path_graph(t), complete_graph(2))));
}

TEST_CASE("cartesian fibres are convex")
{
    for (auto & g : testing::random_connected(401, 10, 2, 6))
        for (auto & h : testing::random_connected(402, 3, 2, 4)) {
            auto p = cartesian_product(g, h);
            for (Vertex v = 0; v < g.order(); ++v)
                CHECK(is_convex(p, fiber(p, FiberKind::h_fiber, v)));
            for (Vertex v = 0; v < h.order(); ++v)
                CHECK(is_convex(p, fiber(p, FiberKind::g_fiber, v)));
        }
}

TEST_CASE("lexicographic G-fibres are mv sets")
{
    for (auto & g : testing::random_connected(403, 10, 2, 6))
        for (auto h : {path_graph(2), cycle_graph(4), empty_graph(2)}) {
            auto p = lexicographic_product(g, h);
            for (Vertex v = 0; v < h.order(); ++v)
                CHECK(is_mv_set(p, fiber(p, FiberKind::g_fiber, v)));
        }
}

TEST_CASE("product distance laws")
{
    std::mt19937_64 rng(404);
    for (int t = 0; t < 25; ++t) {
        auto g = random_connected_graph(rng, 2 + rng() % 4, 0.5);
        auto h = random_connected_graph(rng, 1 + rng() % 4, 0.5);
        if (rng() % 3 == 0)
            h = empty_graph(h.order());
        const auto dg = bfs_all_pairs(g).distances;
        const auto dh = bfs_all_pairs(h).distances;
        const auto nh = static_cast<Vertex>(h.order());
        auto at = [nh](Vertex a, Vertex b) { return a * nh + b; };

        auto lex = lexicographic_product(g, h);
        const auto dl = bfs_all_pairs(lex).distances;
        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex b = 0; b < nh; ++b)
                for (Vertex a2 = 0; a2 < g.order(); ++a2)
                    for (Vertex b2 = 0; b2 < nh; ++b2) {
                        const int expected = a == a2 ? (b == b2 ? 0 : std::min(2, dh(b, b2))) : dg(a, a2);
                        CHECK(dl(at(a, b), at(a2, b2)) == expected);
                    }

        if (dh.connected(0, nh - 1)) {
            auto strong = strong_product(g, h);
            const auto ds = bfs_all_pairs(strong).distances;
            for (Vertex a = 0; a < g.order(); ++a)
                for (Vertex b = 0; b < nh; ++b)
                    for (Vertex a2 = 0; a2 < g.order(); ++a2)
                        for (Vertex b2 = 0; b2 < nh; ++b2)
                            CHECK(ds(at(a, b), at(a2, b2)) == std::max(dg(a, a2), dh(b, b2)));
        }
    }
}

TEST_CASE("clique and independence numbers of products")
{
    auto small = testing::random_connected(405, 12, 1, 5);
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i; j < small.size(); j += 3) {
            auto & g = small[i];
            auto & h = small[j];
            CHECK(omega(strong_product(g, h)).value == omega(g).value * omega(h).value);
            CHECK(alpha(lexicographic_product(g, h)).value == alpha(g).value * alpha(h).value);
        }
}

TEST_CASE("random generators respect their contracts")
{
    std::mt19937_64 rng(406);
    for (int t = 0; t < 50; ++t) {
        CHECK(random_connected_graph(rng, 1 + rng() % 12, 0.2).is_connected());
        auto tf = random_triangle_free_graph(rng, 2 + rng() % 12, 0.5);
        CHECK(tf.is_connected());
        CHECK_FALSE(tf.find_triangle());
        CHECK(random_tree(rng(), 1 + rng() % 15).is_tree());
    }
}

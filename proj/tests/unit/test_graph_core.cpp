#include "doctest.h"
#include "support.hpp"

#include "mvis/geodesic.hpp"
#include "mvis/reference.hpp"

#include <sstream>

using namespace mvis;

TEST_CASE("graph construction rejects malformed edges")
{
    const Edge loop[] = {{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), InputError);
    const Edge out_of_range[] = {{0, 3}};
    CHECK_THROWS_AS(Graph(3, out_of_range), InputError);
    const Edge dup[] = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph(2, dup), InputError);
}

TEST_CASE("edge list parsing")
{
    std::istringstream ok("3 2\n0 1\n1 2\n");
    auto g = read_edge_list(ok);
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    std::istringstream bad("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad), InputError);
    std::istringstream junk("two vertices\n");
    CHECK_THROWS_AS(read_edge_list(junk), InputError);
}

TEST_CASE("geodesic counts on small graphs")
{
    auto c4 = GeodesicIndex(cycle_graph(4));
    CHECK(c4.distance(0, 2) == 2);
    CHECK(c4.counts()(0, 2) == 2);

    auto p5 = GeodesicIndex(path_graph(5));
    CHECK(p5.distance(0, 4) == 4);
    CHECK(p5.counts()(0, 4) == 1);

    auto k23 = biclique(2, 3);
    GeodesicIndex gi(k23);
    CHECK(gi.distance(0, 1) == 2);
    CHECK(gi.counts()(0, 1) == 3);
}

TEST_CASE("intervals")
{
    auto c5 = cycle_graph(5);
    CHECK(interval(c5, 0, 2) == VertexSet(5, {0, 1, 2}));
    CHECK(interval(cycle_graph(4), 0, 2) == VertexSet::full(4));
    CHECK(interval(complete_graph(4), 1, 3) == VertexSet(4, {1, 3}));
}

TEST_CASE("convexity")
{
    auto c4 = cycle_graph(4);
    CHECK(is_convex(c4, VertexSet(4, {0, 1})));
    CHECK_FALSE(is_convex(c4, VertexSet(4, {0, 2})));
    auto prod = cartesian_product(cycle_graph(5), path_graph(3));
    for (Vertex g = 0; g < 5; ++g)
        CHECK(is_convex(prod, fiber(prod, FiberKind::h_fiber, g)));
}

TEST_CASE("longest convex path counts vertices")
{
    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(longest_convex_path(path_graph(n)) == static_cast<int>(n));
    CHECK(longest_convex_path(cycle_graph(6)) == 3);
    CHECK(longest_convex_path(cycle_graph(7)) == 4);
}

TEST_CASE("diameter and diag")
{
    CHECK(diameter(complete_graph(5)) == 1);
    CHECK(diameter(petersen_graph()) == 2);
    CHECK(diag(path_graph(5), path_graph(5)) == 5);
    CHECK(diag(cycle_graph(6), path_graph(9)) == 3);
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t t = 4 * k; t <= 4 * k + 2; ++t)
            CHECK(diag(path_graph(t), path_graph(4 * k)) == static_cast<int>(4 * k));
    CHECK_THROWS_AS(diameter(empty_graph(2)), PreconditionError);
}

TEST_CASE("distance matrix is a metric and matches the serial reference")
{
    for (auto & g : testing::random_connected(101, 60, 1, 14)) {
        auto ap = bfs_all_pairs(g);
        auto ref = reference::bfs_all_pairs(g);
        REQUIRE(ap.distances == ref.distances);
        REQUIRE(ap.counts == ref.counts);
        const auto n = static_cast<Vertex>(g.order());
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                CHECK(ap.distances(u, v) == ap.distances(v, u));
                CHECK(ap.counts(u, v) == ap.counts(v, u));
                for (Vertex w = 0; w < n; ++w)
                    CHECK(ap.distances(u, v) <= ap.distances(u, w) + ap.distances(w, v));
            }
    }
}

TEST_CASE("intervals equal the union of explicit geodesics")
{
    for (auto & g : testing::random_connected(102, 40, 2, 10)) {
        const auto n = static_cast<Vertex>(g.order());
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                VertexSet expected(n);
                for (auto & path : reference::geodesics(g, u, v))
                    for (Vertex w : path)
                        expected.insert(w);
                CHECK(interval(g, u, v) == expected);
                CHECK(interval(g, u, v) == reference::interval(g, u, v));
            }
    }
}

TEST_CASE("convexity against the reference, with trivially convex sets")
{
    std::mt19937_64 rng(103);
    for (auto & g : testing::random_connected(103, 40, 2, 10)) {
        const auto n = static_cast<Vertex>(g.order());
        for (Vertex v = 0; v < n; ++v)
            CHECK(is_convex(g, VertexSet(n, {v})));
        for (auto [u, v] : g.edges())
            CHECK(is_convex(g, VertexSet(n, {u, v})));
        for (int t = 0; t < 20; ++t) {
            VertexSet s(n);
            for (Vertex v = 0; v < n; ++v)
                if (rng() % 2)
                    s.insert(v);
            CHECK(is_convex(g, s) == reference::is_convex(g, s));
        }
    }
}

TEST_CASE("longest convex path against brute force")
{
    for (auto & g : testing::random_connected(104, 40, 1, 10))
        CHECK(longest_convex_path(g) == reference::longest_convex_path(g));
    for (auto & g : testing::connected_up_to_6())
        CHECK(longest_convex_path(g) == reference::longest_convex_path(g));
}

TEST_CASE("canonical forms identify isomorphic graphs")
{
    std::mt19937_64 rng(105);
    for (auto & g : testing::random_connected(105, 30, 2, 9)) {
        std::vector<Vertex> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> relabelled;
        for (auto [u, v] : g.edges())
            relabelled.emplace_back(perm[u], perm[v]);
        CHECK(isomorphic(g, Graph(g.order(), relabelled)));
    }
    CHECK_FALSE(isomorphic(path_graph(4), star_graph(3)));
    const std::size_t counts[] = {1, 1, 2, 6, 21, 112};
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(connected_graphs(n).size() == counts[n - 1]);
}

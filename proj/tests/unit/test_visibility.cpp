#include "doctest.h"
#include "support.hpp"

#include "mvis/chromatic.hpp"
#include "mvis/geodesic.hpp"
#include "mvis/reference.hpp"
#include "mvis/visibility.hpp"

using namespace mvis;

namespace
{

VertexSet random_subset(std::mt19937_64 & rng, std::size_t n, unsigned percent)
{
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
        if (rng() % 100 < percent)
            s.insert(v);
    return s;
}

}

TEST_CASE("visible pairs")
{
    auto p5 = path_graph(5);
    VertexSet x(5, {0, 2, 4});
    CHECK_FALSE(is_visible_pair(p5, x, 0, 4));
    auto c6 = cycle_graph(6);
    auto wc = is_visible_pair(c6, VertexSet(6, {0, 3}), 0, 3);
    REQUIRE(wc);
    CHECK(wc->interior.size() == 2);
    for (Vertex v : wc->interior)
        CHECK((v != 0 && v != 3));

    for (auto [u, v] : p5.edges()) {
        auto adj = is_visible_pair(p5, VertexSet::full(5), u, v);
        REQUIRE(adj);
        CHECK(adj->interior.empty());
    }
}

TEST_CASE("mv and imv sets")
{
    auto p5 = path_graph(5);
    CHECK(is_mv_set(p5, VertexSet(5)));
    CHECK(is_mv_set(p5, VertexSet(5, {3})));
    CHECK(is_mv_set(complete_graph(6), VertexSet::full(6)));
    CHECK_FALSE(is_mv_set(p5, VertexSet(5, {0, 2, 4})));
    CHECK_FALSE(is_imv_set(p5, VertexSet(5, {1, 2})));

    auto sk4 = subdivision(complete_graph(4));
    CHECK(is_imv_set(sk4, VertexSet(10, {0, 1, 2, 3})));
    CHECK(is_imv_set(sk4, VertexSet(10, {4, 9})));
    CHECK(is_imv_set(sk4, VertexSet(10, {5, 6, 7, 8})));

    auto pet = petersen_graph();
    for (Vertex v = 0; v < 10; ++v)
        CHECK(is_imv_set(pet, pet.neighborhood(v)));
}

TEST_CASE("exact invariants on named graphs")
{
    for (std::size_t n = 3; n <= 12; ++n)
        CHECK(mu(cycle_graph(n)).value == 3);
    CHECK(mu_i(path_graph(5)).value == 2);
    CHECK(alpha(path_graph(5)).value == 3);
    CHECK(mu_i(corona(path_graph(3), complete_graph(2))).value == 3);
    CHECK(mu_i(petersen_graph()).value == 4);
    CHECK(alpha(petersen_graph()).value == 4);
    CHECK(omega(petersen_graph()).value == 2);
    CHECK_THROWS_AS(mu(empty_graph(3)), PreconditionError);
    CHECK(alpha(empty_graph(3)).value == 3);
}

TEST_CASE("serial and parallel set checks agree with the reference")
{
    std::mt19937_64 rng(201);
    for (auto & g : testing::random_connected(201, 50, 2, 12)) {
        GeodesicIndex gi(g);
        for (int t = 0; t < 25; ++t) {
            auto x = random_subset(rng, g.order(), 20 + 10 * static_cast<unsigned>(t % 5));
            const bool expected = reference::is_mv_set(g, x);
            CHECK(is_mv_set(gi, x, Execution::serial) == expected);
            CHECK(is_mv_set(gi, x, Execution::parallel) == expected);
            CHECK(is_imv_set(gi, x, Execution::serial) == reference::is_imv_set(g, x));
            CHECK(find_invisible_pair(gi, x).has_value() == !expected);
        }
    }
}

TEST_CASE("heredity of mv and imv sets")
{
    std::mt19937_64 rng(202);
    for (auto & g : testing::random_connected(202, 40, 2, 12)) {
        auto best = mu(g).witness;
        auto best_i = mu_i(g).witness;
        for (int t = 0; t < 10; ++t) {
            VertexSet y(g.order()), yi(g.order());
            best.for_each([&](Vertex v) {
                if (rng() % 2)
                    y.insert(v);
            });
            best_i.for_each([&](Vertex v) {
                if (rng() % 2)
                    yi.insert(v);
            });
            CHECK(is_mv_set(g, y));
            CHECK(is_imv_set(g, yi));
        }
    }
}

TEST_CASE("incremental visible set matches batch checks under push and pop")
{
    std::mt19937_64 rng(203);
    for (auto & g : testing::random_connected(203, 30, 3, 12)) {
        GeodesicIndex gi(g);
        VisibilityKernel kernel(gi);
        for (bool independent : {false, true}) {
            IncrementalVisibleSet inc(kernel, independent);
            for (int step = 0; step < 60; ++step) {
                if (inc.size() > 0 && rng() % 3 == 0) {
                    inc.pop();
                    continue;
                }
                const auto v = static_cast<Vertex>(rng() % g.order());
                if (inc.contains(v))
                    continue;
                VertexSet x(g.order(), inc.members());
                x.insert(v);
                const bool expected = independent ? is_imv_set(gi, x) : is_mv_set(gi, x);
                CHECK(inc.can_add(v) == expected);
                CHECK(inc.add(v) == expected);
                CHECK(inc.contains(v) == expected);
            }
        }
    }
}

TEST_CASE("invariant relations")
{
    for (auto & g : testing::connected_up_to_6()) {
        const auto mi = mu_i(g).value;
        CHECK(mi <= std::min(mu(g).value, alpha(g).value));
        if (g.order() >= 2 && !g.find_triangle())
            CHECK(mi >= static_cast<long>(g.max_degree()));
        if (diameter(g) <= 3)
            CHECK(mi == alpha(g).value);
    }
}

TEST_CASE("branch and bound equals exhaustive enumeration")
{
    auto graphs = testing::random_connected(204, 40, 1, 12);
    graphs.push_back(petersen_graph());
    graphs.push_back(cycle_graph(12));
    for (auto & g : graphs) {
        auto m = mu(g);
        auto mi = mu_i(g);
        CHECK(m.value == reference::mu(g));
        CHECK(mi.value == reference::mu_i(g));
        CHECK(alpha(g).value == reference::alpha(g));
        CHECK(omega(g).value == reference::omega(g));
        CHECK(is_mv_set(g, m.witness));
        CHECK(is_imv_set(g, mi.witness));
        CHECK(static_cast<long>(m.witness.size()) == m.value);
    }
}

TEST_CASE("budget exhaustion reports bounds")
{
    SearchOptions tiny;
    tiny.node_budget = 3;
    try {
        (void)mu(petersen_graph(), tiny);
        FAIL("expected budget exhaustion");
    }
    catch (const BudgetExhausted & e) {
        CHECK(e.lower() <= e.upper());
        CHECK(e.lower() <= reference::mu(petersen_graph()));
        CHECK(e.upper() >= reference::mu(petersen_graph()));
    }
}

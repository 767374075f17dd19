#include "doctest.h"
#include "support.hpp"

#include "mvis/chromatic.hpp"
#include "mvis/geodesic.hpp"
#include "mvis/reference.hpp"
#include "mvis/visibility.hpp"

using namespace mvis;

namespace
{

long ceil_div(long a, long b) { return (a + b - 1) / b; }

bool has_tag(const std::vector<TaggedBound> & all, const std::string & tag, long value)
{
    for (auto & b : all)
        if (b.tag == tag && b.value == value)
            return true;
    return false;
}

}

TEST_CASE("colouring normal form")
{
    Coloring c({5, 2, 5, 9});
    CHECK(c.k() == 3);
    CHECK(c.colors() == std::vector<int>{1, 0, 1, 2});
    auto from = Coloring::from_classes(4, {{1, 3}, {0, 2}});
    CHECK(from.k() == 2);
    CHECK(from.classes() == std::vector<std::vector<Vertex>>{{1, 3}, {0, 2}});
    CHECK_THROWS_AS(Coloring::from_classes(3, {{0, 1}}), InputError);
    CHECK_THROWS_AS(parse_coloring_mode("rainbow"), InputError);
}

TEST_CASE("validation modes")
{
    auto k4 = complete_graph(4);
    Coloring one(std::vector<int>(4, 0));
    CHECK(validate_coloring(k4, one, ColoringMode::mv).valid);
    auto bad = validate_coloring(k4, one, ColoringMode::proper);
    CHECK_FALSE(bad.valid);
    CHECK(bad.bad_class == 0);
    CHECK(bad.culprits.size() == 2);

    auto sk4 = subdivision(complete_graph(4));
    Coloring three_classes({0, 0, 0, 0, 1, 2, 2, 2, 2, 1});
    CHECK(validate_coloring(sk4, three_classes, ColoringMode::imv).valid);

    auto p3 = path_graph(3);
    CHECK(validate_coloring(p3, Coloring({0, 0, 1}), ColoringMode::defective1).valid);
    CHECK_FALSE(validate_coloring(p3, Coloring({0, 0, 0}), ColoringMode::defective1).valid);
    CHECK_FALSE(validate_coloring(p3, Coloring({0, 1}), ColoringMode::proper).valid);
}

TEST_CASE("named chromatic numbers")
{
    CHECK(chi(petersen_graph()).k == 3);
    CHECK(chi_defective1(cycle_graph(5)).k == 2);
    CHECK(chi_mu_i(cycle_graph(5)).k == 3);
    CHECK(chi_mu(cycle_graph(5)).k == 2);
    CHECK(chi_mu(cycle_graph(3)).k == 1);
    for (std::size_t n = 1; n <= 9; ++n)
        CHECK(chi_mu(path_graph(n)).k == static_cast<int>((n + 1) / 2));
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(chi_mu_i(complete_graph(n)).k == static_cast<int>(n));
        CHECK(chi_mu(complete_graph(n)).k == 1);
    }
    CHECK(chi_mu_i(subdivision(complete_graph(4))).k == 3);
    for (auto [r, s, t] : {std::array<std::size_t, 3>{2, 2, 2}, {2, 3, 3}, {3, 3, 4}, {2, 2, 5}}) {
        const std::size_t dims[] = {r, s, t};
        CHECK(chi(hamming_graph(dims)).k == static_cast<int>(std::max({r, s, t})));
    }
    CHECK_THROWS_AS(chi_mu(empty_graph(2)), PreconditionError);
}

TEST_CASE("solver witnesses are valid and sized")
{
    for (auto & g : testing::random_connected(301, 30, 1, 10)) {
        auto check = [&](ColoringResult r, ColoringMode mode) {
            CHECK(validate_coloring(g, r.coloring, mode).valid);
            CHECK(r.coloring.k() == r.k);
        };
        check(chi(g), ColoringMode::proper);
        check(chi_defective1(g), ColoringMode::defective1);
        check(chi_mu(g), ColoringMode::mv);
        check(chi_mu_i(g), ColoringMode::imv);
    }
}

TEST_CASE("solver values equal exhaustive set-partition enumeration")
{
    auto graphs = testing::random_connected(302, 40, 1, 9);
    for (auto & g : testing::connected_up_to_6())
        graphs.push_back(g);
    for (auto & g : graphs) {
        CHECK(chi(g).k == reference::chi(g));
        CHECK(chi_defective1(g).k == reference::chi_defective1(g));
        CHECK(chi_mu(g).k == reference::chi_mu(g));
        CHECK(chi_mu_i(g).k == reference::chi_mu_i(g));
    }
}

TEST_CASE("decision queries")
{
    auto c5 = cycle_graph(5);
    CHECK_FALSE(mv_coloring_with(c5, 2, true));
    auto three = mv_coloring_with(c5, 3, true);
    REQUIRE(three);
    CHECK(validate_coloring(c5, *three, ColoringMode::imv).valid);
    CHECK(mv_coloring_with(c5, 2, false));
}

TEST_CASE("chromatic relations on small connected graphs")
{
    for (auto & g : testing::connected_up_to_6()) {
        const int x = chi(g).k, xm = chi_mu(g).k, xi = chi_mu_i(g).k;
        const long mi = mu_i(g).value;
        const int d = diameter(g);
        CHECK(xi >= std::max<long>({x, xm, ceil_div(static_cast<long>(g.order()), mi)}));
        CHECK(xi <= x * xm);
        if (d <= 3)
            CHECK(xi == x);
        if (d == 2) {
            const int x1 = chi_defective1(g).k;
            CHECK(xm <= x1);
            CHECK(x1 <= x);
        }
        CHECK((xi == 2) == (g.is_bipartite() && d >= 1 && d <= 3));
        GeodesicIndex gi(g);
        CHECK(xm >= (static_cast<int>(find_longest_convex_path(gi).size()) + 1) / 2);
    }
    for (auto g : {cycle_graph(5), petersen_graph()})
        CHECK(chi_mu(g).k == chi_defective1(g).k);
}

TEST_CASE("trees have equal mv and imv chromatic numbers")
{
    for (std::size_t n = 3; n <= 11; ++n)
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            auto t = random_tree(seed * 31 + n, n);
            CHECK(chi_mu_i(t).k == chi_mu(t).k);
        }
}

TEST_CASE("bound reports")
{
    auto lo = lower_bounds(cycle_graph(9));
    CHECK(has_tag(lo.lower_all, "order-over-mu", 3));
    CHECK(lo.lower.value <= chi_mu_i(cycle_graph(9)).k);

    auto c6 = cycle_graph(6);
    auto up = upper_bounds(c6);
    CHECK(has_tag(up.upper_all, "bipartite", 2 * chi_mu(c6).k));
    CHECK(has_tag(up.upper_all, "triangle-free-mu_i", ceil_div(6 - mu_i(c6).value, 2) + 1));
    CHECK(has_tag(up.upper_all, "triangle-free-max-degree", ceil_div(6 - 2, 2) + 1));

    for (auto & g : testing::random_connected(303, 25, 2, 9)) {
        const int exact = chi_mu_i(g).k;
        auto l = lower_bounds(g);
        auto u = upper_bounds(g);
        CHECK(l.lower.value <= exact);
        CHECK(u.upper.value >= exact);
        for (auto & b : l.lower_all)
            CHECK(b.value <= exact);
        for (auto & b : u.upper_all)
            CHECK(b.value >= exact);
    }

    auto prism = cartesian_product(cycle_graph(6), complete_graph(2));
    auto with_fiber = lower_bounds(prism, fiber(prism, FiberKind::g_fiber, 0));
    CHECK(has_tag(with_fiber.lower_all, "convex-subgraph", chi_mu(c6).k));
}

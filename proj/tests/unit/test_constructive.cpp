#include "doctest.h"
#include "support.hpp"

#include "mvis/chromatic.hpp"
#include "mvis/constructive.hpp"
#include "mvis/geodesic.hpp"
#include "mvis/ramsey.hpp"
#include "mvis/visibility.hpp"

#include <fstream>
#include <sstream>

using namespace mvis;

namespace
{

void check_valid(const ConstructedColoring & c)
{
    CHECK(validate_coloring(c.graph, c.coloring, c.mode).valid);
    CHECK(c.coloring.k() <= c.claimed_k);
}

std::string golden(const std::string & name)
{
    std::ifstream in(std::string(MVIS_TEST_SOURCE_DIR) + "/tests/golden/" + name);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}

TEST_CASE("cycle colourings")
{
    auto c8 = cycle_imv(8);
    check_valid(c8);
    CHECK(c8.coloring.classes() == std::vector<std::vector<Vertex>>{{0, 2, 4}, {1, 3, 6}, {5, 7}});
    auto c6 = cycle_imv(6);
    CHECK(c6.coloring.classes() == std::vector<std::vector<Vertex>>{{0, 2, 4}, {1, 3, 5}});
    CHECK(cycle_imv(4).coloring.k() == 2);
    for (std::size_t n = 3; n <= 15; ++n) {
        auto c = cycle_imv(n);
        check_valid(c);
        CHECK(c.coloring.k() == chi_mu_i(cycle_graph(n)).k);
    }
    CHECK_THROWS_AS(cycle_imv(2), PreconditionError);
}

TEST_CASE("tree exchange")
{
    auto p5 = path_graph(5);
    auto out = tree_exchange(p5, Coloring({0, 0, 1, 1, 2}));
    check_valid(out);
    CHECK(out.coloring.k() == 3);

    auto star = star_graph(5);
    auto s = tree_exchange(star, Coloring({0, 1, 1, 1, 1, 1}));
    CHECK(s.coloring.k() == 2);

    for (std::size_t n = 3; n <= 10; ++n)
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            auto t = random_tree(seed + 100 * n, n);
            auto start = chi_mu(t);
            auto result = tree_exchange(t, start.coloring);
            check_valid(result);
            CHECK(result.coloring.k() == start.k);
        }
    CHECK_THROWS_AS(tree_exchange(cycle_graph(4), Coloring({0, 0, 1, 1})), PreconditionError);
    CHECK_THROWS_AS(tree_exchange(p5, Coloring({0, 0, 0, 0, 0})), PreconditionError);
}

TEST_CASE("triangle-free construction")
{
    auto star = trianglefree_imv(star_graph(6));
    check_valid(star);
    CHECK(star.coloring.k() == 2);
    auto c6 = trianglefree_imv(cycle_graph(6));
    check_valid(c6);
    CHECK(c6.coloring.k() <= (6 - mu_i(cycle_graph(6)).value + 1) / 2 + 1);
    auto pet = trianglefree_imv(petersen_graph());
    check_valid(pet);
    CHECK(pet.coloring.k() <= 4);
    CHECK_THROWS_AS(trianglefree_imv(complete_graph(3)), PreconditionError);
}

TEST_CASE("product colouring")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        auto k = product_coloring(complete_graph(n), Coloring(std::vector<int>(n, 0)));
        check_valid(k);
        CHECK(k.coloring.k() == static_cast<int>(n));
    }
    auto c6 = cycle_graph(6);
    auto out = product_coloring(c6, chi_mu(c6).coloring);
    check_valid(out);
    CHECK(out.coloring.k() <= 4);
    CHECK(out.coloring.k() >= chi_mu_i(c6).k);
    for (auto & g : testing::random_connected(501, 20, 2, 9))
        if (g.is_bipartite())
            CHECK(product_coloring(g, chi_mu(g).coloring).coloring.k() <= 2 * chi_mu(g).k);
}

TEST_CASE("lexicographic constructions")
{
    for (const char * spec : {"lex(path:3,complete:2)", "lex(cycle:5,path:2)"}) {
        auto c = lex_mv_2coloring(build(spec));
        check_valid(c);
        CHECK(c.coloring.k() == 2);
    }
    CHECK_THROWS_AS(lex_mv_2coloring(build("lex(complete:2,complete:3)")), PreconditionError);
    CHECK_THROWS_AS(lex_mv_2coloring(path_graph(4)), PreconditionError);

    auto p3p2 = build("lex(path:3,path:2)");
    auto li = lex_imv(p3p2);
    check_valid(li);
    CHECK(li.coloring.k() == chi(p3p2).k);
    CHECK(mu_i(p3p2).value == 2);
    auto c4k2 = build("lex(cycle:4,complete:2)");
    CHECK(lex_imv(c4k2).coloring.k() == chi(c4k2).k);
    CHECK_THROWS_AS(lex_imv(build("lex(path:3,empty:2)")), PreconditionError);

    for (auto & g : connected_graphs_up_to(3))
        for (auto & h : connected_graphs_up_to(3)) {
            if (g.order() < 2)
                continue;
            auto gh = lexicographic_product(g, h);
            if (h.order() >= 2 && !(g.is_complete() && h.is_complete()))
                CHECK(lex_mv_2coloring(gh).coloring.k() == chi_mu(gh).k);
            if (h.size() > 0)
                CHECK(lex_imv(gh).coloring.k() == chi_mu_i(gh).k);
        }
}

TEST_CASE("cartesian prism construction")
{
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto t = random_tree(seed, 3 + seed);
        auto c = cartesian_prism_mv(t, 2, chi_mu_i(t).coloring);
        check_valid(c);
        CHECK(c.coloring.k() == chi_mu(t).k);
    }
    for (std::size_t r = 1; r <= 3; ++r)
        for (std::size_t s = r; s <= 3; ++s) {
            auto k = biclique(r, s);
            std::vector<int> sides(r + s, 1);
            std::fill(sides.begin(), sides.begin() + static_cast<long>(r), 0);
            auto c = cartesian_prism_mv(k, 3, Coloring(sides));
            check_valid(c);
            CHECK(c.coloring.k() == 2);
        }
    auto p4 = path_graph(4);
    auto p4k3 = cartesian_prism_mv(p4, 3, chi_mu_i(p4).coloring);
    check_valid(p4k3);
    CHECK(p4k3.coloring.k() == 2);
    CHECK_THROWS_AS(cartesian_prism_mv(p4, 2, Coloring({0, 0, 1, 1})), PreconditionError);
}

TEST_CASE("strong path schemes match the golden grids")
{
    auto p12 = strong_paths_imv(12, 12);
    check_valid(p12);
    CHECK(p12.coloring.k() == 6);
    CHECK(render_grid(p12.coloring, 12, 12) == golden("strong_p12.txt"));
    auto p8 = strong_paths_imv(8, 8);
    CHECK(p8.coloring.k() == 4);
    CHECK(render_grid(p8.coloring, 8, 8) == golden("strong_p8.txt"));
    auto wide = strong_paths_imv(16, 8);
    check_valid(wide);
    CHECK(wide.coloring.k() == 4);
    CHECK_THROWS_AS(strong_paths_imv(2, 2), PreconditionError);
}

TEST_CASE("strong path constructions are optimal where the solver reaches")
{
    CHECK(strong_paths_imv(8, 8).coloring.k() == chi_mu_i(strong_product(path_graph(8), path_graph(8))).k);
    for (std::size_t t = 3; t <= 10; ++t)
        for (std::size_t r = 3; r <= std::min<std::size_t>(t, 7); ++r) {
            auto c = strong_paths_imv(t, r);
            check_valid(c);
            CHECK(c.coloring.k() == chi_mu_i(c.graph).k);
        }
    for (std::size_t t = 2; t <= 8; ++t)
        for (std::size_t r = 2; r <= t; ++r) {
            auto c = strong_paths_mv(t, r);
            check_valid(c);
            CHECK(c.coloring.k() == chi_mu(c.graph).k);
        }
}

TEST_CASE("strong path mv examples")
{
    CHECK(strong_paths_mv(2, 2).coloring.k() == 1);
    auto c53 = strong_paths_mv(5, 3);
    CHECK(c53.coloring.k() == 2);
    auto p = c53.graph;
    const Vertex a = testing::by_label(p, "(0,0)"), b = testing::by_label(p, "(0,2)"), mid = testing::by_label(p, "(0,1)");
    CHECK(c53.coloring[a] == c53.coloring[b]);
    CHECK(c53.coloring[a] != c53.coloring[mid]);
    CHECK(strong_paths_mv(7, 6).coloring.k() == 3);
}

TEST_CASE("subdivision colourings from partitions")
{
    EdgePartition p;
    p.host = HostKind::complete;
    p.r = 4;
    p.edges = complete_graph(4).edges();
    p.class_of = {0, 1, 1, 1, 1, 0};
    p.classes = 2;
    auto sk4 = subdiv_imv_from_partition(p);
    check_valid(sk4);
    CHECK(sk4.coloring.k() == 3);

    auto k3 = find_k4free_partition(3, 1);
    REQUIRE(k3);
    CHECK(subdiv_imv_from_partition(*k3).coloring.k() == 2);

    auto k6 = find_k4free_partition(6, rho(6));
    REQUIRE(k6);
    auto s6 = subdiv_imv_from_partition(*k6);
    check_valid(s6);
    CHECK(s6.coloring.k() == 3);

    p.class_of = {0, 0, 0, 0, 0, 0};
    p.classes = 1;
    CHECK_THROWS_AS(subdiv_imv_from_partition(p), PreconditionError);

    auto k23 = find_c4free_partition(2, 3, 2);
    REQUIRE(k23);
    CHECK_THROWS_AS(subdiv_imv_from_partition(*k23), PreconditionError);
}

TEST_CASE("defective colourings become mv colourings")
{
    auto c5 = cycle_graph(5);
    auto a = defective_to_mv(c5, chi_defective1(c5).coloring);
    check_valid(a);
    CHECK(a.coloring.k() == 2);
    auto pet = petersen_graph();
    auto b = defective_to_mv(pet, chi_defective1(pet).coloring);
    check_valid(b);
    CHECK(b.coloring.k() == 2);
    auto k33 = biclique(3, 3);
    auto c = defective_to_mv(k33, Coloring({0, 0, 0, 1, 1, 1}));
    CHECK(c.coloring.k() == 2);
    CHECK_THROWS_AS(defective_to_mv(path_graph(4), Coloring({0, 1, 0, 1})), PreconditionError);
}

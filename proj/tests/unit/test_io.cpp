#include "doctest.h"
#include "support.hpp"

#include "mvis/constructive.hpp"
#include "mvis/io.hpp"
#include "mvis/ramsey.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mvis;

TEST_CASE("edge list round trip")
{
    for (auto & g : testing::random_connected(601, 20, 1, 15)) {
        std::ostringstream out;
        write_edge_list(out, g);
        std::istringstream in(out.str());
        auto back = read_edge_list(in);
        CHECK(back.order() == g.order());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("colouring json round trip")
{
    Coloring c({2, 0, 2, 1, 0});
    auto j = io::to_json(c);
    CHECK(j["k"] == 3);
    CHECK(j["classes"] == io::Json::parse("[[0, 2], [1, 4], [3]]"));
    auto same = [&](const Coloring & d) {
        auto a = c.classes(), b = d.classes();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    };
    CHECK(same(io::coloring_from_json(j, 5)));
    CHECK(io::coloring_from_json(io::Json::parse("{\"colors\": [2, 0, 2, 1, 0]}"), 5) == c);
    CHECK(io::coloring_from_json(io::Json::parse("[2, 0, 2, 1, 0]"), 5) == c);
    CHECK_THROWS_AS(io::coloring_from_json(io::Json::parse("[0, 1]"), 5), InputError);
    CHECK_THROWS_AS(io::coloring_from_json(io::Json::parse("{\"classes\": [[0, 1], [1, 2, 3, 4]]}"), 5), InputError);
    CHECK_THROWS_AS(io::coloring_from_json(io::Json::parse("{\"classes\": [[0, 1], [2, 3]]}"), 5), InputError);
}

TEST_CASE("set parsing")
{
    CHECK(io::set_from_text("[0, 3]", 4) == VertexSet(4, {0, 3}));
    CHECK(io::set_from_text("{\"set\": [1]}", 4) == VertexSet(4, {1}));
    CHECK(io::set_from_text("2 3\n", 4) == VertexSet(4, {2, 3}));
    CHECK_THROWS_AS(io::set_from_text("[7]", 4), InputError);
    CHECK_THROWS_AS(io::set_from_text("a b", 4), InputError);
}

TEST_CASE("partition and constructed colouring json")
{
    auto p = find_k4free_partition(5, 2);
    REQUIRE(p);
    auto j = io::to_json(*p);
    CHECK(j["host"] == "complete:5");
    CHECK(j["edges"].size() == 10);
    auto c = io::to_json(cycle_imv(5));
    CHECK(c.contains("claimed_k"));
    CHECK(c["coloring"]["k"] == 3);
}

TEST_CASE("dot export")
{
    auto g = build("strong(path:2,path:2)");
    auto dot = io::to_dot(g, nullptr);
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("label=\"(0,1)\"") != std::string::npos);
    Coloring c({0, 1, 1, 0});
    auto coloured = io::to_dot(g, &c);
    CHECK(coloured.find("style=filled") != std::string::npos);
}

TEST_CASE("atomic writes replace the file")
{
    auto dir = std::filesystem::temp_directory_path() / "mvis_io_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "out.txt").string();
    io::write_file_atomic(path, "first\n");
    io::write_file_atomic(path, "second\n");
    CHECK(io::read_text_file(path) == "second\n");
    std::filesystem::remove_all(dir);
}

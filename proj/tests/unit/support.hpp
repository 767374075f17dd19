#pragma once

#include "mvis/builders.hpp"
#include "mvis/enumerate.hpp"
#include "mvis/graph.hpp"

#include <numeric>
#include <random>
#include <vector>

namespace testing
{

inline std::vector<mvis::Graph> random_connected(std::uint64_t seed, int count, std::size_t lo, std::size_t hi)
{
    std::mt19937_64 rng(seed);
    std::vector<mvis::Graph> out;
    for (int i = 0; i < count; ++i) {
        const std::size_t n = lo + rng() % (hi - lo + 1);
        const double p = 0.15 + 0.7 * static_cast<double>(rng() % 1000) / 1000.0;
        out.push_back(mvis::random_connected_graph(rng, n, p));
    }
    return out;
}

inline const std::vector<mvis::Graph> & connected_up_to_6()
{
    static const auto graphs = mvis::connected_graphs_up_to(6);
    return graphs;
}

inline mvis::Vertex by_label(const mvis::Graph & g, const std::string & label)
{
    for (mvis::Vertex v = 0; v < g.order(); ++v)
        if (g.label(v) == label)
            return v;
    throw std::out_of_range("no vertex labelled " + label);
}

}

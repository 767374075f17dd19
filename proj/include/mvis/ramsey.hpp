#pragma once

#include "mvis/common.hpp"
#include "mvis/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace mvis
{

enum class HostKind
{
    complete,
    biclique,
};

/// A partition of the edges of K_n or K_{r,s} into numbered classes. Edges are
/// listed in lexicographic order; for K_{r,s} the left side is 0..r-1 and the
/// right side r..r+s-1, as in biclique().
struct EdgePartition
{
    HostKind host = HostKind::complete;
    std::size_t r = 0;
    std::size_t s = 0;
    std::vector<Edge> edges;
    std::vector<int> class_of;
    int classes = 0;

    std::size_t order() const { return host == HostKind::complete ? r : r + s; }
    Graph host_graph() const;
    /// Family syntax of the host, e.g. "complete:6" or "biclique:2,3".
    std::string host_spec() const;
};

struct RamseyOptions
{
    std::uint64_t node_budget = default_node_budget();
    /// Lifts the refusal of K_n with n > 12 and K_{r,s} with r*s > 36.
    bool allow_large = false;
};

/// A q-class partition of E(K_n) with no monochromatic K_4, if one exists.
std::optional<EdgePartition> find_k4free_partition(std::size_t n, int q, const RamseyOptions & opt = {});
/// Smallest such q.
int rho(std::size_t n, const RamseyOptions & opt = {});

/// A q-class partition of E(K_{r,s}) with no monochromatic C_4, if one exists.
std::optional<EdgePartition> find_c4free_partition(std::size_t r, std::size_t s, int q, const RamseyOptions & opt = {});
int rho_rs(std::size_t r, std::size_t s, const RamseyOptions & opt = {});

/// Independent checks that look at every 4-vertex subset (K_4) or every pair
/// of left and pair of right vertices (C_4). Return the offending vertices.
std::optional<std::array<Vertex, 4>> find_monochromatic_k4(const EdgePartition & p);
std::optional<std::array<Vertex, 4>> find_monochromatic_c4(const EdgePartition & p);

}

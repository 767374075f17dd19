#pragma once

#include "mvis/bitset.hpp"
#include "mvis/common.hpp"
#include "mvis/geodesic.hpp"
#include "mvis/graph.hpp"

#include <optional>
#include <vector>

namespace mvis
{

/// A u,v-geodesic whose internal vertices avoid the queried set.
struct VisibilityWitness
{
    Vertex u = 0;
    Vertex v = 0;
    /// Internal vertices in order from u to v; empty for adjacent pairs.
    std::vector<Vertex> interior;

    std::vector<Vertex> path() const;
};

/// Answers "is there a u,v-geodesic avoiding `blocked` internally" by sweeping
/// the layers S(u,k) ∩ S(v,D-k) of the interval. Owns scratch space, so one
/// kernel must not be shared between threads.
class VisibilityKernel
{
public:
    explicit VisibilityKernel(const GeodesicIndex & gi);

    const GeodesicIndex & index() const { return *gi_; }
    std::size_t words() const { return w_; }

    bool visible(Vertex u, Vertex v, const bits::Word * blocked);
    /// Also writes the interior of one witness into `interior` (a bitset of
    /// words() words). The witness is reconstructed from v backwards, always
    /// taking the lowest admissible vertex.
    bool visible(Vertex u, Vertex v, const bits::Word * blocked, bits::Word * interior);
    /// Same as above but returns the interior as an ordered u-to-v sequence.
    std::optional<std::vector<Vertex>> witness(Vertex u, Vertex v, const bits::Word * blocked);

private:
    int sweep(Vertex u, Vertex v, const bits::Word * blocked);

    const GeodesicIndex * gi_;
    std::size_t w_;
    std::vector<bits::Word> layers_;
};

enum class Execution
{
    serial,
    parallel,
};

/// Precondition: u, v in x and u != v (PreconditionError otherwise).
std::optional<VisibilityWitness> is_visible_pair(const GeodesicIndex & gi, const VertexSet & x, Vertex u, Vertex v);
std::optional<VisibilityWitness> is_visible_pair(const Graph & g, const VertexSet & x, Vertex u, Vertex v);

/// Pairs in different components are never visible.
bool is_mv_set(const GeodesicIndex & gi, const VertexSet & x, Execution exec = Execution::parallel);
bool is_mv_set(const Graph & g, const VertexSet & x);
bool is_imv_set(const GeodesicIndex & gi, const VertexSet & x, Execution exec = Execution::parallel);
bool is_imv_set(const Graph & g, const VertexSet & x);

/// First pair of x that has no witness, if any.
std::optional<std::pair<Vertex, Vertex>> find_invisible_pair(const GeodesicIndex & gi, const VertexSet & x, Execution exec = Execution::parallel);

/// A growing MV (or IMV) set that remembers one witness per member pair.
/// Adding w only re-examines pairs involving w and pairs whose stored witness
/// runs through w. Every add() can be undone with pop().
class IncrementalVisibleSet
{
public:
    IncrementalVisibleSet(VisibilityKernel & kernel, bool independent);

    std::size_t size() const { return members_.size(); }
    const std::vector<Vertex> & members() const { return members_; }
    bool contains(Vertex v) const { return bits::test(blocked_.data(), v); }
    const bits::Word * bitset() const { return blocked_.data(); }

    /// Whether members ∪ {v} is still MV (IMV). Does not change the set.
    bool can_add(Vertex v) { return attempt(v, false); }
    /// Adds v if the result stays MV (IMV); returns false and leaves the set
    /// unchanged otherwise.
    bool add(Vertex v) { return attempt(v, true); }
    void pop();
    void clear();

private:
    bool attempt(Vertex v, bool commit);
    bits::Word * witness(Vertex a, Vertex b) { return table_.data() + (static_cast<std::size_t>(a) * n_ + b) * w_; }

    VisibilityKernel * kernel_;
    bool independent_;
    std::size_t n_;
    std::size_t w_;
    std::vector<Vertex> members_;
    std::vector<bits::Word> blocked_;
    std::vector<bits::Word> table_;
    std::vector<bits::Word> staged_;
    std::vector<std::pair<Vertex, Vertex>> staged_pairs_;
    struct TrailEntry
    {
        Vertex a;
        Vertex b;
    };
    std::vector<TrailEntry> trail_;
    std::vector<bits::Word> trail_words_;
    std::vector<std::size_t> marks_;
};

struct InvariantResult
{
    long value = 0;
    VertexSet witness;
};

/// Exact maximum MV / IMV set. Branch and bound over vertices in descending
/// degree order (lowest index first among equals). Throws PreconditionError on
/// disconnected input and BudgetExhausted when the node budget runs out.
InvariantResult mu(const Graph & g, const SearchOptions & opt = {});
InvariantResult mu_i(const Graph & g, const SearchOptions & opt = {});

/// Maximum independent set and maximum clique; disconnected input is fine.
InvariantResult alpha(const Graph & g, const SearchOptions & opt = {});
InvariantResult omega(const Graph & g, const SearchOptions & opt = {});

}

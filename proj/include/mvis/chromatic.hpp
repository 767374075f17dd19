#pragma once

#include "mvis/common.hpp"
#include "mvis/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mvis
{

/// Total map vertex -> colour. Normalised colourings use every colour in
/// 0..k-1.
class Coloring
{
public:
    Coloring() = default;
    /// Compacts the colour values to 0..k-1, keeping their relative order.
    explicit Coloring(std::vector<int> colors);
    static Coloring from_classes(std::size_t n, const std::vector<std::vector<Vertex>> & classes);

    std::size_t order() const { return color_.size(); }
    int k() const { return k_; }
    int operator[](Vertex v) const { return color_[v]; }
    const std::vector<int> & colors() const { return color_; }

    /// Classes in colour order, each sorted ascending.
    std::vector<std::vector<Vertex>> classes() const;
    VertexSet class_set(int c) const;

    friend bool operator==(const Coloring &, const Coloring &) = default;

private:
    std::vector<int> color_;
    int k_ = 0;
};

enum class ColoringMode
{
    proper,
    defective1,
    mv,
    imv,
};

const char * to_string(ColoringMode m);
/// Throws InputError on anything but proper, defective1, mv, imv.
ColoringMode parse_coloring_mode(const std::string & s);

struct ColoringReport
{
    bool valid = true;
    /// Human-readable description of the first violation found.
    std::string violation;
    /// Colour class holding the violation, or -1.
    int bad_class = -1;
    std::vector<Vertex> culprits;
};

ColoringReport validate_coloring(const Graph & g, const Coloring & c, ColoringMode mode);

struct ColoringResult
{
    int k = 0;
    Coloring coloring;
};

ColoringResult chi(const Graph & g, const SearchOptions & opt = {});
ColoringResult chi_defective1(const Graph & g, const SearchOptions & opt = {});
/// Disconnected input raises PreconditionError.
ColoringResult chi_mu(const Graph & g, const SearchOptions & opt = {});
ColoringResult chi_mu_i(const Graph & g, const SearchOptions & opt = {});

/// Whether g has an MV (IMV) colouring with at most k classes.
std::optional<Coloring> mv_coloring_with(const Graph & g, int k, bool independent, const SearchOptions & opt = {});

struct TaggedBound
{
    long value;
    std::string tag;
};

/// lower <= upper. `lower_all` / `upper_all` list every bound that fired.
struct BoundReport
{
    TaggedBound lower{0, "trivial"};
    TaggedBound upper{0, "trivial"};
    std::vector<TaggedBound> lower_all;
    std::vector<TaggedBound> upper_all;
};

/// Bounds on the IMV chromatic number. A supplied convex vertex set adds the
/// bound from the MV chromatic number of the subgraph it induces. Bounds that
/// need an exact sub-solve are skipped silently when that sub-solve exceeds
/// its budget.
BoundReport lower_bounds(const Graph & g, const std::optional<VertexSet> & convex = std::nullopt, const SearchOptions & opt = {});
BoundReport upper_bounds(const Graph & g, const SearchOptions & opt = {});

}

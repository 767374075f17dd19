#pragma once

#include "mvis/common.hpp"
#include "mvis/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mvis
{

struct Literal
{
    int var = 1; ///< 1-based variable index
    bool negated = false;

    friend bool operator==(const Literal &, const Literal &) = default;
    friend auto operator<=>(const Literal &, const Literal &) = default;
};

/// A CNF formula with clauses of one to three literals and no tautologies.
struct Cnf3
{
    int num_vars = 0;
    std::vector<std::vector<Literal>> clauses;

    /// Builds from DIMACS-style signed integers. Duplicate literals inside a
    /// clause are merged; tautologies, empty clauses, clauses longer than
    /// three and out-of-range variables raise InputError.
    static Cnf3 from_ints(int num_vars, const std::vector<std::vector<int>> & clauses);
    std::vector<std::vector<int>> to_ints() const;
    bool has_short_clause() const;
};

/// `p cnf a b` header followed by clauses of signed integers ending in 0.
/// Lines starting with `c` are comments.
Cnf3 parse_dimacs(std::istream & in);
Cnf3 parse_dimacs_file(const std::string & path);
void write_dimacs(std::ostream & out, const Cnf3 & f);

/// Truth-table search; returns a satisfying assignment (index 0 is u_1).
std::optional<std::vector<bool>> satisfying_assignment(const Cnf3 & f);

/// Vertex numbering of the SAT gadget.
class SatGadgetLayout
{
public:
    SatGadgetLayout(int a, int b) : a_(a), b_(b) {}

    std::size_t order() const { return static_cast<std::size_t>(5 * a_ + 2 * b_ + 4); }
    // Clause j and variable i are 1-based.
    Vertex c(int j) const { return static_cast<Vertex>(j - 1); }
    Vertex c_prime(int j) const { return static_cast<Vertex>(b_ + j - 1); }
    Vertex apex() const { return static_cast<Vertex>(2 * b_); }
    Vertex p(int i) const { return tree(i, 0); }
    Vertex p_prime(int i) const { return tree(i, 1); }
    Vertex q(int i) const { return tree(i, 2); }
    Vertex r(int i) const { return tree(i, 3); }
    Vertex s(int i) const { return tree(i, 4); }
    Vertex x() const { return static_cast<Vertex>(2 * b_ + 1 + 5 * a_); }
    Vertex y() const { return x() + 1; }
    Vertex z() const { return x() + 2; }

private:
    Vertex tree(int i, int k) const { return static_cast<Vertex>(2 * b_ + 1 + 5 * (i - 1) + k); }

    int a_;
    int b_;
};

/// Clause paths c_j c_j' under an apex c, variable trees p p' q r s, a
/// triangle x y z, and the literal edges. Labelled with vertex roles.
Graph build_sat_gadget(const Cnf3 & f);

/// The independent set {c_j'} ∪ {r_i, s_i} ∪ {z} ∪ {p_i : u_i false} ∪
/// {p_i' : u_i true} that a satisfying assignment induces.
VertexSet sat_gadget_set(const Cnf3 & f, const std::vector<bool> & assignment);

struct SatReductionReport
{
    bool satisfiable = false;
    std::vector<bool> assignment;
    long mu_i = 0;
    long alpha = 0;
    /// 3a + b + 1.
    long alpha_formula = 0;
    VertexSet mu_i_witness;
    VertexSet alpha_witness;
    /// The set induced by the assignment, when satisfiable, and whether it is IMV.
    std::optional<VertexSet> assignment_set;
    bool assignment_set_imv = false;
    /// Formula has a clause with fewer than three literals.
    bool uses_short_clauses = false;
    /// satisfiable <=> mu_i == alpha.
    bool agrees = false;
};

/// Refuses (PreconditionError) formulas with more than 3 variables or more
/// than 4 clauses.
SatReductionReport verify_sat_reduction(const Cnf3 & f, const SearchOptions & opt = {});

/// K_1 corona h: vertex 0 joined to a copy of h on 1..n(h).
Graph build_corona_reduction(const Graph & h);

struct CoronaReport
{
    Graph graph;
    long mu_i = 0;
    long alpha_h = 0;
    int chi_mu_i = 0;
    int chi_h = 0;
    bool mu_i_matches = false;  ///< mu_i(K_1 corona h) == alpha(h)
    bool chi_mu_i_matches = false; ///< chi_mu_i(K_1 corona h) == chi(h) + 1
};

CoronaReport verify_corona_reduction(const Graph & h, const SearchOptions & opt = {});

}

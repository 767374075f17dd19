#include "mvis/hardness.hpp"

#include "mvis/builders.hpp"
#include "mvis/chromatic.hpp"
#include "mvis/visibility.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mvis
{

Cnf3 Cnf3::from_ints(int num_vars, const std::vector<std::vector<int>> & clauses)
{
    if (num_vars < 1)
        throw InputError("cnf: need at least one variable");
    Cnf3 f;
    f.num_vars = num_vars;
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        std::vector<Literal> clause;
        for (int lit : clauses[j]) {
            if (lit == 0 || std::abs(lit) > num_vars)
                throw InputError("cnf clause " + std::to_string(j + 1) + ": literal " + std::to_string(lit) + " out of range");
            clause.push_back({std::abs(lit), lit < 0});
        }
        std::sort(clause.begin(), clause.end());
        clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
        if (clause.empty())
            throw InputError("cnf clause " + std::to_string(j + 1) + " is empty");
        for (std::size_t i = 0; i + 1 < clause.size(); ++i)
            if (clause[i].var == clause[i + 1].var)
                throw InputError("cnf clause " + std::to_string(j + 1) + " contains variable " + std::to_string(clause[i].var)
                                 + " in both polarities");
        if (clause.size() > 3)
            throw InputError("cnf clause " + std::to_string(j + 1) + " has more than three literals");
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

std::vector<std::vector<int>> Cnf3::to_ints() const
{
    std::vector<std::vector<int>> out;
    for (auto & c : clauses) {
        std::vector<int> row;
        for (auto & l : c)
            row.push_back(l.negated ? -l.var : l.var);
        out.push_back(std::move(row));
    }
    return out;
}

bool Cnf3::has_short_clause() const
{
    return std::any_of(clauses.begin(), clauses.end(), [](auto & c) { return c.size() < 3; });
}

Cnf3 parse_dimacs(std::istream & in)
{
    std::string line;
    int vars = -1;
    long declared = -1;
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == 'c' || tok[0] == '%')
            continue;
        if (tok == "p") {
            std::string fmt;
            if (vars >= 0 || !(ls >> fmt >> vars >> declared) || fmt != "cnf")
                throw InputError("dimacs line " + std::to_string(lineno) + ": malformed header");
            continue;
        }
        if (vars < 0)
            throw InputError("dimacs line " + std::to_string(lineno) + ": clause before 'p cnf' header");
        do {
            int lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stoi(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
            }
            catch (const std::exception &) {
                throw InputError("dimacs line " + std::to_string(lineno) + ": bad literal '" + tok + "'");
            }
            if (lit == 0) {
                clauses.push_back(current);
                current.clear();
            }
            else
                current.push_back(lit);
        } while (ls >> tok);
    }
    if (vars < 0)
        throw InputError("dimacs: missing 'p cnf' header");
    if (!current.empty())
        throw InputError("dimacs: last clause is not terminated by 0");
    if (static_cast<long>(clauses.size()) != declared)
        throw InputError("dimacs: header announces " + std::to_string(declared) + " clauses, found " + std::to_string(clauses.size()));
    return Cnf3::from_ints(vars, clauses);
}

Cnf3 parse_dimacs_file(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return parse_dimacs(in);
}

void write_dimacs(std::ostream & out, const Cnf3 & f)
{
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (auto & c : f.to_ints()) {
        for (int l : c)
            out << l << ' ';
        out << "0\n";
    }
}

std::optional<std::vector<bool>> satisfying_assignment(const Cnf3 & f)
{
    if (f.num_vars > 24)
        throw PreconditionError("satisfying_assignment: more than 24 variables");
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << f.num_vars); ++mask) {
        // Bit i-1 of mask set means u_i is true.
        auto value = [&](const Literal & l) { return ((mask >> (l.var - 1)) & 1U) != (l.negated ? 1U : 0U); };
        bool all = std::all_of(f.clauses.begin(), f.clauses.end(),
                               [&](auto & c) { return std::any_of(c.begin(), c.end(), value); });
        if (all) {
            std::vector<bool> a(static_cast<std::size_t>(f.num_vars));
            for (int i = 0; i < f.num_vars; ++i)
                a[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
            return a;
        }
    }
    return std::nullopt;
}

Graph build_sat_gadget(const Cnf3 & f)
{
    const int a = f.num_vars;
    const int b = static_cast<int>(f.clauses.size());
    SatGadgetLayout at(a, b);
    std::vector<Edge> es;
    auto join = [&](Vertex u, Vertex v) { es.emplace_back(std::min(u, v), std::max(u, v)); };
    for (int j = 1; j <= b; ++j) {
        join(at.c(j), at.c_prime(j));
        join(at.apex(), at.c_prime(j));
    }
    for (int i = 1; i <= a; ++i) {
        join(at.p(i), at.p_prime(i));
        join(at.p_prime(i), at.q(i));
        join(at.q(i), at.r(i));
        join(at.q(i), at.s(i));
        join(at.x(), at.p(i));
        join(at.x(), at.p_prime(i));
        join(at.y(), at.r(i));
        join(at.y(), at.s(i));
        join(at.apex(), at.r(i));
        join(at.apex(), at.s(i));
    }
    join(at.x(), at.y());
    join(at.y(), at.z());
    join(at.x(), at.z());
    for (int j = 1; j <= b; ++j)
        for (auto & l : f.clauses[static_cast<std::size_t>(j - 1)])
            join(l.negated ? at.p_prime(l.var) : at.p(l.var), at.c(j));
    std::sort(es.begin(), es.end());

    std::vector<std::string> labels(at.order());
    for (int j = 1; j <= b; ++j) {
        labels[at.c(j)] = "c" + std::to_string(j);
        labels[at.c_prime(j)] = "c'" + std::to_string(j);
    }
    labels[at.apex()] = "c";
    for (int i = 1; i <= a; ++i) {
        auto idx = std::to_string(i);
        labels[at.p(i)] = "p" + idx;
        labels[at.p_prime(i)] = "p'" + idx;
        labels[at.q(i)] = "q" + idx;
        labels[at.r(i)] = "r" + idx;
        labels[at.s(i)] = "s" + idx;
    }
    labels[at.x()] = "x";
    labels[at.y()] = "y";
    labels[at.z()] = "z";
    return Graph(at.order(), es, std::move(labels));
}

VertexSet sat_gadget_set(const Cnf3 & f, const std::vector<bool> & assignment)
{
    const int a = f.num_vars;
    const int b = static_cast<int>(f.clauses.size());
    if (static_cast<int>(assignment.size()) != a)
        throw InputError("sat_gadget_set: assignment has the wrong length");
    SatGadgetLayout at(a, b);
    VertexSet m(at.order());
    for (int j = 1; j <= b; ++j)
        m.insert(at.c_prime(j));
    for (int i = 1; i <= a; ++i) {
        m.insert(at.r(i));
        m.insert(at.s(i));
        m.insert(assignment[static_cast<std::size_t>(i - 1)] ? at.p_prime(i) : at.p(i));
    }
    m.insert(at.z());
    return m;
}

SatReductionReport verify_sat_reduction(const Cnf3 & f, const SearchOptions & opt)
{
    if (f.num_vars > 3 || f.clauses.size() > 4)
        throw PreconditionError("verify_sat_reduction: limited to at most 3 variables and 4 clauses");
    SatReductionReport r;
    Graph g = build_sat_gadget(f);
    auto sat = satisfying_assignment(f);
    r.satisfiable = sat.has_value();
    r.uses_short_clauses = f.has_short_clause();
    r.alpha_formula = 3L * f.num_vars + static_cast<long>(f.clauses.size()) + 1;
    auto al = alpha(g, opt);
    auto mi = mu_i(g, opt);
    r.alpha = al.value;
    r.alpha_witness = al.witness;
    r.mu_i = mi.value;
    r.mu_i_witness = mi.witness;
    if (sat) {
        r.assignment = *sat;
        r.assignment_set = sat_gadget_set(f, *sat);
        r.assignment_set_imv = is_imv_set(g, *r.assignment_set);
    }
    r.agrees = r.satisfiable == (r.mu_i == r.alpha);
    return r;
}

Graph build_corona_reduction(const Graph & h) { return corona(complete_graph(1), h); }

CoronaReport verify_corona_reduction(const Graph & h, const SearchOptions & opt)
{
    CoronaReport r;
    r.graph = build_corona_reduction(h);
    r.mu_i = mu_i(r.graph, opt).value;
    r.alpha_h = alpha(h, opt).value;
    r.chi_mu_i = chi_mu_i(r.graph, opt).k;
    r.chi_h = chi(h, opt).k;
    r.mu_i_matches = r.mu_i == r.alpha_h;
    r.chi_mu_i_matches = r.chi_mu_i == r.chi_h + 1;
    return r;
}

}

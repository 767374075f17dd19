#include "mvis/acceptance.hpp"
#include "mvis/builders.hpp"
#include "mvis/chromatic.hpp"
#include "mvis/constructive.hpp"
#include "mvis/geodesic.hpp"
#include "mvis/hardness.hpp"
#include "mvis/io.hpp"
#include "mvis/ramsey.hpp"
#include "mvis/visibility.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

using namespace mvis;
using io::Json;

namespace
{

enum Exit
{
    ok = 0,
    validation_failure = 2,
    budget_exhausted = 3,
    input_error = 4,
};

/// Validation failures detected after a computation, reported with exit code 2.
struct ValidationFailure : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Loaded
{
    Graph graph;
    std::optional<FamilySpec> spec;
    std::string source;
};

Loaded load_graph(const std::string & arg)
{
    if (std::filesystem::is_regular_file(arg))
        return {read_edge_list_file(arg), std::nullopt, arg};
    auto spec = parse_family(arg);
    return {build(spec), spec, spec.to_string()};
}

struct Options
{
    std::uint64_t budget = 0;
    std::string output;
};

SearchOptions search(const Options & o)
{
    SearchOptions s;
    if (o.budget)
        s.node_budget = o.budget;
    return s;
}

class Record
{
public:
    Record(std::string command, Json request) : start_(std::chrono::steady_clock::now())
    {
        j_["schema"] = "mvis.result/1";
        j_["command"] = std::move(command);
        j_["request"] = std::move(request);
        j_["values"] = Json::array();
    }

    void graph(const Graph & g) { j_["graph"] = Json{{"n", g.order()}, {"m", g.size()}}; }
    void value(const std::string & name, const Json & v, const std::string & source)
    {
        j_["values"].push_back(Json{{"name", name}, {"value", v}, {"source", source}});
    }
    Json & operator[](const std::string & key) { return j_[key]; }

    std::string finish(std::uint64_t node_budget, const std::string & status = "ok")
    {
        j_["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        if (!j_.contains("budget"))
            j_["budget"] = Json{{"node_budget", node_budget}, {"status", status}};
        return j_.dump(2) + "\n";
    }

private:
    Json j_;
    std::chrono::steady_clock::time_point start_;
};

void emit(const std::string & text, const std::string & path)
{
    if (path.empty() || path == "-")
        std::cout << text;
    else
        io::write_file_atomic(path, text);
}

Json bounds_json(const BudgetExhausted & e, std::uint64_t budget)
{
    return Json{{"node_budget", budget}, {"status", "exhausted"}, {"lower", e.lower()}, {"upper", e.upper()}, {"nodes", e.nodes()}};
}

// ------------------------------------------------------------------ solve

struct Solved
{
    std::string name;
    long value;
    Json witness;
};

Solved solve_param(const Graph & g, const std::string & param, const SearchOptions & opt)
{
    auto set_result = [&](const char * name, InvariantResult r, auto && valid) {
        if (static_cast<long>(r.witness.size()) != r.value || !valid(r.witness))
            throw ValidationFailure(std::string(name) + ": witness failed re-validation");
        return Solved{name, r.value, io::to_json(r.witness)};
    };
    auto colour_result = [&](const char * name, ColoringResult r, ColoringMode mode) {
        auto report = validate_coloring(g, r.coloring, mode);
        if (!report.valid || r.coloring.k() != r.k)
            throw ValidationFailure(std::string(name) + ": witness failed re-validation (" + report.violation + ")");
        return Solved{name, r.k, io::to_json(r.coloring)};
    };
    if (param == "mu")
        return set_result("mu", mu(g, opt), [&](const VertexSet & s) { return is_mv_set(g, s); });
    if (param == "mui")
        return set_result("mu_i", mu_i(g, opt), [&](const VertexSet & s) { return is_imv_set(g, s); });
    if (param == "alpha")
        return set_result("alpha", alpha(g, opt), [&](const VertexSet & s) { return g.is_independent(s); });
    if (param == "omega")
        return set_result("omega", omega(g, opt), [&](const VertexSet & s) { return g.complement().is_independent(s); });
    if (param == "chi")
        return colour_result("chi", chi(g, opt), ColoringMode::proper);
    if (param == "chi1")
        return colour_result("chi_1", chi_defective1(g, opt), ColoringMode::defective1);
    if (param == "chimu")
        return colour_result("chi_mu", chi_mu(g, opt), ColoringMode::mv);
    if (param == "chimui")
        return colour_result("chi_mu_i", chi_mu_i(g, opt), ColoringMode::imv);
    throw InputError("unknown parameter '" + param + "'");
}

// ------------------------------------------------------------------ color

struct ColorRequest
{
    std::string theorem;
    std::string coloring_file;
    std::size_t prism_n = 2;
    bool grid = false;
};

std::pair<std::size_t, std::size_t> strong_path_orders(const Graph & g)
{
    const auto & info = g.product();
    if (!info || info->kind != ProductKind::strong || info->left->edges() != path_graph(info->left->order()).edges()
        || info->right->edges() != path_graph(info->right->order()).edges())
        throw PreconditionError("expected strong(path:t,path:r)");
    return {info->left->order(), info->right->order()};
}

ConstructedColoring run_theorem(const Loaded & in, const ColorRequest & req, const SearchOptions & opt)
{
    const Graph & g = in.graph;
    auto given = [&](ColoringMode mode, auto && fallback) {
        if (req.coloring_file.empty())
            return fallback();
        auto c = io::read_coloring_file(req.coloring_file, g.order());
        auto report = validate_coloring(g, c, mode);
        if (!report.valid)
            throw ValidationFailure("supplied coloring is not " + std::string(to_string(mode)) + ": " + report.violation);
        return c;
    };
    const auto & t = req.theorem;
    if (t == "cycle-imv") {
        if (g.order() < 3 || g.edges() != cycle_graph(g.order()).edges())
            throw PreconditionError("cycle-imv expects cycle:n");
        return cycle_imv(g.order());
    }
    if (t == "tree-exchange")
        return tree_exchange(g, given(ColoringMode::mv, [&] { return chi_mu(g, opt).coloring; }));
    if (t == "tfree-imv")
        return trianglefree_imv(g, opt);
    if (t == "lex-mv2")
        return lex_mv_2coloring(g);
    if (t == "lex-imv")
        return lex_imv(g, opt);
    if (t == "prism-mv")
        return cartesian_prism_mv(g, req.prism_n, given(ColoringMode::imv, [&] { return chi_mu_i(g, opt).coloring; }));
    if (t == "strongpaths-imv" || t == "strongpaths-mv") {
        auto [rows, cols] = strong_path_orders(g);
        return t == "strongpaths-imv" ? strong_paths_imv(rows, cols) : strong_paths_mv(rows, cols);
    }
    if (t == "subdiv-imv") {
        if (!in.spec || in.spec->name != "subdivision" || in.spec->args.size() != 1 || in.spec->args[0].name != "complete")
            throw PreconditionError("subdiv-imv expects subdivision(complete:n)");
        RamseyOptions ro;
        ro.node_budget = opt.node_budget;
        const auto n = static_cast<std::size_t>(in.spec->args[0].params.at(0));
        auto p = find_k4free_partition(n, rho(n, ro), ro);
        if (!p)
            throw ValidationFailure("subdiv-imv: no K_4-free partition with rho(n) classes");
        return subdiv_imv_from_partition(*p);
    }
    if (t == "defective-mv")
        return defective_to_mv(g, given(ColoringMode::defective1, [&] { return chi_defective1(g, opt).coloring; }));
    throw InputError("unknown theorem tag '" + t + "'");
}

// ------------------------------------------------------------------ main

int run(int argc, char ** argv)
{
    CLI::App app{"Mutual-visibility colouring toolkit"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--budget", o.budget, "Search node budget (default: MV_NODE_BUDGET or 10^8)");

    std::string graph_arg, spec_arg, param, mode, file, suite = "all";
    std::vector<std::string> rho_args;
    ColorRequest creq;
    bool allow_large = false, verify = false, dot = false;

    auto * c_build = app.add_subcommand("build", "Emit the edge list of a family spec");
    c_build->add_option("spec", spec_arg)->required();
    c_build->add_option("-o,--output", o.output);

    auto * c_stats = app.add_subcommand("stats", "n, m, diameter, alpha, omega, max degree");
    c_stats->add_option("graph", graph_arg)->required();

    auto * c_solve = app.add_subcommand("solve", "Exact invariant with a re-validated witness");
    c_solve->add_option("graph", graph_arg)->required();
    c_solve->add_option("--param", param)->required()->check(CLI::IsMember({"mu", "mui", "alpha", "omega", "chi", "chi1", "chimu", "chimui"}));

    auto * c_color = app.add_subcommand("color", "Run a constructive colouring");
    c_color->add_option("graph", graph_arg)->required();
    c_color->add_option("--theorem", creq.theorem)
        ->required()
        ->check(CLI::IsMember({"cycle-imv", "tree-exchange", "tfree-imv", "lex-mv2", "lex-imv", "prism-mv", "strongpaths-imv", "strongpaths-mv",
                               "subdiv-imv", "defective-mv"}));
    c_color->add_option("--coloring", creq.coloring_file, "Starting colouring (tree-exchange, prism-mv, defective-mv)");
    c_color->add_option("--n", creq.prism_n, "Order of the complete factor for prism-mv");
    c_color->add_flag("--grid", creq.grid, "Print the colour grid of a path product instead of JSON");
    c_color->add_option("-o,--output", o.output);

    auto * c_check = app.add_subcommand("check", "Validate a colouring");
    c_check->add_option("graph", graph_arg)->required();
    c_check->add_option("--coloring", file)->required();
    c_check->add_option("--mode", mode)->required()->check(CLI::IsMember({"proper", "defective1", "mv", "imv"}));

    auto * c_check_set = app.add_subcommand("check-set", "Validate an MV or IMV set");
    c_check_set->add_option("graph", graph_arg)->required();
    c_check_set->add_option("--set", file)->required();
    c_check_set->add_option("--mode", mode)->required()->check(CLI::IsMember({"mv", "imv"}));

    auto * c_rho = app.add_subcommand("rho", "rho(n) or rho(r,s) with a partition");
    c_rho->add_option("size", rho_args, "n, or r,s")->required()->delimiter(',');
    c_rho->add_flag("--allow-large", allow_large);

    auto * c_gadget = app.add_subcommand("gadget", "Reduction gadgets");
    c_gadget->require_subcommand(1);
    auto * c_sat = c_gadget->add_subcommand("sat", "SAT gadget of a CNF file");
    c_sat->add_option("cnf", file)->required();
    c_sat->add_flag("--verify", verify);
    c_sat->add_option("-o,--output", o.output, "Write the gadget edge list here");
    auto * c_corona = c_gadget->add_subcommand("corona", "K_1 corona of a graph");
    c_corona->add_option("graph", graph_arg)->required();
    c_corona->add_flag("--verify", verify);
    c_corona->add_option("-o,--output", o.output, "Write the gadget edge list here");

    auto * c_verify = app.add_subcommand("verify", "Run acceptance suites");
    c_verify->add_option("--suite", suite, "ac1..ac15 or all");

    auto * c_export = app.add_subcommand("export", "Edge list or DOT");
    c_export->add_option("graph", graph_arg)->required();
    c_export->add_flag("--dot", dot);
    c_export->add_option("--coloring", file, "Colour the DOT nodes");
    c_export->add_option("-o,--output", o.output);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }

    const SearchOptions opt = search(o);
    const std::uint64_t budget = opt.node_budget;
    try {
        if (*c_build) {
            auto g = build(spec_arg);
            std::ostringstream out;
            write_edge_list(out, g);
            emit(out.str(), o.output);
            return ok;
        }
        if (*c_stats) {
            auto in = load_graph(graph_arg);
            Record rec("stats", Json{{"graph", in.source}});
            rec.graph(in.graph);
            GeodesicIndex gi(in.graph);
            rec.value("n", in.graph.order(), "exact");
            rec.value("m", in.graph.size(), "exact");
            rec.value("diameter", gi.connected() ? Json(gi.max_distance()) : Json(nullptr), "exact");
            rec.value("alpha", alpha(in.graph, opt).value, "exact");
            rec.value("omega", omega(in.graph, opt).value, "exact");
            rec.value("max_degree", in.graph.max_degree(), "exact");
            emit(rec.finish(budget), "");
            return ok;
        }
        if (*c_solve) {
            auto in = load_graph(graph_arg);
            Record rec("solve", Json{{"graph", in.source}, {"param", param}});
            rec.graph(in.graph);
            try {
                auto s = solve_param(in.graph, param, opt);
                rec.value(s.name, s.value, "exact");
                rec["witness"] = s.witness;
                emit(rec.finish(budget), "");
                return ok;
            }
            catch (const BudgetExhausted & e) {
                rec["budget"] = bounds_json(e, budget);
                rec.value(param, Json{{"lower", e.lower()}, {"upper", e.upper()}}, "bound");
                emit(rec.finish(budget), "");
                return budget_exhausted;
            }
        }
        if (*c_color) {
            auto in = load_graph(graph_arg);
            auto built = run_theorem(in, creq, opt);
            if (creq.grid) {
                auto [rows, cols] = strong_path_orders(built.graph);
                emit(render_grid(built.coloring, rows, cols), o.output);
                return ok;
            }
            Record rec("color", Json{{"graph", in.source}, {"theorem", creq.theorem}});
            rec.graph(built.graph);
            rec.value("classes", built.coloring.k(), "constructed");
            rec.value("claimed_k", built.claimed_k, "bound");
            rec["witness"] = io::to_json(built);
            emit(rec.finish(budget), o.output);
            return ok;
        }
        if (*c_check) {
            auto in = load_graph(graph_arg);
            auto c = io::read_coloring_file(file, in.graph.order());
            auto report = validate_coloring(in.graph, c, parse_coloring_mode(mode));
            Record rec("check", Json{{"graph", in.source}, {"coloring", file}, {"mode", mode}});
            rec.graph(in.graph);
            rec.value("valid", report.valid, "exact");
            rec.value("classes", c.k(), "exact");
            if (!report.valid)
                rec["violation"] = Json{{"message", report.violation}, {"class", report.bad_class}, {"vertices", report.culprits}};
            emit(rec.finish(budget), "");
            return report.valid ? ok : validation_failure;
        }
        if (*c_check_set) {
            auto in = load_graph(graph_arg);
            auto s = io::read_set_file(file, in.graph.order());
            GeodesicIndex gi(in.graph);
            const bool independent = mode == "imv";
            std::optional<std::pair<Vertex, Vertex>> bad;
            if (independent && !in.graph.is_independent(s)) {
                for (auto [u, v] : in.graph.edges())
                    if (s.contains(u) && s.contains(v) && !bad)
                        bad = {u, v};
            }
            if (!bad)
                bad = find_invisible_pair(gi, s);
            Record rec("check-set", Json{{"graph", in.source}, {"set", file}, {"mode", mode}});
            rec.graph(in.graph);
            rec.value("valid", !bad.has_value(), "exact");
            rec.value("size", s.size(), "exact");
            if (bad)
                rec["violation"] = Json{{"vertices", {bad->first, bad->second}}};
            emit(rec.finish(budget), "");
            return bad ? validation_failure : ok;
        }
        if (*c_rho) {
            RamseyOptions ro;
            ro.node_budget = budget;
            ro.allow_large = allow_large;
            std::vector<std::size_t> sizes;
            for (auto & a : rho_args) {
                std::size_t used = 0;
                long long v = 0;
                try {
                    v = std::stoll(a, &used);
                }
                catch (const std::exception &) {
                    used = 0;
                }
                if (used != a.size() || v < 1)
                    throw InputError("rho: bad size '" + a + "'");
                sizes.push_back(static_cast<std::size_t>(v));
            }
            if (sizes.size() > 2)
                throw InputError("rho: expected n or r,s");
            Record rec("rho", Json{{"size", sizes}});
            try {
                std::optional<EdgePartition> p;
                int value = 0;
                if (sizes.size() == 1) {
                    value = rho(sizes[0], ro);
                    p = find_k4free_partition(sizes[0], value, ro);
                }
                else {
                    value = rho_rs(sizes[0], sizes[1], ro);
                    p = find_c4free_partition(sizes[0], sizes[1], value, ro);
                }
                if (!p || (p->host == HostKind::complete ? find_monochromatic_k4(*p).has_value() : find_monochromatic_c4(*p).has_value()))
                    throw ValidationFailure("rho: partition failed re-validation");
                rec.value("rho", value, "exact");
                rec["witness"] = io::to_json(*p);
                emit(rec.finish(budget), "");
                return ok;
            }
            catch (const BudgetExhausted & e) {
                rec["budget"] = bounds_json(e, budget);
                rec.value("rho", Json{{"lower", e.lower()}, {"upper", e.upper()}}, "bound");
                emit(rec.finish(budget), "");
                return budget_exhausted;
            }
        }
        if (*c_gadget) {
            Graph g;
            Record rec(*c_sat ? "gadget sat" : "gadget corona", Json{{"input", *c_sat ? file : graph_arg}, {"verify", verify}});
            bool agrees = true;
            if (*c_sat) {
                auto f = parse_dimacs_file(file);
                g = build_sat_gadget(f);
                if (verify) {
                    auto r = verify_sat_reduction(f, opt);
                    rec.value("satisfiable", r.satisfiable, "exact");
                    rec.value("mu_i", r.mu_i, "exact");
                    rec.value("alpha", r.alpha, "exact");
                    rec.value("alpha_formula", r.alpha_formula, "bound");
                    Json w{{"mu_i_set", io::to_json(r.mu_i_witness)}, {"alpha_set", io::to_json(r.alpha_witness)}};
                    if (r.satisfiable) {
                        w["assignment"] = r.assignment;
                        w["assignment_set"] = io::to_json(*r.assignment_set);
                        w["assignment_set_imv"] = r.assignment_set_imv;
                    }
                    rec["witness"] = w;
                    rec["extension"] = r.uses_short_clauses ? Json("clauses shorter than three literals") : Json(nullptr);
                    agrees = r.agrees;
                }
            }
            else {
                auto in = load_graph(graph_arg);
                g = build_corona_reduction(in.graph);
                if (verify) {
                    auto r = verify_corona_reduction(in.graph, opt);
                    rec.value("mu_i", r.mu_i, "exact");
                    rec.value("alpha_h", r.alpha_h, "exact");
                    rec.value("chi_mu_i", r.chi_mu_i, "exact");
                    rec.value("chi_h", r.chi_h, "exact");
                    agrees = r.mu_i_matches && r.chi_mu_i_matches;
                }
            }
            rec.graph(g);
            rec["labels"] = g.labels();
            if (verify)
                rec.value("agrees", agrees, "exact");
            if (!o.output.empty()) {
                std::ostringstream out;
                write_edge_list(out, g);
                io::write_file_atomic(o.output, out.str());
            }
            emit(rec.finish(budget), "");
            return agrees ? ok : validation_failure;
        }
        if (*c_verify) {
            acceptance::SuiteContext ctx;
            ctx.opt = opt;
            ctx.golden_dir = acceptance::default_golden_dir();
            std::vector<std::string> ids = suite == "all" ? acceptance::suite_ids() : std::vector<std::string>{suite};
            bool all = true;
            for (auto & id : ids) {
                auto r = acceptance::run_suite(id, ctx);
                std::cout << acceptance::summary_line(r) << std::endl;
                all = all && r.passed;
            }
            return all ? ok : validation_failure;
        }
        if (*c_export) {
            auto in = load_graph(graph_arg);
            std::string text;
            if (dot) {
                std::optional<Coloring> c;
                if (!file.empty())
                    c = io::read_coloring_file(file, in.graph.order());
                text = io::to_dot(in.graph, c ? &*c : nullptr);
            }
            else {
                std::ostringstream out;
                write_edge_list(out, in.graph);
                text = out.str();
            }
            emit(text, o.output);
            return ok;
        }
    }
    catch (const ValidationFailure & e) {
        std::cerr << "validation failure: " << e.what() << '\n';
        return validation_failure;
    }
    catch (const ConstructionError & e) {
        std::cerr << "validation failure: " << e.what() << '\n';
        return validation_failure;
    }
    catch (const BudgetExhausted & e) {
        std::cerr << "budget exhausted: " << e.what() << " (bounds " << e.lower() << ".." << e.upper() << ")\n";
        return budget_exhausted;
    }
    catch (const InputError & e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    }
    catch (const PreconditionError & e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    }
    catch (const std::out_of_range & e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    }
    return ok;
}

}

int main(int argc, char ** argv) { return run(argc, argv); }

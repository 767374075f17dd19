"""End-to-end checks of the mvis command line."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

MVIS = sys.argv.pop(1)
ROOT = sys.argv.pop(1)
DATA = os.path.join(ROOT, "tests", "data")

with open(os.path.join(ROOT, "docs", "result_record.schema.json")) as fh:
    SCHEMA = json.load(fh)


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    return subprocess.run([MVIS, *args], capture_output=True, text=True, env=full_env)


def record(*args, code=0):
    proc = run(*args)
    if proc.returncode != code:
        raise AssertionError(f"{args}: exit {proc.returncode}, expected {code}\n{proc.stderr}")
    rec = json.loads(proc.stdout)
    jsonschema.validate(rec, SCHEMA)
    return rec


def value(rec, name):
    return next(v["value"] for v in rec["values"] if v["name"] == name)


class Solve(unittest.TestCase):
    def test_cycle9(self):
        rec = record("solve", "cycle:9", "--param", "chimui")
        self.assertEqual(value(rec, "chi_mu_i"), 3)
        self.assertEqual(rec["witness"]["k"], 3)

    def test_every_param(self):
        expected = {"mu": 6, "mui": 4, "alpha": 4, "omega": 2, "chi": 3, "chi1": 2, "chimu": 2, "chimui": 3}
        for param, v in expected.items():
            rec = record("solve", "petersen", "--param", param)
            self.assertEqual(rec["values"][0]["value"], v, param)
            self.assertEqual(rec["values"][0]["source"], "exact")

    def test_budget_exhaustion(self):
        rec = record("--budget", "2", "solve", "petersen", "--param", "chimui", code=3)
        self.assertEqual(rec["budget"]["status"], "exhausted")
        self.assertLessEqual(rec["budget"]["lower"], 3)
        self.assertGreaterEqual(rec["budget"]["upper"], 3)

    def test_budget_from_environment(self):
        proc = run("solve", "petersen", "--param", "chimui", env={"MV_NODE_BUDGET": "2"})
        self.assertEqual(proc.returncode, 3)

    def test_disconnected_input(self):
        self.assertEqual(run("solve", "empty:3", "--param", "mu").returncode, 4)

    def test_stats(self):
        rec = record("stats", "petersen")
        self.assertEqual([value(rec, k) for k in ("n", "m", "diameter", "alpha", "omega", "max_degree")], [10, 15, 2, 4, 2, 3])


class Color(unittest.TestCase):
    def test_strong_grid_matches_golden(self):
        proc = run("color", "strong(path:12,path:12)", "--theorem", "strongpaths-imv", "--grid")
        self.assertEqual(proc.returncode, 0, proc.stderr)
        with open(os.path.join(ROOT, "tests", "golden", "strong_p12.txt")) as fh:
            self.assertEqual(proc.stdout, fh.read())

    def test_strong_json(self):
        rec = record("color", "strong(path:12,path:12)", "--theorem", "strongpaths-imv")
        self.assertEqual(value(rec, "classes"), 6)

    def test_every_theorem(self):
        cases = [
            ("cycle:8", "cycle-imv", [], 3),
            ("path:5", "tree-exchange", [], 3),
            ("cycle:6", "tfree-imv", [], 3),
            ("lex(cycle:5,path:2)", "lex-mv2", [], 2),
            ("lex(path:3,path:2)", "lex-imv", [], 4),
            ("path:4", "prism-mv", ["--n", "3"], 2),
            ("strong(path:8,path:8)", "strongpaths-imv", [], 4),
            ("strong(path:7,path:6)", "strongpaths-mv", [], 3),
            ("subdivision(complete:6)", "subdiv-imv", [], 3),
            ("petersen", "defective-mv", [], 2),
        ]
        for graph, theorem, extra, k in cases:
            rec = record("color", graph, "--theorem", theorem, *extra)
            self.assertEqual(value(rec, "classes"), k, theorem)
            self.assertEqual(rec["values"][0]["source"], "constructed")

    def test_precondition_failure(self):
        self.assertEqual(run("color", "cycle:5", "--theorem", "tree-exchange").returncode, 4)
        self.assertEqual(run("color", "complete:3", "--theorem", "tfree-imv").returncode, 4)
        self.assertEqual(run("color", "subdivision(biclique:2,3)", "--theorem", "subdiv-imv").returncode, 4)

    def test_supplied_start_must_be_valid(self):
        proc = run("color", "path:5", "--theorem", "tree-exchange", "--coloring", os.path.join(DATA, "p5_bad.json"))
        self.assertEqual(proc.returncode, 2)


class Check(unittest.TestCase):
    def test_subdivided_k4_colouring(self):
        rec = record("check", "subdivision(complete:4)", "--coloring", os.path.join(DATA, "sk4_imv.json"), "--mode", "imv")
        self.assertTrue(value(rec, "valid"))

    def test_invalid_colouring(self):
        rec = record("check", "path:5", "--coloring", os.path.join(DATA, "p5_bad.json"), "--mode", "mv", code=2)
        self.assertFalse(value(rec, "valid"))
        self.assertIn("violation", rec)

    def test_sets(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
            fh.write("[0, 2, 4]")
        try:
            record("check-set", "path:5", "--set", fh.name, "--mode", "mv", code=2)
            record("check-set", "cycle:6", "--set", fh.name, "--mode", "imv")
        finally:
            os.unlink(fh.name)

    def test_bad_mode(self):
        self.assertEqual(run("check", "path:3", "--coloring", os.path.join(DATA, "p5_bad.json"), "--mode", "weird").returncode, 4)


class Rho(unittest.TestCase):
    def test_values(self):
        self.assertEqual(value(record("rho", "3"), "rho"), 1)
        self.assertEqual(value(record("rho", "6"), "rho"), 2)
        rec = record("rho", "2,3")
        self.assertEqual(value(rec, "rho"), 2)
        self.assertEqual(rec["witness"]["host"], "biclique:2,3")

    def test_large_needs_opt_in(self):
        self.assertEqual(run("rho", "18").returncode, 4)
        self.assertEqual(run("rho", "abc").returncode, 4)


class Gadget(unittest.TestCase):
    def test_sat(self):
        rec = record("gadget", "sat", os.path.join(DATA, "sat3.cnf"), "--verify")
        self.assertTrue(value(rec, "satisfiable"))
        self.assertEqual(value(rec, "alpha"), 13)
        self.assertEqual(value(rec, "mu_i"), 13)
        self.assertTrue(value(rec, "agrees"))
        self.assertIsNone(rec["extension"])

    def test_four_clause_gadget(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = os.path.join(tmp, "gadget.txt")
            rec = record("gadget", "sat", os.path.join(DATA, "four_clauses.cnf"), "-o", out)
            self.assertEqual(rec["graph"]["n"], 32)
            self.assertEqual(value(record("solve", out, "--param", "alpha"), "alpha"), 17)
            self.assertEqual(value(record("stats", out), "diameter"), 4)
        self.assertEqual(run("gadget", "sat", os.path.join(DATA, "four_clauses.cnf"), "--verify").returncode, 4)

    def test_unsat_short_clauses(self):
        rec = record("gadget", "sat", os.path.join(DATA, "unsat_short.cnf"), "--verify")
        self.assertFalse(value(rec, "satisfiable"))
        self.assertLess(value(rec, "mu_i"), value(rec, "alpha"))
        self.assertIsNotNone(rec["extension"])

    def test_bad_cnf(self):
        self.assertEqual(run("gadget", "sat", os.path.join(DATA, "bad_clause.cnf")).returncode, 4)

    def test_corona(self):
        rec = record("gadget", "corona", "cycle:5", "--verify")
        self.assertEqual(value(rec, "mu_i"), 2)
        self.assertEqual(value(rec, "chi_mu_i"), 4)


class Export(unittest.TestCase):
    def test_round_trip(self):
        with tempfile.TemporaryDirectory() as tmp:
            built = os.path.join(tmp, "g.txt")
            exported = os.path.join(tmp, "e.txt")
            self.assertEqual(run("build", "corona(cycle:4,path:2)", "-o", built).returncode, 0)
            self.assertEqual(run("export", built, "-o", exported).returncode, 0)
            with open(built) as a, open(exported) as b:
                self.assertEqual(a.read(), b.read())
            self.assertEqual(value(record("stats", exported), "n"), 12)

    def test_dot(self):
        proc = run("export", "subdivision(complete:4)", "--dot", "--coloring", os.path.join(DATA, "sk4_imv.json"))
        self.assertEqual(proc.returncode, 0)
        self.assertIn('label="e_{0,1}"', proc.stdout)
        self.assertIn("color=", proc.stdout)

    def test_networkx_reads_edge_list(self):
        import networkx as nx

        proc = run("build", "petersen")
        lines = proc.stdout.strip().splitlines()
        g = nx.parse_edgelist(lines[1:], nodetype=int)
        self.assertEqual(g.number_of_edges(), 15)
        self.assertTrue(nx.is_isomorphic(g, nx.petersen_graph()))

    def test_bad_spec(self):
        self.assertEqual(run("build", "path:0").returncode, 4)
        self.assertEqual(run("stats", "no-such-family:3").returncode, 4)


class Verify(unittest.TestCase):
    def test_single_suite(self):
        proc = run("verify", "--suite", "ac1")
        self.assertEqual(proc.returncode, 0)
        self.assertTrue(proc.stdout.startswith("PASS ac1"))

    def test_unknown_suite(self):
        self.assertEqual(run("verify", "--suite", "ac99").returncode, 4)


if __name__ == "__main__":
    unittest.main()

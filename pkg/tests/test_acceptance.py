"""Acceptance criteria, each timed and reported in the terminal summary."""

import json

from ringforge import (
    SkewRing,
    check_condition_C,
    check_element_property,
    check_mccoy,
    construct_endomorphism,
    construct_ring,
    refute_pointwise,
    right_scalar_mul,
    skew_mul,
)
from ringforge.cli import run
from ringforge.suites import SUITES, THM21_ROSTER, run_implication_suite
from ringforge.witness import theorem21_random_suite

from roster import INCLUSION_ROSTER, inclusion_violations


def test_pair_swap_products(criterion):
    with criterion(1, "pair-swap skew products", 1):
        R = construct_ring("product(zmod(2),zmod(2))")
        S = SkewRing(R, construct_endomorphism(R, "swap"))
        p, q = S.parse("(1,0) + (1,0)*x"), S.parse("(0,1) + (1,0)*x")
        assert skew_mul(p, q).is_zero()
        nonzero = R.elements()[1:]
        assert len(nonzero) == 3
        assert all(not right_scalar_mul(p, c).is_zero() for c in nonzero)
        e = R.parse("(1,0)")
        assert skew_mul(right_scalar_mul(p, e), q) == S.parse("(1,0)*x")


def test_matrix_negate_offdiagonal(criterion):
    with criterion(2, "Mat2(Z3) negate-offdiagonal skew products", 5):
        R = construct_ring("matrix(2,zmod(3))")
        S = SkewRing(R, construct_endomorphism(R, "negate-offdiagonal"))
        p = S.parse("[[1,0],[0,0]] + [[1,1],[0,0]]*x")
        q = S.parse("[[0,0],[0,-1]] + [[0,1],[0,1]]*x")
        assert skew_mul(p, q).is_zero()
        nonzero = R.elements()[1:]
        assert len(nonzero) == 80
        assert not [c for c in nonzero if right_scalar_mul(p, c).is_zero()]
        h = S.parse("[[1,1],[0,0]]")
        assert not skew_mul(skew_mul(p, h), q).is_zero()


def test_nagata_pair_swap_condition_c1(criterion):
    with criterion(3, "Nagata pair-swap products and C1 witness", 1):
        base = construct_ring("product(zmod(2),zmod(2))")
        N = construct_ring("nagata(product(zmod(2),zmod(2)),self,swap)")
        A, B, C = (N.parse(t) for t in ("((0,1) | (0,1))", "((1,0) | (0,1))", "((1,0) | (1,0))"))
        assert N.is_zero(N.mul(A, B))
        assert N.serialize(N.mul(N.mul(A, C), B)) == "((0,0) | (1,0))"
        v = check_condition_C(base, construct_endomorphism(base, "swap"), "C1")
        assert v.holds == "false"
        assert v.witness == {"m": "(1,0)", "a": "(0,1)"}


def test_nagata_eval_reversibility_witness(criterion):
    # the canonical-least pair at this bound is ((x | 0), (0 | 1)); the
    # criterion asks for ((x | 1), (0 | 1)) and is checked as stated
    with criterion(4, "Nagata poly eval-at-zero reversibility witness", 5):
        N = construct_ring("nagata(poly(zmod(2)),self,eval-at-zero)")
        a, b = N.parse("(x | 1)"), N.parse("(0 | 1)")
        assert N.serialize(N.mul(a, b)) == "(0 | 0)"
        assert N.serialize(N.mul(b, a)) == "(0 | x)"
        v = check_element_property(N, "reversible", bound=2)
        assert v.holds == "false"
        assert v.witness == {"a": "(x | 1)", "b": "(0 | 1)"}


def test_congruence_pairs_pointwise(criterion):
    with criterion(5, "congruence pairs sigma-semicommutative refutation", 1):
        R = construct_ring("congruence-pairs(2)")
        s = construct_endomorphism(R, "swap")
        a, b = R.parse("(2,0)"), R.parse("(0,2)")
        assert R.serialize(R.mul(a, b)) == "(0,0)"
        assert R.serialize(R.mul(a, s(b))) == "(4,0)"
        v = refute_pointwise(R, "sigma-semicommutative", ["(2,0)", "(0,2)", "(1,1)"], s)
        assert v.holds == "false"
        assert v.witness == {"a": "(2,0)", "b": "(0,2)", "r": "(1,1)"}


def test_poly_eval_condition_c1(criterion):
    with criterion(6, "poly(Z2) eval-at-zero C1 up to degree 3", 10):
        R = construct_ring("poly(zmod(2))")
        assert len(R.elements(bound=3)) == 16
        v = check_condition_C(R, construct_endomorphism(R, "eval-at-zero"), "C1", bound=3)
        assert v.holds == "true-up-to-bound"


def test_descent_random_suite(criterion):
    with criterion(7, "descent random suite, 4 rings x 100 trials", 60):
        report = theorem21_random_suite(THM21_ROSTER, trials=100, seed=0, degree=2)
        assert len(report["rows"]) == 400
        assert report["summary"]["FAIL"] == 0
        assert report["summary"]["PASS"] > 0


def test_implication_suites(criterion):
    with criterion(8, "implication suites", 120):
        for suite_id, (_, roster) in SUITES.items():
            assert len(roster) >= 6
            report = run_implication_suite(suite_id)
            assert report["summary"]["VIOLATION"] == 0, suite_id
            paths = [r.get("path", "") for r in report["rows"]]
            assert any(p.startswith("hypothesis refuted") for p in paths), suite_id


def test_classical_inclusions(criterion):
    with criterion(9, "classical inclusions on the ring roster", 120):
        assert len(INCLUSION_ROSTER) >= 10
        orders = {construct_ring(s).order for s in INCLUSION_ROSTER}
        assert min(orders) == 2 and max(orders) == 81
        assert inclusion_violations(INCLUSION_ROSTER) == []


DETERMINISM_JOBS = [
    ["check", "--property", "sigma-skew-mccoy", "--ring", "product(zmod(2),zmod(2))", "--endo", "swap",
     "--degree", "1"],
    ["check", "--property", "skew-semicommutative", "--ring", "matrix(2,zmod(3))",
     "--endo", "negate-offdiagonal", "--degree", "1"],
    ["check", "--property", "reversible", "--ring", "nagata(poly(zmod(2)),self,eval-at-zero)", "--bound", "2"],
    ["check", "--property", "armendariz-ring", "--ring", "matrix(2,zmod(2))", "--degree", "1"],
    ["check", "--property", "mccoy-right", "--ring", "triangular(2,zmod(3))", "--degree", "1"],
    ["check", "--property", "semicommutative", "--ring", "nagata(product(zmod(2),zmod(2)),self,swap)"],
    ["check", "--property", "quasi-baer", "--ring", "zmod(4)"],
    ["witness", "--ring", "nagata(zmod(4),self,identity)", "--ideal", "(0 | 1) + (2 | 0)*x",
     "--g", "(0 | 1) + (2 | 0)*x", "--mode", "compatible"],
    ["witness", "--ring", "triangular(2,zmod(2))", "--ideal", "[[0,0],[0,1]] + [[0,1],[0,0]]*x",
     "--g", "[[1,1],[0,0]] + [[1,1],[0,0]]*x", "--mode", "stable"],
]


def _results(tmp_path, argv, threads):
    out = tmp_path / f"out{threads}.json"
    assert run(argv + ["--threads", str(threads), "--output", str(out)]) == 0
    results = json.loads(out.read_text())["results"]
    for r in results:
        r.pop("elapsed_ms", None)
    return json.dumps(results, sort_keys=True)


def test_thread_determinism(criterion, tmp_path):
    with criterion(10, "byte-identical verdicts and traces at 1 and 8 threads", None):
        for argv in DETERMINISM_JOBS:
            assert _results(tmp_path, argv, 1) == _results(tmp_path, argv, 8), argv

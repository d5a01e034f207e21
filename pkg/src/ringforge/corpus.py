"""Built-in worked examples with pinned expected values.

Each vector replays ring arithmetic and checker calls and compares the
serialized outcome with a literal.  ``run_corpus`` never raises on a
mismatch; it reports it.
"""

from __future__ import annotations

from .endo import construct_endomorphism
from .properties import (
    check_condition_C,
    check_element_property,
    check_mccoy,
    check_skewring_semicommutative,
    refute_pointwise,
)
from .rings import construct_ring
from .skewpoly import SkewRing


def _congruence_pairs():
    ring = construct_ring("congruence-pairs(2)")
    s = construct_endomorphism(ring, "swap")
    a, b = ring.parse("(2,0)"), ring.parse("(0,2)")
    return [
        ("a*b", lambda: ring.serialize(ring.mul(a, b)), "(0,0)"),
        ("a*sigma(b)", lambda: ring.serialize(ring.mul(a, s(b))), "(4,0)"),
        ("sigma-semicommutative refuted at (a, b, 1)",
         lambda: refute_pointwise(ring, "sigma-semicommutative", ["(2,0)", "(0,2)", "(1,1)"], s).holds,
         "false"),
    ]


def _eval_at_zero():
    ring = construct_ring("poly(zmod(2))")
    s = construct_endomorphism(ring, "eval-at-zero")
    return [
        ("sigma(1 + x + x^2)", lambda: ring.serialize(s(ring.parse("1 + x + x^2"))), "1"),
        ("condition C1 up to degree 3", lambda: check_condition_C(ring, s, "C1", bound=3).holds,
         "true-up-to-bound"),
        ("domain up to degree 3", lambda: check_element_property(ring, "domain", bound=3).holds,
         "true-up-to-bound"),
    ]


def _pair_swap():
    ring = construct_ring("product(zmod(2),zmod(2))")
    s = construct_endomorphism(ring, "swap")
    S = SkewRing(ring, s)
    p, q = S.parse("(1,0) + (1,0)*x"), S.parse("(0,1) + (1,0)*x")
    e = ring.parse("(1,0)")
    return [
        ("p*q", lambda: str(p * q), "0"),
        ("nonzero c with p*c = 0",
         lambda: str(sum(1 for c in ring.elements()[1:] if p.right_scalar(c).is_zero())), "0"),
        ("p*(1,0)*q", lambda: str(p * S.const(e) * q), "(1,0)*x"),
        ("sigma-skew McCoy at degree 1", lambda: check_mccoy(ring, "sigma-skew", s, 1).holds, "false"),
        ("skew ring semicommutative at degree 1",
         lambda: check_skewring_semicommutative(ring, s, 1).holds, "false"),
    ]


def _matrix_z3():
    ring = construct_ring("matrix(2,zmod(3))")
    s = construct_endomorphism(ring, "negate-offdiagonal")
    S = SkewRing(ring, s)
    p = S.parse("[[1,0],[0,0]] + [[1,1],[0,0]]*x")
    q = S.parse("[[0,0],[0,-1]] + [[0,1],[0,1]]*x")
    h = S.parse("[[1,1],[0,0]]")
    return [
        ("p*q", lambda: str(p * q), "0"),
        ("nonzero c with p*c = 0",
         lambda: str(sum(1 for c in ring.elements()[1:] if p.right_scalar(c).is_zero())), "0"),
        ("p*h*q", lambda: str(p * h * q), "[[0,2],[0,0]] + [[0,1],[0,0]]*x^2"),
        ("sigma-skew McCoy at degree 1", lambda: check_mccoy(ring, "sigma-skew", s, 1).holds, "false"),
    ]


def _nagata_poly():
    ring = construct_ring("nagata(poly(zmod(2)),self,eval-at-zero)")
    a, b = ring.parse("(x | 1)"), ring.parse("(0 | 1)")
    return [
        ("(x,1)*(0,1)", lambda: ring.serialize(ring.mul(a, b)), "(0 | 0)"),
        ("(0,1)*(x,1)", lambda: ring.serialize(ring.mul(b, a)), "(0 | x)"),
        ("reversibility refuted at ((x,1), (0,1))",
         lambda: refute_pointwise(ring, "reversible", ["(x | 1)", "(0 | 1)"]).holds, "false"),
        ("reversible up to element bound 2",
         lambda: check_element_property(ring, "reversible", bound=2).holds, "false"),
    ]


def _nagata_pair_swap():
    base = construct_ring("product(zmod(2),zmod(2))")
    s = construct_endomorphism(base, "swap")
    ring = construct_ring("nagata(product(zmod(2),zmod(2)),self,swap)")
    A, B, C = (ring.parse(t) for t in ("((0,1) | (0,1))", "((1,0) | (0,1))", "((1,0) | (1,0))"))
    c1 = check_condition_C(base, s, "C1")
    return [
        ("A*B", lambda: ring.serialize(ring.mul(A, B)), "((0,0) | (0,0))"),
        ("A*C*B", lambda: ring.serialize(ring.mul(ring.mul(A, C), B)), "((0,0) | (1,0))"),
        ("Nagata ring semicommutative", lambda: check_element_property(ring, "semicommutative").holds,
         "false"),
        ("condition C1 on the base", lambda: c1.holds, "false"),
        ("condition C1 witness", lambda: f"m={c1.witness['m']}, a={c1.witness['a']}", "m=(1,0), a=(0,1)"),
    ]


CORPUS = {
    "congruence-pairs-swap": _congruence_pairs,
    "poly-eval-at-zero": _eval_at_zero,
    "pair-swap-skew": _pair_swap,
    "matrix-z3-negate": _matrix_z3,
    "nagata-poly-eval": _nagata_poly,
    "nagata-pair-swap": _nagata_pair_swap,
}


def run_corpus():
    """Replay every vector; returns a report whose ``matched`` flag is the overall result."""
    entries = []
    for key, build in CORPUS.items():
        checks = []
        for name, fn, expected in build():
            actual = fn()
            checks.append({"check": name, "expected": expected, "actual": actual,
                           "match": actual == expected})
        entries.append({"id": key, "checks": checks,
                        "matched": all(c["match"] for c in checks)})
    return {"entries": entries, "matched": all(e["matched"] for e in entries)}

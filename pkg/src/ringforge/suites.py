"""Implication suites: hypothesis and conclusion verdicts on fixed rosters.

A row passes when some hypothesis is refuted or every conclusion holds at
the bound.  A VIOLATION row (hypotheses hold, a conclusion fails) would
contradict the theorem the suite encodes, so it points at a checker bug.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .endo import construct_endomorphism
from .errors import UnknownSuite
from .modules import construct_module, construct_nagata
from .properties import (
    FALSE,
    check_armendariz,
    check_condition_C,
    check_element_property,
    check_mccoy,
    check_skewring_semicommutative,
)
from .rings import ExplicitRing, construct_ring
from .witness import theorem21_random_suite

PASS = "PASS"
VIOLATION = "VIOLATION"


def galois4():
    """GF(4) = {0, 1, a, b} with b = a + 1, addition as XOR on bit pairs."""
    labels = ("0", "1", "a", "b")
    add = [[i ^ j for j in range(4)] for i in range(4)]
    log = {1: 0, 2: 1, 3: 2}
    exp = {0: 1, 1: 2, 2: 3}
    mul = [[0 if i == 0 or j == 0 else exp[(log[i] + log[j]) % 3] for j in range(4)] for i in range(4)]
    return ExplicitRing(labels, add, mul, one=1, name="gf(4)")


def _ring(spec):
    return galois4() if spec == "gf(4)" else construct_ring(spec)


def _endo(ring, spec):
    if spec == "frobenius":
        return construct_endomorphism(ring, {x: ring.mul(x, x) for x in ring.elements()})
    return construct_endomorphism(ring, spec)


@dataclass(frozen=True)
class Instance:
    ring: str
    endo: str = "identity"
    module: str = "self"
    degree: int = 1

    def build(self):
        ring = _ring(self.ring)
        return ring, _endo(ring, self.endo)

    def nagata(self):
        ring, endo = self.build()
        module = construct_module(ring, self.module)
        return ring, endo, module, construct_nagata(ring, module, endo)

    def describe(self):
        return {"ring": self.ring, "endo": self.endo, "module": self.module, "degree": self.degree}


def _bool(v):
    return v.holds != FALSE


def _prop26(inst, threads, ceiling):
    ring, endo = inst.build()
    d = inst.degree
    return ({"skew-semicommutative": lambda: check_skewring_semicommutative(ring, endo, d, threads, ceiling)},
            {"sigma-skew-mccoy": lambda: check_mccoy(ring, "sigma-skew", endo, d, threads, ceiling)})


def _cor210(inst, threads, ceiling):
    ring, endo = inst.build()
    d = inst.degree
    return ({"semicommutative": lambda: check_element_property(ring, "semicommutative", threads=threads),
             "condition-C2": lambda: check_condition_C(ring, endo, "C2", threads=threads)},
            {"sigma-skew-mccoy": lambda: check_mccoy(ring, "sigma-skew", endo, d, threads, ceiling)})


def _commutative_domain(ring, threads):
    return {"commutative": lambda: check_element_property(ring, "commutative", threads=threads),
            "domain": lambda: check_element_property(ring, "domain", threads=threads)}


def _prop31(inst, threads, ceiling):
    ring, endo, module, nag = inst.nagata()
    d = inst.degree
    return (_commutative_domain(ring, threads),
            {"armendariz-iff": lambda: _iff(check_armendariz(nag, d, threads, ceiling),
                                            check_armendariz(module, d, threads, ceiling))})


def _prop33(inst, threads, ceiling):
    ring, endo, module, nag = inst.nagata()
    return ({"commutative": lambda: check_element_property(ring, "commutative", threads=threads),
             "ring-condition-C1": lambda: check_condition_C(ring, endo, "C1", threads=threads),
             "module-condition-C2": lambda: check_condition_C(module, endo, "C2", threads=threads)},
            {"nagata-semicommutative": lambda: check_element_property(nag, "semicommutative", threads=threads)})


def _prop34(inst, threads, ceiling):
    ring, endo, module, nag = inst.nagata()
    d = inst.degree
    return (_commutative_domain(ring, threads),
            {"nagata-semicommutative": lambda: check_element_property(nag, "semicommutative", threads=threads),
             "nagata-mccoy-right": lambda: check_mccoy(nag, "right", None, d, threads, ceiling)})


def _thm38(inst, threads, ceiling):
    ring, endo, module, nag = inst.nagata()
    d = inst.degree
    return ({"commutative": lambda: check_element_property(ring, "commutative", threads=threads),
             "armendariz-ring": lambda: check_armendariz(ring, d, threads, ceiling),
             "module-condition-C2": lambda: check_condition_C(module, endo, "C2", threads=threads)},
            {"armendariz-iff": lambda: _iff(check_armendariz(nag, d, threads, ceiling),
                                            check_armendariz(module, d, threads, ceiling))})


def _cor39(inst, threads, ceiling):
    ring, endo, module, nag = inst.nagata()
    d = inst.degree
    return ({"commutative": lambda: check_element_property(ring, "commutative", threads=threads),
             "reduced": lambda: check_element_property(ring, "reduced", threads=threads),
             "condition-C1": lambda: check_condition_C(ring, endo, "C1", threads=threads)},
            {"nagata-semicommutative": lambda: check_element_property(nag, "semicommutative", threads=threads),
             "nagata-armendariz": lambda: check_armendariz(nag, d, threads, ceiling)})


class _Iff:
    """Verdict-like pair for an equivalence: holds when both sides agree."""

    def __init__(self, left, right):
        self.left, self.right = left, right
        agree = _bool(left) == _bool(right)
        self.holds = "agree" if agree else FALSE
        self.witness = None if agree else {"ring-side": left.to_dict(False), "module-side": right.to_dict(False)}

    def to_dict(self, timing=True):
        return {"property": "equivalence", "holds": self.holds,
                "left": self.left.to_dict(timing), "right": self.right.to_dict(timing),
                "witness": self.witness}


def _iff(left, right):
    return _Iff(left, right)


SUITES = {
    "prop2.6": (_prop26, [
        Instance("zmod(2)", degree=2), Instance("zmod(4)"), Instance("product(zmod(2),zmod(2))"),
        Instance("product(zmod(2),zmod(2))", "swap"), Instance("matrix(2,zmod(2))"),
        Instance("matrix(2,zmod(3))", "negate-offdiagonal"), Instance("triangular(2,zmod(2))"),
        Instance("gf(4)", "frobenius"),
    ]),
    "cor2.10": (_cor210, [
        Instance("zmod(2)", degree=2), Instance("zmod(4)"), Instance("product(zmod(2),zmod(2))"),
        Instance("product(zmod(2),zmod(2))", "swap"), Instance("matrix(2,zmod(2))"),
        Instance("triangular(2,zmod(2))"), Instance("gf(4)", "frobenius"), Instance("zmod(6)"),
    ]),
    "prop3.1": (_prop31, [
        Instance("zmod(2)", degree=2), Instance("zmod(3)"), Instance("zmod(2)", module="power(2)"),
        Instance("gf(4)", "frobenius"), Instance("zmod(4)"), Instance("product(zmod(2),zmod(2))", "swap"),
        Instance("zmod(5)"),
    ]),
    "prop3.3": (_prop33, [
        Instance("zmod(2)"), Instance("zmod(4)"), Instance("product(zmod(2),zmod(2))"),
        Instance("product(zmod(2),zmod(2))", "swap"), Instance("zmod(4)", module="cyclic(2)"),
        Instance("gf(4)", "frobenius"), Instance("zmod(6)"),
    ]),
    "prop3.4": (_prop34, [
        Instance("zmod(3)", degree=2), Instance("zmod(2)", degree=2), Instance("zmod(2)", module="power(2)"),
        Instance("gf(4)", "frobenius"), Instance("zmod(5)"), Instance("zmod(4)"),
        Instance("product(zmod(2),zmod(2))", "swap"),
    ]),
    "thm3.8": (_thm38, [
        Instance("product(zmod(2),zmod(2))", "swap"), Instance("zmod(4)"), Instance("zmod(2)", degree=2),
        Instance("product(zmod(2),zmod(2))"), Instance("zmod(3)", module="power(2)"),
        Instance("gf(4)", "frobenius"), Instance("zmod(4)", module="cyclic(2)"),
    ]),
    "cor3.9": (_cor39, [
        Instance("zmod(2)", degree=2), Instance("product(zmod(2),zmod(2))"),
        Instance("product(zmod(2),zmod(2))", "swap"), Instance("zmod(3)"), Instance("gf(4)", "frobenius"),
        Instance("zmod(6)"), Instance("zmod(4)"),
    ]),
}

THM21_ROSTER = [("zmod(4)", "identity"), ("product(zmod(2),zmod(2))", "identity"),
                ("product(zmod(2),zmod(2))", "swap"), ("matrix(2,zmod(2))", "identity")]

SUITE_IDS = tuple(SUITES) + ("thm2.1-random",)


def run_implication_suite(suite_id, roster=None, threads=1, ceiling=None, trials=100, seed=0):
    """Evaluate a suite; returns a report dict with one row per instance."""
    start = time.perf_counter()
    if suite_id == "thm2.1-random":
        report = theorem21_random_suite(roster or THM21_ROSTER, trials=trials, seed=seed, ceiling=ceiling)
        report["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
        return report
    if suite_id not in SUITES:
        raise UnknownSuite(f"unknown suite {suite_id!r}; expected one of {', '.join(SUITE_IDS)}")
    build, default = SUITES[suite_id]
    rows = []
    for inst in roster or default:
        hyps, concls = build(inst, threads, ceiling)
        row = {"instance": inst.describe(), "hypotheses": {}, "conclusions": {}}
        refuted = None
        for name, fn in hyps.items():
            verdict = fn()
            row["hypotheses"][name] = verdict.holds
            if not _bool(verdict):
                refuted = name
                row["path"] = f"hypothesis refuted: {name}"
                row["witness"] = verdict.witness
                break
        if refuted is None:
            failures = {}
            for name, fn in concls.items():
                verdict = fn()
                row["conclusions"][name] = verdict.holds
                if not _bool(verdict):
                    failures[name] = verdict.to_dict(False)
            if failures:
                row["status"] = VIOLATION
                row["witness"] = failures
            else:
                row["path"] = "conclusion holds at bound"
        row.setdefault("status", PASS)
        rows.append(row)
    summary = {s: sum(r["status"] == s for r in rows) for s in (PASS, VIOLATION)}
    return {"suite": suite_id, "rows": rows, "summary": summary,
            "elapsed_ms": round((time.perf_counter() - start) * 1000, 3)}

"""Degree descent producing a nonzero constant right annihilator of a skew ideal.

Given a right ideal I of S = R[x; sigma] and a nonzero g with I g = 0, the
descent repeatedly picks f in I with f b_m != 0 (b_m the leading coefficient
of g) and replaces g by a_p sigma^p(g) (sigma-stable regime) or a_p g
(sigma-compatible regime).  Each replacement stays in r_S(I) and has lower
degree, so the loop ends at a nonzero constant of r_R(I).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .annihilator import (
    RightIdealSpec,
    SkewIdealIndex,
    right_annihilator_constants_of_skew_ideal,
)
from .endo import construct_endomorphism
from .errors import (
    CompatibilityFailed,
    InvalidSpec,
    MembershipFailed,
    NoProgress,
    SearchExhausted,
    StabilityFailed,
    WitnessError,
    ZeroG,
)
from .properties import _strip, check_element_property
from .rings import construct_ring
from .search import check_budget, count_polys
from .skewpoly import SkewRing

STABLE = "sigma-stable"
COMPATIBLE = "sigma-compatible"
_MODE_ALIASES = {"stable": STABLE, "sigma-stable": STABLE,
                 "compatible": COMPATIBLE, "sigma-compatible": COMPATIBLE}


class DescentMode:
    """Which hypothesis drives the descent: a sigma-stable r_S(I) or a sigma-compatible R."""

    def __init__(self, mode):
        key = str(mode).lower().replace("_", "-")
        if key not in _MODE_ALIASES:
            raise InvalidSpec(f"unknown descent mode {mode!r}")
        self.mode = _MODE_ALIASES[key]

    @property
    def stable(self):
        return self.mode == STABLE

    def __eq__(self, other):
        return isinstance(other, DescentMode) and other.mode == self.mode

    def __hash__(self):
        return hash(self.mode)

    def __str__(self):
        return self.mode

    __repr__ = __str__


@dataclass
class MembershipCertificate:
    member: bool
    covered: bool
    bounds: dict
    offending: dict | None = None


@dataclass
class StabilityCertificate:
    stable: bool
    covered: bool
    bounds: dict
    checked: int
    counterexample: str | None = None


@dataclass
class DescentStep:
    g: object
    f: object
    p: int
    a_p: object
    rule: str


@dataclass
class WitnessTrace:
    mode: str
    ideal: dict
    g0: object
    steps: list = field(default_factory=list)
    result: object = None
    final_g: object = None
    reason: str = ""
    verified: bool = False
    bounds: dict = field(default_factory=dict)

    def to_dict(self):
        ring = self.g0.ring if self.g0 is not None else None
        ser = ring.serialize if ring is not None else str
        return {
            "mode": self.mode,
            "ideal": self.ideal,
            "g": str(self.g0) if self.g0 is not None else None,
            "steps": [{"g": str(s.g), "f": str(s.f), "p": s.p, "a_p": ser(s.a_p), "rule": s.rule}
                      for s in self.steps],
            "final_g": str(self.final_g) if self.final_g is not None else None,
            "reason": self.reason,
            "result": ser(self.result) if self.result is not None else None,
            "verified": self.verified,
            "bounds": self.bounds,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def _bounds(ideal):
    return {"degree": ideal.degree_bound, "power": ideal.power_bound, "covered": ideal.covers_sigma}


def verify_annihilator_membership(ideal, g):
    """Bounded test of g in r_S(I): f_i (c x^j) g = 0 for all generators, c in R, j <= J."""
    bounds = _bounds(ideal)
    if g.is_zero() or ideal.is_zero:
        return MembershipCertificate(True, ideal.covers_sigma, bounds)
    idx = SkewIdealIndex(ideal)
    hit = idx.offending(idx.to_index(g))
    if hit is None:
        return MembershipCertificate(True, ideal.covers_sigma, bounds)
    i, c, j = hit
    return MembershipCertificate(False, ideal.covers_sigma, bounds, {
        "generator": str(ideal.generators[i]), "c": ideal.ring.serialize(idx.world.t.elems[c]), "j": j})


def annihilator_constraints(idx):
    """Convolution constraints whose common solutions h are exactly r_S(I) at the power bound.

    Coefficient k of f (c sigma^j(h)) is sum_t a_t sigma^t(c) sigma^(t+j)(h_(k-t)).
    """
    w = idx.world
    M = w.t.mul
    out = []
    seen = set()
    for f in idx.gens:
        for c in range(1, w.n):
            for j in range(idx.J + 1):
                left = _strip([M[a][w.tw(t)[c]] for t, a in enumerate(f)])
                if not left:
                    continue
                twists = [w.tw(t + j) for t in range(len(left))]
                key = (left, tuple(id(tw) for tw in twists))
                if key not in seen:
                    seen.add(key)
                    out.append((left, twists))
    return out


def annihilator_polys(ideal, degree, ceiling=None):
    """Nonzero h of degree <= ``degree`` in r_S(I) at the power bound, canonically ordered."""
    idx = SkewIdealIndex(ideal)
    check_budget(count_polys(idx.world.n, degree), ceiling, "annihilator enumeration")
    for h in idx.world.sys.solutions(annihilator_constraints(idx), degree):
        yield idx.to_poly(h)


def verify_stability(ideal, degree=None, ceiling=None):
    """Bounded certificate that sigma(h) stays in r_S(I) for every h in r_S(I) of degree <= d."""
    d = ideal.degree_bound if degree is None else degree
    bounds = {"degree": d, "power": ideal.power_bound}
    if ideal.endo.is_identity or ideal.is_zero:
        return StabilityCertificate(True, ideal.covers_sigma, bounds, 0)
    idx = SkewIdealIndex(ideal)
    check_budget(count_polys(idx.world.n, d), ceiling, "stability scan")
    tw = idx.world.tw(1)
    checked = 0
    for h in idx.world.sys.solutions(annihilator_constraints(idx), d):
        checked += 1
        image = _strip([tw[b] for b in h])
        if image and not idx.kills(image):
            return StabilityCertificate(False, ideal.covers_sigma, bounds, checked, str(idx.to_poly(h)))
    return StabilityCertificate(True, ideal.covers_sigma, bounds, checked)


def _check_mode(ideal, mode, ceiling):
    if mode.stable:
        cert = verify_stability(ideal, ceiling=ceiling)
        if not cert.stable:
            raise StabilityFailed(f"r_S(I) is not sigma-stable: sigma({cert.counterexample}) leaves it")
    else:
        verdict = check_element_property(ideal.ring, "sigma-compatible", endo=ideal.endo)
        if not verdict:
            raise CompatibilityFailed(f"{ideal.ring} is not sigma-compatible: {verdict.witness}")


def extract_witness(ideal, g, mode, check_mode=True, ceiling=None):
    """Run the descent and return a :class:`WitnessTrace` whose result lies in r_R(I).

    Raises ZeroG, MembershipFailed, StabilityFailed, CompatibilityFailed,
    SearchExhausted or NoProgress as described in :mod:`ringforge.errors`.
    """
    mode = mode if isinstance(mode, DescentMode) else DescentMode(mode)
    S = ideal.skew
    g = S.parse(g)
    if g.is_zero():
        raise ZeroG("g must be nonzero")
    trace = WitnessTrace(str(mode), ideal.describe(), g, bounds=_bounds(ideal))
    ring = ideal.ring
    if ideal.is_zero:
        trace.result = ring.elements()[1]
        trace.final_g = g
        trace.reason = "zero-ideal"
        trace.verified = True
        return trace

    idx = SkewIdealIndex(ideal)
    w = idx.world
    M, elems = w.t.mul, w.t.elems
    cur = idx.to_index(g)
    if not idx.kills(cur):
        raise MembershipFailed(f"{g} is not in r_S(I) at J={ideal.power_bound}")
    if check_mode:
        _check_mode(ideal, mode, ceiling)

    while True:
        if len(cur) == 1:
            trace.result, trace.reason = elems[cur[0]], "constant"
            break
        lead = cur[-1]
        hit = idx.offending((lead,))
        if hit is None:
            trace.result, trace.reason = elems[lead], "leading-coefficient"
            break
        i, c, j = hit
        f = w.product(idx.gens[i], (0,) * j + (c,))
        if not f:
            raise SearchExhausted("no ideal element moves the leading coefficient")
        new, p, a_p = _descend(w, f, cur, mode)
        if p is None:
            raise CompatibilityFailed("no coefficient of f acts nontrivially on g")
        if len(new) >= len(cur):
            raise NoProgress(f"degree did not drop at step {len(trace.steps) + 1}")
        tw = w.tw(p) if mode.stable else w.ident
        if M[a_p][tw[lead]] != 0:
            raise NoProgress("bookkeeping identity a_p sigma^p(b_m) = 0 failed")
        trace.steps.append(DescentStep(idx.to_poly(cur), idx.to_poly(f), p, elems[a_p],
                                       "a_p*sigma^p(g)" if mode.stable else "a_p*g"))
        if not idx.kills(new):
            err = StabilityFailed if mode.stable else MembershipFailed
            raise err(f"replacement {idx.to_poly(new)} left r_S(I)")
        cur = new

    trace.final_g = idx.to_poly(cur)
    _self_check(trace, idx, mode, g)
    trace.verified = trace.result != ring.zero and idx.kills((w.t.index[trace.result],))
    return trace


def _descend(w, f, g, mode):
    """Pick p and the replacement for g from the ideal element f."""
    M = w.t.mul
    for p in range(len(f) - 1, -1, -1):
        a = f[p]
        if not a:
            continue
        tw = w.tw(p) if mode.stable else w.ident
        new = _strip([M[a][tw[b]] for b in g])
        if new:
            return new, p, a
    return None, None, None


def _self_check(trace, idx, mode, g0):
    """The final g equals the iterated product read off the trace."""
    w = idx.world
    M, index = w.t.mul, w.t.index
    coef, shift = w.t.one, 0
    for step in trace.steps:
        a = index[step.a_p]
        if mode.stable:
            coef = M[a][w.tw(step.p)[coef]]
            shift += step.p
        else:
            coef = M[a][coef]
    tw = w.tw(shift)
    expected = _strip([M[coef][tw[b]] for b in idx.to_index(g0)])
    if expected != idx.to_index(trace.final_g):
        raise NoProgress("iterated product disagrees with the descent result")


# ---------------------------------------------------------------------------
# randomized suite


RESAMPLES = 32


def _resolve(entry):
    ring, endo = entry
    if isinstance(ring, str):
        ring = construct_ring(ring)
    if isinstance(endo, str):
        endo = construct_endomorphism(ring, endo)
    return ring, endo


def _random_poly(rng, pool, degree):
    deg = rng.randint(0, degree)
    nonzero = [a for a in pool if a] or [1]
    return tuple(rng.choice(pool) for _ in range(deg)) + (rng.choice(nonzero),)


def _left_zero_divisors(ring):
    t = ring.tables()
    return [a for a in range(t.n) if any(t.mul[a][b] == 0 for b in range(1, t.n))]


def theorem21_random_suite(roster, trials=100, seed=0, degree=2, max_generators=2, ceiling=None):
    """Sample ideals, find g in r_S(I), run the descent and re-certify the result.

    Each row is PASS, SKIPPED (no nonzero g at the bound after RESAMPLES draws, or neither mode's
    hypothesis certified) or FAIL.
    """
    rows = []
    for k, entry in enumerate(roster):
        ring, endo = _resolve(entry)
        S = SkewRing(ring, endo)
        compatible = bool(check_element_property(ring, "sigma-compatible", endo=endo))
        elems = ring.elements()
        # half the trials draw coefficients from left zero divisors, where r_S(I) != 0 is likelier
        pools = [list(range(len(elems))), _left_zero_divisors(ring)]
        for t in range(trials):
            rng = random.Random(f"{seed}:{k}:{t}")
            # redraw the generators until r_S(I) has a nonzero element at the bound
            for _ in range(RESAMPLES):
                pool = pools[rng.randrange(2)]
                gens = [S.poly(tuple(elems[i] for i in _random_poly(rng, pool, degree)))
                        for _ in range(rng.randint(1, max_generators))]
                ideal = RightIdealSpec.in_skew(S, gens, degree_bound=degree)
                candidates = list(annihilator_polys(ideal, degree, ceiling))
                if candidates:
                    break
            row = {"ring": ring.spec, "endo": endo.spec, "trial": t,
                   "generators": [str(f) for f in gens]}
            rows.append(row)
            if not candidates:
                row.update(status="SKIPPED", reason="no nonzero g in r_S(I) at the bound")
                continue
            g = candidates[rng.randrange(len(candidates))]
            row["g"] = str(g)
            if compatible:
                mode = DescentMode(COMPATIBLE)
            elif verify_stability(ideal, ceiling=ceiling).stable:
                mode = DescentMode(STABLE)
            else:
                row.update(status="SKIPPED", reason="neither sigma-compatible nor sigma-stable")
                continue
            row["mode"] = str(mode)
            try:
                trace = extract_witness(ideal, g, mode, check_mode=False, ceiling=ceiling)
            except WitnessError as exc:
                row.update(status="FAIL", reason=f"{type(exc).__name__}: {exc}")
                continue
            certified = trace.result in right_annihilator_constants_of_skew_ideal(ideal)
            row.update(result=ring.serialize(trace.result), steps=len(trace.steps),
                       status="PASS" if certified and trace.verified else "FAIL")
            if row["status"] == "FAIL":
                row["reason"] = "result not in r_R(I)"
    summary = {s: sum(r["status"] == s for r in rows) for s in ("PASS", "SKIPPED", "FAIL")}
    return {"suite": "thm2.1-random", "seed": seed, "trials": trials, "degree": degree,
            "rows": rows, "summary": summary}

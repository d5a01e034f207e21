"""Right annihilators, right-ideal closures, idempotents and bounded quasi-Baer checks.

Right ideals are carried by their generators.  For an ideal I of
S = R[x; sigma] generated by f_1..f_k, a polynomial g lies in r_S(I) iff
``f_i (c x^j) g = 0`` for all i, all constants c and all j, and since
``(c x^j) g = c sigma^j(g) x^j`` this is the finite test
``f_i (c sigma^j(g)) = 0`` once j ranges over every distinct power of sigma.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field

from .errors import InvalidSpec, NotEnumerable, ZeroPolynomial
from .properties import FALSE, PolyWorld, Verdict, _strip
from .search import check_budget, iter_bits, search_ceiling
from .skewpoly import SkewPolynomial, SkewRing

BASE = "base-ring"
SKEW = "skew-poly-ring"
TRUE_UP_TO_G = "true-up-to-G-generators"


@dataclass(frozen=True)
class RightIdealSpec:
    """A right ideal given by generators; an empty list is the zero ideal."""

    ambient: str
    ring: object
    generators: tuple
    endo: object = None
    degree_bound: int | None = None
    power_bound: int | None = None

    @classmethod
    def in_ring(cls, ring, generators):
        gens = tuple(ring.parse(g) for g in generators)
        if any(g == ring.zero for g in gens):
            raise InvalidSpec("ideal generators must be nonzero")
        return cls(BASE, ring, gens)

    @classmethod
    def in_skew(cls, S, generators, degree_bound=None, power_bound=None):
        gens = tuple(S.parse(g) for g in generators)
        if any(g.is_zero() for g in gens):
            raise InvalidSpec("ideal generators must be nonzero")
        top = max((g.degree for g in gens), default=0)
        if degree_bound is None:
            degree_bound = max(top, 1)
        elif top > degree_bound:
            raise InvalidSpec(f"generator degree {top} exceeds degree bound {degree_bound}")
        if power_bound is None:
            power_bound = S.endo.default_power_bound()
            if power_bound is None:
                raise InvalidSpec("sigma has no detected order; supply a power bound J")
        if power_bound < 0 or degree_bound < 0:
            raise InvalidSpec("bounds must be nonnegative")
        return cls(SKEW, S.ring, gens, S.endo, degree_bound, power_bound)

    @property
    def skew(self):
        return SkewRing(self.ring, self.endo)

    @property
    def is_zero(self):
        return not self.generators

    @property
    def covers_sigma(self):
        """True when j <= J already reaches every distinct power of sigma."""
        if self.ambient != SKEW:
            return True
        cover = self.endo.cover_bound
        return cover is not None and self.power_bound >= cover

    def describe(self):
        if self.ambient == BASE:
            gens = [self.ring.serialize(g) for g in self.generators]
        else:
            gens = [str(g) for g in self.generators]
        return {"ambient": self.ambient, "generators": gens,
                "degree_bound": self.degree_bound, "power_bound": self.power_bound}


@dataclass
class AnnihilatorResult:
    kind: str
    ring: object
    elements: tuple
    verified_bounds: dict = field(default_factory=dict)
    covered: bool = True

    def __contains__(self, c):
        return c in self.elements

    def __len__(self):
        return len(self.elements)

    def to_dict(self):
        return {"kind": self.kind,
                "elements": [self.ring.serialize(c) for c in self.elements],
                "verified_bounds": self.verified_bounds,
                "covered": self.covered}


def _finite_tables(ring):
    if not ring.finite:
        raise NotEnumerable(f"{ring} is not finite")
    return ring.tables()


# ---------------------------------------------------------------------------
# ideals of R


def ideal_closure(ring, generators, ceiling=None):
    """Indices of the additive closure of {g r : g in generators, r in R}, sorted."""
    t = _finite_tables(ring)
    spanning = {t.mul[g][r] for g in generators for r in range(t.n)}
    spanning.discard(0)
    seen = {0}
    frontier = [0]
    limit = search_ceiling(ceiling)
    while frontier:
        nxt = []
        for x in frontier:
            row = t.add[x]
            for s in spanning:
                y = row[s]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        if len(seen) > limit:
            check_budget(len(seen), ceiling, "ideal closure")
    return sorted(seen)


def _annihilator_mask(t, members):
    mask = (1 << t.n) - 1
    for a in members:
        row = t.mul[a]
        mask &= sum(1 << c for c in range(t.n) if row[c] == 0)
    return mask


def right_annihilator_in_ring(ideal, ceiling=None):
    """Exact r_R(I) for a right ideal of a finite ring."""
    if ideal.ambient != BASE:
        raise InvalidSpec("expected an ideal of the base ring")
    ring = ideal.ring
    t = _finite_tables(ring)
    members = ideal_closure(ring, [t.index[g] for g in ideal.generators], ceiling)
    mask = _annihilator_mask(t, members)
    return AnnihilatorResult("element-set", ring, tuple(t.elems[c] for c in iter_bits(mask)))


def idempotents(ring):
    """All e with e e = e, in canonical order."""
    t = _finite_tables(ring)
    return [t.elems[e] for e in range(t.n) if t.mul[e][e] == e]


def check_quasi_baer(ring, generator_bound=1, threads=1, ceiling=None):
    """Check that r_R(I) = eR for an idempotent e, for every I with <= G generators.

    G = 1 is the principal (p.q.-Baer) case.  Generator lists are unordered
    multisets of nonzero elements; the witness is the first offending list.
    """
    start = time.perf_counter()
    if generator_bound < 1:
        raise InvalidSpec("generator bound must be >= 1")
    t = _finite_tables(ring)
    n = t.n
    total = sum(_multisets(n - 1, g) for g in range(1, generator_bound + 1))
    check_budget(total * n, ceiling, f"quasi-Baer scan of {ring} with G={generator_bound}")
    principal = set()
    for e in range(n):
        if t.mul[e][e] == e:
            principal.add(sum(1 << c for c in set(t.mul[e])))
    memo = {}

    def ann_of(gens):
        key = tuple(sorted(set(gens)))
        if key not in memo:
            memo[key] = _annihilator_mask(t, ideal_closure(ring, key, ceiling))
        return memo[key]

    witness = None
    for g in range(1, generator_bound + 1):
        for gens in itertools.combinations_with_replacement(range(1, n), g):
            if ann_of(gens) not in principal:
                witness = gens
                break
        if witness is not None:
            break
    bounds = {"generator_bound": generator_bound}
    if witness is None:
        verdict = Verdict("quasi-baer", TRUE_UP_TO_G, ring.spec, None, bounds)
    else:
        raw = {"generators": tuple(t.elems[i] for i in witness)}
        ann = tuple(t.elems[c] for c in iter_bits(ann_of(witness)))
        verdict = Verdict("quasi-baer", FALSE, ring.spec, None, bounds,
                          {"generators": [ring.serialize(x) for x in raw["generators"]],
                           "annihilator": [ring.serialize(x) for x in ann]},
                          raw=raw)
    verdict.elapsed = time.perf_counter() - start
    return verdict


def _multisets(n, k):
    return math.comb(n + k - 1, k)


# ---------------------------------------------------------------------------
# ideals of R[x; sigma]


class SkewIdealIndex:
    """Index-level form of a skew right ideal, used by the annihilator and witness searches."""

    def __init__(self, ideal):
        if ideal.ambient != SKEW:
            raise InvalidSpec("expected an ideal of the skew polynomial ring")
        self.ideal = ideal
        self.world = PolyWorld(ideal.ring, ideal.endo)
        t = self.world.t
        self.gens = [tuple(t.index[c] for c in f.coeffs) for f in ideal.generators]
        self.J = ideal.power_bound
        self._const = None

    def to_index(self, f):
        index = self.world.t.index
        return tuple(index[c] for c in f.coeffs)

    def to_poly(self, p):
        return SkewPolynomial(self.ideal.skew, self.world.values(p), _normalized=True)

    def scaled(self, c, g, j):
        """Index form of c sigma^j(g), stripped."""
        row, tw = self.world.t.mul[c], self.world.tw(j)
        return _strip([row[tw[b]] for b in g])

    def offending(self, g):
        """First (generator position, c, j) with f_i (c x^j) g != 0, or None."""
        w = self.world
        for i, f in enumerate(self.gens):
            for c in range(1, w.n):
                for j in range(self.J + 1):
                    h = self.scaled(c, g, j)
                    if h and w.product(f, h):
                        return i, c, j
        return None

    def kills(self, g):
        return self.offending(g) is None

    def constant_mask(self):
        """Bitmask of constants c in r_R(I) at the power bound."""
        if self._const is None:
            w = self.world
            good = [w.right_const_annihilators(f) for f in self.gens]
            mask = 0
            for c in range(w.n):
                ok = True
                for j in range(self.J + 1):
                    sc = w.tw(j)[c]
                    if any(not (m >> w.t.mul[d][sc]) & 1 for m in good for d in range(w.n)):
                        ok = False
                        break
                if ok:
                    mask |= 1 << c
            self._const = mask
        return self._const


def right_annihilator_constants_of_skew_ideal(ideal):
    """Constants c with q c = 0 for all q in I, via the generator-monomial test.

    Exact when the power bound reaches every distinct power of sigma;
    otherwise a certificate valid up to that bound (``covered`` is False).
    """
    ring = ideal.ring
    bounds = {"degree": ideal.degree_bound, "power": ideal.power_bound}
    if ideal.is_zero:
        return AnnihilatorResult("bounded-certificate", ring, tuple(ring.elements()), bounds,
                                 ideal.covers_sigma)
    idx = SkewIdealIndex(ideal)
    t = idx.world.t
    elems = tuple(t.elems[c] for c in iter_bits(idx.constant_mask()))
    return AnnihilatorResult("bounded-certificate", ring, elems, bounds, ideal.covers_sigma)


def elements_of_skew_ideal(ideal, degree=None, ceiling=None):
    """Distinct elements of I of degree <= ``degree`` in canonical order (zero first).

    The spanning set is {f_i (c x^j) : c in R, j <= max(J, degree)}; its
    additive closure is taken in full and then cut at ``degree``.
    """
    S = ideal.skew
    degree = ideal.degree_bound if degree is None else degree
    if ideal.is_zero:
        return [S.zero]
    idx = SkewIdealIndex(ideal)
    w = idx.world
    top = max(ideal.power_bound, degree)
    spanning = set()
    for f in idx.gens:
        for c in range(1, w.n):
            for j in range(top + 1):
                p = w.product(f, (0,) * j + (c,))
                if p:
                    spanning.add(p)
    add = w.t.add
    seen = {()}
    frontier = [()]
    limit = search_ceiling(ceiling)
    while frontier:
        nxt = []
        for x in frontier:
            for s in spanning:
                long, short = (x, s) if len(x) >= len(s) else (s, x)
                y = list(long)
                for i, b in enumerate(short):
                    y[i] = add[y[i]][b]
                y = _strip(y)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        if len(seen) > limit:
            check_budget(len(seen), ceiling, "skew ideal closure")
    keep = [p for p in seen if len(p) - 1 <= degree]
    keep.sort(key=lambda p: (len(p), p))
    return [idx.to_poly(p) for p in keep]


def leading_kills(ideal, g):
    """I b_m = 0 for the leading coefficient b_m of g (generator-monomial test)."""
    if g.is_zero():
        raise ZeroPolynomial("g is zero")
    idx = SkewIdealIndex(ideal)
    return idx.kills((idx.world.t.index[g.leading_coeff],))

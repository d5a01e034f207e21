"""Ring endomorphisms with exhaustive verification and power bookkeeping."""

from __future__ import annotations

import random

from .errors import NotAnEndomorphism, RuleMismatch
from .rings import (
    AXIOM_CHECK_CAP,
    AXIOM_SAMPLES,
    AXIOM_SEED,
    SAMPLE_BOUND,
    CongruencePairs,
    MatrixRing,
    PolyRing,
    ProductRing,
)


class Endomorphism:
    """A unital ring endomorphism ``sigma`` given by a Python rule.

    For finite rings the map is tabulated once; ``power_table(k)`` returns
    the index table of sigma^k, using the eventual periodicity of the
    sequence of powers so no table is computed twice.
    """

    def __init__(self, ring, rule, func, spec=None, verify=True,
                 cap=AXIOM_CHECK_CAP, samples=AXIOM_SAMPLES, seed=AXIOM_SEED):
        self.ring = ring
        self.rule = rule
        self._func = func
        self.spec = spec or rule
        self._powers = None
        self._preperiod = self._period = None
        if ring.finite:
            t = ring.tables()
            try:
                base = [t.index[func(e)] for e in t.elems]
            except KeyError:
                raise NotAnEndomorphism(f"{self.spec}: image leaves {ring}") from None
            self._powers = [list(range(t.n)), base]
            self._settle_powers()
        if verify:
            self._verify(cap, samples, seed)

    def __call__(self, a):
        if self._powers is not None:
            t = self.ring._tables
            return t.elems[self.power_table(1)[t.index[a]]]
        return self._func(a)

    def apply_power(self, a, k):
        if self._powers is not None:
            t = self.ring._tables
            return t.elems[self.power_table(k)[t.index[a]]]
        for _ in range(k):
            a = self._func(a)
        return a

    @property
    def is_identity(self):
        if self._powers is not None:
            return self._period == 1 and self._preperiod == 0
        return self.rule == "identity"

    def _settle_powers(self):
        base = self._powers[1]
        self._powers = [self._powers[0]]
        seen = {tuple(self._powers[0]): 0}
        nxt = base
        while True:
            key = tuple(nxt)
            if key in seen:
                self._preperiod = seen[key]
                self._period = len(self._powers) - seen[key]
                return
            seen[key] = len(self._powers)
            self._powers.append(nxt)
            nxt = [base[i] for i in nxt]

    def power_table(self, k):
        """Index table of sigma^k (finite rings only)."""
        mu, lam = self._preperiod, self._period
        if k >= mu + lam:
            k = mu + (k - mu) % lam
        return self._powers[k]

    @property
    def detected_order(self):
        """Smallest k >= 1 with sigma^k = id, or None when no such k exists."""
        if self._powers is not None:
            return self._period if self._preperiod == 0 else None
        return {"identity": 1, "swap": 2}.get(self.rule)

    @property
    def cover_bound(self):
        """Largest exponent needed so that sigma^0..sigma^J list every power."""
        if self._powers is not None:
            return self._preperiod + self._period - 1
        order = self.detected_order
        return None if order is None else order - 1

    def default_power_bound(self):
        order = self.detected_order
        if order is not None:
            return order
        return self.cover_bound

    def _verify(self, cap, samples, seed):
        ring = self.ring
        s = self
        if s(ring.one) != ring.one or s(ring.zero) != ring.zero:
            raise NotAnEndomorphism(f"{self.spec}: does not fix 0 and 1")
        if ring.finite and ring.order <= cap:
            pairs = ((a, b) for a in ring.elements() for b in ring.elements())
        else:
            pool = ring.elements() if ring.finite else ring.elements(SAMPLE_BOUND)
            rng = random.Random(seed)
            pairs = ((rng.choice(pool), rng.choice(pool)) for _ in range(samples))
        for a, b in pairs:
            if s(ring.add(a, b)) != ring.add(s(a), s(b)) or s(ring.mul(a, b)) != ring.mul(s(a), s(b)):
                raise NotAnEndomorphism(
                    f"{self.spec}: fails on ({ring.serialize(a)}, {ring.serialize(b)})")

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        if self is other:
            return True
        if self.ring is not other.ring:
            return False
        if self._powers is not None:
            return self.power_table(1) == other.power_table(1)
        return self.spec == other.spec

    def __hash__(self):
        return hash(id(self.ring))

    def __repr__(self):
        return f"Endomorphism({self.spec} on {self.ring})"


def identity(ring, **kw):
    return Endomorphism(ring, "identity", lambda a: a, **kw)


def construct_endomorphism(ring, spec, **kw):
    """Build a verified endomorphism from a rule name or an explicit table.

    ``spec`` is a rule string (``identity``, ``swap``, ``eval-at-zero``,
    ``negate-offdiagonal``) or a mapping from elements (or their serialized
    text) to images.
    """
    if isinstance(spec, dict):
        return _from_table(ring, spec, **kw)
    rule = spec.strip().replace("_", "-")
    if rule == "identity":
        return identity(ring, **kw)
    if rule == "swap":
        if isinstance(ring, CongruencePairs):
            return Endomorphism(ring, "swap", lambda a: (a[1], a[0]), **kw)
        if isinstance(ring, ProductRing) and len(ring.factors) == 2 \
                and ring.factors[0].spec == ring.factors[1].spec:
            return Endomorphism(ring, "swap", lambda a: (a[1], a[0]), **kw)
        raise RuleMismatch(f"swap needs a product of two identical factors, got {ring}")
    if rule == "eval-at-zero":
        if not isinstance(ring, PolyRing):
            raise RuleMismatch(f"eval-at-zero needs a polynomial ring, got {ring}")
        return Endomorphism(ring, "eval-at-zero", ring.evaluate_at_zero, **kw)
    if rule == "negate-offdiagonal":
        if not (isinstance(ring, MatrixRing) and ring.kind == "matrix" and ring.k == 2):
            raise RuleMismatch(f"negate-offdiagonal needs matrix(2, .), got {ring}")
        neg = ring.base.neg

        def flip(a):
            return ((a[0][0], neg(a[0][1])), (neg(a[1][0]), a[1][1]))
        return Endomorphism(ring, "negate-offdiagonal", flip, **kw)
    raise RuleMismatch(f"unknown endomorphism rule {spec!r}")


def _from_table(ring, mapping, **kw):
    if not ring.finite:
        raise RuleMismatch("explicit-table endomorphisms need a finite ring")
    image = {ring.parse(k): ring.parse(v) for k, v in mapping.items()}
    missing = [e for e in ring.elements() if e not in image]
    if missing:
        raise NotAnEndomorphism(f"table misses {ring.serialize(missing[0])}")
    text = ";".join(f"{ring.serialize(e)}->{ring.serialize(image[e])}" for e in ring.elements())
    return Endomorphism(ring, "explicit-table", image.__getitem__, spec=f"table({text})", **kw)

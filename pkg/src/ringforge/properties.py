"""Bounded-exhaustive checkers for ring and module properties.

Every checker returns a :class:`Verdict`.  A false verdict carries the
canonically least counterexample; element-level properties of finite rings
are decided outright (``true-exhaustive``) while anything quantified over
polynomials is only ever ``true-up-to-bound``.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .errors import InvalidSpec, MissingEndo, NotEnumerable
from .modules import RightModule, SelfModule
from .rings import Ring, format_poly
from .search import ConvSystem, check_budget, count_polys, enumerate_index_polys, first_hit

TRUE_EXHAUSTIVE = "true-exhaustive"
TRUE_BOUNDED = "true-up-to-bound"
FALSE = "false"

ELEMENT_PROPERTIES = (
    "reduced", "reversible", "semicommutative", "commutative", "domain",
    "sigma-compatible", "sigma-semicommutative", "sigma-reversible-right", "sigma-reversible-left",
)
SIGMA_PROPERTIES = {
    "sigma-compatible", "sigma-semicommutative", "sigma-reversible-right", "sigma-reversible-left",
    "sigma-skew-mccoy", "skew-semicommutative",
}
PROPERTY_IDS = ELEMENT_PROPERTIES + (
    "armendariz-ring", "armendariz-module", "mccoy-right", "mccoy-left", "sigma-skew-mccoy",
    "condition-C1", "condition-C2",
)


@dataclass
class Verdict:
    property: str
    holds: str
    ring: str
    endo: str | None = None
    bounds: dict = field(default_factory=dict)
    witness: dict | None = None
    elapsed: float = 0.0
    # unserialized witness values, kept for replay
    raw: dict | None = field(default=None, repr=False, compare=False)

    def __bool__(self):
        return self.holds != FALSE

    def to_dict(self, timing=True):
        out = {
            "property": self.property,
            "ring": self.ring,
            "endo": self.endo,
            "bounds": self.bounds,
            "holds": self.holds,
            "witness": self.witness,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out

    def to_json(self, timing=False):
        return json.dumps(self.to_dict(timing=timing), sort_keys=True)


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        verdict = fn(*args, **kwargs)
        verdict.elapsed = time.perf_counter() - start
        return verdict
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    wrapper.__wrapped__ = fn
    return wrapper


# ---------------------------------------------------------------------------
# element-level properties


class _Elements:
    """Uniform access to a ring's (bounded) carrier: indices when finite."""

    def __init__(self, ring, endo, bound):
        if ring.finite:
            t = ring.tables()
            M = t.mul
            self.items = list(range(t.n))
            self.mul = lambda i, j: M[i][j]
            self.zero = 0
            self.value = t.elems.__getitem__
            self.sigma = endo.power_table(1).__getitem__ if endo is not None else None
            self.exhaustive = True
        else:
            if bound is None:
                raise NotEnumerable(f"{ring} is infinite; pass an element bound")
            self.items = ring.elements(bound)
            self.mul = ring.mul
            self.zero = ring.zero
            self.value = lambda e: e
            self.sigma = endo
            self.exhaustive = False


def _nilpotent(v, limit):
    def at(a):
        if a == v.zero:
            return None
        p = a
        for k in range(2, limit + 1):
            p = v.mul(p, a)
            if p == v.zero:
                return {"a": a, "k": k}
        return None
    return at


def _pairs(v, bad):
    def at(a):
        for b in v.items:
            if bad(a, b):
                return {"a": a, "b": b}
        return None
    return at


def _triples(v, left, right):
    """Least (a, b, r) with ab = 0 and left(a, r) * right(b) != 0."""
    mul, zero = v.mul, v.zero

    def at(a):
        for b in v.items:
            if mul(a, b) != zero:
                continue
            rb = right(b)
            for r in v.items:
                if mul(left(a, r), rb) != zero:
                    return {"a": a, "b": b, "r": r}
        return None
    return at


def _element_finder(prop, v):
    mul, zero, s = v.mul, v.zero, v.sigma
    if prop == "commutative":
        return _pairs(v, lambda a, b: mul(a, b) != mul(b, a))
    if prop == "domain":
        return _pairs(v, lambda a, b: a != zero and b != zero and mul(a, b) == zero)
    if prop == "reduced":
        return _nilpotent(v, len(v.items))
    if prop == "reversible":
        return _pairs(v, lambda a, b: mul(a, b) == zero and mul(b, a) != zero)
    if prop == "semicommutative":
        return _triples(v, mul, lambda b: b)
    if prop == "sigma-compatible":
        return _pairs(v, lambda a, b: (mul(a, b) == zero) != (mul(a, s(b)) == zero))
    if prop == "sigma-semicommutative":
        return _triples(v, mul, s)
    if prop == "sigma-reversible-right":
        return _pairs(v, lambda a, b: mul(a, b) == zero and mul(b, s(a)) != zero)
    if prop == "sigma-reversible-left":
        return _pairs(v, lambda a, b: mul(a, b) == zero and mul(s(b), a) != zero)
    raise InvalidSpec(f"unknown element property {prop!r}")


@_timed
def check_element_property(ring, prop, endo=None, bound=None, threads=1):
    """Decide an element-quantified property (see ``ELEMENT_PROPERTIES``).

    Finite rings are scanned completely; infinite rings need ``bound`` and
    yield at best ``true-up-to-bound``.
    """
    if prop not in ELEMENT_PROPERTIES:
        raise InvalidSpec(f"{prop!r} is not an element property")
    if prop in SIGMA_PROPERTIES and endo is None:
        raise MissingEndo(f"{prop} needs an endomorphism")
    v = _Elements(ring, endo if prop in SIGMA_PROPERTIES else None, bound)
    hit = first_hit(v.items, _element_finder(prop, v), threads)
    bounds = {} if ring.finite else {"element-bound": bound}
    endo_spec = endo.spec if prop in SIGMA_PROPERTIES else None
    if hit is None:
        return Verdict(prop, TRUE_EXHAUSTIVE if v.exhaustive else TRUE_BOUNDED, ring.spec, endo_spec, bounds)
    raw = {k: (v.value(x) if k != "k" else x) for k, x in hit[1].items()}
    witness = {k: (ring.serialize(x) if k != "k" else x) for k, x in raw.items()}
    return Verdict(prop, FALSE, ring.spec, endo_spec, bounds, witness, raw=raw)


def refute_pointwise(ring, prop, elements, endo=None):
    """Test one instance of an element property's defining implication.

    ``elements`` supplies (a, b) or (a, b, r) as values or text.  Returns a
    false :class:`Verdict` when the instance refutes the property, else None.
    """
    vals = [ring.parse(e) for e in elements]
    v = _Elements.__new__(_Elements)
    v.items, v.mul, v.zero = vals, ring.mul, ring.zero
    v.value, v.sigma, v.exhaustive = (lambda e: e), endo, False
    if prop in SIGMA_PROPERTIES and endo is None:
        raise MissingEndo(f"{prop} needs an endomorphism")
    names = ("a", "b", "r")
    mul, zero, s = ring.mul, ring.zero, endo
    a, b = vals[0], vals[1]
    refuted = {
        "commutative": lambda: mul(a, b) != mul(b, a),
        "domain": lambda: a != zero and b != zero and mul(a, b) == zero,
        "reversible": lambda: mul(a, b) == zero and mul(b, a) != zero,
        "semicommutative": lambda: mul(a, b) == zero and mul(mul(a, vals[2]), b) != zero,
        "sigma-compatible": lambda: (mul(a, b) == zero) != (mul(a, s(b)) == zero),
        "sigma-semicommutative": lambda: mul(a, b) == zero and mul(mul(a, vals[2]), s(b)) != zero,
        "sigma-reversible-right": lambda: mul(a, b) == zero and mul(b, s(a)) != zero,
        "sigma-reversible-left": lambda: mul(a, b) == zero and mul(s(b), a) != zero,
    }
    if prop not in refuted:
        raise InvalidSpec(f"no pointwise form for {prop!r}")
    if not refuted[prop]():
        return None
    raw = dict(zip(names, vals))
    return Verdict(prop, FALSE, ring.spec, endo.spec if endo is not None and prop in SIGMA_PROPERTIES else None,
                   {"pointwise": True}, {k: ring.serialize(x) for k, x in raw.items()}, raw=raw)


def is_domain(ring):
    return ring.finite and bool(check_element_property(ring, "domain"))


# ---------------------------------------------------------------------------
# conditions (C1) and (C2)


@_timed
def check_condition_C(obj, endo, which, bound=None, threads=1):
    """(C1): m a = 0 implies m sigma(a) = 0.  (C2): m sigma(a) a = 0 implies m sigma(a) = 0.

    The witness is the least (a, m), compared on a first.  ``obj`` is a module or a ring (taken as a module over itself); ``endo``
    acts on the base ring.
    """
    which = which.upper().replace("CONDITION-", "")
    if which not in ("C1", "C2"):
        raise InvalidSpec(f"unknown condition {which!r}")
    module = SelfModule(obj) if isinstance(obj, Ring) else obj
    ring = module.ring
    if endo is None:
        raise MissingEndo("conditions C1/C2 need an endomorphism")
    finite = module.finite and ring.finite
    if not finite and bound is None:
        raise NotEnumerable(f"{module} over {ring} is infinite; pass an element bound")
    ms = module.elements(bound)
    scalars = ring.elements(bound)
    act, zero = module.act, module.zero
    images = [endo(a) for a in scalars]

    if which == "C1":
        def bad(m, a, sa):
            return act(m, a) == zero and act(m, sa) != zero
    else:
        def bad(m, a, sa):
            msa = act(m, sa)
            return act(msa, a) == zero and msa != zero

    # witnesses are ordered by the scalar a first, then by m
    def at(k):
        a, sa = scalars[k], images[k]
        for m in ms:
            if bad(m, a, sa):
                return {"m": m, "a": a}
        return None

    hit = first_hit(range(len(scalars)), at, threads)
    prop = f"condition-{which}"
    ring_desc = ring.spec if module.kind == "self" else f"{module.spec} over {ring.spec}"
    bounds = {} if finite else {"element-bound": bound}
    if hit is None:
        return Verdict(prop, TRUE_EXHAUSTIVE if finite else TRUE_BOUNDED, ring_desc, endo.spec, bounds)
    raw = hit[1]
    witness = {"m": module.serialize(raw["m"]), "a": ring.serialize(raw["a"])}
    return Verdict(prop, FALSE, ring_desc, endo.spec, bounds, witness, raw=raw)


# ---------------------------------------------------------------------------
# polynomial-quantified properties


class PolyWorld:
    """Index-level view of R[x] or R[x; sigma] for a finite ring R."""

    def __init__(self, ring, endo=None):
        if not ring.finite:
            raise NotEnumerable(f"{ring} is not finite")
        self.ring = ring
        self.t = t = ring.tables()
        self.n = t.n
        self.endo = endo
        self.ident = list(range(t.n))
        self.sys = ConvSystem(t.mul, t.add, t.neg, t.n)
        self.var = "x"
        self._colzero = None

    def tw(self, i):
        if self.endo is None:
            return self.ident
        return self.endo.power_table(i)

    def twists(self, length, offset=0):
        return [self.tw(i + offset) for i in range(length)]

    def product(self, a, b):
        return _strip(self.sys.product(a, b, self.twists(len(a))))

    def right_const_annihilators(self, p):
        """Bitmask of constants c with p c = 0."""
        mask = self.sys.full
        for i, a in enumerate(p):
            if a:
                mask &= self.sys.masks(a, self.tw(i)).get(0, 0)
        return mask

    def left_const_annihilators(self, q):
        """Bitmask of constants c with c q = 0 (coefficientwise)."""
        if self._colzero is None:
            M, n = self.t.mul, self.n
            self._colzero = [sum(1 << c for c in range(n) if M[c][b] == 0) for b in range(n)]
        mask = self.sys.full
        for b in q:
            mask &= self._colzero[b]
        return mask

    def annihilators(self, p, degree):
        return self.sys.solutions([(p, self.twists(len(p)))], degree)

    def values(self, p):
        return tuple(self.t.elems[i] for i in p)

    def text(self, p):
        return format_poly(self.values(p), self.ring, self.var)

    def polys(self, degree):
        return list(enumerate_index_polys(self.n, degree))


def _strip(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_verdict(prop, ring_desc, endo, degree, hit, render):
    bounds = {"degree": degree}
    endo_spec = endo.spec if endo is not None else None
    if hit is None:
        return Verdict(prop, TRUE_BOUNDED, ring_desc, endo_spec, bounds)
    raw, witness = render(hit[1])
    return Verdict(prop, FALSE, ring_desc, endo_spec, bounds, witness, raw=raw)


@_timed
def check_mccoy(ring, variant="right", endo=None, degree=2, threads=1, ceiling=None):
    """Right, left or sigma-skew McCoy condition over polynomials of degree <= ``degree``.

    The witness is the least pair (p, q) of nonzero polynomials with pq = 0
    admitting no nonzero constant c with pc = 0 (right, sigma-skew) or
    cq = 0 (left).
    """
    if variant not in ("right", "left", "sigma-skew"):
        raise InvalidSpec(f"unknown McCoy variant {variant!r}")
    if variant == "sigma-skew" and endo is None:
        raise MissingEndo("sigma-skew McCoy needs an endomorphism")
    if degree < 1:
        raise InvalidSpec("degree bound must be >= 1")
    world = PolyWorld(ring, endo if variant == "sigma-skew" else None)
    check_budget(count_polys(world.n, degree) ** 2, ceiling, f"McCoy scan of {ring} at degree {degree}")
    polys = world.polys(degree)[1:]

    if variant == "left":
        def at(p):
            for q in world.annihilators(p, degree):
                if not world.left_const_annihilators(q) & ~1:
                    return p, q
            return None
    else:
        def at(p):
            if world.right_const_annihilators(p) & ~1:
                return None
            q = next(world.annihilators(p, degree), None)
            return None if q is None else (p, q)

    def render(pq):
        p, q = pq
        return ({"p": world.values(p), "q": world.values(q)},
                {"p": world.text(p), "q": world.text(q)})

    prop = "sigma-skew-mccoy" if variant == "sigma-skew" else f"mccoy-{variant}"
    return _poly_verdict(prop, ring.spec, world.endo, degree, first_hit(polys, at, threads), render)


@_timed
def check_armendariz(obj, degree=2, threads=1, ceiling=None):
    """Armendariz condition for a ring or a module at polynomial degree <= ``degree``.

    Witness: least pair (m, f) with m f = 0 but some m_i a_j != 0.
    """
    if degree < 1:
        raise InvalidSpec("degree bound must be >= 1")
    if isinstance(obj, Ring):
        if not obj.finite:
            raise NotEnumerable(f"{obj} is not finite")
        t = obj.tables()
        T, gadd, gneg, nl = t.mul, t.add, t.neg, t.n
        left_elems, left_fmt, prop, desc = t.elems, obj, "armendariz-ring", obj.spec
        ring = obj
    elif isinstance(obj, RightModule):
        ring = obj.ring
        if not (obj.finite and ring.finite):
            raise NotEnumerable(f"{obj} is not finite")
        mt = obj.tables()
        T, gadd, gneg, nl = mt.act, mt.add, mt.neg, mt.n
        left_elems, left_fmt, prop, desc = mt.elems, obj, "armendariz-module", f"{obj.spec} over {ring.spec}"
    else:
        raise InvalidSpec(f"cannot check Armendariz on {obj!r}")
    rt = ring.tables()
    check_budget(count_polys(nl, degree) * count_polys(rt.n, degree), ceiling,
                 f"Armendariz scan of {desc} at degree {degree}")
    sys = ConvSystem(T, gadd, gneg, rt.n)
    ident = list(range(rt.n))
    lefts = list(enumerate_index_polys(nl, degree))[1:]

    def at(m):
        for f in sys.solutions([(m, [ident] * len(m))], degree):
            for mi in m:
                row = T[mi]
                for aj in f:
                    if row[aj]:
                        return m, f
        return None

    def render(mf):
        m, f = mf
        mv, fv = tuple(left_elems[i] for i in m), tuple(rt.elems[i] for i in f)
        return ({"m": mv, "f": fv},
                {"m": format_poly(mv, left_fmt, "x"), "f": format_poly(fv, ring, "x")})

    return _poly_verdict(prop, desc, None, degree, first_hit(lefts, at, threads), render)


@_timed
def check_skewring_semicommutative(ring, endo, degree=2, threads=1, ceiling=None):
    """Scan p, q of degree <= ``degree`` with pq = 0 for some h (deg <= degree) with phq != 0.

    Witness: least (p, q, h) in that order of comparison.
    """
    if endo is None:
        raise MissingEndo("skew semicommutativity needs an endomorphism")
    if degree < 1:
        raise InvalidSpec("degree bound must be >= 1")
    world = PolyWorld(ring, endo)
    check_budget(count_polys(world.n, degree) ** 2, ceiling,
                 f"skew semicommutativity scan of {ring} at degree {degree}")
    polys = world.polys(degree)
    M = world.t.mul

    def phq(p, h, q):
        return world.product(world.product(p, h), q)

    def monomials_kill(p, q):
        # p (c x^j) q = p (c sigma^j(q)) x^j, so test p (c sigma^j(q)) = 0
        for j in range(degree + 1):
            tj = world.tw(j)
            sq = [tj[b] for b in q]
            for c in range(1, world.n):
                row = M[c]
                if world.product(p, _strip([row[b] for b in sq])):
                    return False
        return True

    def at(p):
        for q in world.annihilators(p, degree):
            if monomials_kill(p, q):
                continue
            for h in polys[1:]:
                if phq(p, h, q):
                    return p, q, h
        return None

    def render(pqh):
        p, q, h = pqh
        raw = {"p": world.values(p), "q": world.values(q), "h": world.values(h)}
        text = {"p": world.text(p), "q": world.text(q), "h": world.text(h),
                "phq": world.text(phq(p, h, q))}
        return raw, text

    return _poly_verdict("skew-semicommutative", ring.spec, endo, degree,
                         first_hit(polys[1:], at, threads), render)


def check_property(obj, prop, endo=None, degree=2, bound=None, threads=1, ceiling=None):
    """Dispatch a property tag to its checker."""
    if prop in ELEMENT_PROPERTIES:
        return check_element_property(obj, prop, endo=endo, bound=bound, threads=threads)
    if prop in ("condition-C1", "condition-C2"):
        return check_condition_C(obj, endo, prop[-2:], bound=bound, threads=threads)
    if prop in ("armendariz-ring", "armendariz-module"):
        return check_armendariz(obj, degree=degree, threads=threads, ceiling=ceiling)
    if prop in ("mccoy-right", "mccoy-left"):
        return check_mccoy(obj, prop.split("-")[1], degree=degree, threads=threads, ceiling=ceiling)
    if prop == "sigma-skew-mccoy":
        return check_mccoy(obj, "sigma-skew", endo=endo, degree=degree, threads=threads, ceiling=ceiling)
    if prop == "skew-semicommutative":
        return check_skewring_semicommutative(obj, endo, degree=degree, threads=threads, ceiling=ceiling)
    raise InvalidSpec(f"unknown property {prop!r}")

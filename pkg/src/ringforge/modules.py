"""Right modules over commutative rings and the Nagata extension R (+)_sigma M."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .endo import Endomorphism
from .errors import (
    AxiomViolation,
    ContextMismatch,
    InvalidSpec,
    NonCommutativeBase,
    NotEnumerable,
    ParseError,
)
from .rings import (
    AXIOM_CHECK_CAP,
    AXIOM_SAMPLES,
    AXIOM_SEED,
    INFINITE,
    SAMPLE_BOUND,
    PolyRing,
    Ring,
    ZMod,
    format_poly,
    parse_poly,
    strip_zeros,
    verify_axioms,
)
from .text import split_top, strip_wrapping


@dataclass
class ModuleTables:
    elems: list
    index: dict
    add: list
    neg: list
    act: list  # act[m][a] with a a ring index

    @property
    def n(self):
        return len(self.elems)


class RightModule:
    """A right module M over ``ring``; subclasses supply the carrier."""

    kind = "module"

    def __init__(self, ring):
        self.ring = ring
        self._tables = None

    finite = True

    def add(self, m, n):
        raise NotImplementedError

    def neg(self, m):
        raise NotImplementedError

    def act(self, m, a):
        """The right action m.a."""
        raise NotImplementedError

    def _enumerate(self, bound):
        raise NotImplementedError

    def contains(self, m):
        raise NotImplementedError

    def serialize(self, m):
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def key(self, m):
        if self.finite:
            return self.tables().index[m]
        raise NotImplementedError

    @property
    def order(self):
        return self._order() if self.finite else INFINITE

    def elements(self, bound=None):
        if self.finite:
            return list(self._enumerate(None))
        if bound is None:
            raise NotEnumerable(f"{self} is infinite; an element bound is required")
        return sorted(self._enumerate(bound), key=self.key)

    def is_zero(self, m):
        return m == self.zero

    def tables(self):
        if self._tables is None:
            if not (self.finite and self.ring.finite):
                raise NotEnumerable(f"{self} has no finite action table")
            elems = self.elements()
            index = {m: i for i, m in enumerate(elems)}
            rt = self.ring.tables()
            try:
                add = [[index[self.add(m, n)] for n in elems] for m in elems]
                neg = [index[self.neg(m)] for m in elems]
                act = [[index[self.act(m, a)] for a in rt.elems] for m in elems]
            except KeyError as exc:
                raise AxiomViolation(f"{self}: operation leaves the carrier ({exc})") from None
            self._tables = ModuleTables(elems, index, add, neg, act)
        return self._tables

    def __repr__(self):
        return self.spec

    __str__ = __repr__


class SelfModule(RightModule):
    """The ring acting on itself by right multiplication."""

    kind = "self"

    def __init__(self, ring):
        super().__init__(ring)
        self.finite = ring.finite
        self.zero = ring.zero
        self.one = ring.one  # lets polynomials print 1*x as x
        self.spec = "self"

    def _order(self):
        return self.ring.order

    def add(self, m, n):
        return self.ring.add(m, n)

    def neg(self, m):
        return self.ring.neg(m)

    def act(self, m, a):
        return self.ring.mul(m, a)

    def _enumerate(self, bound):
        return self.ring.elements(bound)

    def contains(self, m):
        return self.ring.contains(m)

    def key(self, m):
        return self.ring.key(m)

    def serialize(self, m):
        return self.ring.serialize(m)

    def parse(self, text):
        return self.ring.parse(text)


class PowerModule(RightModule):
    """R^k with the diagonal right action."""

    kind = "power"

    def __init__(self, ring, k):
        super().__init__(ring)
        if not isinstance(k, int) or k < 1:
            raise InvalidSpec(f"power(k) needs k >= 1, got {k!r}")
        self.k = k
        self.finite = ring.finite
        self.zero = (ring.zero,) * k
        self.spec = f"power({k})"

    def _order(self):
        return self.ring.order ** self.k

    def add(self, m, n):
        return tuple(self.ring.add(x, y) for x, y in zip(m, n))

    def neg(self, m):
        return tuple(self.ring.neg(x) for x in m)

    def act(self, m, a):
        return tuple(self.ring.mul(x, a) for x in m)

    def _enumerate(self, bound):
        return itertools.product(self.ring.elements(bound), repeat=self.k)

    def contains(self, m):
        return isinstance(m, tuple) and len(m) == self.k and all(self.ring.contains(x) for x in m)

    def key(self, m):
        if self.finite:
            return super().key(m)
        return tuple(self.ring.key(x) for x in m)

    def serialize(self, m):
        return "(" + ",".join(self.ring.serialize(x) for x in m) + ")"

    def parse(self, text):
        inner = strip_wrapping(text)
        parts = split_top(inner, ",") if inner is not None else []
        if len(parts) != self.k:
            raise ParseError(f"expected {self.k} components in {text!r}")
        return tuple(self.ring.parse(p) for p in parts)


class CyclicModule(RightModule):
    """Z_{n1} x ... x Z_{nr} over zmod(n), each n_i dividing n."""

    kind = "cyclic"

    def __init__(self, ring, moduli):
        super().__init__(ring)
        if not isinstance(ring, ZMod):
            raise InvalidSpec("cyclic modules are defined over zmod rings")
        moduli = tuple(moduli)
        if not moduli or any(not isinstance(q, int) or q < 1 or ring.n % q for q in moduli):
            raise InvalidSpec(f"cyclic moduli must divide {ring.n}, got {moduli}")
        self.moduli = moduli
        self.zero = (0,) * len(moduli)
        self.spec = "cyclic(" + ",".join(map(str, moduli)) + ")"

    def _order(self):
        out = 1
        for q in self.moduli:
            out *= q
        return out

    def add(self, m, n):
        return tuple((x + y) % q for x, y, q in zip(m, n, self.moduli))

    def neg(self, m):
        return tuple(-x % q for x, q in zip(m, self.moduli))

    def act(self, m, a):
        return tuple(x * a % q for x, q in zip(m, self.moduli))

    def _enumerate(self, bound):
        return itertools.product(*(range(q) for q in self.moduli))

    def contains(self, m):
        return (isinstance(m, tuple) and len(m) == len(self.moduli)
                and all(isinstance(x, int) and 0 <= x < q for x, q in zip(m, self.moduli)))

    def serialize(self, m):
        return "(" + ",".join(map(str, m)) + ")"

    def parse(self, text):
        inner = strip_wrapping(text)
        parts = split_top(inner, ",") if inner is not None else []
        if len(parts) != len(self.moduli):
            raise ParseError(f"expected {len(self.moduli)} components in {text!r}")
        return tuple(int(p) % q for p, q in zip(parts, self.moduli))


class TableModule(RightModule):
    """A finite module given by labels, an addition table and an action map.

    ``action`` maps ``(label, ring element)`` to a label.
    """

    kind = "table"

    def __init__(self, ring, labels, add_table, action, name="table"):
        super().__init__(ring)
        self.labels = tuple(labels)
        self._pos = {lab: i for i, lab in enumerate(self.labels)}
        self._add_t = [list(r) for r in add_table]
        self._action = dict(action)
        self.zero = self.labels[0]
        n = len(self.labels)
        self._neg_t = []
        for i in range(n):
            inv = [j for j in range(n) if self._add_t[i][j] == 0]
            if not inv:
                raise AxiomViolation(f"{name}: {self.labels[i]!r} has no additive inverse")
            self._neg_t.append(inv[0])
        self.spec = name

    def _order(self):
        return len(self.labels)

    def add(self, m, n):
        return self.labels[self._add_t[self._pos[m]][self._pos[n]]]

    def neg(self, m):
        return self.labels[self._neg_t[self._pos[m]]]

    def act(self, m, a):
        return self._action[(m, a)]

    def _enumerate(self, bound):
        return iter(self.labels)

    def contains(self, m):
        return m in self._pos

    def serialize(self, m):
        return str(m)

    def parse(self, text):
        for lab in self.labels:
            if str(lab) == text.strip():
                return lab
        raise ParseError(f"{text!r} is not a module element")


class PolyModule(RightModule):
    """M[x] as a right module over R[x] (bounded enumeration by degree)."""

    kind = "poly-module"
    finite = False

    def __init__(self, module, ring=None):
        super().__init__(ring or PolyRing(module.ring))
        self.base = module
        self.zero = ()
        self.spec = f"poly-module({module.spec})"

    def add(self, m, n):
        z, add = self.base.zero, self.base.add
        size = max(len(m), len(n))
        return strip_zeros((add(m[i] if i < len(m) else z, n[i] if i < len(n) else z)
                            for i in range(size)), z)

    def neg(self, m):
        return tuple(self.base.neg(x) for x in m)

    def act(self, m, f):
        return module_poly_mul(self.base, m, f)

    def _enumerate(self, bound):
        yield ()
        elems = self.base.elements()
        for deg in range(bound + 1):
            for low in itertools.product(elems, repeat=deg):
                for lead in elems[1:]:
                    yield tuple(low) + (lead,)

    def contains(self, m):
        return isinstance(m, tuple) and all(self.base.contains(x) for x in m)

    def key(self, m):
        return (len(m), tuple(self.base.key(x) for x in m))

    def serialize(self, m):
        return format_poly(m, self.base, "x")

    def parse(self, text):
        return parse_poly(text, self.base, "x")


def module_poly_mul(module, m, f):
    """Convolution of module coefficients ``m`` with ring coefficients ``f``."""
    if not m or not f:
        return ()
    z = module.zero
    out = [z] * (len(m) + len(f) - 1)
    for i, x in enumerate(m):
        for j, a in enumerate(f):
            out[i + j] = module.add(out[i + j], module.act(x, a))
    return strip_zeros(out, z)


@dataclass(frozen=True)
class ModulePolynomial:
    module: RightModule
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", strip_zeros(self.coeffs, self.module.zero))

    def __mul__(self, f):
        """Right action by an ordinary polynomial (tuple of ring coefficients)."""
        if isinstance(f, ModulePolynomial):
            raise ContextMismatch("module polynomials multiply by ring polynomials")
        return ModulePolynomial(self.module, module_poly_mul(self.module, self.coeffs, tuple(f)))

    def __str__(self):
        return format_poly(self.coeffs, self.module, "x")

    @property
    def is_zero(self):
        return not self.coeffs


def verify_module(module, cap=AXIOM_CHECK_CAP, samples=AXIOM_SAMPLES, seed=AXIOM_SEED):
    """Check the module axioms; exhaustive when the carrier has at most ``cap`` elements."""
    ring = module.ring
    if module.finite and ring.finite and module.order <= cap:
        mt, rt = module.tables(), ring.tables()
        ADD, ACT = np.array(mt.add), np.array(mt.act)
        RA, RM = rt.np_add, rt.np_mul
        m_idx, r_idx = np.arange(mt.n), np.arange(rt.n)
        checks = {
            "additive commutativity": (ADD == ADD.T).all(),
            "additive associativity": (ADD[ADD[:, :, None], m_idx[None, None, :]]
                                       == ADD[m_idx[:, None, None], ADD[None, :, :]]).all(),
            "m.1 = m": (ACT[:, rt.one] == m_idx).all(),
            "(m+n)a = ma+na": (ACT[ADD] == ADD[ACT[:, None, :], ACT[None, :, :]]).all(),
            "m(a+b) = ma+mb": (ACT[:, RA] == ADD[ACT[:, :, None], ACT[:, None, :]]).all(),
            "m(ab) = (ma)b": (ACT[:, RM] == ACT[ACT[:, :, None], r_idx[None, None, :]]).all(),
        }
        for name, ok in checks.items():
            if not ok:
                raise AxiomViolation(f"module {module}: {name} fails")
        return "exhaustive"
    rng = random.Random(seed)
    mpool = module.elements() if module.finite else module.elements(SAMPLE_BOUND)
    rpool = ring.elements() if ring.finite else ring.elements(SAMPLE_BOUND)
    add, act = module.add, module.act
    for _ in range(samples):
        m, n = rng.choice(mpool), rng.choice(mpool)
        a, b = rng.choice(rpool), rng.choice(rpool)
        ok = (act(m, ring.one) == m
              and act(add(m, n), a) == add(act(m, a), act(n, a))
              and act(m, ring.add(a, b)) == add(act(m, a), act(m, b))
              and act(m, ring.mul(a, b)) == act(act(m, a), b)
              and add(m, n) == add(n, m))
        if not ok:
            raise AxiomViolation(f"module {module}: axioms fail at sampled elements")
    return "sampled"


def construct_module(ring, spec, verify=True):
    """Build a verified right module over a commutative ring.

    ``spec`` is ``"self"``, ``"power(k)"``, ``"cyclic(n1,...)"``, a parsed
    spec node, or an already built :class:`RightModule`.
    """
    if not ring.is_commutative():
        raise NonCommutativeBase(f"{ring} is not commutative")
    if isinstance(spec, RightModule):
        module = spec
    else:
        from .specs import build_module
        module = build_module(ring, spec)
    if module.ring is not ring:
        raise ContextMismatch("module is over a different ring")
    if verify:
        verify_module(module)
    return module


class NagataRing(Ring):
    """Pairs (a, m) with (a,m)(b,n) = (ab, n.sigma(a) + m.b)."""

    kind = "nagata"

    def __init__(self, base, module, endo):
        super().__init__()
        self.base, self.module, self.endo = base, module, endo
        self.finite = base.finite and module.finite
        self.zero = (base.zero, module.zero)
        self.one = (base.one, module.zero)
        self.spec = f"nagata({base.spec},{module.spec},{endo.spec})"

    def _order(self):
        return self.base.order * self.module.order

    def _add(self, x, y):
        return (self.base.add(x[0], y[0]), self.module.add(x[1], y[1]))

    def _neg(self, x):
        return (self.base.neg(x[0]), self.module.neg(x[1]))

    def _mul(self, x, y):
        (a, m), (b, n) = x, y
        M = self.module
        return (self.base.mul(a, b), M.add(M.act(n, self.endo(a)), M.act(m, b)))

    def _enumerate(self, bound):
        return itertools.product(self.base.elements(bound), self.module.elements(bound))

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == 2
                and self.base.contains(x[0]) and self.module.contains(x[1]))

    def key(self, x):
        if self.finite:
            return super().key(x)
        return (self.base.key(x[0]), self.module.key(x[1]))

    def serialize(self, x):
        return f"({self.base.serialize(x[0])} | {self.module.serialize(x[1])})"

    def _parse(self, text):
        inner = strip_wrapping(text)
        parts = split_top(inner, "|") if inner is not None else []
        if len(parts) != 2:
            raise ParseError(f"expected (a | m), got {text!r}")
        return (self.base.parse(parts[0]), self.module.parse(parts[1]))

    def _structurally_commutative(self):
        return self.endo.is_identity

    def projection(self, x):
        return x[0]


def construct_nagata(base, module, endo, verify=True):
    """The Nagata extension of commutative ``base`` by ``module`` twisted by ``endo``."""
    if not base.is_commutative():
        raise NonCommutativeBase(f"{base} is not commutative")
    if not isinstance(module, RightModule):
        module = construct_module(base, module)
    if module.ring is not base or endo.ring is not base:
        raise ContextMismatch("module and endomorphism must live over the base ring")
    ring = NagataRing(base, module, endo)
    if verify:
        verify_axioms(ring)
    return ring


def extend_coefficientwise(endo, poly_ring=None):
    """sigma acting on R[x] coefficient by coefficient."""
    R = endo.ring
    P = poly_ring or PolyRing(R)
    if P.base is not R:
        raise ContextMismatch("polynomial ring is over a different base")

    def apply(f):
        return strip_zeros((endo(c) for c in f), R.zero)
    return Endomorphism(P, "coefficientwise", apply, spec=f"coefficientwise({endo.spec})")


@dataclass
class TorsionResult:
    elements: list
    classification: str  # "torsion" | "torsion-free" | "mixed"
    base_is_domain: bool

    @property
    def note(self):
        return None if self.base_is_domain else "classical-context: domain"


def torsion_submodule(module):
    """T(M) = {m : m.a = 0 for some nonzero scalar a}, with its classification."""
    ring = module.ring
    if not (module.finite and ring.finite):
        raise NotEnumerable("torsion submodule needs a finite module over a finite ring")
    scalars = ring.elements()[1:]
    members = [m for m in module.elements()
               if any(module.is_zero(module.act(m, a)) for a in scalars)]
    total = module.order
    if len(members) == total:
        kind = "torsion"
    elif members == [module.zero]:
        kind = "torsion-free"
    else:
        kind = "mixed"
    from .properties import is_domain
    return TorsionResult(members, kind, is_domain(ring))

"""Concrete associative unital rings with canonical enumeration.

Elements are plain immutable Python values (ints and nested tuples), so
equality and hashing are structural.  Finite rings additionally expose
index tables (:class:`Tables`) which every exhaustive checker runs on.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .errors import (
    AxiomViolation,
    BoundTooLarge,
    InvalidSpec,
    NotEnumerable,
    ParseError,
    RingMismatch,
    TrivialRing,
)
from .text import poly_terms, split_top, strip_wrapping

INFINITE = "infinite"

AXIOM_CHECK_CAP = 64
AXIOM_SAMPLES = 1000
AXIOM_SEED = 0
TABLE_CAP = 1024
# element bound used to draw sample pools from infinite rings
SAMPLE_BOUND = 2


@dataclass
class Tables:
    """Index form of a finite ring; index 0 is always zero."""

    elems: list
    index: dict
    add: list
    mul: list
    neg: list
    one: int
    np_add: np.ndarray
    np_mul: np.ndarray

    @property
    def n(self):
        return len(self.elems)


class Ring:
    kind = "ring"

    def __init__(self):
        self._tables = None
        self._commutative = None

    # -- subclass hooks -------------------------------------------------
    finite = False

    def _add(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _enumerate(self, bound):
        raise NotImplementedError

    def contains(self, a):
        raise NotImplementedError

    def serialize(self, a):
        raise NotImplementedError

    def _parse(self, text):
        raise NotImplementedError

    def key(self, a):
        """Sort key realising the canonical element order."""
        if self.finite:
            return self.tables().index[a]
        raise NotImplementedError

    # -- public arithmetic ---------------------------------------------
    def add(self, a, b):
        t = self._tables
        if t is not None:
            try:
                return t.elems[t.add[t.index[a]][t.index[b]]]
            except (KeyError, TypeError):
                raise RingMismatch(f"{a!r} or {b!r} not in {self}") from None
        return self._add(a, b)

    def mul(self, a, b):
        t = self._tables
        if t is not None:
            try:
                return t.elems[t.mul[t.index[a]][t.index[b]]]
            except (KeyError, TypeError):
                raise RingMismatch(f"{a!r} or {b!r} not in {self}") from None
        return self._mul(a, b)

    def neg(self, a):
        t = self._tables
        if t is not None:
            try:
                return t.elems[t.neg[t.index[a]]]
            except (KeyError, TypeError):
                raise RingMismatch(f"{a!r} not in {self}") from None
        return self._neg(a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a):
        return a == self.zero

    def power(self, a, k):
        result = self.one
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def check(self, a):
        if not self.contains(a):
            raise RingMismatch(f"{a!r} is not an element of {self}")
        return a

    def parse(self, text):
        if not isinstance(text, str):
            return self.check(text)
        return self._parse(text.strip())

    @property
    def order(self):
        if self.finite:
            return self._order()
        return INFINITE

    def elements(self, bound=None):
        """Canonically ordered elements, zero first.

        Finite rings ignore ``bound``; infinite rings require it.
        """
        if self.finite:
            if self._tables is not None:
                return list(self._tables.elems)
            return list(self._enumerate(None))
        if bound is None:
            raise NotEnumerable(f"{self} is infinite; an element bound is required")
        return sorted(self._enumerate(bound), key=self.key)

    def tables(self):
        if self._tables is None:
            if not self.finite:
                raise NotEnumerable(f"{self} has no finite multiplication table")
            if self._order() > TABLE_CAP:
                raise BoundTooLarge(f"{self} has order {self._order()} > table cap {TABLE_CAP}")
            self._tables = _build_tables(self)
        return self._tables

    def is_commutative(self):
        if self._commutative is None:
            if self.finite:
                m = self.tables().np_mul
                self._commutative = bool((m == m.T).all())
            else:
                self._commutative = self._structurally_commutative()
        return self._commutative

    def _structurally_commutative(self):
        raise NotImplementedError

    def __repr__(self):
        return self.spec

    def __str__(self):
        return self.spec


def _build_tables(ring):
    elems = list(ring._enumerate(None))
    index = {e: i for i, e in enumerate(elems)}
    if len(index) != len(elems):
        raise AxiomViolation(f"{ring}: enumeration has duplicates")
    if elems[0] != ring.zero:
        raise AxiomViolation(f"{ring}: enumeration must start at zero")
    n = len(elems)
    try:
        add = [[index[ring._add(a, b)] for b in elems] for a in elems]
        mul = [[index[ring._mul(a, b)] for b in elems] for a in elems]
        neg = [index[ring._neg(a)] for a in elems]
    except KeyError as exc:
        raise AxiomViolation(f"{ring}: operation leaves the carrier ({exc})") from None
    return Tables(elems, index, add, mul, neg, index[ring.one],
                  np.array(add, dtype=np.int64).reshape(n, n),
                  np.array(mul, dtype=np.int64).reshape(n, n))


def verify_axioms(ring, cap=AXIOM_CHECK_CAP, samples=AXIOM_SAMPLES, seed=AXIOM_SEED):
    """Check the ring axioms; exhaustive up to ``cap`` elements, sampled above."""
    if ring.zero == ring.one:
        raise TrivialRing(f"{ring}: zero equals one")
    if ring.finite and ring.order <= cap:
        _verify_exhaustive(ring)
        return "exhaustive"
    if ring.finite:
        pool = ring.elements()
    else:
        pool = ring.elements(SAMPLE_BOUND)
    rng = random.Random(seed)
    add, mul, neg = ring.add, ring.mul, ring.neg
    zero, one = ring.zero, ring.one
    for _ in range(samples):
        a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        ok = (
            add(a, b) == add(b, a)
            and add(add(a, b), c) == add(a, add(b, c))
            and add(a, zero) == a
            and add(a, neg(a)) == zero
            and mul(mul(a, b), c) == mul(a, mul(b, c))
            and mul(one, a) == a
            and mul(a, one) == a
            and mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
            and mul(add(a, b), c) == add(mul(a, c), mul(b, c))
        )
        if not ok:
            raise AxiomViolation(
                f"{ring}: axioms fail on ({ring.serialize(a)}, {ring.serialize(b)}, {ring.serialize(c)})")
    return "sampled"


def _verify_exhaustive(ring):
    t = ring.tables()
    A, M, n = t.np_add, t.np_mul, t.n
    r = np.arange(n)
    checks = {
        "additive commutativity": (A == A.T).all(),
        "additive identity": (A[0] == r).all() and (A[:, 0] == r).all(),
        "additive inverses": (A[r, np.array(t.neg)] == 0).all(),
        "additive associativity": (A[A[:, :, None], r[None, None, :]] == A[r[:, None, None], A[None, :, :]]).all(),
        "multiplicative identity": (M[t.one] == r).all() and (M[:, t.one] == r).all(),
        "multiplicative associativity": (M[M[:, :, None], r[None, None, :]] == M[r[:, None, None], M[None, :, :]]).all(),
        "left distributivity": (M[r[:, None, None], A[None, :, :]] == A[M[:, :, None], M[:, None, :]]).all(),
        "right distributivity": (M[A[:, :, None], r[None, None, :]] == A[M[:, None, :], M[None, :, :]]).all(),
    }
    for name, ok in checks.items():
        if not ok:
            raise AxiomViolation(f"{ring}: {name} fails")


def _int_key(v):
    return (abs(v), v < 0)


def _parse_int(text):
    try:
        return int(text.strip())
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}") from None


class ZMod(Ring):
    kind = "zmod"
    finite = True

    def __init__(self, n):
        super().__init__()
        if not isinstance(n, int) or n < 1:
            raise InvalidSpec(f"zmod needs n >= 2, got {n!r}")
        if n == 1:
            raise TrivialRing("zmod(1) is the trivial ring")
        self.n = n
        self.zero, self.one = 0, 1
        self.spec = f"zmod({n})"

    def _order(self):
        return self.n

    def _add(self, a, b):
        return (a + b) % self.n

    def _mul(self, a, b):
        return (a * b) % self.n

    def _neg(self, a):
        return -a % self.n

    def _enumerate(self, bound):
        return range(self.n)

    def contains(self, a):
        return isinstance(a, int) and 0 <= a < self.n

    def key(self, a):
        return a

    def serialize(self, a):
        return str(a)

    def _parse(self, text):
        return _parse_int(text) % self.n

    def _structurally_commutative(self):
        return True


class ProductRing(Ring):
    kind = "product"

    def __init__(self, factors):
        super().__init__()
        if len(factors) < 2:
            raise InvalidSpec("product needs at least two factors")
        self.factors = tuple(factors)
        self.finite = all(f.finite for f in factors)
        self.zero = tuple(f.zero for f in factors)
        self.one = tuple(f.one for f in factors)
        self.spec = "product(" + ",".join(f.spec for f in factors) + ")"

    def _order(self):
        out = 1
        for f in self.factors:
            out *= f.order
        return out

    def _add(self, a, b):
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def _mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def _neg(self, a):
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    def _enumerate(self, bound):
        return itertools.product(*(f.elements(bound) for f in self.factors))

    def contains(self, a):
        return (isinstance(a, tuple) and len(a) == len(self.factors)
                and all(f.contains(x) for f, x in zip(self.factors, a)))

    def key(self, a):
        if self.finite:
            return super().key(a)
        return tuple(f.key(x) for f, x in zip(self.factors, a))

    def serialize(self, a):
        return "(" + ",".join(f.serialize(x) for f, x in zip(self.factors, a)) + ")"

    def _parse(self, text):
        inner = strip_wrapping(text)
        if inner is None:
            raise ParseError(f"expected a parenthesized tuple, got {text!r}")
        parts = split_top(inner, ",")
        if len(parts) != len(self.factors):
            raise ParseError(f"expected {len(self.factors)} components in {text!r}")
        return tuple(f.parse(p) for f, p in zip(self.factors, parts))

    def _structurally_commutative(self):
        return all(f.is_commutative() for f in self.factors)


class MatrixRing(Ring):
    """Full k-by-k matrices over ``base``, entries stored row-major."""

    kind = "matrix"

    def __init__(self, k, base):
        super().__init__()
        if not isinstance(k, int) or k < 1:
            raise InvalidSpec(f"matrix size must be >= 1, got {k!r}")
        self.k, self.base = k, base
        self.finite = base.finite
        self.zero = tuple(tuple(base.zero for _ in range(k)) for _ in range(k))
        self.one = tuple(tuple(base.one if i == j else base.zero for j in range(k)) for i in range(k))
        self.spec = f"{self.kind}({k},{base.spec})"

    def _positions(self):
        return [(i, j) for i in range(self.k) for j in range(self.k)]

    def _order(self):
        return self.base.order ** len(self._positions())

    def _add(self, a, b):
        add = self.base.add
        return tuple(tuple(add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

    def _neg(self, a):
        return tuple(tuple(self.base.neg(x) for x in row) for row in a)

    def _mul(self, a, b):
        add, mul, k = self.base.add, self.base.mul, self.k
        rows = []
        for i in range(k):
            row = []
            for j in range(k):
                acc = self.base.zero
                for t in range(k):
                    acc = add(acc, mul(a[i][t], b[t][j]))
                row.append(acc)
            rows.append(tuple(row))
        return tuple(rows)

    def _enumerate(self, bound):
        positions = self._positions()
        k, z = self.k, self.base.zero
        for values in itertools.product(self.base.elements(bound), repeat=len(positions)):
            grid = [[z] * k for _ in range(k)]
            for (i, j), v in zip(positions, values):
                grid[i][j] = v
            yield tuple(tuple(row) for row in grid)

    def contains(self, a):
        if not (isinstance(a, tuple) and len(a) == self.k):
            return False
        allowed = set(self._positions())
        for i, row in enumerate(a):
            if not (isinstance(row, tuple) and len(row) == self.k):
                return False
            for j, x in enumerate(row):
                if not self.base.contains(x):
                    return False
                if (i, j) not in allowed and x != self.base.zero:
                    return False
        return True

    def key(self, a):
        if self.finite:
            return super().key(a)
        return tuple(self.base.key(a[i][j]) for i, j in self._positions())

    def serialize(self, a):
        return "[" + ",".join("[" + ",".join(self.base.serialize(x) for x in row) + "]" for row in a) + "]"

    def _parse(self, text):
        inner = strip_wrapping(text, "[", "]")
        if inner is None:
            raise ParseError(f"expected [[..],..] matrix, got {text!r}")
        rows = split_top(inner, ",")
        if len(rows) != self.k:
            raise ParseError(f"expected {self.k} rows in {text!r}")
        out = []
        for row in rows:
            cells = strip_wrapping(row, "[", "]")
            if cells is None:
                raise ParseError(f"bad matrix row {row!r}")
            parts = split_top(cells, ",")
            if len(parts) != self.k:
                raise ParseError(f"expected {self.k} entries in row {row!r}")
            out.append(tuple(self.base.parse(p) for p in parts))
        return self.check(tuple(out))

    def _structurally_commutative(self):
        return self.k == 1 and self.base.is_commutative()


class TriangularRing(MatrixRing):
    """Upper-triangular k-by-k matrices over ``base``."""

    kind = "triangular"

    def _positions(self):
        return [(i, j) for i in range(self.k) for j in range(i, self.k)]


class IntegerRing(Ring):
    kind = "integers"
    finite = False

    def __init__(self):
        super().__init__()
        self.zero, self.one = 0, 1
        self.spec = "integers"

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _enumerate(self, bound):
        return range(-bound, bound + 1)

    def contains(self, a):
        return isinstance(a, int) and not isinstance(a, bool)

    key = staticmethod(_int_key)

    def serialize(self, a):
        return str(a)

    def _parse(self, text):
        return _parse_int(text)

    def _structurally_commutative(self):
        return True


class CongruencePairs(Ring):
    """The subring {(a, b) in Z+Z : a = b mod m}."""

    kind = "congruence-pairs"
    finite = False

    def __init__(self, m):
        super().__init__()
        if not isinstance(m, int) or m < 2:
            raise InvalidSpec(f"congruence-pairs modulus must be >= 2, got {m!r}")
        self.m = m
        self.zero, self.one = (0, 0), (1, 1)
        self.spec = f"congruence-pairs({m})"

    def _add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _mul(self, a, b):
        return (a[0] * b[0], a[1] * b[1])

    def _neg(self, a):
        return (-a[0], -a[1])

    def _enumerate(self, bound):
        r = range(-bound, bound + 1)
        return ((a, b) for a in r for b in r if (a - b) % self.m == 0)

    def contains(self, a):
        return (isinstance(a, tuple) and len(a) == 2 and all(isinstance(x, int) for x in a)
                and (a[0] - a[1]) % self.m == 0)

    def key(self, a):
        return (_int_key(a[0]), _int_key(a[1]))

    def serialize(self, a):
        return f"({a[0]},{a[1]})"

    def _parse(self, text):
        inner = strip_wrapping(text)
        parts = split_top(inner, ",") if inner is not None else []
        if len(parts) != 2:
            raise ParseError(f"expected (a,b), got {text!r}")
        value = (_parse_int(parts[0]), _parse_int(parts[1]))
        if not self.contains(value):
            raise ParseError(f"{text!r}: components not congruent mod {self.m}")
        return value

    def _structurally_commutative(self):
        return True


def strip_zeros(coeffs, zero):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == zero:
        coeffs.pop()
    return tuple(coeffs)


def format_poly(coeffs, ring, var):
    """Render ``c0 + c1*x + ...`` omitting zero terms and unit coefficients."""
    if not coeffs:
        return "0"
    terms = []
    for i, c in enumerate(coeffs):
        if c == ring.zero:
            continue
        text = ring.serialize(c)
        if " + " in text:
            text = f"({text})"
        if i == 0:
            terms.append(text)
            continue
        mono = var if i == 1 else f"{var}^{i}"
        terms.append(mono if c == getattr(ring, "one", None) else f"{text}*{mono}")
    return " + ".join(terms)


def parse_poly(text, ring, var):
    inner = strip_wrapping(text)
    if inner is not None and " + " in inner:
        text = inner
    if text.strip() == "0":
        return ()
    terms = poly_terms(text, var)
    top = max(terms)
    coeffs = [ring.zero] * (top + 1)
    for exp, items in terms.items():
        for item in items:
            c = ring.one if item is None else ring.parse(item)
            coeffs[exp] = ring.add(coeffs[exp], c)
    return strip_zeros(coeffs, ring.zero)


class PolyRing(Ring):
    """Ordinary polynomial ring base[x]; bounded enumeration by degree."""

    kind = "poly"
    finite = False
    var = "x"

    def __init__(self, base):
        super().__init__()
        self.base = base
        self.zero, self.one = (), (base.one,)
        self.spec = f"poly({base.spec})"

    def _add(self, a, b):
        n, z, add = max(len(a), len(b)), self.base.zero, self.base.add
        return strip_zeros((add(a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n)), z)

    def _neg(self, a):
        return tuple(self.base.neg(c) for c in a)

    def _mul(self, a, b):
        if not a or not b:
            return ()
        add, mul, z = self.base.add, self.base.mul, self.base.zero
        out = [z] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = add(out[i + j], mul(x, y))
        return strip_zeros(out, z)

    def _enumerate(self, bound):
        if not self.base.finite:
            raise NotEnumerable(f"{self}: bounded enumeration needs a finite coefficient ring")
        yield ()
        elems = self.base.elements()
        for deg in range(bound + 1):
            for low in itertools.product(elems, repeat=deg):
                for lead in elems[1:]:
                    yield tuple(low) + (lead,)

    def contains(self, a):
        return (isinstance(a, tuple) and (not a or a[-1] != self.base.zero)
                and all(self.base.contains(c) for c in a))

    def key(self, a):
        return (len(a), tuple(self.base.key(c) for c in a))

    def serialize(self, a):
        return format_poly(a, self.base, self.var)

    def _parse(self, text):
        return self.check(parse_poly(text, self.base, self.var))

    def evaluate_at_zero(self, a):
        return (a[0],) if a and a[0] != self.base.zero else ()

    def _structurally_commutative(self):
        return self.base.is_commutative()


class ExplicitRing(Ring):
    """A finite ring given by labelled elements and operation tables.

    ``add_table[i][j]`` and ``mul_table[i][j]`` are indices into ``labels``;
    ``labels[0]`` must be zero and ``labels[one]`` the identity.
    """

    kind = "table"
    finite = True

    def __init__(self, labels, add_table, mul_table, one=1, name="table"):
        super().__init__()
        self.labels = tuple(labels)
        n = len(self.labels)
        if n < 2:
            raise TrivialRing("explicit ring needs at least two elements")
        for tbl in (add_table, mul_table):
            if len(tbl) != n or any(len(row) != n for row in tbl):
                raise AxiomViolation("operation tables must be n-by-n")
        self._add_t = [list(r) for r in add_table]
        self._mul_t = [list(r) for r in mul_table]
        self._pos = {lab: i for i, lab in enumerate(self.labels)}
        zero_row = self._add_t[0]
        self._neg_t = []
        for i in range(n):
            inv = [j for j in range(n) if self._add_t[i][j] == 0]
            if not inv:
                raise AxiomViolation(f"{name}: element {self.labels[i]!r} has no additive inverse")
            self._neg_t.append(inv[0])
        if list(zero_row) != list(range(n)):
            raise AxiomViolation(f"{name}: labels[0] is not the additive identity")
        self.zero, self.one = self.labels[0], self.labels[one]
        self.spec = name

    def _order(self):
        return len(self.labels)

    def _add(self, a, b):
        return self.labels[self._add_t[self._pos[a]][self._pos[b]]]

    def _mul(self, a, b):
        return self.labels[self._mul_t[self._pos[a]][self._pos[b]]]

    def _neg(self, a):
        return self.labels[self._neg_t[self._pos[a]]]

    def _enumerate(self, bound):
        return iter(self.labels)

    def contains(self, a):
        return a in self._pos

    def serialize(self, a):
        return str(a)

    def _parse(self, text):
        for lab in self.labels:
            if str(lab) == text:
                return lab
        raise ParseError(f"{text!r} is not an element of {self}")


def construct_ring(spec, cap=AXIOM_CHECK_CAP, samples=AXIOM_SAMPLES, seed=AXIOM_SEED):
    """Build and verify a ring from an inline spec string or parsed spec node."""
    from .specs import build_ring

    ring = build_ring(spec)
    verify_axioms(ring, cap=cap, samples=samples, seed=seed)
    return ring

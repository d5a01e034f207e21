"""Arithmetic in the skew polynomial ring R[x; sigma].

Coefficients are written on the left and ``x a = sigma(a) x``, so the
coefficient of x^k in f g is the sum over i + j = k of a_i sigma^i(b_j).
"""

from __future__ import annotations

from .endo import Endomorphism
from .errors import ContextMismatch, ZeroPolynomial
from .rings import PolyRing, format_poly, parse_poly, strip_zeros

NEG_INF = float("-inf")


class SkewRing:
    """The context S = R[x; sigma] shared by its polynomials."""

    def __init__(self, ring, endo):
        if not isinstance(endo, Endomorphism) or endo.ring is not ring:
            raise ContextMismatch("endomorphism must act on the coefficient ring")
        self.ring = ring
        self.endo = endo
        self.var = "y" if _has_x(ring) else "x"

    def __eq__(self, other):
        return (isinstance(other, SkewRing) and self.ring is other.ring
                and self.endo == other.endo)

    def __hash__(self):
        return hash(id(self.ring))

    def __repr__(self):
        return f"{self.ring.spec}[{self.var}; {self.endo.spec}]"

    def poly(self, coeffs):
        return SkewPolynomial(self, coeffs)

    def const(self, c):
        return SkewPolynomial(self, (c,))

    def monomial(self, c, k):
        return SkewPolynomial(self, (self.ring.zero,) * k + (c,))

    @property
    def zero(self):
        return SkewPolynomial(self, ())

    @property
    def one(self):
        return self.const(self.ring.one)

    @property
    def x(self):
        return self.monomial(self.ring.one, 1)

    def parse(self, text):
        if isinstance(text, SkewPolynomial):
            _same(self, text.S)
            return text
        return SkewPolynomial(self, parse_poly(text, self.ring, self.var))

    def sigma_power(self, a, i):
        return self.endo.apply_power(a, i)

    def polys(self, degree):
        """All polynomials of degree <= ``degree`` in canonical order."""
        from .search import enumerate_index_polys
        t = self.ring.tables()
        return [SkewPolynomial(self, tuple(t.elems[i] for i in p), _normalized=True)
                for p in enumerate_index_polys(t.n, degree)]


def _has_x(ring):
    seen = [ring]
    while seen:
        r = seen.pop()
        if isinstance(r, PolyRing):
            return True
        for attr in ("base", "factors"):
            sub = getattr(r, attr, None)
            if sub is None:
                continue
            seen.extend(sub if isinstance(sub, tuple) else [sub])
    return False


def _same(S, T):
    if S is not T and S != T:
        raise ContextMismatch(f"{S} vs {T}")


class SkewPolynomial:
    """An immutable element of R[x; sigma]; ``coeffs[i]`` is the x^i coefficient."""

    __slots__ = ("S", "coeffs")

    def __init__(self, S, coeffs, _normalized=False):
        self.S = S
        if _normalized:
            self.coeffs = tuple(coeffs)
        else:
            ring = S.ring
            coeffs = tuple(coeffs)
            for c in coeffs:
                ring.check(c)
            self.coeffs = strip_zeros(coeffs, ring.zero)

    @property
    def ring(self):
        return self.S.ring

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading_coeff(self):
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def __eq__(self, other):
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return self.S == other.S and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"SkewPolynomial({self})"

    def __str__(self):
        return format_poly(self.coeffs, self.ring, self.S.var)

    def sort_key(self):
        return (len(self.coeffs), tuple(self.ring.key(c) for c in self.coeffs))

    def __add__(self, other):
        _same(self.S, other.S)
        ring = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPolynomial(self.S, (ring.add(self.coeff(i), other.coeff(i)) for i in range(n)),
                              _normalized=False)

    def __neg__(self):
        return SkewPolynomial(self.S, tuple(self.ring.neg(c) for c in self.coeffs), _normalized=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return skew_mul(self, other)

    def right_scalar(self, c):
        return right_scalar_mul(self, c)

    def left_scalar(self, c):
        """c f, i.e. every coefficient multiplied by c on the left."""
        ring = self.ring
        return SkewPolynomial(self.S, strip_zeros((ring.mul(c, a) for a in self.coeffs), ring.zero),
                              _normalized=True)

    def sigma(self, k=1):
        return sigma_map(self, k)


def skew_mul(f, g):
    _same(f.S, g.S)
    if not f.coeffs or not g.coeffs:
        return f.S.zero
    ring, S = f.ring, f.S
    add, mul, z = ring.add, ring.mul, ring.zero
    out = [z] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == z:
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] = add(out[i + j], mul(a, S.sigma_power(b, i)))
    return SkewPolynomial(S, strip_zeros(out, z), _normalized=True)


def right_scalar_mul(f, c):
    """f c = sum a_i sigma^i(c) x^i."""
    ring, S = f.ring, f.S
    ring.check(c)
    return SkewPolynomial(
        S, strip_zeros((ring.mul(a, S.sigma_power(c, i)) for i, a in enumerate(f.coeffs)), ring.zero),
        _normalized=True)


def sigma_map(f, k=1):
    """Coefficientwise sigma^k."""
    S = f.S
    return SkewPolynomial(S, strip_zeros((S.sigma_power(a, k) for a in f.coeffs), f.ring.zero),
                          _normalized=True)


def degree(f):
    return f.degree


def leading_coeff(f):
    return f.leading_coeff

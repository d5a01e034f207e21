"""Shared ring roster and brute-force oracles used by several test modules."""

import itertools

from ringforge import check_armendariz, check_element_property, check_mccoy, construct_ring, identity
from ringforge.properties import FALSE

INCLUSION_ROSTER = [
    "zmod(2)", "zmod(3)", "zmod(4)", "zmod(6)", "zmod(8)", "zmod(9)", "zmod(81)",
    "product(zmod(2),zmod(2))", "product(zmod(2),zmod(4))", "product(zmod(3),zmod(3))",
    "matrix(2,zmod(2))", "triangular(2,zmod(2))", "triangular(2,zmod(3))",
]


def holds(v):
    return v.holds != FALSE


def inclusion_violations(specs, degree=1):
    """Rings breaking one of the classical inclusions at ``degree``."""
    bad = []
    for spec in specs:
        R = construct_ring(spec)
        rev = holds(check_element_property(R, "reversible"))
        semi = holds(check_element_property(R, "semicommutative"))
        red = holds(check_element_property(R, "reduced"))
        arm = holds(check_armendariz(R, degree))
        mccoy = holds(check_mccoy(R, "right", None, degree))
        skew = holds(check_mccoy(R, "sigma-skew", identity(R), degree))
        if rev and not semi:
            bad.append((spec, "reversible but not semicommutative"))
        if red and not arm:
            bad.append((spec, "reduced but not Armendariz"))
        if arm and not mccoy:
            bad.append((spec, "Armendariz but not right McCoy"))
        if skew != mccoy:
            bad.append((spec, "skew McCoy at identity disagrees with right McCoy"))
    return bad


# --- naive oracles over explicit element lists ---------------------------

def polys(R, degree):
    """All coefficient tuples of length degree + 1 (trailing zeros allowed)."""
    return list(itertools.product(R.elements(), repeat=degree + 1))


def poly_mul(R, f, g, sigma=None):
    sigma = sigma or (lambda a: a)
    out = [R.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        b_tw = g
        for _ in range(i):
            b_tw = [sigma(b) for b in b_tw]
        for j, b in enumerate(b_tw):
            out[i + j] = R.add(out[i + j], R.mul(a, b))
    return out


def is_zero_poly(R, f):
    return all(R.is_zero(c) for c in f)


def naive_mccoy(R, degree, sigma=None):
    """Right (or sigma-skew) McCoy by full enumeration of polynomial pairs."""
    ps = [f for f in polys(R, degree) if not is_zero_poly(R, f)]
    nonzero = R.elements()[1:]
    sigma_ = sigma or (lambda a: a)
    for f in ps:
        killed = any(all(R.is_zero(R.mul(a, sigma_pow(sigma_, c, i))) for i, a in enumerate(f))
                     for c in nonzero)
        if killed:
            continue
        if any(is_zero_poly(R, poly_mul(R, f, g, sigma)) for g in ps):
            return False
    return True


def sigma_pow(sigma, c, i):
    for _ in range(i):
        c = sigma(c)
    return c


def naive_armendariz(R, degree):
    ps = polys(R, degree)
    for f in ps:
        for g in ps:
            if is_zero_poly(R, poly_mul(R, f, g)):
                if not all(R.is_zero(R.mul(a, b)) for a in f for b in g):
                    return False
    return True


def naive_element(R, prop):
    E = R.elements()
    z = R.is_zero
    if prop == "reduced":
        return not any(not z(a) and z(R.power(a, len(E))) for a in E)
    if prop == "reversible":
        return all(z(R.mul(b, a)) for a in E for b in E if z(R.mul(a, b)))
    if prop == "semicommutative":
        return all(z(R.mul(R.mul(a, r), b)) for a in E for b in E if z(R.mul(a, b)) for r in E)
    if prop == "commutative":
        return all(R.mul(a, b) == R.mul(b, a) for a in E for b in E)
    raise ValueError(prop)

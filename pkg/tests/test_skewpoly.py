import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringforge import (
    SkewRing,
    construct_endomorphism,
    construct_ring,
    degree,
    identity,
    leading_coeff,
    right_scalar_mul,
    sigma_map,
    skew_mul,
)
from ringforge.errors import ContextMismatch, RingMismatch

from test_endo import diagonal_projection

CASES = [
    ("product(zmod(2),zmod(2))", "swap"),
    ("matrix(2,zmod(3))", "negate-offdiagonal"),
    ("triangular(2,zmod(2))", "projection"),
    ("poly(zmod(2))", "eval-at-zero"),
    ("zmod(6)", "identity"),
]


def skew(ring_spec, endo_spec):
    R = construct_ring(ring_spec)
    s = diagonal_projection(R) if endo_spec == "projection" else construct_endomorphism(R, endo_spec)
    return SkewRing(R, s)


_SKEW = {case: skew(*case) for case in CASES}


@st.composite
def poly_triples(draw):
    S = _SKEW[draw(st.sampled_from(CASES))]
    pool = S.ring.elements() if S.ring.finite else S.ring.elements(bound=2)
    coeffs = st.lists(st.sampled_from(pool), max_size=4)
    return S, [S.poly(draw(coeffs)) for _ in range(3)]


@settings(max_examples=150, deadline=None)
@given(poly_triples())
def test_skew_ring_axioms(case):
    S, (f, g, h) = case
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    assert S.one * f == f == f * S.one
    assert (f - f).is_zero()


@settings(max_examples=100, deadline=None)
@given(poly_triples())
def test_degree_and_scalars(case):
    S, (f, g, _) = case
    if not (f.is_zero() or g.is_zero()):
        assert degree(skew_mul(f, g)) <= degree(f) + degree(g)
    c = g.coeff(0)
    assert right_scalar_mul(f, c) == f * S.const(c)


@pytest.mark.parametrize("case", CASES)
def test_x_commutation_rule(case):
    S = _SKEW[case]
    pool = S.ring.elements() if S.ring.finite else S.ring.elements(bound=2)
    for a in pool[:20]:
        assert S.x * S.const(a) == S.monomial(S.endo(a), 1)


def test_coefficient_formula_by_hand():
    S = _SKEW[CASES[0]]
    p, q = S.parse("(1,0) + (1,0)*x"), S.parse("(0,1) + (1,0)*x")
    # p p = (1,0)(1,0) + [(1,0)(1,0) + (1,0)sigma(1,0)] x + (1,0)sigma(1,0) x^2
    assert str(skew_mul(p, p)) == "(1,0) + (1,0)*x"
    assert str(skew_mul(p, q)) == "0"
    assert str(skew_mul(q, p)) == "0"
    assert str(sigma_map(q)) == "(1,0) + (0,1)*x"
    assert leading_coeff(q) == (1, 0)


def test_parse_round_trip():
    S = _SKEW[CASES[1]]
    for f in list(S.polys(1))[::997]:
        assert S.parse(str(f)) == f


def test_zero_polynomial_has_no_degree():
    S = _SKEW[CASES[0]]
    assert S.zero.degree == float("-inf")


def test_mixing_skew_rings_is_rejected():
    A, B = _SKEW[CASES[0]], SkewRing(_SKEW[CASES[0]].ring, identity(_SKEW[CASES[0]].ring))
    with pytest.raises((ContextMismatch, RingMismatch)):
        A.x * B.x

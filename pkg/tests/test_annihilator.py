import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringforge import (
    RightIdealSpec,
    SkewRing,
    check_quasi_baer,
    construct_endomorphism,
    construct_ring,
    elements_of_skew_ideal,
    idempotents,
    identity,
    right_annihilator_constants_of_skew_ideal,
    right_annihilator_in_ring,
)
from ringforge.annihilator import ideal_closure, leading_kills
from ringforge.errors import InvalidSpec, ZeroPolynomial
from ringforge.witness import annihilator_polys

from test_endo import diagonal_projection


def brute_right_ideal(R, gens):
    """Smallest additive subgroup holding every g r."""
    members = {R.zero}
    span = {R.mul(g, r) for g in gens for r in R.elements()}
    while True:
        grown = members | {R.add(a, s) for a in members for s in span}
        if grown == members:
            return members
        members = grown


def test_pinned_annihilators():
    R = construct_ring("product(zmod(2),zmod(2))")
    ann = right_annihilator_in_ring(RightIdealSpec.in_ring(R, ["(1,0)"]))
    assert [R.serialize(c) for c in ann.elements] == ["(0,0)", "(0,1)"]
    Z4 = construct_ring("zmod(4)")
    assert right_annihilator_in_ring(RightIdealSpec.in_ring(Z4, ["2"])).elements == (0, 2)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["zmod(12)", "matrix(2,zmod(2))", "triangular(2,zmod(3))",
                        "nagata(zmod(4),self,identity)"]), st.data())
def test_ring_annihilators_match_brute_force(spec, data):
    R = construct_ring(spec)
    E = R.elements()
    gens = data.draw(st.lists(st.sampled_from(E[1:]), min_size=1, max_size=2))
    t = R.tables()
    closure = {t.elems[i] for i in ideal_closure(R, [t.index[g] for g in gens])}
    assert {R.key(a) for a in closure} == {R.key(a) for a in brute_right_ideal(R, gens)}
    ann = right_annihilator_in_ring(RightIdealSpec.in_ring(R, [R.serialize(g) for g in gens]))
    expected = [c for c in E if all(R.is_zero(R.mul(a, c)) for a in closure)]
    assert list(ann.elements) == expected


@pytest.mark.parametrize("spec, count", [
    ("zmod(4)", 2), ("zmod(6)", 4), ("product(zmod(2),zmod(2))", 4), ("matrix(2,zmod(2))", 8),
    ("triangular(2,zmod(2))", 6),
])
def test_idempotent_counts(spec, count):
    R = construct_ring(spec)
    es = idempotents(R)
    assert len(es) == count
    assert all(R.mul(e, e) == e for e in es)


@pytest.mark.parametrize("spec, expected", [
    ("product(zmod(2),zmod(2))", "true-up-to-G-generators"), ("zmod(4)", "false"),
    ("matrix(2,zmod(2))", "true-up-to-G-generators"), ("matrix(2,zmod(3))", "true-up-to-G-generators"),
    ("triangular(2,zmod(2))", "true-up-to-G-generators"),
])
def test_principal_quasi_baer(spec, expected):
    assert check_quasi_baer(construct_ring(spec)).holds == expected


def test_quasi_baer_witness_for_zmod4():
    v = check_quasi_baer(construct_ring("zmod(4)"), generator_bound=2)
    assert v.witness == {"generators": ["2"], "annihilator": ["0", "2"]}


def test_quasi_baer_rejects_zero_generator_bound():
    with pytest.raises(InvalidSpec):
        check_quasi_baer(construct_ring("zmod(2)"), generator_bound=0)


def pair_swap():
    R = construct_ring("product(zmod(2),zmod(2))")
    return SkewRing(R, construct_endomorphism(R, "swap"))


def test_skew_constant_annihilators():
    S = pair_swap()
    ideal = RightIdealSpec.in_skew(S, ["(1,0)"], power_bound=2)
    res = right_annihilator_constants_of_skew_ideal(ideal)
    assert [S.ring.serialize(c) for c in res.elements] == ["(0,0)"]
    assert res.covered
    R = S.ring
    T = SkewRing(R, identity(R))
    res = right_annihilator_constants_of_skew_ideal(RightIdealSpec.in_skew(T, ["(1,0) + (1,0)*x"]))
    assert [R.serialize(c) for c in res.elements] == ["(0,0)", "(0,1)"]


def test_power_bound_defaults_and_coverage():
    S = pair_swap()
    ideal = RightIdealSpec.in_skew(S, ["(1,0)*x"])
    assert ideal.power_bound == 2 and ideal.covers_sigma
    short = RightIdealSpec.in_skew(S, ["(1,0)*x"], power_bound=0)
    assert not short.covers_sigma
    R = construct_ring("triangular(2,zmod(2))")
    P = SkewRing(R, diagonal_projection(R))
    assert RightIdealSpec.in_skew(P, ["[[1,0],[0,0]]"]).power_bound == 1


def test_ideal_spec_validation():
    S = pair_swap()
    with pytest.raises(InvalidSpec):
        RightIdealSpec.in_skew(S, ["0"])
    with pytest.raises(InvalidSpec):
        RightIdealSpec.in_skew(S, ["(1,0)*x^3"], degree_bound=2)
    P = construct_ring("poly(zmod(2))")
    with pytest.raises(InvalidSpec):
        RightIdealSpec.in_skew(SkewRing(P, construct_endomorphism(P, "eval-at-zero")), ["x"])


def test_skew_ideal_elements_are_closed_and_annihilated():
    S = pair_swap()
    ideal = RightIdealSpec.in_skew(S, ["(1,0) + (1,0)*x"], degree_bound=2)
    members = elements_of_skew_ideal(ideal, 2)
    assert members[0].is_zero()
    keys = set(members)
    for a, b in itertools.combinations(members, 2):
        s = a + b
        if s.degree <= 2:
            assert s in keys
    for g in annihilator_polys(ideal, 2):
        assert all((f * g).is_zero() for f in members)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_annihilator_polys_match_brute_force(data):
    R = construct_ring("zmod(4)")
    S = SkewRing(R, identity(R))
    coeffs = data.draw(st.lists(st.sampled_from(R.elements()), min_size=1, max_size=3))
    f = S.poly(coeffs)
    if f.is_zero():
        return
    ideal = RightIdealSpec.in_skew(S, [str(f)], degree_bound=max(f.degree, 1))
    got = {str(g) for g in annihilator_polys(ideal, 2)}
    want = {str(g) for g in S.polys(2) if not g.is_zero() and (f * g).is_zero()}
    assert got == want


def test_leading_kills():
    S = pair_swap()
    ideal = RightIdealSpec.in_skew(S, ["(1,0)"], power_bound=2)
    assert not leading_kills(ideal, S.parse("(0,1)*x"))
    with pytest.raises(ZeroPolynomial):
        leading_kills(ideal, S.zero)

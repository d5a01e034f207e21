import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringforge import construct_ring, parse_spec, verify_axioms
from ringforge.errors import AxiomViolation, InvalidSpec, ParseError, TrivialRing
from ringforge.rings import ExplicitRing
from ringforge.suites import galois4

FINITE = ["zmod(2)", "zmod(6)", "product(zmod(2),zmod(3))", "matrix(2,zmod(2))",
          "triangular(2,zmod(3))", "nagata(zmod(4),self,identity)",
          "nagata(product(zmod(2),zmod(2)),self,swap)"]


@pytest.mark.parametrize("spec, order", [
    ("zmod(5)", 5), ("product(zmod(2),zmod(2))", 4), ("matrix(2,zmod(2))", 16),
    ("matrix(2,zmod(3))", 81), ("triangular(2,zmod(2))", 8), ("triangular(3,zmod(2))", 64),
    ("nagata(zmod(3),power(2),identity)", 27),
])
def test_orders(spec, order):
    assert construct_ring(spec).order == order


@pytest.mark.parametrize("spec", FINITE)
def test_axioms_exhaustive(spec):
    assert verify_axioms(construct_ring(spec)) == "exhaustive"


@pytest.mark.parametrize("spec", FINITE + ["matrix(2,zmod(3))"])
def test_zero_is_first_and_serialization_round_trips(spec):
    R = construct_ring(spec)
    elems = R.elements()
    assert R.is_zero(elems[0])
    assert len(set(map(R.key, elems))) == len(elems)
    for a in elems:
        assert R.parse(R.serialize(a)) == a


def test_infinite_rings_enumerate_by_bound():
    Z = construct_ring("integers")
    assert Z.elements(bound=2) == [0, 1, -1, 2, -2]
    P = construct_ring("poly(zmod(2))")
    assert [P.serialize(f) for f in P.elements(bound=1)] == ["0", "1", "x", "1 + x"]
    assert len(P.elements(bound=3)) == 16
    assert not P.finite


def test_congruence_pairs_membership():
    R = construct_ring("congruence-pairs(2)")
    assert R.contains((3, 1))
    assert not R.contains((1, 2))
    with pytest.raises(InvalidSpec):
        R.parse("(1,2)")


@pytest.mark.parametrize("text, exc", [
    ("zmod(1)", TrivialRing), ("zmod(x)", InvalidSpec), ("foo(2)", InvalidSpec),
    ("product(zmod(2))", InvalidSpec), ("matrix(2,zmod(2)", ParseError),
])
def test_bad_specs(text, exc):
    with pytest.raises(exc):
        construct_ring(text)


def test_parse_error_location():
    with pytest.raises(ParseError) as info:
        parse_spec("matrix(2,zmod(2)")
    assert info.value.column is not None


def test_explicit_ring_rejects_broken_tables():
    add = [[i ^ j for j in range(4)] for i in range(4)]
    mul = [[i & j for j in range(4)] for i in range(4)]  # unit is 3, not 1
    with pytest.raises(AxiomViolation):
        verify_axioms(ExplicitRing(["0", "1", "2", "3"], add, mul))


def test_galois4_is_a_field():
    F = galois4()
    assert verify_axioms(F) == "exhaustive"
    for a in F.elements()[1:]:
        assert any(F.mul(a, b) == F.one for b in F.elements())


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FINITE), st.data())
def test_ring_identities_on_random_triples(spec, data):
    R = construct_ring(spec)
    pick = st.sampled_from(R.elements())
    a, b, c = data.draw(pick), data.draw(pick), data.draw(pick)
    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
    assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
    assert R.sub(R.add(a, b), b) == a


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_integers_match_python(a, b):
    Z = construct_ring("integers")
    assert Z.mul(a, b) == a * b
    assert Z.parse(Z.serialize(a)) == a

import pytest

from ringforge import construct_endomorphism, construct_ring, identity
from ringforge.errors import NotAnEndomorphism, RuleMismatch


def diagonal_projection(R):
    """[[a,b],[0,c]] -> [[a,0],[0,c]] on triangular(2, .), an idempotent endomorphism."""
    table = {}
    for m in R.elements():
        (a, _), (_, c) = m
        table[R.serialize(m)] = R.serialize(((a, R.base.zero), (R.base.zero, c)))
    return construct_endomorphism(R, table)


def test_identity_periodicity():
    s = identity(construct_ring("zmod(4)"))
    assert s.is_identity
    assert (s.detected_order, s.cover_bound, s.default_power_bound()) == (1, 0, 1)


def test_swap_has_order_two():
    R = construct_ring("product(zmod(2),zmod(2))")
    s = construct_endomorphism(R, "swap")
    assert not s.is_identity
    assert (s.detected_order, s.cover_bound) == (2, 1)
    assert s.apply_power(R.parse("(1,0)"), 3) == R.parse("(0,1)")
    assert s.apply_power(R.parse("(1,0)"), 4) == R.parse("(1,0)")


def test_negate_offdiagonal_order_two():
    R = construct_ring("matrix(2,zmod(3))")
    s = construct_endomorphism(R, "negate-offdiagonal")
    a = R.parse("[[1,2],[1,0]]")
    assert R.serialize(s(a)) == "[[1,1],[2,0]]"
    assert s.detected_order == 2


def test_idempotent_projection_has_no_order():
    R = construct_ring("triangular(2,zmod(2))")
    p = diagonal_projection(R)
    assert p.detected_order is None
    assert p.cover_bound == 1
    assert p.default_power_bound() == 1
    assert p.power_table(7) == p.power_table(1)


def test_eval_at_zero_on_polynomials():
    P = construct_ring("poly(zmod(2))")
    s = construct_endomorphism(P, "eval-at-zero")
    assert P.serialize(s(P.parse("1 + x + x^2"))) == "1"
    assert P.serialize(s(P.parse("x"))) == "0"
    assert s.detected_order is None


def test_frobenius_on_gf4():
    from ringforge.suites import _endo, galois4
    F = galois4()
    s = _endo(F, "frobenius")
    assert s.detected_order == 2
    assert F.serialize(s(F.parse("a"))) == "b"


@pytest.mark.parametrize("spec, rule", [
    ("zmod(4)", "swap"), ("matrix(2,zmod(2))", "eval-at-zero"), ("zmod(2)", "twist"),
    ("triangular(2,zmod(3))", "negate-offdiagonal"),
])
def test_rule_mismatch(spec, rule):
    with pytest.raises(RuleMismatch):
        construct_endomorphism(construct_ring(spec), rule)


def test_non_multiplicative_table_rejected():
    R = construct_ring("zmod(4)")
    with pytest.raises(NotAnEndomorphism):
        construct_endomorphism(R, {"0": "0", "1": "1", "2": "0", "3": "3"})

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringforge import (
    ModulePolynomial,
    construct_endomorphism,
    construct_module,
    construct_nagata,
    construct_ring,
    extend_coefficientwise,
    identity,
    torsion_submodule,
    verify_module,
)
from ringforge.errors import NonCommutativeBase

NAGATA = [
    ("zmod(4)", "self", "identity"),
    ("zmod(3)", "power(2)", "identity"),
    ("product(zmod(2),zmod(2))", "self", "swap"),
    ("zmod(4)", "cyclic(2)", "identity"),
]


def build(base_spec, module_spec, endo_spec):
    R = construct_ring(base_spec)
    M = construct_module(R, module_spec)
    s = construct_endomorphism(R, endo_spec)
    return R, M, s, construct_nagata(R, M, s)


@pytest.mark.parametrize("spec", ["self", "power(2)", "power(3)", "cyclic(2)", "cyclic(2,4)"])
def test_module_axioms(spec):
    R = construct_ring("zmod(4)")
    assert verify_module(construct_module(R, spec)) == "exhaustive"


def test_cyclic_module_orders():
    R = construct_ring("zmod(4)")
    assert construct_module(R, "cyclic(2)").order == 2
    assert construct_module(R, "cyclic(2,4)").order == 8


def test_noncommutative_base_rejected():
    with pytest.raises(NonCommutativeBase):
        construct_module(construct_ring("matrix(2,zmod(2))"), "self")


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(NAGATA), st.data())
def test_nagata_product_formula(case, data):
    R, M, s, N = build(*case)
    x = data.draw(st.sampled_from(N.elements()))
    y = data.draw(st.sampled_from(N.elements()))
    (a, m), (b, n) = x, y
    expected = (R.mul(a, b), M.add(M.act(n, s(a)), M.act(m, b)))
    assert N.mul(x, y) == expected
    assert N.projection(N.mul(x, y)) == R.mul(N.projection(x), N.projection(y))


@pytest.mark.parametrize("case", NAGATA)
def test_nagata_order_and_identity(case):
    R, M, s, N = build(*case)
    assert N.order == R.order * M.order
    assert N.one == (R.one, M.zero)


def test_nagata_commutes_only_with_trivial_twist():
    assert build("zmod(4)", "self", "identity")[3].is_commutative()
    assert not build("product(zmod(2),zmod(2))", "self", "swap")[3].is_commutative()


def test_module_polynomial_action():
    R = construct_ring("zmod(4)")
    M = construct_module(R, "power(2)")
    m = ModulePolynomial(M, ((1, 0), (0, 2)))
    # x^1: (1,0).1 + (0,2).2 = (1,0)
    assert str(m * (2, 1)) == "(2,0) + (1,0)*x + (0,2)*x^2"
    assert (m * (2,)).coeffs == ((2, 0),)
    assert (ModulePolynomial(M, ((2, 2),)) * (2,)).is_zero


def test_coefficientwise_extension():
    R = construct_ring("product(zmod(2),zmod(2))")
    ext = extend_coefficientwise(construct_endomorphism(R, "swap"))
    P = ext.ring
    f = P.parse("(1,0) + (1,1)*x")
    assert P.serialize(ext(f)) == "(0,1) + x"


def test_torsion_classification():
    Z4 = construct_ring("zmod(4)")
    t = torsion_submodule(construct_module(Z4, "cyclic(2)"))
    assert t.classification == "torsion" and not t.base_is_domain
    assert t.note is not None
    Z3 = construct_ring("zmod(3)")
    t = torsion_submodule(construct_module(Z3, "power(2)"))
    assert t.classification == "torsion-free" and t.note is None
    t = torsion_submodule(construct_module(Z4, "self"))
    assert t.classification == "mixed"
    assert sorted(t.elements) == [0, 2]


def test_identity_twist_reports_order_one():
    R = construct_ring("zmod(2)")
    assert identity(R).detected_order == 1

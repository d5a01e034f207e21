"""Small hand-checkable values across the modules."""

from ringforge import (
    ModulePolynomial,
    RightIdealSpec,
    SkewRing,
    construct_endomorphism,
    construct_module,
    construct_ring,
    elements_of_skew_ideal,
    extract_witness,
    identity,
    theorem21_random_suite,
    torsion_submodule,
    verify_annihilator_membership,
    verify_stability,
)


def swap_skew():
    R = construct_ring("product(zmod(2),zmod(2))")
    return SkewRing(R, construct_endomorphism(R, "swap"))


def identity_skew():
    R = construct_ring("product(zmod(2),zmod(2))")
    return SkewRing(R, identity(R))


def test_matrix_zero_divisor_pair():
    M = construct_ring("matrix(2,zmod(3))")
    assert M.is_zero(M.mul(M.parse("[[1,1],[0,0]]"), M.parse("[[0,-1],[0,1]]")))


def test_right_scalar_kills_the_x_term():
    S = swap_skew()
    p = S.parse("(1,0) + (1,0)*x")
    assert str(p.right_scalar(S.ring.parse("(1,0)"))) == "(1,0)"


def test_module_polynomial_square_in_characteristic_two():
    Z2 = construct_ring("zmod(2)")
    m = ModulePolynomial(construct_module(Z2, "self"), (1, 1))
    assert str(m * (1, 1)) == "1 + x^2"


def test_torsion_of_pair_ring():
    R = construct_ring("product(zmod(2),zmod(2))")
    t = torsion_submodule(construct_module(R, "self"))
    assert [R.serialize(m) for m in t.elements] == ["(0,0)", "(0,1)", "(1,0)"]
    assert t.classification == "mixed"


def test_skew_ideal_contains_scaled_generator():
    S = swap_skew()
    ideal = RightIdealSpec.in_skew(S, ["(1,0) + (1,0)*x"], degree_bound=1, power_bound=2)
    members = {str(f) for f in elements_of_skew_ideal(ideal, 1)}
    assert "(1,0)" in members


def test_membership_and_leading_coefficient_witness():
    S = identity_skew()
    ideal = RightIdealSpec.in_skew(S, ["(1,0) + (1,0)*x"])
    g = S.parse("(0,1) + (0,1)*x")
    assert verify_annihilator_membership(ideal, g).member
    trace = extract_witness(ideal, g, "compatible")
    assert S.ring.serialize(trace.result) == "(0,1)"
    assert trace.reason == "leading-coefficient" and not trace.steps
    assert (ideal.generators[0] * S.parse("(0,1)")).is_zero()


def test_stability_certificates():
    S = swap_skew()
    p = RightIdealSpec.in_skew(S, ["(1,0) + (1,0)*x"], degree_bound=1)
    cert = verify_stability(p)
    assert cert.stable and cert.checked == 0
    Z4 = construct_ring("zmod(4)")
    T = SkewRing(Z4, identity(Z4))
    assert verify_stability(RightIdealSpec.in_skew(T, ["2 + 2*x"])).stable


def test_random_suite_rosters():
    z4 = theorem21_random_suite([("zmod(4)", "identity")], trials=100)
    assert z4["summary"] == {"PASS": 100, "SKIPPED": 0, "FAIL": 0}
    mat = theorem21_random_suite([("matrix(2,zmod(2))", "identity")], trials=50)
    assert mat["summary"]["FAIL"] == 0
    swap = theorem21_random_suite([("product(zmod(2),zmod(2))", "swap")], trials=10)
    assert all(r["status"] == "SKIPPED" for r in swap["rows"])

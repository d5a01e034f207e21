"""Walk through sigma-skew McCoy failures in two small skew polynomial rings."""

from ringforge import SkewRing, check_mccoy, check_skewring_semicommutative, construct_endomorphism, construct_ring


def pair_swap():
    R = construct_ring("product(zmod(2),zmod(2))")
    s = construct_endomorphism(R, "swap")
    S = SkewRing(R, s)
    p, q = S.parse("(1,0) + (1,0)*x"), S.parse("(0,1) + (1,0)*x")
    print(f"in {S}:")
    print(f"  p = {p}, q = {q}, pq = {p * q}")
    for c in R.elements()[1:]:
        print(f"  p*{R.serialize(c)} = {p.right_scalar(c)}")
    e = S.const(R.parse("(1,0)"))
    print(f"  p*(1,0)*q = {p * e * q}  (so R[x; swap] is not semicommutative)")
    v = check_mccoy(R, "sigma-skew", s, 1)
    print(f"  exhaustive degree-1 search: {v.holds}, least witness {v.witness}")


def matrices():
    R = construct_ring("matrix(2,zmod(3))")
    s = construct_endomorphism(R, "negate-offdiagonal")
    S = SkewRing(R, s)
    p = S.parse("[[1,0],[0,0]] + [[1,1],[0,0]]*x")
    q = S.parse("[[0,0],[0,-1]] + [[0,1],[0,1]]*x")
    h = S.parse("[[1,1],[0,0]]")
    killers = [c for c in R.elements()[1:] if p.right_scalar(c).is_zero()]
    print(f"in {S}:")
    print(f"  pq = {p * q}; constants killing p on the right: {len(killers)} of 80")
    print(f"  p h q = {p * h * q}")
    v = check_skewring_semicommutative(R, s, 1)
    print(f"  least semicommutativity witness: {v.witness}")


if __name__ == "__main__":
    pair_swap()
    print()
    matrices()

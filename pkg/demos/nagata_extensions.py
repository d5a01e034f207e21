"""Nagata extensions: products, condition C1 and the Armendariz transfer."""

from ringforge import (
    check_armendariz,
    check_condition_C,
    check_element_property,
    construct_endomorphism,
    construct_module,
    construct_nagata,
    construct_ring,
)
from ringforge.suites import run_implication_suite

R = construct_ring("product(zmod(2),zmod(2))")
s = construct_endomorphism(R, "swap")
N = construct_nagata(R, construct_module(R, "self"), s)
A, B, C = (N.parse(t) for t in ("((0,1) | (0,1))", "((1,0) | (0,1))", "((1,0) | (1,0))"))
print(f"{N} has {N.order} elements")
print(f"  A*B   = {N.serialize(N.mul(A, B))}")
print(f"  A*C*B = {N.serialize(N.mul(N.mul(A, C), B))}")
print(f"  semicommutative: {check_element_property(N, 'semicommutative').holds}")
print(f"  C1 on the base: {check_condition_C(R, s, 'C1').to_dict(False)['witness']}")
print(f"  Armendariz at degree 1: {check_armendariz(N, 1).witness}")

P = construct_ring("nagata(poly(zmod(2)),self,eval-at-zero)")
v = check_element_property(P, "reversible", bound=2)
print(f"\n{P}: reversible up to degree 2 -> {v.holds}, least witness {v.witness}")

for suite in ("prop3.1", "thm3.8", "cor3.9"):
    rep = run_implication_suite(suite)
    paths = sorted({r.get("path", r["status"]) for r in rep["rows"]})
    print(f"suite {suite}: {rep['summary']}  {paths}")

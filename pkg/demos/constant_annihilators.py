"""Degree descent from a polynomial annihilator to a constant one."""

from ringforge import RightIdealSpec, SkewRing, construct_ring, extract_witness, identity, theorem21_random_suite
from ringforge.suites import THM21_ROSTER

N = construct_ring("nagata(zmod(4),self,identity)")
S = SkewRing(N, identity(N))
ideal = RightIdealSpec.in_skew(S, ["(0 | 1) + (2 | 0)*x"])
trace = extract_witness(ideal, "(0 | 1) + (2 | 0)*x", "compatible")
print(f"ideal generated by {ideal.generators[0]} in {S}")
for k, step in enumerate(trace.steps, 1):
    print(f"  step {k}: g = {step.g}, f = {step.f}, p = {step.p}, multiply by {N.serialize(step.a_p)}")
print(f"  final g = {trace.final_g} ({trace.reason}), verified = {trace.verified}")

report = theorem21_random_suite(THM21_ROSTER, trials=100, seed=0)
print(f"\nrandom suite over {len(THM21_ROSTER)} rings: {report['summary']}")
steps = [r["steps"] for r in report["rows"] if r["status"] == "PASS"]
print(f"  descent lengths among passing rows: {sorted(set(steps))}")

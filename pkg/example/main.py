import os

import steps

from genusonedivisors.certificates import certify_hain
from genusonedivisors.class_algebra import canonical_class
from genusonedivisors.cremona import reduce_signature
from genusonedivisors.hain_divisor import component_count, decompose, hain_class
from genusonedivisors.sym_quotient import nonboundary_constraints_check, symmetrize

# a signature such as "5,-3,-2"; three nonzero entries summing to zero
signature = tuple(int(entry) for entry in os.environ.get("SIGNATURE", "5,-3,-2").split(","))
points = int(os.environ.get("POINTS", "6"))

print(steps.steps["intro"])

# BUILD THE CLASS OF D_a
divisor = hain_class(signature)
print(steps.steps["step1"].format(signature=list(signature), divisor=divisor.to_str()))

# SPLIT IT INTO COMPONENTS
print(steps.steps["step2"].format(count=component_count(signature)))
for t, component in decompose(signature):
    print(f"   t={t}: {component.to_str()}")

# CERTIFY IT WITH THE X CURVE
report = certify_hain(signature)
print(steps.steps["step3"].format(pairing=report.pairing, verdict=report.verdict))

# REDUCE THE SIGNATURE WITH THE CREMONA MAP
if report.is_valid:
    trace = reduce_signature(signature)
    print(steps.steps["step4"].format(end=list(trace.end.entries), f_steps=trace.f_step_count))

# CHECK THE CANONICAL CLASS ON THE QUOTIENT
constraints = nonboundary_constraints_check(symmetrize(canonical_class(points)))
print(steps.steps["step5"].format(failing=", ".join(constraints.failing_curves()) or "none"))

print(steps.steps["outro"])

"""
A plan and its certificate
==========================

Pick a target, let the planner choose the base and blow-up counts, write
the certificate as JSON and replay it with the verifier, which rebuilds
everything from the catalog without touching the solver.
"""

import tempfile
from dataclasses import replace
from pathlib import Path

from geograph import ParamVector, realize, verify_plan
from geograph import certificate

target = ParamVector(63, -6, 1, -70, -417)
plan = realize(target)
print(plan.branch, "n =", plan.n, "lambda =", plan.lam, "counts =", plan.counts.as_tuple())

# JSON with every integer as a string
text = certificate.dumps(plan)
print(text)

path = Path(tempfile.mkdtemp()) / "plan.json"
certificate.save(plan, path)
report = verify_plan(certificate.load(path))
for label, count, delta in report.steps:
    print(f"{label:15} x {count:3}  {delta.as_tuple()}")
print("final", report.final.as_tuple(), "pass:", report.passed)

# the zero quintuple needs a few spheres and genus-2 surfaces over the Q* base
plan0 = realize(ParamVector(0, 0, 0, 0, 0))
print("zero:", plan0.counts.as_tuple(), verify_plan(plan0).errata_notes)

# tampering is caught; the mismatch is reported per coordinate
bad = replace(plan, target=replace(target, b=target.b + 1))
print("tampered:", verify_plan(bad).mismatches)

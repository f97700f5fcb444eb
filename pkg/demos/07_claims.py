"""
The claim harness
=================

Each statement is checked field by field and gets HOLDS, FAILS (with a
re-checkable witness), UNDECIDED or OUT_OF_SCOPE.
"""
from quadbench import run_claims, render_report
from quadbench.claims import verify_witness

report = run_claims([-5, -14, -23, 10, 5])
print(render_report(report, "text"))

fails = [o for o in report.outcomes if o.status == "FAILS"]
print(f"{len(fails)} FAILS, all witnesses re-verify: {all(verify_witness(o) for o in fails)}")

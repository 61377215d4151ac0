"""
Running a verification sweep
============================

The verify module expands a suite into independent cases, runs them
(optionally in a process pool) and reports them in a fixed order.
"""

from hypercurves.verify import Suite, emit_report, run_suite, summary_line

reports = run_suite(Suite.THM4, p_max=60, l_set=[3, 4], lambda_spec="all")
print(summary_line(reports))

# skipped cases say why
for r in reports[:4]:
    print(r.case.l, r.case.p, r.status.value, r.reason)

# the same reports as csv; timing=False makes the output reproducible
text = emit_report(reports, "csv", timing=False)
print("\n".join(text.splitlines()[:6]))

# every suite at a glance
for suite in (Suite.COR_MINUS1, Suite.THM5_PERIOD, Suite.KUMMER):
    print(f"{suite.value:12s}", summary_line(run_suite(suite, p_max=200)))

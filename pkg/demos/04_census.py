"""
Census report and property suite
================================

The census runner analyzes every record and writes one CSV row each; the
property suite checks the structural claims on every diagram where their
hypotheses are certified.
"""

from collections import Counter

from edgenum import load_census, rows_to_csv, run_census, verify_propositions

census = load_census()
print(rows_to_csv(run_census(census)))

report = verify_propositions(census)
tally = Counter((c["check"], c["status"]) for c in report["checks"])
for check in sorted({c for c, _ in tally}):
    print(f"{check:40s} pass={tally[check, 'pass']:2d} skip={tally[check, 'skip']:2d} fail={tally[check, 'fail']:2d}")
print("suite passed:", report["passed"], "| assertable checks:", report["assertable"])

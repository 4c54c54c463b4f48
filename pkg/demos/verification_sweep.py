"""
Checking the greedy degree against an independent search
========================================================

For every ordered pair of cosets of a small flag variety, the greedy rim
hook degree is compared with the projection lower bound and with a Pareto
search over chains of adjacent cosets that never touches Maya diagrams.
"""

import time

from mayadeg import parse_flag
from mayadeg.oracle import verify_space

for flag in ["1,2/4", "1,2,3/4", "2/5", "1,3/5"]:
    start = time.perf_counter()
    report = verify_space(parse_flag(flag))
    elapsed = time.perf_counter() - start
    for line in report.lines():
        print(line)
    print(f"  ({elapsed:.2f} s)")
    print()

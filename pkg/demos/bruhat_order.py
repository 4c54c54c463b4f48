"""
Bruhat order from prefix counts
===============================

w <= v in the Bruhat order of a parabolic quotient exactly when every row
of the Maya diagram of w has at least as many marks as v in every prefix of
columns. The example below is compared with the sorted-prefix test on full
permutations and with the transitive closure of Bruhat covers.
"""

import itertools

from mayadeg import (
    bruhat_leq_full, diagram_leq, enumerate_cosets, parse_coset, parse_flag,
    prefix_count, render, to_maya,
)
from mayadeg.oracle import bruhat_closure

shape = parse_flag("1,3,5,7,9/12")
w = parse_coset(shape, "1|5,9|10,11|4,6|2,7")
v = parse_coset(shape, "2|7,11|10,12|8,9|1,5")
mw, mv = to_maya(w), to_maya(v)
print(render(mw))
print()
print(render(mv))
print()

# prefix counts of row 2 for both diagrams
print("row 2 prefix counts, w:", [prefix_count(mw, 2, b) for b in range(1, 13)])
print("row 2 prefix counts, v:", [prefix_count(mv, 2, b) for b in range(1, 13)])
print("w <= v:", diagram_leq(mw, mv), " v <= w:", diagram_leq(mv, mw))
print("full permutation test agrees:", bruhat_leq_full(w.perm, v.perm))

# on a small space the diagram test matches the closure of covers exactly
small = parse_flag("1,3/5")
closure = bruhat_closure(small)
cosets = list(enumerate_cosets(small))
agree = sum(((a, b) in closure) == diagram_leq(to_maya(a), to_maya(b))
            for a, b in itertools.product(cosets, repeat=2))
print(f"Fl(1,3;5): {agree}/{len(cosets) ** 2} pairs agree with the cover closure")

"""
Generalized rim hooks
=====================

A (q,t) rim hook climbs from row q to row t-1 of a Maya diagram removing
the leftmost new mark, then walks back down adding the rightmost mark of the
row above. On cosets it acts like the 0-Hecke product with a reflection.
"""

from mayadeg import (
    RimHookSpec, from_maya, hecke_word_action, parse_coset, parse_flag,
    reflection_word, render, rim_hook, to_maya,
)

# a Grassmannian example: the hook is a single border strip
gr = parse_flag("8/12")
c = parse_coset(gr, "1,2,3,5,8,9,11,12")
m = to_maya(c)
out = rim_hook(m, RimHookSpec(1, 2))
print(render(m))
print("  --(1,2)-->")
print(render(out))
print("result:", from_maya(out))
print()

# a hook spanning four rows of a partial flag
shape = parse_flag("1,3,5,7,9/12")
c = parse_coset(shape, "2|3,8|10,12|9,11|1,5")
m = to_maya(c)
out = rim_hook(m, RimHookSpec(2, 6))
print(render(m))
print("  --(2,6)-->")
print(render(out))
print("result:", from_maya(out))

# the same coset through the Hecke action of the palindromic reflection word
word = reflection_word(shape, 2, 6)
print("reflection word:", word)
print("Hecke action agrees:", hecke_word_action(c, word) == from_maya(out))

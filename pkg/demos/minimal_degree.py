"""
Minimal quantum degree in a five-step flag
==========================================

Computes the smallest power of q appearing in a quantum product for
Fl(1,3,5,7,9;13), prints the rim-hook chain that realizes it and compares
the result with the lower bound coming from the Grassmannian projections.
"""

from mayadeg import (
    exponent_form, graded_degree, greedy_min_degree, lower_bound_vector,
    parse_coset, parse_flag, render, to_maya,
)

shape = parse_flag("1,3,5,7,9/13")
v = parse_coset(shape, "2|3,8|10,13|9,11|1,5")
w = parse_coset(shape, "1|9,10|5,11|6,7|2,3")

# the two diagrams; X marks the lowest mark of each column
print("v =", v)
print(render(to_maya(v)))
print()
print("w =", w)
print(render(to_maya(w)))
print()

# greedily remove the longest run of incompatible rows with a rim hook
total, trace = greedy_min_degree(v, w)
for step in trace.steps:
    print(f"rim hook (q,t)=({step.spec.q},{step.spec.t}) degree {exponent_form(step.degree)} -> {step.result}")
    print(render(to_maya(step.result)))
    print()

print("minimal degree:", total, "=", exponent_form(total))
print("graded degree:", graded_degree(shape, total))

# each component is already forced by the projection to Gr(i_j, n)
print("projection lower bound:", lower_bound_vector(v, w))

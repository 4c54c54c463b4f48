"""Minimal quantum degrees on type A partial flag varieties via Maya diagrams."""

from .errors import InvariantError, OracleSizeError, ParseError
from .maya import (
    MayaDiagram, RimHookSpec, candidate_rim_hooks, diagram_leq, from_maya,
    incompatible_rows, phi, prefix_count, psi, render, rim_hook,
    select_rim_hook, to_maya,
)
from .qdegree import (
    ChainStep, ChainTrace, DegreeVector, exponent_form, format_degree,
    graded_degree, greedy_min_degree, lower_bound_vector, project,
    projection_degree, root_degree, step_degree,
)
from .weyl import (
    CosetRep, FlagShape, apply_transposition, block_of, bruhat_leq_full,
    enumerate_cosets, format_coset, format_flag, hecke_step,
    hecke_word_action, length, make_flag_shape, parse_coset, parse_flag,
    reduced_word, reflection_word,
)

__version__ = "0.1.0"

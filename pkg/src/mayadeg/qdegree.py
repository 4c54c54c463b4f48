"""
Minimal quantum degrees via greedy chains of generalized rim hooks.

Degree vectors are tuples ``(d_1, ..., d_k)`` standing for the monomial
``q_1^{d_1} ... q_k^{d_k}``.

>>> from mayadeg.weyl import parse_flag, parse_coset
>>> shape = parse_flag("1,3,5,7,9/13")
>>> v = parse_coset(shape, "2|3,8|10,13|9,11|1,5")
>>> w = parse_coset(shape, "1|9,10|5,11|6,7|2,3")
>>> total, trace = greedy_min_degree(v, w)
>>> total, exponent_form(total)
((0, 2, 1, 1, 0), '0^1 2^1 1^2 0^1')
>>> [(s.spec.q, s.spec.t) for s in trace.steps]
[(2, 5), (2, 3)]
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .errors import InvariantError, ParseError
from .maya import (
    MayaDiagram, RimHookSpec, candidate_rim_hooks, diagram_leq, from_maya,
    rim_hook, to_maya,
)
from .weyl import CosetRep, FlagShape, coset_from_perm

__all__ = [
    "DegreeVector", "ChainStep", "ChainTrace", "zero_degree", "add_degrees",
    "degree_leq", "format_degree", "exponent_form", "parse_exponent_form",
    "step_degree", "root_degree", "greedy_min_degree", "project",
    "projection_degree", "lower_bound_vector", "graded_degree",
]

DegreeVector = tuple[int, ...]

# picks one hook among the equally long candidates at a greedy step
HookChooser = Callable[[list[RimHookSpec]], RimHookSpec]


def zero_degree(k: int) -> DegreeVector:
    return (0,) * k


def add_degrees(d: Sequence[int], e: Sequence[int]) -> DegreeVector:
    if len(d) != len(e):
        raise ParseError(f"degree length mismatch: {len(d)} vs {len(e)}")
    return tuple(x + y for x, y in zip(d, e))


def degree_leq(d: Sequence[int], e: Sequence[int]) -> bool:
    """Componentwise order."""
    return len(d) == len(e) and all(x <= y for x, y in zip(d, e))


def format_degree(d: Sequence[int]) -> str:
    return ",".join(map(str, d))


def exponent_form(d: Sequence[int]) -> str:
    """Run-length form: ``(0, 2, 1, 1, 0)`` becomes ``'0^1 2^1 1^2 0^1'``."""
    return " ".join(f"{value}^{len(list(run))}" for value, run in itertools.groupby(d))


def parse_exponent_form(text: str) -> DegreeVector:
    out: list[int] = []
    for token in text.split():
        value, _, count = token.partition("^")
        out.extend([int(value)] * int(count))
    return tuple(out)


def step_degree(shape: FlagShape, spec: RimHookSpec) -> DegreeVector:
    """``0^{q-1} 1^{t-q} 0^{k+1-t}`` truncated to length ``k``."""
    spec.check(shape)
    return tuple(1 if spec.q <= j < spec.t else 0 for j in range(1, shape.k + 1))


def root_degree(shape: FlagShape, a: int, b: int) -> DegreeVector:
    """Degree of the transposition of positions ``a < b``: ``d_j = [a <= i_j < b]``."""
    if not 1 <= a < b <= shape.n:
        raise ParseError(f"need 1 <= a < b <= {shape.n}, got a={a}, b={b}")
    return tuple(1 if a <= i < b else 0 for i in shape.dims)


@dataclass(frozen=True)
class ChainStep:
    spec: RimHookSpec
    degree: DegreeVector
    result: CosetRep


@dataclass(frozen=True)
class ChainTrace:
    start: CosetRep
    target: CosetRep
    steps: tuple[ChainStep, ...] = ()
    total: DegreeVector = field(default=())

    @property
    def cosets(self) -> list[CosetRep]:
        return [self.start] + [s.result for s in self.steps]


def _smallest_q(candidates: list[RimHookSpec]) -> RimHookSpec:
    return candidates[0]


def greedy_min_degree(
    v: CosetRep,
    w: CosetRep,
    choose: Optional[HookChooser] = None,
) -> tuple[DegreeVector, ChainTrace]:
    """Minimal quantum degree of ``sigma^v * sigma_w`` and the chain realizing it.

    Starting from ``v``, repeatedly applies the rim hook spanning the longest
    run of rows that are Bruhat incompatible with ``w`` until the current
    diagram dominates ``w``. ``choose`` overrides the smallest-``q`` tie-break.
    """
    if v.shape != w.shape:
        raise ParseError(f"shape mismatch: {v.shape} vs {w.shape}")
    shape = v.shape
    choose = choose or _smallest_q
    mw = to_maya(w)
    current = to_maya(v)
    total = zero_degree(shape.k)
    steps: list[ChainStep] = []
    cap = shape.n ** 2

    while True:
        candidates = candidate_rim_hooks(current, mw)
        if not candidates:
            break
        if len(steps) >= cap:
            raise InvariantError(f"greedy chain from {v} to {w} exceeded {cap} steps")
        spec = choose(candidates)
        if spec not in candidates:
            raise InvariantError(f"chooser returned {spec}, not one of {candidates}")
        nxt = rim_hook(current, spec)
        if nxt == current or not diagram_leq(current, nxt):
            raise InvariantError(f"rim hook {spec} made no Bruhat progress at {from_maya(current)}")
        degree = step_degree(shape, spec)
        total = add_degrees(total, degree)
        steps.append(ChainStep(spec, degree, from_maya(nxt)))
        current = nxt

    return total, ChainTrace(v, w, tuple(steps), total)


def project(c: CosetRep, j: int) -> CosetRep:
    """Image of ``c`` in ``Gr(i_j, n)``."""
    gshape = c.shape.grassmannian(j)
    return coset_from_perm(gshape, c.perm)


def _grassmannian_steps(mv: MayaDiagram, mw: MayaDiagram) -> int:
    hook = RimHookSpec(1, 2)
    steps = 0
    cap = mv.shape.n ** 2
    while not diagram_leq(mw, mv):
        if steps >= cap:
            raise InvariantError("Grassmannian rim hook loop did not terminate")
        mv = rim_hook(mv, hook)
        steps += 1
    return steps


def projection_degree(v: CosetRep, w: CosetRep, j: int) -> int:
    """Number of rim hooks needed in ``Gr(i_j, n)`` to lift ``v`` above ``w``."""
    if v.shape != w.shape:
        raise ParseError(f"shape mismatch: {v.shape} vs {w.shape}")
    return _grassmannian_steps(to_maya(project(v, j)), to_maya(project(w, j)))


def lower_bound_vector(v: CosetRep, w: CosetRep) -> DegreeVector:
    return tuple(projection_degree(v, w, j) for j in range(1, v.shape.k + 1))


def graded_degree(shape: FlagShape, d: Sequence[int]) -> int:
    """Cohomological degree of ``q^d`` with ``deg q_j = i_{j+1} - i_{j-1}``."""
    if len(d) != shape.k:
        raise ParseError(f"degree has length {len(d)}, shape has k={shape.k}")
    return sum(x * wt for x, wt in zip(d, shape.qweights))

"""
Brute-force ground truth on small flag varieties.

Nothing here touches Maya diagrams or rim hooks: chains are searched
directly in the graph of cosets joined by cross-block transpositions, and
Bruhat order comes from the full-group prefix criterion or from cover
closure. :func:`verify_space` sweeps every ordered pair of a space and
compares the greedy algorithm against these oracles.
"""

from __future__ import annotations

import heapq
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .errors import OracleSizeError, ParseError
from .maya import diagram_leq, rim_hook, to_maya
from .qdegree import (
    DegreeVector, degree_leq, greedy_min_degree, lower_bound_vector, root_degree,
)
from .weyl import (
    CosetRep, FlagShape, apply_transposition, bruhat_leq_full, count_cosets,
    enumerate_cosets, hecke_word_action, length, reflection_word, transposition,
    word_product,
)

__all__ = [
    "MAX_COSETS", "LabeledEdge", "Mismatch", "VerifyReport", "adjacency_graph",
    "pareto_min_degrees", "bruhat_closure", "verify_space", "check_size",
]

MAX_COSETS = 50_000


@dataclass(frozen=True)
class LabeledEdge:
    source: CosetRep
    target: CosetRep
    degree: DegreeVector
    # the transposed positions a < b
    positions: tuple[int, int]


def check_size(shape: FlagShape) -> int:
    size = count_cosets(shape)
    if size > MAX_COSETS:
        raise OracleSizeError(
            f"{shape} has {size} cosets; the oracle is limited to {MAX_COSETS}")
    return size


def _cross_block_pairs(shape: FlagShape) -> list[tuple[int, int]]:
    n = shape.n
    return [(a, b) for a in range(1, n) for b in range(a + 1, n + 1)
            if shape.block_of(a) != shape.block_of(b)]


@lru_cache(maxsize=32)
def adjacency_graph(shape: FlagShape) -> tuple[LabeledEdge, ...]:
    """Every edge ``u -> u s_{e_a - e_b}`` with ``a`` and ``b`` in different blocks."""
    check_size(shape)
    pairs = _cross_block_pairs(shape)
    edges = []
    for u in enumerate_cosets(shape):
        for a, b in pairs:
            edges.append(LabeledEdge(u, apply_transposition(u, a, b), root_degree(shape, a, b), (a, b)))
    return tuple(edges)


@lru_cache(maxsize=32)
def _indexed(shape: FlagShape):
    cosets = list(enumerate_cosets(shape))
    index = {c: i for i, c in enumerate(cosets)}
    out: list[list[tuple[int, DegreeVector]]] = [[] for _ in cosets]
    for e in adjacency_graph(shape):
        out[index[e.source]].append((index[e.target], e.degree))
    return cosets, index, out


def _dominated(d: DegreeVector, labels: Sequence[DegreeVector]) -> bool:
    return any(degree_leq(e, d) for e in labels)


def pareto_min_degrees(
    v: CosetRep,
    w: CosetRep,
    cap: Optional[Sequence[int]] = None,
) -> frozenset[DegreeVector]:
    """Componentwise-minimal degrees of chains ``u_0 <= v, ..., u_r >= w``.

    Labels are settled in order of total degree; a label is dropped when it
    exceeds ``cap`` or is dominated by one already settled at its node or by
    an accepted degree. Without ``cap`` the search still terminates because
    every edge has positive degree and settled labels at a node form an
    antichain.
    """
    if v.shape != w.shape:
        raise ParseError(f"shape mismatch: {v.shape} vs {w.shape}")
    shape = v.shape
    cosets, _, out = _indexed(shape)
    k = shape.k
    if cap is not None and len(cap) != k:
        raise ParseError(f"cap has length {len(cap)}, expected {k}")

    accept = [bruhat_leq_full(w.perm, u.perm) for u in cosets]
    settled: list[list[DegreeVector]] = [[] for _ in cosets]
    found: list[DegreeVector] = []
    zero = (0,) * k
    heap = [(0, zero, i) for i, u in enumerate(cosets) if bruhat_leq_full(u.perm, v.perm)]
    heapq.heapify(heap)

    while heap:
        total, d, i = heapq.heappop(heap)
        if _dominated(d, settled[i]) or _dominated(d, found):
            continue
        settled[i].append(d)
        if accept[i]:
            found.append(d)
            continue
        for j, step in out[i]:
            e = tuple(x + y for x, y in zip(d, step))
            if cap is not None and not degree_leq(e, cap):
                continue
            if _dominated(e, settled[j]) or _dominated(e, found):
                continue
            heapq.heappush(heap, (total + sum(step), e, j))

    return frozenset(d for d in found if not any(e != d and degree_leq(e, d) for e in found))


@lru_cache(maxsize=32)
def bruhat_closure(shape: FlagShape) -> frozenset[tuple[CosetRep, CosetRep]]:
    """Pairs ``(u, x)`` with ``u <= x``, from length-raising transposition covers."""
    check_size(shape)
    pairs = [(a, b) for a in range(1, shape.n) for b in range(a + 1, shape.n + 1)]
    covers: dict[CosetRep, list[CosetRep]] = {}
    for u in enumerate_cosets(shape):
        lu = length(u)
        up = {apply_transposition(u, a, b) for a, b in pairs}
        covers[u] = [x for x in up if length(x) == lu + 1]

    relation = set()
    for u in covers:
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in covers[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        relation.update((u, x) for x in seen)
    return frozenset(relation)


@dataclass(frozen=True)
class Mismatch:
    v: CosetRep
    w: CosetRep
    greedy: DegreeVector
    pareto: frozenset[DegreeVector]
    lower_bound: DegreeVector

    def __str__(self):
        pareto = sorted(self.pareto)
        return f"v={self.v} w={self.w} greedy={self.greedy} pareto={pareto} lower={self.lower_bound}"


@dataclass
class VerifyReport:
    shape: FlagShape
    pairs_checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    bruhat_mismatches: int = 0
    hecke_mismatches: int = 0
    symmetric_pairs: int = 0
    longest_chain: int = 0

    @property
    def total_mismatches(self) -> int:
        return len(self.mismatches) + self.bruhat_mismatches + self.hecke_mismatches

    @property
    def ok(self) -> bool:
        return self.total_mismatches == 0

    def summary(self) -> str:
        return f"{self.pairs_checked} pairs, {self.total_mismatches} mismatches"

    def lines(self) -> list[str]:
        out = [
            f"flag {self.shape}",
            self.summary(),
            f"  degree mismatches: {len(self.mismatches)}",
            f"  bruhat mismatches: {self.bruhat_mismatches}",
            f"  hecke mismatches: {self.hecke_mismatches}",
            f"  symmetric pairs (greedy(v,w) == greedy(w,v)): {self.symmetric_pairs}/{self.pairs_checked}",
            f"  longest greedy chain: {self.longest_chain}",
        ]
        out.extend(f"  MISMATCH {m}" for m in self.mismatches)
        return out


def _hecke_ok(shape: FlagShape, start: CosetRep, steps) -> bool:
    current = start
    for step in steps:
        q, t = step.spec.q, step.spec.t
        word = reflection_word(shape, q, t)
        a, b = shape.bounds[q - 1] + 1, shape.bounds[t]
        if word_product(shape.n, word) != transposition(shape.n, a, b):
            return False
        if hecke_word_action(current, word) != step.result:
            return False
        if rim_hook(to_maya(current), step.spec) != to_maya(step.result):
            return False
        current = step.result
    return True


def _verify_row(shape: FlagShape, vi: int, cap_margin: int):
    cosets = list(enumerate_cosets(shape))
    closure = bruhat_closure(shape)
    v = cosets[vi]
    mv = to_maya(v)
    mismatches = []
    bruhat_bad = hecke_bad = longest = 0
    greedy_row = []
    for w in cosets:
        mw = to_maya(w)
        by_diagram = diagram_leq(mw, mv)
        if by_diagram != ((w, v) in closure) or by_diagram != bruhat_leq_full(w.perm, v.perm):
            bruhat_bad += 1
        total, trace = greedy_min_degree(v, w)
        greedy_row.append(total)
        longest = max(longest, len(trace.steps))
        if not _hecke_ok(shape, v, trace.steps):
            hecke_bad += 1
        lower = lower_bound_vector(v, w)
        cap = tuple(x + cap_margin for x in total)
        pareto = pareto_min_degrees(v, w, cap)
        if lower != total or pareto != frozenset([total]):
            mismatches.append(Mismatch(v, w, total, pareto, lower))
    return mismatches, bruhat_bad, hecke_bad, longest, greedy_row


def verify_space(shape: FlagShape, cap_margin: int = 1, jobs: int = 1) -> VerifyReport:
    """Check the greedy degree against the lower bound and the chain oracle on every pair."""
    size = check_size(shape)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_verify_row, [shape] * size, range(size), [cap_margin] * size))
    else:
        rows = [_verify_row(shape, i, cap_margin) for i in range(size)]

    report = VerifyReport(shape, pairs_checked=size * size)
    table = []
    for mismatches, bruhat_bad, hecke_bad, longest, greedy_row in rows:
        report.mismatches.extend(mismatches)
        report.bruhat_mismatches += bruhat_bad
        report.hecke_mismatches += hecke_bad
        report.longest_chain = max(report.longest_chain, longest)
        table.append(greedy_row)
    report.symmetric_pairs = sum(
        1 for i in range(size) for j in range(size) if table[i][j] == table[j][i])
    return report

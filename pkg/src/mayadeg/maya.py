"""
Maya diagrams of minimal coset representatives and the generalized rim hook.

A diagram has ``k+1`` rows indexed from the bottom; row ``j`` holds the
columns ``{w(1), ..., w(i_j)}``, so rows are nested and the top row is full.

>>> from mayadeg.weyl import FlagShape, parse_coset, format_coset
>>> shape = FlagShape(12, (8,))
>>> m = to_maya(parse_coset(shape, "1,2,3,5,8,9,11,12"))
>>> format_coset(from_maya(rim_hook(m, RimHookSpec(1, 2))))
'2,3,5,8,9,10,11,12'
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import AbstractSet, Optional, Sequence

from .errors import InvariantError, ParseError
from .weyl import CosetRep, FlagShape

__all__ = [
    "MayaDiagram", "RimHookSpec", "to_maya", "from_maya", "prefix_count",
    "diagram_leq", "phi", "psi", "rim_hook", "incompatible_rows",
    "candidate_rim_hooks", "select_rim_hook", "render",
]


def _check_rows(shape: FlagShape, rows: tuple[frozenset[int], ...]) -> None:
    b = shape.bounds
    if len(rows) != shape.k + 1:
        raise ParseError(f"expected {shape.k + 1} rows, got {len(rows)}")
    full = frozenset(range(1, shape.n + 1))
    prev: frozenset[int] = frozenset()
    for j, row in enumerate(rows, start=1):
        if not row <= full:
            raise ParseError(f"row {j} has columns outside 1..{shape.n}")
        if len(row) != b[j]:
            raise ParseError(f"row {j} has {len(row)} marks, expected {b[j]}")
        if not prev < row:
            raise ParseError(f"row {j - 1} is not contained in row {j}")
        prev = row


@dataclass(frozen=True)
class MayaDiagram:
    """``rows[j-1]`` is the column set of row ``j`` (row 1 at the bottom)."""

    shape: FlagShape
    rows: tuple[frozenset[int], ...]

    def __post_init__(self):
        rows = tuple(frozenset(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        _check_rows(self.shape, rows)

    def row(self, j: int) -> frozenset[int]:
        """Row ``j``; row 0 is empty."""
        return self.rows[j - 1] if j > 0 else frozenset()


@dataclass(frozen=True, order=True)
class RimHookSpec:
    """Generalized ``qt``-rim hook acting on rows ``q..t-1``."""

    q: int
    t: int

    def __post_init__(self):
        if not 1 <= self.q < self.t:
            raise ParseError(f"rim hook needs 1 <= q < t, got q={self.q}, t={self.t}")

    def check(self, shape: FlagShape) -> None:
        if self.t > shape.k + 1:
            raise ParseError(f"rim hook t={self.t} exceeds k+1={shape.k + 1}")


def to_maya(c: CosetRep) -> MayaDiagram:
    rows = tuple(frozenset(c.perm[:i]) for i in c.shape.bounds[1:])
    return MayaDiagram(c.shape, rows)


def from_maya(m: MayaDiagram) -> CosetRep:
    perm: list[int] = []
    prev: frozenset[int] = frozenset()
    for row in m.rows:
        perm.extend(sorted(row - prev))
        prev = row
    return CosetRep(m.shape, tuple(perm))


def prefix_count(m: MayaDiagram, j: int, b: int) -> int:
    """Number of marks in row ``j`` among columns ``1..b``."""
    return sum(1 for col in m.row(j) if col <= b)


def _prefix_table(m: MayaDiagram) -> list[list[int]]:
    # table[j-1][b] = prefix_count(m, j, b) for b = 0..n
    n = m.shape.n
    table = []
    for row in m.rows:
        counts = [0] * (n + 1)
        for b in range(1, n + 1):
            counts[b] = counts[b - 1] + (b in row)
        table.append(counts)
    return table


def _same_shape(a: MayaDiagram, b: MayaDiagram) -> None:
    if a.shape != b.shape:
        raise ParseError(f"shape mismatch: {a.shape} vs {b.shape}")


def diagram_leq(mw: MayaDiagram, mv: MayaDiagram) -> bool:
    """``M^w <= M^v``: every prefix count of ``mw`` is at least that of ``mv``.

    Equivalent to Bruhat order ``w <= v`` on minimal representatives.
    """
    _same_shape(mw, mv)
    tw, tv = _prefix_table(mw), _prefix_table(mv)
    return all(x >= y for rw, rv in zip(tw, tv) for x, y in zip(rw, rv))


Rows = Sequence[AbstractSet[int]]


def _row(m: MayaDiagram | Rows, j: int) -> AbstractSet[int]:
    if isinstance(m, MayaDiagram):
        return m.row(j)
    return m[j - 1] if j > 0 else frozenset()


def phi(m: MayaDiagram | Rows, r: int) -> Optional[int]:
    """Leftmost column marked in row ``r`` but not in row ``r-1``.

    ``m`` may also be a bare list of rows (bottom first), as used for the
    partially processed diagrams inside :func:`rim_hook`.
    """
    diff = _row(m, r) - _row(m, r - 1)
    return min(diff) if diff else None


def psi(m: MayaDiagram | Rows, r: int) -> Optional[int]:
    """Rightmost column marked in row ``r+1`` but not in row ``r``."""
    diff = _row(m, r + 1) - _row(m, r)
    return max(diff) if diff else None


def rim_hook(m: MayaDiagram, spec: RimHookSpec) -> MayaDiagram:
    """Apply the generalized ``qt``-rim hook.

    The up phase walks rows ``q..t-1`` removing the mark at ``phi``; the
    down phase walks back from ``t-1`` to ``q`` adding a mark at ``psi``.
    Both are evaluated on the working diagram at that moment.
    """
    spec.check(m.shape)
    q, t = spec.q, spec.t
    work = list(m.rows)

    for j in range(q, t):
        col = phi(work, j)
        if col is None:
            raise InvariantError(f"phi undefined at row {j} during rim hook {spec}")
        work[j - 1] = work[j - 1] - {col}
    for j in range(t - 1, q - 1, -1):
        col = psi(work, j)
        if col is None:
            raise InvariantError(f"psi undefined at row {j} during rim hook {spec}")
        work[j - 1] = work[j - 1] | {col}

    try:
        return MayaDiagram(m.shape, tuple(work))
    except ParseError as exc:
        raise InvariantError(f"rim hook {spec} produced an invalid diagram: {exc}") from exc


def incompatible_rows(mv: MayaDiagram, mw: MayaDiagram) -> frozenset[int]:
    """Rows ``j <= k`` of ``mv`` with some prefix count exceeding ``mw``'s."""
    _same_shape(mv, mw)
    tv, tw = _prefix_table(mv), _prefix_table(mw)
    return frozenset(
        j for j in range(1, mv.shape.k + 1)
        if any(x > y for x, y in zip(tv[j - 1], tw[j - 1]))
    )


def _maximal_runs(rows: frozenset[int]) -> list[tuple[int, int]]:
    runs = []
    for j in sorted(rows):
        if runs and runs[-1][1] == j - 1:
            runs[-1] = (runs[-1][0], j)
        else:
            runs.append((j, j))
    return runs


def candidate_rim_hooks(mv: MayaDiagram, mw: MayaDiagram) -> list[RimHookSpec]:
    """All hooks over a longest run of consecutive incompatible rows, by ``q``."""
    runs = _maximal_runs(incompatible_rows(mv, mw))
    if not runs:
        return []
    longest = max(hi - lo for lo, hi in runs)
    return [RimHookSpec(lo, hi + 1) for lo, hi in runs if hi - lo == longest]


def select_rim_hook(mv: MayaDiagram, mw: MayaDiagram) -> Optional[RimHookSpec]:
    """The hook used by the greedy chain, or ``None`` once ``mv`` dominates ``mw``.

    Ties between equally long runs go to the smallest ``q``.
    """
    candidates = candidate_rim_hooks(mv, mw)
    return candidates[0] if candidates else None


_ANSI_BOTTOM = "\x1b[1m"
_ANSI_UPPER = "\x1b[34m"
_ANSI_RESET = "\x1b[0m"


def render(m: MayaDiagram, color: bool = False) -> str:
    """Text grid, top row first.

    ``X`` marks the bottom mark of a column, ``x`` any other mark and ``.``
    an empty cell; cells are separated by one space. With ``color`` set (and
    ``NO_COLOR`` unset) the glyphs are wrapped in ANSI escapes.

    >>> from mayadeg.weyl import FlagShape, identity_coset
    >>> print(render(to_maya(identity_coset(FlagShape(2, (1,))))))
    x X
    X .
    """
    color = color and "NO_COLOR" not in os.environ
    n = m.shape.n
    bottom = {}
    for j, row in enumerate(m.rows, start=1):
        for col in row:
            bottom.setdefault(col, j)

    lines = []
    for j in range(len(m.rows), 0, -1):
        row = m.rows[j - 1]
        cells = []
        for col in range(1, n + 1):
            if col not in row:
                cells.append(".")
            elif bottom[col] == j:
                cells.append(f"{_ANSI_BOTTOM}X{_ANSI_RESET}" if color else "X")
            else:
                cells.append(f"{_ANSI_UPPER}x{_ANSI_RESET}" if color else "x")
        lines.append(" ".join(cells))
    return "\n".join(lines)

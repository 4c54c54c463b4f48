"""
Type A Weyl group machinery: flag shapes, permutations of ``1..n`` and
minimal length coset representatives of ``S_n / W_P``.

Permutations are plain tuples in one-line notation with 1-based values, so
``(2, 1, 3)`` is the simple reflection ``s_1`` in ``S_3``. Right
multiplication by ``s_i`` swaps the entries in positions ``i`` and ``i+1``.

>>> shape = parse_flag("1,2/4")
>>> c = parse_coset(shape, "4|3")
>>> c.perm, length(c)
((4, 3, 1, 2), 5)
>>> format_coset(apply_transposition(c, 1, 4))
'2|3'
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import ParseError

__all__ = [
    "FlagShape", "Permutation", "CosetRep",
    "make_flag_shape", "parse_flag", "format_flag", "block_of",
    "parse_coset", "format_coset", "coset_from_perm", "identity_coset",
    "enumerate_cosets", "count_cosets", "length", "inversions",
    "apply_transposition", "hecke_step", "hecke_fold", "hecke_product",
    "hecke_word_action", "reflection_word", "reduced_word", "word_product",
    "transposition", "compose", "inverse", "bruhat_leq_full",
]

# one-line notation, values 1..n
Permutation = tuple[int, ...]


@dataclass(frozen=True)
class FlagShape:
    """Dimension vector ``0 < i_1 < ... < i_k < n`` of a partial flag variety."""

    n: int
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        if self.n < 2:
            raise ParseError(f"ambient dimension must be >= 2, got {self.n}")
        if not self.dims:
            raise ParseError("a flag shape needs at least one dimension")
        prev = 0
        for d in self.dims:
            if not prev < d < self.n:
                raise ParseError(
                    f"dims must be strictly increasing inside (0, {self.n}), got {self.dims}")
            prev = d

    @property
    def k(self) -> int:
        return len(self.dims)

    @cached_property
    def bounds(self) -> tuple[int, ...]:
        # (i_0, i_1, ..., i_k, i_{k+1}) with i_0 = 0 and i_{k+1} = n
        return (0, *self.dims, self.n)

    @property
    def block_count(self) -> int:
        return self.k + 1

    @cached_property
    def block_sizes(self) -> tuple[int, ...]:
        b = self.bounds
        return tuple(b[j] - b[j - 1] for j in range(1, len(b)))

    @cached_property
    def _values(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1))

    @cached_property
    def _ascents(self) -> tuple[int, ...]:
        # 0-based i such that positions i+1 and i+2 share a block
        dims = set(self.dims)
        return tuple(i for i in range(self.n - 1) if i + 1 not in dims)

    @property
    def qweights(self) -> tuple[int, ...]:
        """Grading ``deg q_j = i_{j+1} - i_{j-1}`` for ``j = 1..k``."""
        b = self.bounds
        return tuple(b[j + 1] - b[j - 1] for j in range(1, self.k + 1))

    @cached_property
    def _block_lookup(self) -> tuple[int, ...]:
        lookup = [0]
        for j, size in enumerate(self.block_sizes, start=1):
            lookup.extend([j] * size)
        return tuple(lookup)

    def block_of(self, a: int) -> int:
        """Block index ``j`` with ``i_{j-1} < a <= i_j``.

        >>> FlagShape(13, (1, 3, 5, 7, 9)).block_of(10)
        6
        """
        if not 1 <= a <= self.n:
            raise ParseError(f"position {a} out of range 1..{self.n}")
        return self._block_lookup[a]

    def block_range(self, j: int) -> range:
        """Positions belonging to block ``j`` (1-based)."""
        b = self.bounds
        return range(b[j - 1] + 1, b[j] + 1)

    def grassmannian(self, j: int) -> FlagShape:
        """The shape of ``Gr(i_j, n)``."""
        if not 1 <= j <= self.k:
            raise ParseError(f"block index {j} out of range 1..{self.k}")
        return FlagShape(self.n, (self.dims[j - 1],))

    def __str__(self):
        return format_flag(self)


def make_flag_shape(n: int, dims: Sequence[int]) -> FlagShape:
    return FlagShape(int(n), tuple(int(d) for d in dims))


def block_of(shape: FlagShape, a: int) -> int:
    return shape.block_of(a)


_FLAG_RE = re.compile(r"^(\d+(?:,\d+)*)/(\d+)$")


def parse_flag(text: str) -> FlagShape:
    """Parse ``"i1,i2,...,ik/n"``.

    >>> parse_flag("1, 3, 5 / 7")
    FlagShape(n=7, dims=(1, 3, 5))
    """
    compact = re.sub(r"\s+", "", text)
    m = _FLAG_RE.match(compact)
    if not m:
        raise ParseError(f"cannot parse flag shape {text!r}; expected 'i1,...,ik/n'")
    dims = tuple(int(x) for x in m.group(1).split(","))
    return FlagShape(int(m.group(2)), dims)


def format_flag(shape: FlagShape) -> str:
    return ",".join(map(str, shape.dims)) + "/" + str(shape.n)


@dataclass(frozen=True)
class CosetRep:
    """Minimal length representative of a coset in ``S_n / W_P``.

    ``perm`` is the full permutation including the last (complement) block;
    it is increasing inside every block.
    """

    shape: FlagShape
    perm: Permutation

    def __post_init__(self):
        perm = tuple(self.perm)
        object.__setattr__(self, "perm", perm)
        shape = self.shape
        if len(perm) != shape.n or set(perm) != shape._values:
            raise ParseError(f"{perm} is not a permutation of 1..{shape.n}")
        for i in shape._ascents:
            if perm[i] > perm[i + 1]:
                raise ParseError(f"{perm} is not increasing inside block {shape.block_of(i + 1)}")

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """All ``k+1`` blocks, complement included."""
        b = self.shape.bounds
        return tuple(self.perm[b[j - 1]:b[j]] for j in range(1, len(b)))

    def __str__(self):
        return format_coset(self)


def coset_from_perm(shape: FlagShape, perm: Sequence[int]) -> CosetRep:
    """Minimal representative of the coset ``perm W_P`` (sort each block)."""
    b = shape.bounds
    out: list[int] = []
    for j in range(1, len(b)):
        out.extend(sorted(perm[b[j - 1]:b[j]]))
    return CosetRep(shape, tuple(out))


def identity_coset(shape: FlagShape) -> CosetRep:
    return CosetRep(shape, tuple(range(1, shape.n + 1)))


def parse_coset(shape: FlagShape, text: str) -> CosetRep:
    """Parse block notation such as ``"2|3,8|10,13|9,11"``.

    The trailing complement block may be given or omitted; ``<`` is accepted
    in place of ``,`` and surrounding parentheses are ignored.

    >>> parse_coset(FlagShape(3, (1, 2)), "(1|2)").perm
    (1, 2, 3)
    """
    compact = re.sub(r"\s+", "", text)
    if compact.startswith("(") and compact.endswith(")"):
        compact = compact[1:-1]
    compact = compact.replace("<", ",")
    if not compact:
        raise ParseError("empty coset text")
    try:
        blocks = [tuple(int(x) for x in part.split(",")) for part in compact.split("|")]
    except ValueError:
        raise ParseError(f"cannot parse coset {text!r}") from None

    sizes = shape.block_sizes
    if len(blocks) not in (shape.k, shape.k + 1):
        raise ParseError(
            f"coset {text!r} has {len(blocks)} blocks, expected {shape.k} or {shape.k + 1}")
    for j, (block, size) in enumerate(zip(blocks, sizes), start=1):
        if len(block) != size:
            raise ParseError(f"block {j} of {text!r} has {len(block)} entries, expected {size}")
        if any(x >= y for x, y in zip(block, block[1:])):
            raise ParseError(f"block {j} of {text!r} is not strictly increasing")
    seen = [x for block in blocks for x in block]
    if any(not 1 <= x <= shape.n for x in seen):
        raise ParseError(f"coset {text!r} has values outside 1..{shape.n}")
    if len(set(seen)) != len(seen):
        raise ParseError(f"coset {text!r} repeats a value")
    head = [x for block in blocks[:shape.k] for x in block]
    rest = tuple(sorted(set(range(1, shape.n + 1)) - set(head)))
    if len(blocks) == shape.k + 1 and blocks[-1] != rest:
        raise ParseError(f"last block of {text!r} must be the complement {rest}")
    return CosetRep(shape, tuple(head) + rest)


def format_coset(c: CosetRep, full: bool = False) -> str:
    """Block notation; the complement block is omitted unless ``full``."""
    blocks = c.blocks if full else c.blocks[:-1]
    return "|".join(",".join(map(str, block)) for block in blocks)


def enumerate_cosets(shape: FlagShape) -> Iterator[CosetRep]:
    """Every minimal coset representative, lexicographic in block notation."""

    def rec(remaining: tuple[int, ...], sizes: tuple[int, ...], prefix: tuple[int, ...]):
        if len(sizes) == 1:
            yield prefix + remaining
            return
        for block in itertools.combinations(remaining, sizes[0]):
            chosen = set(block)
            rest = tuple(x for x in remaining if x not in chosen)
            yield from rec(rest, sizes[1:], prefix + block)

    for perm in rec(tuple(range(1, shape.n + 1)), shape.block_sizes, ()):
        yield CosetRep(shape, perm)


def count_cosets(shape: FlagShape) -> int:
    """Multinomial ``n! / prod(block sizes!)``."""
    out = math.factorial(shape.n)
    for size in shape.block_sizes:
        out //= math.factorial(size)
    return out


def inversions(p: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(p, 2) if a > b)


def length(c: CosetRep | Sequence[int]) -> int:
    """Inversion count of a permutation or of a coset's minimal representative."""
    perm = c.perm if isinstance(c, CosetRep) else c
    return inversions(perm)


def apply_transposition(c: CosetRep, a: int, b: int) -> CosetRep:
    """Minimal representative of ``c s_{e_a - e_b} W_P``."""
    n = c.shape.n
    if not 1 <= a < b <= n:
        raise ParseError(f"need 1 <= a < b <= {n}, got a={a}, b={b}")
    p = list(c.perm)
    p[a - 1], p[b - 1] = p[b - 1], p[a - 1]
    return coset_from_perm(c.shape, p)


def hecke_step(p: Sequence[int], i: int) -> Permutation:
    """Hecke product ``p . s_i``: ``p s_i`` if that is longer, else ``p``."""
    if p[i - 1] < p[i]:
        q = list(p)
        q[i - 1], q[i] = q[i], q[i - 1]
        return tuple(q)
    return tuple(p)


def hecke_fold(p: Sequence[int], word: Sequence[int]) -> Permutation:
    out = tuple(p)
    for i in word:
        out = hecke_step(out, i)
    return out


def hecke_product(u: Sequence[int], v: Sequence[int]) -> Permutation:
    """Hecke product ``u . v`` of two permutations."""
    return hecke_fold(u, reduced_word(v))


def hecke_word_action(c: CosetRep, word: Sequence[int]) -> CosetRep:
    n = c.shape.n
    for i in word:
        if not 1 <= i <= n - 1:
            raise ParseError(f"simple index {i} out of range 1..{n - 1}")
    return coset_from_perm(c.shape, hecke_fold(c.perm, word))


def reflection_word(shape: FlagShape, q: int, t: int) -> tuple[int, ...]:
    """Palindromic word ``s_{a} s_{a+1} ... s_{b-1} ... s_{a+1} s_{a}``.

    Here ``a = i_{q-1} + 1`` and ``b = i_t``; the ordinary product is the
    transposition of positions ``a`` and ``b``.

    >>> reflection_word(FlagShape(5, (1, 3)), 1, 2)
    (1, 2, 1)
    """
    if not 1 <= q < t <= shape.k + 1:
        raise ParseError(f"need 1 <= q < t <= {shape.k + 1}, got q={q}, t={t}")
    lo = shape.bounds[q - 1] + 1
    hi = shape.bounds[t]
    up = tuple(range(lo, hi))
    return up + up[-2::-1]


def reduced_word(p: Sequence[int]) -> tuple[int, ...]:
    """A reduced word for ``p`` via bubble sort; its product is ``p``."""
    q = list(p)
    undo: list[int] = []
    while True:
        for i in range(len(q) - 1):
            if q[i] > q[i + 1]:
                q[i], q[i + 1] = q[i + 1], q[i]
                undo.append(i + 1)
                break
        else:
            break
    # p s_{b1} ... s_{bm} = id, hence p = s_{bm} ... s_{b1}
    return tuple(reversed(undo))


def word_product(n: int, word: Sequence[int]) -> Permutation:
    """Ordinary product ``s_{w1} s_{w2} ...`` in ``S_n``."""
    p = list(range(1, n + 1))
    for i in word:
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def transposition(n: int, a: int, b: int) -> Permutation:
    p = list(range(1, n + 1))
    p[a - 1], p[b - 1] = b, a
    return tuple(p)


def compose(x: Sequence[int], y: Sequence[int]) -> Permutation:
    """``(x y)(i) = x(y(i))``."""
    return tuple(x[j - 1] for j in y)


def inverse(p: Sequence[int]) -> Permutation:
    out = [0] * len(p)
    for i, v in enumerate(p, start=1):
        out[v - 1] = i
    return tuple(out)


def bruhat_leq_full(u: Sequence[int], v: Sequence[int]) -> bool:
    """Bruhat order on ``S_n`` via the sorted-prefix (tableau) criterion."""
    if len(u) != len(v):
        raise ParseError("permutations of different sizes")
    for a in range(1, len(u)):
        if any(x > y for x, y in zip(sorted(u[:a]), sorted(v[:a]))):
            return False
    return True

"""Binary code containers and distance machinery.

Codewords are packed ints under the bit convention of :mod:`tcis.gf2`.
Linear codes are held by a full-rank generator matrix; unrestricted codes
by an explicit sorted word tuple.  Distance enumerators count ordered
codeword pairs, so entries sum to |C|^2 and the i-th entry is |C|^2 B_i
in the usual normalization.
"""
from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .gf2 import BitMatrix, Infeasible, parity_dot, rank

__all__ = [
    "LinearCode",
    "ZeroCode",
    "UnrestrictedCode",
    "DistanceEnumerator",
    "systematic_form",
    "min_distance",
    "weight_distribution",
    "distance_enumerator",
    "dual_distance",
    "dual",
    "is_self_orthogonal",
    "star_fill_zero_columns",
    "krawtchouk_table",
    "MIN_DISTANCE_CAP",
    "PAIRWISE_SIZE_CAP",
    "TRANSLATE_SIZE_CAP",
]

MIN_DISTANCE_CAP = 1 << 28
PAIRWISE_SIZE_CAP = 1 << 16
TRANSLATE_SIZE_CAP = 1 << 20


class LinearCode:
    """A binary [n, k] code presented by a full-rank generator matrix."""

    __slots__ = ("gen",)

    def __init__(self, gen: BitMatrix):
        if rank(gen) != gen.nrows:
            raise ValueError("generator rows are linearly dependent")
        self.gen = gen

    @property
    def n(self) -> int:
        return self.gen.ncols

    @property
    def k(self) -> int:
        return self.gen.nrows

    def codewords(self) -> list[int]:
        """All 2^k codewords, indexed by message int."""
        rows = self.gen.rows
        out = [0] * (1 << self.k)
        for m in range(1, 1 << self.k):
            out[m] = out[m & (m - 1)] ^ rows[(m & -m).bit_length() - 1]
        return out

    def encode(self, message: int) -> int:
        return self.gen.vec_mul(message)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.gen == other.gen

    def __hash__(self) -> int:
        return hash(self.gen)

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, k={self.k})"


@dataclass(frozen=True)
class ZeroCode:
    """The code containing only the zero word, the dual of the full space."""

    n: int

    @property
    def k(self) -> int:
        return 0

    def codewords(self) -> list[int]:
        return [0]


class UnrestrictedCode:
    """A set of distinct words of fixed length, not necessarily linear."""

    __slots__ = ("n", "words", "distance_invariant")

    def __init__(self, n: int, words: Iterable[int], distance_invariant: bool = False):
        words = tuple(sorted(words))
        if not words:
            raise ValueError("code must contain at least one word")
        for i, w in enumerate(words):
            if w < 0 or w >> n:
                raise ValueError(f"word {w} does not fit in {n} bits")
            if i and words[i - 1] == w:
                raise ValueError(f"duplicate word {w}")
        self.n = n
        self.words = words
        self.distance_invariant = distance_invariant

    @property
    def size(self) -> int:
        return len(self.words)

    @classmethod
    def from_linear(cls, c: LinearCode) -> "UnrestrictedCode":
        return cls(c.n, c.codewords(), distance_invariant=True)

    def __repr__(self) -> str:
        return f"UnrestrictedCode(n={self.n}, size={self.size})"


@dataclass(frozen=True)
class DistanceEnumerator:
    """Ordered-pair distance counts; counts[i] pairs at Hamming distance i."""

    n: int
    size: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError("need exactly n+1 counts")
        if any(c < 0 for c in self.counts):
            raise ValueError("negative count")
        if self.counts[0] < self.size:
            raise ValueError("diagonal pairs missing from distance 0")
        if sum(self.counts) != self.size * self.size:
            raise ValueError("counts do not sum to |C|^2")

    def transform(self) -> tuple[int, ...]:
        """Dual-side counts |C|^2 B'_i via the Krawtchouk expansion.

        Entries are exact ints and are nonnegative for any code; for a
        linear code they equal |C|^2 times the dual weight distribution.
        """
        kt = krawtchouk_table(self.n)
        return tuple(
            sum(self.counts[j] * kt[i][j] for j in range(self.n + 1))
            for i in range(self.n + 1)
        )


def krawtchouk_table(n: int) -> list[list[int]]:
    """K[i][j] = sum_l (-1)^l C(j,l) C(n-j, i-l), for 0 <= i, j <= n."""
    table = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            row.append(
                sum(
                    (-1) ** l * math.comb(j, l) * math.comb(n - j, i - l)
                    for l in range(0, min(i, j) + 1)
                )
            )
        table.append(row)
    return table


def systematic_form(c: LinearCode) -> tuple[LinearCode, tuple[int, ...]]:
    """Row-reduce to (I_k | A), permuting pivot columns forward if needed.

    Returns the systematic code and the column permutation used: entry i
    of the permutation is the source column now sitting at position i.
    The permutation is the identity whenever the first k columns are
    already independent.
    """
    g = c.gen
    k, n = g.nrows, g.ncols
    pivots: list[int] = []
    lead: dict[int, int] = {}
    for j in range(n):
        v = g.column(j)
        while v:
            b = v.bit_length() - 1
            if b not in lead:
                break
            v ^= lead[b]
        if v:
            lead[v.bit_length() - 1] = v
            pivots.append(j)
            if len(pivots) == k:
                break
    assert len(pivots) == k
    if pivots == list(range(k)):
        perm = tuple(range(n))
        reordered = g
    else:
        rest = [j for j in range(n) if j not in set(pivots)]
        perm = tuple(pivots + rest)
        reordered = g.take_columns(perm)
    from .gf2 import invert

    u = invert(reordered.take_columns(range(k)))
    assert u is not None
    return LinearCode(u.mul(reordered)), perm


def min_distance(c: LinearCode, cap: int = MIN_DISTANCE_CAP) -> int:
    """Minimum weight of a nonzero codeword, by Gray-walk enumeration."""
    if (1 << c.k) > cap:
        raise Infeasible(
            f"enumeration infeasible: 2^{c.k} messages exceed cap {cap}"
        )
    rows = c.gen.rows
    best = c.n + 1
    word = 0
    for m in range(1, 1 << c.k):
        word ^= rows[(m & -m).bit_length() - 1]
        w = word.bit_count()
        if w < best:
            best = w
    return best


def weight_distribution(c: LinearCode, cap: int = MIN_DISTANCE_CAP) -> list[int]:
    """Counts of codewords per Hamming weight, length n+1."""
    if (1 << c.k) > cap:
        raise Infeasible(
            f"enumeration infeasible: 2^{c.k} messages exceed cap {cap}"
        )
    rows = c.gen.rows
    counts = [0] * (c.n + 1)
    counts[0] = 1
    word = 0
    for m in range(1, 1 << c.k):
        word ^= rows[(m & -m).bit_length() - 1]
        counts[word.bit_count()] += 1
    return counts


def _as_unrestricted(c) -> UnrestrictedCode:
    if isinstance(c, UnrestrictedCode):
        return c
    if isinstance(c, LinearCode):
        return UnrestrictedCode.from_linear(c)
    if isinstance(c, ZeroCode):
        return UnrestrictedCode(c.n, [0], distance_invariant=True)
    raise TypeError(f"not a code: {c!r}")


def distance_enumerator(c, distance_invariant: bool | None = None) -> DistanceEnumerator:
    """Exact ordered-pair distance counts.

    With the distance-invariant hint the counts are |C| times the weight
    distribution of the code translated through any fixed word, which takes
    one weight pass; without it all pairs are compared.  The hint defaults
    to the code's own flag (always true for linear codes).
    """
    uc = _as_unrestricted(c)
    if distance_invariant is None:
        distance_invariant = uc.distance_invariant
    m = uc.size
    counts = [0] * (uc.n + 1)
    if distance_invariant:
        if m > TRANSLATE_SIZE_CAP:
            raise Infeasible(f"code size {m} exceeds cap {TRANSLATE_SIZE_CAP}")
        c0 = uc.words[0]
        for w in uc.words:
            counts[(w ^ c0).bit_count()] += m
    else:
        if m > PAIRWISE_SIZE_CAP:
            raise Infeasible(f"code size {m} exceeds cap {PAIRWISE_SIZE_CAP}")
        words = uc.words
        counts[0] = m
        for i in range(m):
            wi = words[i]
            for j in range(i + 1, m):
                counts[(wi ^ words[j]).bit_count()] += 2
    return DistanceEnumerator(uc.n, m, tuple(counts))


def dual_distance(c, distance_invariant: bool | None = None) -> int | float:
    """Smallest i > 0 with nonzero dual-side enumerator coefficient.

    For a linear code this is the minimum distance of the dual code.  When
    every coefficient beyond i = 0 vanishes (the code is the full space)
    there is no such i and ``math.inf`` is returned.
    """
    if isinstance(c, DistanceEnumerator):
        de = c
    else:
        de = distance_enumerator(c, distance_invariant)
    n = de.n
    support = [j for j in range(n + 1) if de.counts[j]]
    # Krawtchouk columns via (i+1)K_{i+1} = (n-2j)K_i - (n-i+1)K_{i-1},
    # evaluated only at occurring distances, stopping at the first nonzero
    # coefficient; avoids the full (n+1)^2 table at large n.
    prev = {j: 1 for j in support}
    cur = {j: n - 2 * j for j in support}
    for i in range(1, n + 1):
        if sum(de.counts[j] * cur[j] for j in support):
            return i
        nxt = {
            j: ((n - 2 * j) * cur[j] - (n - i + 1) * prev[j]) // (i + 1)
            for j in support
        }
        prev, cur = cur, nxt
    return math.inf


def dual(c: LinearCode) -> LinearCode | ZeroCode:
    """Generator of the orthogonal complement; ZeroCode when k = n."""
    g = c.gen
    k, n = g.nrows, g.ncols
    if k == n:
        return ZeroCode(n)
    # Reduce to RREF, read the kernel off the free columns.  Each stored
    # row owns exactly one pivot bit, so one pass per pivot fully reduces.
    lead: dict[int, int] = {}
    for r in g.rows:
        v = r
        for b, row in lead.items():
            if (v >> b) & 1:
                v ^= row
        if v:
            b = (v & -v).bit_length() - 1
            for p in lead:
                if (lead[p] >> b) & 1:
                    lead[p] ^= v
            lead[b] = v
    pivots = sorted(lead)
    free = [j for j in range(n) if j not in lead]
    rows = []
    for f in free:
        v = 1 << f
        for p in pivots:
            if (lead[p] >> f) & 1:
                v |= 1 << p
        rows.append(v)
    d = LinearCode(BitMatrix(rows, n))
    assert d.k == n - k
    return d


def is_self_orthogonal(c: LinearCode) -> bool:
    """True iff G Gt vanishes, i.e. all rows pairwise and self orthogonal."""
    rows = c.gen.rows
    return all(
        parity_dot(rows[i], rows[j]) == 0
        for i in range(len(rows))
        for j in range(i, len(rows))
    )


def star_fill_zero_columns(c: LinearCode) -> LinearCode:
    """Replace zero columns, in column order, by e1, e2, ...

    Mirrors the repair applied to reference-table generators whose stored
    form carries dead coordinates.  Refuses when k or more columns are
    zero, since there are only k distinct identity columns to hand out.
    """
    g = c.gen
    zero_cols = [j for j in range(g.ncols) if g.column(j) == 0]
    if not zero_cols:
        return c
    if len(zero_cols) >= g.nrows:
        raise ValueError(
            f"cannot fill {len(zero_cols)} zero columns with only {g.nrows} rows"
        )
    rows = list(g.rows)
    for idx, j in enumerate(zero_cols):
        rows[idx] |= 1 << j
    return LinearCode(BitMatrix(rows, g.ncols))

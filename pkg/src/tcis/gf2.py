"""Linear algebra and polynomial arithmetic over GF(2).

Vectors are plain Python ints: bit j holds coordinate j, so the leftmost
character of a printed vector string is bit 0.  Matrices store one int per
row under the same convention.  Polynomials are ints with bit j holding the
coefficient of x**j.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence

__all__ = [
    "Infeasible",
    "BitMatrix",
    "parity_dot",
    "vec_from_str",
    "vec_to_str",
    "rank",
    "invert",
    "solve_in_span",
    "poly_degree",
    "poly_mul",
    "poly_divmod",
    "poly_mod",
    "poly_gcd",
    "x_pow_minus_one",
    "POLY_DEGREE_CAP",
]

POLY_DEGREE_CAP = 4096


class Infeasible(RuntimeError):
    """An operation refused to start because it would blow its size guard."""


def parity_dot(a: int, b: int) -> int:
    """Inner product of two bit vectors, i.e. parity of the AND."""
    return (a & b).bit_count() & 1


def vec_from_str(s: str) -> int:
    """Parse a 0/1 string, leftmost character becoming bit 0."""
    v = 0
    for j, ch in enumerate(s):
        if ch == "1":
            v |= 1 << j
        elif ch != "0":
            raise ValueError(f"invalid bit character {ch!r} in {s!r}")
    return v


def vec_to_str(v: int, n: int) -> str:
    if v < 0 or v >> n:
        raise ValueError(f"vector {v} does not fit in {n} bits")
    return "".join("1" if (v >> j) & 1 else "0" for j in range(n))


class BitMatrix:
    """Dense matrix over GF(2) with int-packed rows."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, rows: Iterable[int], ncols: int):
        rows = tuple(rows)
        if not rows or ncols <= 0:
            raise ValueError("matrix must have at least one row and one column")
        for r in rows:
            if r < 0 or r >> ncols:
                raise ValueError(f"row {r} does not fit in {ncols} columns")
        self.nrows = len(rows)
        self.ncols = ncols
        self._rows = rows

    @classmethod
    def identity(cls, k: int) -> "BitMatrix":
        return cls([1 << i for i in range(k)], k)

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BitMatrix":
        if not lines:
            raise ValueError("no rows given")
        n = len(lines[0])
        if any(len(s) != n for s in lines):
            raise ValueError("rows have unequal lengths")
        return cls([vec_from_str(s) for s in lines], n)

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def row(self, i: int) -> int:
        return self._rows[i]

    def entry(self, i: int, j: int) -> int:
        return (self._rows[i] >> j) & 1

    def column(self, j: int) -> int:
        """Column j packed into an int, bit i holding the entry of row i."""
        c = 0
        for i, r in enumerate(self._rows):
            c |= ((r >> j) & 1) << i
        return c

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.ncols)]

    def to_strings(self) -> list[str]:
        return [vec_to_str(r, self.ncols) for r in self._rows]

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.columns(), self.nrows)

    def mul(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions disagree")
        out = []
        for r in self._rows:
            acc = 0
            x = r
            while x:
                i = (x & -x).bit_length() - 1
                acc ^= other._rows[i]
                x &= x - 1
            out.append(acc)
        return BitMatrix(out, other.ncols)

    def mul_vec(self, v: int) -> int:
        """Matrix times column vector; returns the packed result."""
        acc = 0
        for i, r in enumerate(self._rows):
            acc |= parity_dot(r, v) << i
        return acc

    def vec_mul(self, v: int) -> int:
        """Row vector times matrix."""
        acc = 0
        x = v
        while x:
            i = (x & -x).bit_length() - 1
            acc ^= self._rows[i]
            x &= x - 1
        return acc

    def take_columns(self, idx: Sequence[int]) -> "BitMatrix":
        out = []
        for r in self._rows:
            v = 0
            for pos, j in enumerate(idx):
                v |= ((r >> j) & 1) << pos
            out.append(v)
        return BitMatrix(out, len(idx))

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row counts disagree")
        n = self.ncols
        rows = [a | (b << n) for a, b in zip(self._rows, other._rows)]
        return BitMatrix(rows, n + other.ncols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.ncols == other.ncols and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.ncols, self._rows))

    def __repr__(self) -> str:
        return f"BitMatrix({list(self._rows)!r}, ncols={self.ncols})"


def _eliminate(rows: Iterable[int]) -> list[int]:
    # Row reduce; returns pivot rows, each with a leading bit no other
    # pivot row touches.
    pivots: dict[int, int] = {}
    for r in rows:
        v = r
        while v:
            b = v.bit_length() - 1
            p = pivots.get(b)
            if p is None:
                pivots[b] = v
                break
            v ^= p
    return [pivots[b] for b in sorted(pivots, reverse=True)]


def rank(m: BitMatrix) -> int:
    return len(_eliminate(m.rows))


def invert(m: BitMatrix) -> BitMatrix | None:
    """Inverse of a square matrix, or None when singular."""
    if m.nrows != m.ncols:
        raise ValueError("matrix is not square")
    k = m.nrows
    # Gauss-Jordan on [m | I], tracking the augmented half in high bits.
    aug = [m.row(i) | (1 << (k + i)) for i in range(k)]
    mask = (1 << k) - 1
    for col in range(k):
        piv = None
        for i in range(col, k):
            if (aug[i] >> col) & 1:
                piv = i
                break
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        for i in range(k):
            if i != col and (aug[i] >> col) & 1:
                aug[i] ^= aug[col]
    return BitMatrix([r >> k for r in aug], k)


def solve_in_span(basis: BitMatrix, target: int) -> int | None:
    """Express a packed column vector over the columns of an independent basis.

    Returns a coefficient mask (bit j set when column j participates) or
    None when the target lies outside the span.  The columns of ``basis``
    must be linearly independent; a dependent basis is a caller bug and
    raises ValueError.
    """
    cols = basis.columns()
    # Eliminate while tagging each work vector with the column subset that
    # produced it, so the combination falls out of the elimination.
    pivots: dict[int, tuple[int, int]] = {}
    for j, c in enumerate(cols):
        v, tag = c, 1 << j
        while v:
            b = v.bit_length() - 1
            hit = pivots.get(b)
            if hit is None:
                pivots[b] = (v, tag)
                break
            v ^= hit[0]
            tag ^= hit[1]
        else:
            raise ValueError("basis columns are linearly dependent")
    v, tag = target, 0
    while v:
        b = v.bit_length() - 1
        hit = pivots.get(b)
        if hit is None:
            return None
        v ^= hit[0]
        tag ^= hit[1]
    return tag


def poly_degree(p: int) -> int | None:
    """Degree of a GF(2) polynomial, None for the zero polynomial."""
    if p < 0:
        raise ValueError("negative polynomial encoding")
    if p == 0:
        return None
    return p.bit_length() - 1


def _check_poly(p: int) -> None:
    if p < 0:
        raise ValueError("negative polynomial encoding")
    if p.bit_length() - 1 > POLY_DEGREE_CAP:
        raise Infeasible(f"polynomial degree exceeds cap {POLY_DEGREE_CAP}")


def poly_mul(p: int, q: int) -> int:
    _check_poly(p)
    _check_poly(q)
    acc = 0
    while q:
        i = (q & -q).bit_length() - 1
        acc ^= p << i
        q &= q - 1
    _check_poly(acc)
    return acc


def poly_divmod(p: int, q: int) -> tuple[int, int]:
    _check_poly(p)
    _check_poly(q)
    if q == 0:
        raise ZeroDivisionError("polynomial division by zero")
    dq = q.bit_length() - 1
    quo, rem = 0, p
    while rem.bit_length() - 1 >= dq and rem:
        shift = rem.bit_length() - 1 - dq
        quo |= 1 << shift
        rem ^= q << shift
    return quo, rem


def poly_mod(p: int, q: int) -> int:
    return poly_divmod(p, q)[1]


def poly_gcd(p: int, q: int) -> int:
    """Monic gcd of two GF(2) polynomials; gcd(p, 0) = p, gcd(0, 0) errors."""
    _check_poly(p)
    _check_poly(q)
    if p == 0 and q == 0:
        raise ValueError("gcd(0, 0) is undefined")
    while q:
        p, q = q, poly_mod(p, q)
    return p


def x_pow_minus_one(m: int) -> int:
    """The polynomial x**m + 1 (same as x**m - 1 over GF(2))."""
    if m <= 0:
        raise ValueError("exponent must be positive")
    if m > POLY_DEGREE_CAP:
        raise Infeasible(f"polynomial degree exceeds cap {POLY_DEGREE_CAP}")
    return (1 << m) | 1

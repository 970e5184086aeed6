"""Splitting code coordinates into pairwise disjoint information sets.

The positive branch returns t index sets, each of size k with an invertible
generator submatrix.  The negative branch returns a column set S whose size
exceeds t times its rank, which certifies that no such splitting can exist:
any valid splitting would have to place the columns of S into t independent
pieces, impossible once |S| > t * rank(S).
"""
from __future__ import annotations

from dataclasses import dataclass

from .codes import LinearCode
from .gf2 import BitMatrix, Infeasible, invert

__all__ = [
    "ColumnMatroid",
    "Partition",
    "Violation",
    "t_cis_partition",
    "span_closure",
    "exhaustive_partition_oracle",
    "EXHAUSTIVE_N_CAP",
]

EXHAUSTIVE_N_CAP = 18


class ColumnMatroid:
    """Rank and span queries over the columns of a generator matrix."""

    __slots__ = ("ncols", "cols")

    def __init__(self, m: BitMatrix):
        self.ncols = m.ncols
        self.cols = m.columns()

    def rank_of(self, idx) -> int:
        lead: dict[int, int] = {}
        for j in idx:
            v = self.cols[j]
            while v:
                b = v.bit_length() - 1
                if b not in lead:
                    lead[b] = v
                    break
                v ^= lead[b]
        return len(lead)

    def independent(self, idx) -> bool:
        idx = list(idx)
        return self.rank_of(idx) == len(idx)


def span_closure(m: ColumnMatroid, s) -> frozenset[int]:
    """All column indices lying in the column space spanned by s.

    The empty set spans only zero, so its closure is the zero columns.
    Closure is idempotent and always contains s.
    """
    lead: dict[int, int] = {}
    for j in s:
        v = m.cols[j]
        while v:
            b = v.bit_length() - 1
            if b not in lead:
                lead[b] = v
                break
            v ^= lead[b]
    out = []
    for j in range(m.ncols):
        v = m.cols[j]
        while v:
            b = v.bit_length() - 1
            if b not in lead:
                break
            v ^= lead[b]
        if v == 0:
            out.append(j)
    return frozenset(out)


@dataclass(frozen=True)
class Partition:
    """Positive certificate: disjoint information sets covering all columns."""

    sets: tuple[tuple[int, ...], ...]

    @property
    def is_partition(self) -> bool:
        return True


@dataclass(frozen=True)
class Violation:
    """Negative certificate: a column set with |S| > t * rank(S)."""

    columns: tuple[int, ...]
    rank: int
    t: int

    @property
    def is_partition(self) -> bool:
        return False


def _check_partition(c: LinearCode, t: int, sets) -> None:
    seen: set[int] = set()
    for s in sets:
        assert len(s) == c.k
        assert not (seen & set(s))
        seen |= set(s)
        assert invert(c.gen.take_columns(s)) is not None
    assert len(seen) == c.n


def t_cis_partition(c: LinearCode, t: int) -> Partition | Violation:
    """Split the n = t*k columns into t information sets, or certify failure.

    Runs the matroid base-partition exchange walk: each unassigned column
    is pushed into the partial sets along an augmenting chain of swaps.
    The span chain S_0 = all, S_j = closure(I_{j'} ∩ S_{j-1}) shrinks while
    the walk runs; if some S_j has |S_j| > t * rank(S_j) that set is a
    proof of impossibility and is returned as a Violation.

    Either certificate is re-verified before being returned.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    if c.n != t * c.k:
        raise ValueError(f"length {c.n} is not t*k = {t}*{c.k}")
    n, k = c.n, c.k
    matroid = ColumnMatroid(c.gen)
    cols = matroid.cols
    sets: list[set[int]] = [set() for _ in range(t)]
    assigned: set[int] = set()
    everything = frozenset(range(n))

    def violation(s: frozenset[int], r: int) -> Violation:
        v = Violation(tuple(sorted(s)), r, t)
        assert matroid.rank_of(v.columns) == v.rank
        assert len(v.columns) > t * v.rank
        return v

    while len(assigned) < n:
        x = min(everything - assigned)
        placed = False
        for _ in range(n * k):  # swaps per insertion; cycling would be a bug
            # Walk the span chain S_0 = all, S_j = closure(I_idx ∩ S_{j-1}).
            # The chain only shrinks; a full round without shrinking while
            # x stays inside forces the violation branch, so it terminates.
            prev, stable = everything, 0
            j = 0
            while True:
                idx = j % t
                j += 1
                inter = sets[idx] & prev
                cur = span_closure(matroid, inter)
                cur_rank = len(inter)  # inter is independent, hence a basis
                if len(cur) > t * cur_rank:
                    return violation(cur, cur_rank)
                if x not in cur:
                    if matroid.independent(sets[idx] | {x}):
                        sets[idx].add(x)
                        assigned.add(x)
                        placed = True
                    else:
                        # x closes a circuit with sets[idx]; bump its
                        # smallest circuit column outside the previous
                        # span and re-run the walk for that column.
                        basis = sorted(sets[idx])
                        comb = _express(matroid, basis, cols[x])
                        circuit = {
                            basis[i] for i in range(len(basis)) if (comb >> i) & 1
                        }
                        cand = sorted(circuit - prev)
                        if not cand:
                            raise RuntimeError(
                                "exchange walk found no swappable circuit "
                                "column; this contradicts the walk invariant"
                            )
                        y = cand[0]
                        sets[idx].remove(y)
                        sets[idx].add(x)
                        assigned.add(x)
                        assigned.discard(y)
                        x = y
                    break
                stable = stable + 1 if cur == prev else 0
                if stable >= t:
                    raise RuntimeError(
                        "span chain stabilized with x inside and no "
                        "violation; this contradicts the walk invariant"
                    )
                prev = cur
            if placed:
                break
        else:
            raise RuntimeError("exchange walk exceeded its swap guard")
    result = Partition(tuple(tuple(sorted(s)) for s in sets))
    _check_partition(c, t, result.sets)
    return result


def _express(matroid: ColumnMatroid, basis: list[int], target: int) -> int:
    # Coefficients of target over an independent column set, as a bitmask
    # aligned with the basis order.
    lead: dict[int, tuple[int, int]] = {}
    for i, j in enumerate(basis):
        v, tag = matroid.cols[j], 1 << i
        while v:
            b = v.bit_length() - 1
            hit = lead.get(b)
            if hit is None:
                lead[b] = (v, tag)
                break
            v ^= hit[0]
            tag ^= hit[1]
        else:
            raise AssertionError("basis unexpectedly dependent")
    v, tag = target, 0
    while v:
        b = v.bit_length() - 1
        hit = lead.get(b)
        if hit is None:
            raise AssertionError("target outside basis span")
        v ^= hit[0]
        tag ^= hit[1]
    return tag


def exhaustive_partition_oracle(c: LinearCode, t: int) -> Partition | None:
    """Backtracking search over all block choices; correctness oracle only.

    Exponential in n, so refuses beyond n = 18.  Returns one partition or
    None when none exists.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    if c.n != t * c.k:
        raise ValueError(f"length {c.n} is not t*k = {t}*{c.k}")
    if c.n > EXHAUSTIVE_N_CAP:
        raise Infeasible(f"length {c.n} exceeds oracle cap {EXHAUSTIVE_N_CAP}")
    matroid = ColumnMatroid(c.gen)
    k = c.k

    def blocks_from(avail: list[int]):
        # All independent k-subsets of avail that contain avail[0], to
        # kill the ordering symmetry between blocks.
        first = avail[0]
        chosen = [first]

        def grow(start: int):
            if len(chosen) == k:
                if matroid.independent(chosen):
                    yield list(chosen)
                return
            for pos in range(start, len(avail)):
                chosen.append(avail[pos])
                # prune only on the full test at the leaf; partial rank
                # checks cost more than they save at these sizes
                if matroid.rank_of(chosen) == len(chosen):
                    yield from grow(pos + 1)
                chosen.pop()

        yield from grow(1)

    solution: list[tuple[int, ...]] = []

    def search(avail: list[int]) -> bool:
        if not avail:
            return True
        for block in blocks_from(avail):
            solution.append(tuple(block))
            rest = [j for j in avail if j not in set(block)]
            if search(rest):
                return True
            solution.pop()
        return False

    if search(list(range(c.n))):
        result = Partition(tuple(solution))
        _check_partition(c, t, result.sets)
        return result
    return None

"""Tests for canonical forms, invertible-block classes, and classification."""

from functools import reduce
from itertools import permutations
from operator import xor

import pytest

from conftest import random_code, random_invertible
from tcis.classify import (
    CANONICAL_N_CAP,
    ClassTableRow,
    canonical_form,
    class_table_text,
    classify_tcis,
    enumerate_cat,
    equivalent,
)
from tcis.codes import LinearCode, is_self_orthogonal, min_distance
from tcis.gf2 import BitMatrix, Infeasible, rank
from tcis.partition import t_cis_partition


def brute_form(c):
    """Minimum over all column orders of the sorted packed-codeword tuple."""
    words = c.codewords()
    n = c.n
    best = None
    for perm in permutations(range(n)):
        mapped = tuple(
            sorted(
                sum(((w >> perm[j]) & 1) << (n - 1 - j) for j in range(n))
                for w in words
            )
        )
        if best is None or mapped < best:
            best = mapped
    return best


def shuffled(rng, c):
    perm = list(range(c.n))
    rng.shuffle(perm)
    return LinearCode(c.gen.take_columns(perm))


def test_canonical_form_matches_brute(rng):
    for _ in range(25):
        k = rng.randint(1, 3)
        n = rng.randint(max(4, k), 7)
        c = random_code(rng, n, k)
        assert canonical_form(c).form == brute_form(c)


def test_canonical_witness_is_consistent(rng):
    for _ in range(10):
        c = random_code(rng, rng.randint(4, 9), rng.randint(2, 4))
        cf = canonical_form(c)
        assert (cf.n, cf.k) == (c.n, c.k)
        assert sorted(cf.perm) == list(range(c.n))
        packed = tuple(
            sorted(
                sum(((w >> cf.perm[j]) & 1) << (c.n - 1 - j) for j in range(c.n))
                for w in c.codewords()
            )
        )
        assert packed == cf.form
        assert cf.form == tuple(sorted(cf.form))


def test_canonical_form_is_permutation_invariant(rng):
    for _ in range(10):
        k = rng.randint(2, 4)
        n = rng.randint(k + 1, 10)
        c = random_code(rng, n, k)
        base = canonical_form(c).form
        # column shuffle
        assert canonical_form(shuffled(rng, c)).form == base
        # change of generator rows (same row space)
        u = random_invertible(rng, k)
        mixed = BitMatrix(
            [
                reduce(xor, (c.gen.row(j) for j in range(k) if (u.row(i) >> j) & 1), 0)
                for i in range(k)
            ],
            n,
        )
        assert canonical_form(LinearCode(mixed)).form == base


def test_canonical_caps():
    wide = LinearCode(BitMatrix([(1 << 16) - 1], 16))
    with pytest.raises(Infeasible):
        canonical_form(wide)
    tall = LinearCode(BitMatrix.identity(7))
    with pytest.raises(Infeasible):
        canonical_form(tall)
    assert CANONICAL_N_CAP == 15


def test_equivalent_shape_mismatch():
    a = LinearCode(BitMatrix.identity(2))
    b = LinearCode(BitMatrix.identity(3))
    with pytest.raises(ValueError, match="shape mismatch"):
        equivalent(a, b)


def test_equivalent_separates_length_6_classes(rng):
    reps, _ = classify_tcis(2)
    assert len(reps) == 3
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            assert equivalent(a, b) == (i == j)
        assert equivalent(a, shuffled(rng, a))


def test_cat_class_counts():
    assert enumerate_cat(1)[0] == 1
    assert enumerate_cat(2)[0] == 4
    assert enumerate_cat(3)[0] == 58
    assert enumerate_cat(1, t=2)[0] == 1
    assert enumerate_cat(2, t=2)[0] == 2


def test_cat_reps_are_independent_blocks():
    count, reps = enumerate_cat(3)
    assert count == len(reps) == 58
    for rep in reps:
        assert len(rep) == 2  # t - 1 blocks
        for basis in rep:
            assert len(basis) == 3
            assert rank(BitMatrix(list(basis), 3)) == 3


def test_cat_guards():
    with pytest.raises(Infeasible):
        enumerate_cat(4)
    with pytest.raises(Infeasible):
        enumerate_cat(5, allow_slow=True)
    with pytest.raises(ValueError):
        enumerate_cat(2, t=1)


@pytest.mark.slow
def test_cat_count_k4():
    assert enumerate_cat(4, allow_slow=True)[0] == 4822


def test_classify_small_lengths():
    reps1, row1 = classify_tcis(1)
    assert len(reps1) == 1 and row1.length == 3
    assert row1.by_d == ((3, (0, 1)),)

    reps2, row2 = classify_tcis(2)
    assert len(reps2) == 3 and row2.length == 6
    assert row2.by_d == ((3, (0, 2)), (4, (1, 0)))

    reps3, row3 = classify_tcis(3)
    assert len(reps3) == 19 and row3.length == 9
    assert row3.by_d == ((3, (0, 11)), (4, (1, 7)))
    assert row3.total == 19


@pytest.mark.slow
def test_classify_length_12():
    reps, row = classify_tcis(4)
    assert len(reps) == 361
    assert row.by_d == ((3, (0, 170)), (4, (6, 172)), (5, (0, 12)), (6, (0, 1)))


def test_methods_agree_small():
    for k in (1, 2, 3):
        reps1, row1 = classify_tcis(k, method=1)
        reps2, row2 = classify_tcis(k, method=2)
        assert [canonical_form(c).form for c in reps1] == [
            canonical_form(c).form for c in reps2
        ]
        assert row1 == row2


def test_classify_reps_are_valid(rng):
    reps, _ = classify_tcis(3)
    for c in reps:
        assert (c.n, c.k) == (9, 3)
        assert t_cis_partition(c, 3).is_partition
        assert min_distance(c) >= 3
    # class invariants survive a coordinate shuffle
    for c in rng.sample(reps, 4):
        s = shuffled(rng, c)
        assert min_distance(s) == min_distance(c)
        assert is_self_orthogonal(s) == is_self_orthogonal(c)
        assert equivalent(s, c)


def test_classify_table_not_larger_than_cat():
    for k in (1, 2, 3):
        cat_count, _ = enumerate_cat(k)
        reps, _ = classify_tcis(k)
        assert len(reps) <= cat_count


def test_classify_two_factor():
    reps, row = classify_tcis(2, t=2)
    assert row.length == 4
    assert row.total == len(reps)
    for c in reps:
        assert (c.n, c.k) == (4, 2)
        assert t_cis_partition(c, 2).is_partition
        assert min_distance(c) >= 2


def test_classify_guards():
    with pytest.raises(ValueError):
        classify_tcis(2, t=4)
    with pytest.raises(ValueError):
        classify_tcis(2, method=3)
    with pytest.raises(Infeasible):
        classify_tcis(5)
    with pytest.raises(Infeasible):
        classify_tcis(5, method=2, allow_slow=True)
    with pytest.raises(Infeasible):
        classify_tcis(6, allow_slow=True)


def test_class_table_row_cells():
    row = ClassTableRow(6, ((3, (0, 2)), (4, (1, 0))))
    assert row.total == 3
    assert row.cell(3) == "2 (0+2)"
    assert row.cell(4) == "1 (1+0)"
    assert row.cell(5) == "0"


def test_class_table_text_layout():
    rows = [
        ClassTableRow(3, ((3, (0, 1)),)),
        ClassTableRow(6, ((3, (0, 2)), (4, (1, 0)))),
    ]
    text = class_table_text(rows)
    lines = text.split("\n")
    assert len(lines) == 3
    assert lines[0].split() == ["n", "d=3", "d=4", "total"]
    assert lines[1].split() == ["3", "1", "(0+1)", "0", "1"]
    assert lines[2].split() == ["6", "2", "(0+2)", "1", "(1+0)", "3"]

import math
from itertools import combinations

import pytest

from conftest import random_code, random_full_rank
from tcis.codes import (
    DistanceEnumerator,
    LinearCode,
    UnrestrictedCode,
    ZeroCode,
    distance_enumerator,
    dual,
    dual_distance,
    is_self_orthogonal,
    krawtchouk_table,
    min_distance,
    star_fill_zero_columns,
    systematic_form,
    weight_distribution,
)
from tcis.gf2 import BitMatrix, Infeasible, parity_dot


def test_linear_code_validation():
    with pytest.raises(ValueError):
        LinearCode(BitMatrix([0b11, 0b11], 2))
    c = LinearCode(BitMatrix.from_strings(["111"]))
    assert (c.n, c.k) == (3, 1)


def test_codewords_group_structure(rng):
    for _ in range(20):
        n = rng.randrange(2, 9)
        k = rng.randrange(1, n + 1)
        c = random_code(rng, n, k)
        words = c.codewords()
        assert len(words) == 1 << k
        assert len(set(words)) == 1 << k
        ws = set(words)
        assert 0 in ws
        sample = rng.sample(words, min(8, len(words)))
        for a in sample:
            for b in sample:
                assert a ^ b in ws


def test_encode_matches_row_combination(rng):
    c = random_code(rng, 7, 3)
    for msg in range(8):
        want = 0
        for i in range(3):
            if (msg >> i) & 1:
                want ^= c.gen.row(i)
        assert c.encode(msg) == want


def test_zero_code():
    z = ZeroCode(5)
    assert z.k == 0
    assert list(z.codewords()) == [0]


def test_unrestricted_validation():
    with pytest.raises(ValueError):
        UnrestrictedCode(3, [1, 1])
    with pytest.raises(ValueError):
        UnrestrictedCode(2, [5])
    u = UnrestrictedCode(3, [0, 3, 5])
    assert u.size == 3


def test_systematic_form_identity_case(bk_24_8):
    sys_c, perm = systematic_form(bk_24_8)
    assert perm == tuple(range(24))
    assert sys_c.gen == bk_24_8.gen


def test_systematic_form_pivot_move(rng):
    for _ in range(25):
        n = rng.randrange(3, 10)
        k = rng.randrange(1, n)
        c = random_code(rng, n, k)
        sys_c, perm = systematic_form(c)
        assert sorted(perm) == list(range(n))
        assert sys_c.gen.take_columns(range(k)) == BitMatrix.identity(k)
        # same code up to the returned column permutation
        orig = set(c.codewords())
        moved = {
            sum(((w >> perm[j]) & 1) << j for j in range(n)) for w in orig
        }
        assert moved == set(sys_c.codewords())


def brute_min_distance(c: LinearCode) -> int:
    return min(w.bit_count() for w in c.codewords() if w)


def test_min_distance_small(rng):
    for _ in range(30):
        n = rng.randrange(2, 10)
        k = rng.randrange(1, n + 1)
        c = random_code(rng, n, k)
        assert min_distance(c) == brute_min_distance(c)


def test_min_distance_cap():
    c = LinearCode(BitMatrix.identity(8))
    with pytest.raises(Infeasible):
        min_distance(c, cap=16)


def test_weight_distribution(rng):
    c = LinearCode(BitMatrix.from_strings(["1100", "0011"]))
    assert weight_distribution(c) == [1, 0, 2, 0, 1]
    for _ in range(10):
        c = random_code(rng, rng.randrange(2, 9), 2)
        wd = weight_distribution(c)
        assert sum(wd) == 4
        assert wd[0] == 1


def brute_pair_counts(n, words):
    counts = [0] * (n + 1)
    for a in words:
        for b in words:
            counts[(a ^ b).bit_count()] += 1
    return tuple(counts)


def test_distance_enumerator_paths_agree(rng):
    for _ in range(20):
        n = rng.randrange(2, 9)
        k = rng.randrange(1, n + 1)
        c = random_code(rng, n, k)
        de_fast = distance_enumerator(c)
        u = UnrestrictedCode(n, c.codewords())  # hint dropped: all-pairs path
        de_slow = distance_enumerator(u)
        assert de_fast == de_slow
        assert de_fast.counts == brute_pair_counts(n, c.codewords())


def test_distance_enumerator_nonlinear(rng):
    words = [0b0000, 0b0111, 0b1011, 0b1101]
    u = UnrestrictedCode(4, words)
    de = distance_enumerator(u)
    assert de.counts == brute_pair_counts(4, words)


def test_enumerator_validation():
    with pytest.raises(ValueError):
        DistanceEnumerator(2, 2, (1, 0, 1))  # sum != size^2
    with pytest.raises(ValueError):
        DistanceEnumerator(2, 2, (1, 2, 1))  # diagonal short


def test_macwilliams_exact(rng):
    # transform equals |C|^2 times the dual weight distribution
    for _ in range(25):
        n = rng.randrange(2, 9)
        k = rng.randrange(1, n)
        c = random_code(rng, n, k)
        t = distance_enumerator(c).transform()
        dwd = weight_distribution(dual(c))
        size = 1 << k
        assert t == tuple(size * size * a for a in dwd)
        assert all(v >= 0 for v in t)


def test_krawtchouk_orthogonality():
    n = 6
    kt = krawtchouk_table(n)
    # sum_j C(n,j) K_i(j) K_l(j) = 2^n C(n,i) delta_il
    for i in range(n + 1):
        for l in range(n + 1):
            s = sum(math.comb(n, j) * kt[i][j] * kt[l][j] for j in range(n + 1))
            want = (1 << n) * math.comb(n, i) if i == l else 0
            assert s == want


def test_dual_properties(rng):
    for _ in range(30):
        n = rng.randrange(2, 10)
        k = rng.randrange(1, n)
        c = random_code(rng, n, k)
        d = dual(c)
        assert d.k == n - k
        for a in c.gen.rows:
            for b in d.gen.rows:
                assert parity_dot(a, b) == 0
        back = dual(d)
        assert set(back.codewords()) == set(c.codewords())


def test_dual_full_space():
    c = LinearCode(BitMatrix.identity(4))
    d = dual(c)
    assert isinstance(d, ZeroCode)
    assert dual_distance(c) == math.inf


def test_dual_distance_matches_dual_code(rng):
    for _ in range(25):
        n = rng.randrange(2, 10)
        k = rng.randrange(1, n)
        c = random_code(rng, n, k)
        assert dual_distance(c) == min_distance(dual(c))


def test_dual_distance_accepts_enumerator(rng):
    c = random_code(rng, 6, 3)
    de = distance_enumerator(c)
    assert dual_distance(de) == dual_distance(c)


def test_self_orthogonality(buildup_6_2):
    assert is_self_orthogonal(LinearCode(BitMatrix.from_strings(["1111"])))
    assert not is_self_orthogonal(LinearCode(BitMatrix.from_strings(["111"])))
    assert is_self_orthogonal(buildup_6_2)


def test_self_orthogonal_iff_in_own_dual(rng):
    for _ in range(20):
        n = rng.randrange(2, 9)
        k = rng.randrange(1, n)
        c = random_code(rng, n, k)
        want = set(c.codewords()) <= set(dual(c).codewords())
        assert is_self_orthogonal(c) == want


def test_star_fill_zero_columns():
    c = LinearCode(BitMatrix.from_strings(["0110", "0011"]))
    filled = star_fill_zero_columns(c)
    assert filled.gen.to_strings() == ["1110", "0011"]
    # untouched when no zero columns
    c2 = LinearCode(BitMatrix.from_strings(["11"]))
    assert star_fill_zero_columns(c2).gen == c2.gen
    # two zero columns, k = 3: uses e1 then e2 in column order
    c3 = LinearCode(BitMatrix.from_strings(["01000", "00100", "00010"]))
    f3 = star_fill_zero_columns(c3)
    assert f3.gen.to_strings() == ["11000", "00101", "00010"]
    # as many zero columns as rows: cannot fill
    with pytest.raises(ValueError):
        star_fill_zero_columns(LinearCode(BitMatrix.from_strings(["010"])))

import random
from fractions import Fraction

import pytest

from conftest import random_invertible, systematic_cis_code
from tcis.boolfun import (
    BooleanPermutation,
    LeakageFunction,
    build_masking_code,
    cip_strength,
    derive_bijections,
    group_convolution,
    hamming_weight_leakage,
    leakage_constancy_check,
    point_mass_leakage,
    t_ci_strength,
    verify_theorem1,
    walsh_table,
)
from tcis.codes import LinearCode, distance_enumerator, dual, dual_distance, min_distance
from tcis.gf2 import BitMatrix, Infeasible, parity_dot


def random_perm(rng, k):
    table = list(range(1 << k))
    rng.shuffle(table)
    return BooleanPermutation(k, table)


def test_permutation_validation():
    with pytest.raises(ValueError):
        BooleanPermutation(2, [0, 1, 2, 2])
    with pytest.raises(ValueError):
        BooleanPermutation(2, [0, 1, 2])
    ident = BooleanPermutation.identity(3)
    assert [ident(x) for x in range(8)] == list(range(8))


def test_from_matrix_row_action(rng):
    # a linear permutation acts on row vectors: F(x) = x . M
    for _ in range(20):
        k = rng.randrange(1, 6)
        m = random_invertible(rng, k)
        f = BooleanPermutation.from_matrix(m)
        for x in range(1 << k):
            assert f(x) == m.vec_mul(x)
    with pytest.raises(ValueError):
        BooleanPermutation.from_matrix(BitMatrix([0b11, 0b11], 2))


def test_inverse(rng):
    for _ in range(10):
        k = rng.randrange(1, 5)
        f = random_perm(rng, k)
        g = f.inverse()
        for x in range(1 << k):
            assert g(f(x)) == x
    m = random_invertible(rng, 3)
    f = BooleanPermutation.from_matrix(m)
    g = f.inverse()
    assert g.matrix is not None
    assert m.mul(g.matrix) == BitMatrix.identity(3)


def brute_walsh(f, a, b):
    return sum(
        -1 if (parity_dot(a, x) ^ parity_dot(b, f(x))) else 1
        for x in range(1 << f.k)
    )


def test_walsh_definitional(rng):
    for k in (1, 2, 3):
        f = random_perm(rng, k)
        w = walsh_table(f)
        for a in range(1 << k):
            for b in range(1 << k):
                assert w.value(a, b) == brute_walsh(f, a, b)


def test_walsh_linear_support(rng):
    # for F(x) = x.M the table is 2^k exactly on pairs a = M b (column action)
    for _ in range(10):
        k = rng.randrange(1, 5)
        m = random_invertible(rng, k)
        f = BooleanPermutation.from_matrix(m)
        w = walsh_table(f)
        for a in range(1 << k):
            for b in range(1 << k):
                want = (1 << k) if a == m.mul_vec(b) else 0
                assert w.value(a, b) == want


def test_walsh_cap():
    with pytest.raises(Infeasible):
        walsh_table(BooleanPermutation.identity(13))


def brute_pair_strength(f1, f2):
    # smallest total weight of (a, b1, b2), a != 0, with both Walsh values
    # nonzero, minus nothing: strength = that minimum sum - 1
    k = f1.k
    w1, w2 = walsh_table(f1), walsh_table(f2)
    best = None
    for a in range(1, 1 << k):
        for b1 in range(1 << k):
            if not w1.value(a, b1):
                continue
            for b2 in range(1 << k):
                if not w2.value(a, b2):
                    continue
                s = a.bit_count() + b1.bit_count() + b2.bit_count()
                if best is None or s < best:
                    best = s
    return best - 1


def test_cip_strength_definitional(rng):
    for _ in range(12):
        k = rng.randrange(2, 4)
        f1, f2 = random_perm(rng, k), random_perm(rng, k)
        assert cip_strength(f1, f2) == brute_pair_strength(f1, f2)
    with pytest.raises(ValueError):
        cip_strength(random_perm(rng, 2), random_perm(rng, 3))


def test_identity_pair_strength():
    ident = BooleanPermutation.identity(3)
    assert cip_strength(ident, ident) == 2
    assert t_ci_strength([ident, ident]) == 2


def test_t_ci_strength_matches_pair(rng):
    for _ in range(8):
        f1, f2 = random_perm(rng, 3), random_perm(rng, 3)
        assert t_ci_strength([f1, f2]) == cip_strength(f1, f2)


def test_masking_code_brute(rng):
    for _ in range(10):
        k = rng.randrange(1, 4)
        t = rng.randrange(1, 3)
        fs = [random_perm(rng, k) for _ in range(t)]
        mc = build_masking_code(fs)
        assert mc.n == (t + 1) * k
        words = set()
        for idx in range(1 << (t * k)):
            shares = [(idx >> (i * k)) & ((1 << k) - 1) for i in range(t)]
            w = 0
            for s in shares:
                w ^= s
            for i, f in enumerate(fs):
                w |= f(shares[i]) << ((i + 1) * k)
            words.add(w)
        assert set(mc.words) == words


def test_masking_code_of_derived_is_dual(rng):
    for _ in range(10):
        k = rng.randrange(1, 4)
        t = rng.randrange(2, 4)
        c = systematic_cis_code(rng, k, t)
        fs = derive_bijections(c, t)
        mc = build_masking_code(fs)
        assert set(mc.words) == set(dual(c).codewords())


def test_theorem1_verify(rng):
    for _ in range(15):
        k = rng.randrange(2, 4)
        res = verify_theorem1(random_perm(rng, k), random_perm(rng, k))
        assert res["consistent"]
        assert res["dual_distance"] == res["cip_strength"] + 1
    with pytest.raises(Infeasible):
        verify_theorem1(random_perm(rng, 5), random_perm(rng, 5))


def test_derive_requires_cis():
    bad = LinearCode(BitMatrix.from_strings(["110100", "011000"]))
    with pytest.raises(ValueError):
        derive_bijections(bad, 3)


def test_derive_linear_blocks(rng):
    # derived F_i acts by the inverse transpose of the i-th block
    for _ in range(10):
        k = rng.randrange(1, 4)
        c = systematic_cis_code(rng, k, 3)
        f1, f2 = derive_bijections(c, 3)
        from tcis.gf2 import invert

        l1 = c.gen.take_columns(range(k, 2 * k))
        l2 = c.gen.take_columns(range(2 * k, 3 * k))
        assert f1.matrix == invert(l1.transpose())
        assert f2.matrix == invert(l2.transpose())


def test_leakage_function_algebra():
    w = hamming_weight_leakage(3)
    assert w.values == tuple(Fraction(x.bit_count()) for x in range(8))
    sq = w.power(2)
    assert sq.values == tuple(v * v for v in w.values)
    assert not w.is_constant()
    assert LeakageFunction(2, [1, 1, 1, 1]).is_constant()
    p = point_mass_leakage(2)
    assert p.values == (1, 0, 0, 0)
    ident = BooleanPermutation.identity(3)
    assert w.compose(ident).values == w.values


def test_convolution_definitional(rng):
    for _ in range(6):
        k = rng.randrange(1, 4)
        n = 1 << k
        f = LeakageFunction(k, [Fraction(rng.randrange(-4, 5)) for _ in range(n)])
        g = LeakageFunction(k, [Fraction(rng.randrange(-4, 5)) for _ in range(n)])
        conv = group_convolution(f, g)
        brute = [
            sum(f.values[x] * g.values[z ^ x] for x in range(n)) for z in range(n)
        ]
        assert list(conv.values) == brute


def test_triple_hamming_identity_k4():
    k = 4
    w = hamming_weight_leakage(k)
    triple = group_convolution(group_convolution(w, w), w)
    for z in range(1 << k):
        lhs = triple.values[z] / Fraction(1 << (2 * k))
        rhs = w.values[z] / 4 + Fraction((k - 1) * k * (k + 1), 8)
        assert lhs == rhs


def test_iterated_hamming_identity():
    # closed form for the t-fold self-convolution of the weight function
    for t in (2, 3):
        for k in (3, 4):
            w = hamming_weight_leakage(k)
            acc = w
            for _ in range(t - 1):
                acc = group_convolution(acc, w)
            for z in range(1 << k):
                lhs = acc.values[z] / Fraction(1 << (k * (t - 1)))
                rhs = Fraction(-1, 2) ** (t - 1) * (
                    w.values[z] + Fraction(k, 2) * ((-k) ** (t - 1) - 1)
                )
                assert lhs == rhs


def test_constancy_unprotected_depends_on_z():
    # without bijections the convolved weight leakage is not constant
    k = 4
    w = hamming_weight_leakage(k)
    res = leakage_constancy_check([w, w, w])
    assert not res.constant
    assert res.witness is not None


def test_constancy_matches_direct_expectation(rng):
    # conditional mean of the leakage product over share decompositions
    # is an affine image of the convolution; constancy must coincide
    k = 2
    n = 1 << k
    for _ in range(6):
        fs = [random_perm(rng, k) for _ in range(2)]
        ls = [hamming_weight_leakage(k) for _ in range(3)]
        res = leakage_constancy_check(ls, [BooleanPermutation.identity(k)] + fs)
        means = []
        for z in range(n):
            total = Fraction(0)
            for m1 in range(n):
                for m2 in range(n):
                    s0 = z ^ m1 ^ m2
                    total += (
                        ls[0].values[s0]
                        * ls[1].values[fs[0](m1)]
                        * ls[2].values[fs[1](m2)]
                    )
            means.append(total / (n * n))
        direct_constant = len(set(means)) == 1
        assert res.constant == direct_constant


def test_protected_constancy_order(bk_24_8):
    # the derived k=8 pair keeps every product of point weights <= 7 flat
    f1, f2 = derive_bijections(bk_24_8, 3)
    k = 8
    ident = BooleanPermutation.identity(k)
    w = hamming_weight_leakage(k)
    for p0, p1, p2 in [(1, 1, 1), (2, 2, 3), (1, 1, 5), (3, 3, 1)]:
        res = leakage_constancy_check(
            [w.power(p0), w.power(p1), w.power(p2)], [ident, f1, f2]
        )
        assert res.constant, (p0, p1, p2)
    for p0, p1, p2 in [(1, 2, 5), (2, 2, 4), (1, 3, 4)]:
        res = leakage_constancy_check(
            [w.power(p0), w.power(p1), w.power(p2)], [ident, f1, f2]
        )
        assert not res.constant, (p0, p1, p2)

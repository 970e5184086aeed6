"""Column-permutation equivalence, canonical forms, and classification.

The canonical form of a code is the lexicographically least level
sequence: scanning canonical columns left to right, level l compares the
sorted multiset of codeword prefixes on the first l columns.  A
partition-refinement search with signature dominance finds it without
touching all n! column orders; the result is the sorted codeword tuple
in canonical column order, which two codes share exactly when one is a
column permutation of the other.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations

import numpy as np

from .codes import LinearCode, is_self_orthogonal, min_distance, weight_distribution
from .gf2 import BitMatrix, Infeasible

__all__ = [
    "CanonicalCode",
    "canonical_form",
    "equivalent",
    "enumerate_cat",
    "ClassTableRow",
    "classify_tcis",
    "class_table_text",
    "CANONICAL_N_CAP",
    "CANONICAL_WORDS_CAP",
]

CANONICAL_N_CAP = 15
CANONICAL_WORDS_CAP = 64


@dataclass(frozen=True)
class CanonicalCode:
    """Canonical sorted-codeword tuple plus one witnessing column order.

    form[i] packs codeword i with canonical column 0 as the most
    significant bit; perm[j] is the source column at canonical position j.
    """

    n: int
    k: int
    form: tuple[int, ...]
    perm: tuple[int, ...]


def canonical_form(c: LinearCode) -> CanonicalCode:
    n, k = c.n, c.k
    if n > CANONICAL_N_CAP or (1 << k) > CANONICAL_WORDS_CAP:
        raise Infeasible(
            f"[{n},{k}] outside canonicalization caps "
            f"(n <= {CANONICAL_N_CAP}, 2^k <= {CANONICAL_WORDS_CAP})"
        )
    words = c.codewords()
    nw = len(words)
    # column c as a mask over codeword indices
    colmask = [
        sum(((words[w] >> col) & 1) << w for w in range(nw)) for col in range(n)
    ]
    full = (1 << nw) - 1
    best_sig: list = [None] * (n + 1)
    best_leaf: list = [None]
    best_perm: list = [None]

    def rec(blocks, keys, used: int, chosen: tuple[int, ...]):
        level = len(chosen) + 1
        fresh: dict[int, int] = {}
        for col in range(n):
            if not (used >> col) & 1 and colmask[col] not in fresh:
                fresh[colmask[col]] = col
        groups: dict[tuple[int, ...], list[int]] = {}
        for cm, col in fresh.items():
            sig = tuple((b & cm).bit_count() for b in blocks)
            groups.setdefault(sig, []).append(col)
        # Only the least signature can extend a least level sequence.
        sig = min(groups)
        if best_sig[level] is not None and sig > best_sig[level]:
            return
        if best_sig[level] is None or sig < best_sig[level]:
            best_sig[level] = sig
            for deeper in range(level + 1, n + 1):
                best_sig[deeper] = None
            best_leaf[0] = None
        for col in groups[sig]:
            cm = colmask[col]
            nb, nk = [], []
            for b, key in zip(blocks, keys):
                b0 = b & ~cm
                b1 = b & cm
                if b0:
                    nb.append(b0)
                    nk.append(key << 1)
                if b1:
                    nb.append(b1)
                    nk.append((key << 1) | 1)
            if level == n:
                if best_leaf[0] is None:
                    # all 2^k words distinct, so blocks are singletons here
                    best_leaf[0] = tuple(nk)
                    best_perm[0] = chosen + (col,)
            else:
                rec(nb, nk, used | (1 << col), chosen + (col,))

    rec([full], [0], 0, ())
    return CanonicalCode(n, k, best_leaf[0], best_perm[0])


def equivalent(a: LinearCode, b: LinearCode) -> bool:
    """Column-permutation equivalence, with a weight-distribution fast path."""
    if (a.n, a.k) != (b.n, b.k):
        raise ValueError(f"shape mismatch: [{a.n},{a.k}] vs [{b.n},{b.k}]")
    if weight_distribution(a) != weight_distribution(b):
        return False
    return canonical_form(a).form == canonical_form(b).form


def _basis_sets(k: int) -> list[tuple[int, ...]]:
    # all unordered bases of F_2^k, columns as ints, sorted ascending
    out = []
    for combo in combinations(range(1, 1 << k), k):
        lead: dict[int, int] = {}
        ok = True
        for v in combo:
            while v:
                b = v.bit_length() - 1
                if b not in lead:
                    lead[b] = v
                    break
                v ^= lead[b]
            else:
                ok = False
                break
        if ok:
            out.append(combo)
    return out


def _bit_perm_tables(k: int) -> list[bytes]:
    # byte translate tables realizing coordinate permutations on vectors
    tabs = []
    for perm in permutations(range(k)):
        tab = [0] * 256
        for v in range(1 << k):
            tab[v] = sum(((v >> i) & 1) << perm[i] for i in range(k))
        tabs.append(bytes(tab))
    return tabs


def enumerate_cat(k: int, t: int = 3, allow_slow: bool = False):
    """Invertible-block concatenations up to row and column permutation.

    A class is determined by the multiset of the k(t-1) columns up to
    permuting the k coordinates, so classes are enumerated as multisets
    of unordered bases and deduplicated under the coordinate action.
    Returns (count, representatives); each representative is a tuple of
    t-1 bases whose concatenation realizes the class.
    """
    if t < 2:
        raise ValueError("need t >= 2")
    if k > 4 or (k == 4 and not allow_slow):
        raise Infeasible(
            f"k={k} Cat enumeration needs the long-running opt-in"
            if k == 4
            else f"k={k} exceeds the Cat enumeration guard"
        )
    bases = _basis_sets(k)
    tabs = _bit_perm_tables(k)
    seen: dict[bytes, tuple] = {}
    for combo in combinations_with_replacement(range(len(bases)), t - 1):
        ms = bytes(sorted(v for bi in combo for v in bases[bi]))
        key = min(bytes(sorted(ms.translate(tab))) for tab in tabs)
        if key not in seen:
            seen[key] = tuple(bases[bi] for bi in combo)
    reps = [seen[key] for key in sorted(seen)]
    return len(reps), reps


@dataclass(frozen=True)
class ClassTableRow:
    """One classification summary line: per-d (self-orthogonal, other) counts."""

    length: int
    by_d: tuple[tuple[int, tuple[int, int]], ...]

    @property
    def total(self) -> int:
        return sum(so + nso for _, (so, nso) in self.by_d)

    def cell(self, d: int) -> str:
        for dd, (so, nso) in self.by_d:
            if dd == d:
                return f"{so + nso} ({so}+{nso})"
        return "0"


def _blocks_code(k: int, blocks) -> LinearCode:
    rows = []
    for i in range(k):
        row = 1 << i
        for b, basis in enumerate(blocks):
            for ci, col in enumerate(basis):
                row |= ((col >> i) & 1) << ((b + 1) * k + ci)
        rows.append(row)
    return LinearCode(BitMatrix(rows, (1 + len(blocks)) * k))


def _basis_tables(k: int, bases):
    """Per-basis appended-block encodings, as numpy arrays.

    enc[b, u] packs the appended bits of message u under basis b, bwt is
    its weight, vbits[b, u, i] the single bit of appended column i, and
    vpairs[b, u, p] the product of appended columns p = (i, i2), i <= i2,
    in upper-triangle order.
    """
    kk = 1 << k
    cols = np.array(bases, dtype=np.int64)  # (Nb, k)
    msgs = np.arange(kk, dtype=np.int64)
    ands = msgs[None, None, :] & cols[:, :, None]  # (Nb, k, kk)
    parity = np.zeros_like(ands, dtype=np.uint8)
    # parity of popcount, one bit position at a time
    for b in range(k):
        parity ^= ((ands >> b) & 1).astype(np.uint8)
    enc = np.zeros((len(bases), kk), dtype=np.int64)
    for i in range(k):
        enc |= parity[:, i, :].astype(np.int64) << i
    bwt = parity.sum(axis=1, dtype=np.uint8)  # (Nb, kk)
    vbits = np.ascontiguousarray(parity.transpose(0, 2, 1))  # (Nb, kk, k)
    iu, ju = np.triu_indices(k)
    vpairs = vbits[:, :, iu] * vbits[:, :, ju]  # (Nb, kk, k(k+1)/2)
    return enc, bwt, vbits, vpairs


_MIX = np.int64(-7046029254386353131)  # odd 64-bit mixing constant
_MIX2 = np.int64(-4417276706812531889)


def _stage2_keys(wt, p_lo, p_hi):
    """Column-profile keys from packed pair-count matrices, batched.

    wt is the (C, nw) codeword-weight table and p_lo/p_hi the (C, n, n)
    symmetric matrices whose entry (j, i) encodes, base 64, how many
    codewords of each weight contain both columns; shells 0..7 sit in
    p_lo, 8..15 in p_hi.  Each column's diagonal entry plus its sorted
    off-diagonal profile is hash-mixed into one int64, the mixed values
    are sorted (a deterministic stand-in for sorting the profiles
    themselves), and the result lands next to the sorted weight table in
    one key row per candidate.
    """
    c, n, _ = p_lo.shape
    # int64 products wrap around; that is fine, the mixes only need to be
    # deterministic
    h = p_lo.astype(np.int64) * _MIX + p_hi.astype(np.int64)
    off = np.arange(n)
    offidx = np.array([[j2 for j2 in range(n) if j2 != j] for j in off])
    rows = np.take_along_axis(h, np.broadcast_to(offidx, (c, n, n - 1)), axis=2)
    rows = np.sort(rows, axis=2)
    sig = h[:, off, off].copy()  # diagonal = per-shell column counts
    for t in range(n - 1):
        sig = sig * _MIX2 + rows[:, :, t]
    sig = np.sort(sig, axis=1)
    wts = np.sort(wt, axis=1).astype(np.uint8)
    return np.concatenate(
        [wts, sig.view(np.uint8).reshape(c, 8 * n)], axis=1
    )


def _classify_fast_t3(k: int):
    """Two-stage growth with invariant-key deduplication (t = 3).

    Same class semantics as method 1: append one invertible block per
    stage and deduplicate, but stage 2 recognizes duplicates by a
    permutation-invariant key instead of full canonicalization.  The key
    combines the codeword-weight multiset with, for every column pair,
    the number of codewords of each weight containing both columns;
    everything is preserved by column permutation and basis change, so
    members of one class always collide, and key collisions could only
    merge inequivalent classes and lower the count, never inflate it.
    Stage 1 classifies the (I | B) prefixes by exact canonical form.
    Block order is normalized by requiring the second block's stage-1
    class index to be at least the first's: a class whose least
    first-slot index over all its systematic forms is i has a form
    (I | R_i | B) built on the chosen stage-1 representative R_i, and
    swapping the blocks shows cls(B) >= i, so the restriction loses
    nothing.
    """
    kk = 1 << k
    n0, n = 2 * k, 3 * k
    bases = _basis_sets(k)
    enc, bwt, vbits, vpairs = _basis_tables(k, bases)

    # stage 1: classes of (I | B), by canonical form
    stage1: dict[tuple, int] = {}
    reps1: list[int] = []
    cls_of = np.zeros(len(bases), dtype=np.int64)
    for bi in range(len(bases)):
        form = canonical_form(_blocks_code(k, (bases[bi],))).form
        idx = stage1.get(form)
        if idx is None:
            idx = len(reps1)
            stage1[form] = idx
            reps1.append(bi)
        cls_of[bi] = idx

    pow64 = np.float64(64.0) ** np.arange(8)
    iu, ju = np.triu_indices(k)
    seen: dict[bytes, tuple[int, int]] = {}
    for i, ai in enumerate(reps1):
        words = [int(u | (enc[ai, u] << k)) for u in range(kk)]
        wt0 = np.array([w.bit_count() for w in words], dtype=np.int64)
        mf = np.array(
            [[(w >> j) & 1 for j in range(n0)] for w in words], dtype=np.float64
        )
        ff = (mf[:, :, None] * mf[:, None, :]).reshape(kk, n0 * n0)
        cand = np.nonzero(cls_of >= i)[0]
        for lo in range(0, len(cand), 8192):
            idx = cand[lo : lo + 8192]
            c = len(idx)
            wt = wt0[None, :] + bwt[idx].astype(np.int64)  # (C, kk)
            val_lo = np.where(wt < 8, pow64[np.minimum(wt, 7)], 0.0)
            val_hi = np.where(wt >= 8, pow64[np.maximum(wt - 8, 0)], 0.0)
            vb = vbits[idx].astype(np.float64)  # (C, kk, k)
            vp = vpairs[idx].astype(np.float64)  # (C, kk, pairs)
            p = [np.empty((c, n, n)), np.empty((c, n, n))]
            for h, val in enumerate((val_lo, val_hi)):
                p[h][:, :n0, :n0] = (val @ ff).reshape(c, n0, n0)
                fa = np.tensordot(val[:, :, None] * vb, mf, axes=([1], [0]))
                p[h][:, n0:, :n0] = fa  # (C, k, n0)
                p[h][:, :n0, n0:] = fa.transpose(0, 2, 1)
                aa = (val[:, :, None] * vp).sum(axis=1)  # (C, pairs)
                p[h][:, n0 + iu, n0 + ju] = aa
                p[h][:, n0 + ju, n0 + iu] = aa
            keys = _stage2_keys(wt, p[0], p[1])
            for row, bi in zip(keys, idx):
                kb = row.tobytes()
                if kb not in seen:
                    seen[kb] = (ai, int(bi))
    return [
        _blocks_code(k, (bases[ai], bases[bi]))
        for _, (ai, bi) in sorted(seen.items())
    ]


def classify_tcis(k: int, t: int = 3, method: int = 2, allow_slow: bool = False):
    """All inequivalent t-CIS codes of length tk, plus the summary row.

    Method 2 appends one concatenation per Cat class to the identity and
    deduplicates; method 1 grows the code one invertible block at a time,
    deduplicating after every block.  Both return identical class sets.
    """
    if t not in (2, 3):
        raise ValueError("classification is implemented for t in {2, 3}")
    if method not in (1, 2):
        raise ValueError("method must be 1 or 2")
    if k > 5 or (k == 5 and not allow_slow):
        raise Infeasible(
            f"k={k} classification needs the long-running opt-in"
            if k == 5
            else f"k={k} exceeds the classification guard"
        )
    if k == 5 and method == 2:
        raise Infeasible("k=5 runs through method 1 only (Cat guard)")

    if k == 5 and t == 3:
        # canonical forms are too slow at this size; see _classify_fast_t3
        reps = _classify_fast_t3(k)
    elif method == 2:
        _, cat_reps = enumerate_cat(k, t, allow_slow=True)
        forms: dict[tuple, LinearCode] = {}
        for blocks in cat_reps:
            code = _blocks_code(k, blocks)
            forms.setdefault(canonical_form(code).form, code)
        reps = [forms[f] for f in sorted(forms)]
    else:
        bases = _basis_sets(k)
        stage: dict[tuple, LinearCode] = {}
        ident = LinearCode(BitMatrix.identity(k))
        stage[canonical_form(ident).form] = ident
        for _ in range(t - 1):
            nxt: dict[tuple, LinearCode] = {}
            for code in stage.values():
                n0 = code.n
                for basis in bases:
                    rows = [
                        code.gen.row(i)
                        | sum(((col >> i) & 1) << (n0 + ci) for ci, col in enumerate(basis))
                        for i in range(k)
                    ]
                    cand = LinearCode(BitMatrix(rows, n0 + k))
                    nxt.setdefault(canonical_form(cand).form, cand)
            stage = nxt
        reps = [stage[f] for f in sorted(stage)]
    from .partition import t_cis_partition

    counts: dict[int, list[int]] = {}
    for code in reps:
        assert t_cis_partition(code, t).is_partition
        d = min_distance(code)
        assert d >= t
        so = is_self_orthogonal(code)
        cell = counts.setdefault(d, [0, 0])
        cell[0 if so else 1] += 1
    row = ClassTableRow(
        t * k, tuple((d, (so, nso)) for d, (so, nso) in sorted(counts.items()))
    )
    return reps, row


def class_table_text(rows) -> str:
    """Render summary rows in the length / per-d cells / total layout."""
    rows = list(rows)
    dvals = sorted({d for r in rows for d, _ in r.by_d})
    header = ["n"] + [f"d={d}" for d in dvals] + ["total"]
    table = [header]
    for r in rows:
        table.append([str(r.length)] + [r.cell(d) for d in dvals] + [str(r.total)])
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = [
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in table
    ]
    return "\n".join(lines)

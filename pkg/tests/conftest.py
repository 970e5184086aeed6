import random
from pathlib import Path

import pytest

from tcis import formats
from tcis.codes import LinearCode
from tcis.gf2 import BitMatrix, rank

DATA = Path(__file__).resolve().parent.parent / "src" / "tcis" / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def bk_24_8() -> LinearCode:
    return formats.load(DATA / "bk_24_8.code")


@pytest.fixture(scope="session")
def buildup_6_2() -> LinearCode:
    return formats.load(DATA / "buildup_6_2.code")


@pytest.fixture(scope="session")
def octacode():
    return formats.load(DATA / "octacode.z4")


@pytest.fixture(scope="session")
def z4_24_6():
    return formats.load(DATA / "z4_24_6.z4")


@pytest.fixture(scope="session")
def qc_243_9():
    return formats.load(DATA / "qc_243_9.qc")


def random_full_rank(rng: random.Random, n: int, k: int) -> BitMatrix:
    while True:
        m = BitMatrix([rng.randrange(1, 1 << n) for _ in range(k)], n)
        if rank(m) == k:
            return m


def random_invertible(rng: random.Random, k: int) -> BitMatrix:
    return random_full_rank(rng, k, k)


def random_code(rng: random.Random, n: int, k: int) -> LinearCode:
    return LinearCode(random_full_rank(rng, n, k))


def systematic_cis_code(rng: random.Random, k: int, t: int) -> LinearCode:
    """Random (I | A_1 | ... | A_{t-1}) code with invertible blocks."""
    rows = [1 << i for i in range(k)]
    for b in range(1, t):
        a = random_invertible(rng, k)
        for i in range(k):
            rows[i] |= a.row(i) << (b * k)
    return LinearCode(BitMatrix(rows, t * k))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC15)

"""Shared test utilities: random codes, golden data loading."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from cosetforge.cosetleaders import CosetTable, Matphi, compute_coset_table
from cosetforge.errors import DegenerateCodeError
from cosetforge.gf2 import BinaryMatrix, LinearCode, Word, make_code
from cosetforge.leadercodewords import LeaderCodewordSet, compute_leader_codewords

DATA = Path(__file__).parent / "data"
CORPUS_SEED = 20240611
CORPUS_SIZE = 100

# criterion name -> (status, detail), filled by the acceptance module
ACCEPTANCE: dict[str, tuple[str, str]] = {}


def w(text: str, n: int) -> Word:
    """Word from 'e1+e9+e10' notation ('0' for the zero word)."""
    if text == "0":
        return Word.zero(n)
    return Word.from_support((int(t[1:]) for t in text.split("+")), n)


def random_code(rng: random.Random, n: int, m: int) -> LinearCode:
    """Random code of length n with n-k <= m; retries until non-degenerate."""
    while True:
        rows = tuple(rng.getrandbits(n) for _ in range(m))
        try:
            return make_code(BinaryMatrix(rows, n))
        except DegenerateCodeError:
            continue


def make_corpus(seed: int = CORPUS_SEED, size: int = CORPUS_SIZE, n_min: int = 6, n_max: int = 14) -> list[LinearCode]:
    rng = random.Random(seed)
    codes = []
    for _ in range(size):
        n = rng.randint(n_min, n_max)
        m = rng.randint(2, min(n - 1, 9))
        codes.append(random_code(rng, n, m))
    return codes


@dataclass
class Artifacts:
    """A code with its table, Matphi and leader codewords, computed lazily once."""

    code: LinearCode

    @cached_property
    def _table_phi(self) -> tuple[CosetTable, Matphi]:
        return compute_coset_table(self.code)

    @property
    def table(self) -> CosetTable:
        return self._table_phi[0]

    @property
    def phi(self) -> Matphi:
        return self._table_phi[1]

    @cached_property
    def lset(self) -> LeaderCodewordSet:
        return compute_leader_codewords(self.code)[1]


def load_example1_leaders(n: int = 10) -> list[list[Word]]:
    cosets = []
    for line in (DATA / "example1_leaders.txt").read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            cosets.append([w(t, n) for t in line.split()])
    return cosets


EXAMPLE1_LEADER_CODEWORDS = [
    "e3+e4+e7+e8", "e2+e4+e6+e8", "e2+e3+e6+e7", "e1+e4+e5+e8",
    "e1+e3+e5+e7", "e1+e2+e5+e6", "e4+e6+e7+e9+e10", "e3+e6+e8+e9+e10",
    "e2+e7+e8+e9+e10", "e2+e3+e4+e9+e10", "e1+e5+e6+e7+e8+e9+e10",
    "e1+e3+e4+e5+e6+e9+e10", "e1+e2+e4+e5+e7+e9+e10", "e1+e2+e3+e5+e8+e9+e10",
]

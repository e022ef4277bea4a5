"""Leader codewords L(C) and the smaller test set L1(C).

A leader codeword is a nonzero codeword ``n1 + e_i + n2`` where ``n1`` and
``n2`` are coset leaders, ``i`` is outside supp(n1) and
``wt(n1 + e_i) > wt(n2)``.  L1(C) additionally asks ``n2`` to be the coset
representative.

:func:`compute_leader_codewords` runs the coset-leader sweep with the
disjoint-support collection step attached, then a completion pass that walks
every (leader, coordinate) pair of the finished table.  The completion pass on
its own yields exactly the definition's set; the sweep contributions are kept
to record which codewords the incremental step already found.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .cosetleaders import (
    DEFAULT_MAX_COSETS,
    CosetTable,
    _build_table,
    _sweep,
    covering_radius,
)
from .gf2 import LinearCode, Word, unit_bit
from .ordering import WeightCompatibleOrder


@dataclass(frozen=True)
class LeaderCodeword:
    word: Word
    n1: Word
    n2: Word
    i: int
    in_l1: bool
    from_sweep: bool

    @property
    def weight(self) -> int:
        return self.word.weight


@dataclass(frozen=True)
class LeaderCodewordSet:
    """L(C) with one witness per codeword, sorted by the table's order."""

    elements: tuple[LeaderCodeword, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[LeaderCodeword]:
        return iter(self.elements)

    def __contains__(self, w: object) -> bool:
        return w in self.words

    @property
    def words(self) -> frozenset[Word]:
        return frozenset(e.word for e in self.elements)

    @property
    def l1_words(self) -> frozenset[Word]:
        return frozenset(e.word for e in self.elements if e.in_l1)

    def sorted_words(self, l1_only: bool = False) -> list[Word]:
        return [e.word for e in self.elements if e.in_l1 or not l1_only]


def _complete(table: CosetTable) -> tuple[dict[int, tuple[int, int, int]], set[int]]:
    """Every leader codeword with its first witness, plus the L1 members."""
    code = table.code
    n = code.n
    cols = code.columns
    idx = table.syndrome_index
    records = table.records
    leader_bits = [[w.bits for w in r.leaders] for r in records]
    witnesses: dict[int, tuple[int, int, int]] = {}
    l1: set[int] = set()
    for rec in records:
        s1 = rec.syndrome.bits
        w1 = rec.weight
        for n1 in leader_bits[rec.index]:
            for i in range(1, n + 1):
                u = unit_bit(i, n)
                if n1 & u:
                    continue
                j = idx[s1 ^ cols[i - 1]]
                if w1 + 1 <= records[j].weight:
                    continue
                x = n1 | u
                group = leader_bits[j]
                for n2 in group:
                    c = x ^ n2
                    if c not in witnesses:
                        witnesses[c] = (n1, n2, i)
                l1.add(x ^ group[0])
    return witnesses, l1


def leader_codewords_from_table(
    table: CosetTable, swept: frozenset[int] | set[int] = frozenset()
) -> LeaderCodewordSet:
    n = table.code.n
    witnesses, l1 = _complete(table)
    key = table.order.key
    elements = tuple(
        LeaderCodeword(
            word=Word(c, n),
            n1=Word(n1, n),
            n2=Word(n2, n),
            i=i,
            in_l1=c in l1,
            from_sweep=c in swept,
        )
        for c, (n1, n2, i) in sorted(witnesses.items(), key=lambda kv: key(kv[0]))
    )
    return LeaderCodewordSet(elements)


def compute_leader_codewords(
    code: LinearCode,
    order: WeightCompatibleOrder | None = None,
    *,
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> tuple[CosetTable, LeaderCodewordSet]:
    order = order or WeightCompatibleOrder(code.n)
    n = code.n
    units = [unit_bit(i, n) for i in range(1, n + 1)]
    swept: set[int] = set()

    def collect(t: int, j: int, group: list[int], leader_of: dict[int, int]) -> None:
        # t = t' + e_i with t' a known leader; the added set does not depend on i.
        if not any(t & u and (t ^ u) in leader_of for u in units):
            return
        for tk in group:
            if not t & tk:
                swept.add(t ^ tk)

    sw = _sweep(code, order, max_cosets, on_known=collect)
    table = _build_table(code, order, sw)
    lset = leader_codewords_from_table(table, swept)
    missing = swept - {e.word.bits for e in lset}
    if missing:
        raise AssertionError(
            f"sweep produced {len(missing)} codewords outside the leader-codeword set"
        )
    return table, lset


def l1_subset(lset: LeaderCodewordSet) -> frozenset[Word]:
    return lset.l1_words


def verify_weight_bound(lset: LeaderCodewordSet, table: CosetTable) -> bool:
    """Every leader codeword has weight at most 2 rho + 1."""
    bound = 2 * covering_radius(table) + 1
    return all(e.weight <= bound for e in lset)

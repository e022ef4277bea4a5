"""Incremental enumeration of all coset leaders, the transversal N and Matphi.

The enumeration pops words from a priority queue in increasing weight
compatible order.  A popped word whose syndrome is new founds a coset (and is
its representative); a popped word of an existing coset that matches the
coset weight is another leader.  Only leaders spawn their one-bit extensions,
so the queue only ever holds words of the form ``leader + e_i``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Mapping

from .errors import GuardExceededError, LengthMismatchError
from .gf2 import LinearCode, Word, syndrome, unit_bit
from .ordering import WeightCompatibleOrder

#: Default cap on the number of cosets (2^(n-k)) the library will enumerate.
DEFAULT_MAX_COSETS = 1 << 28


@dataclass(frozen=True)
class CosetRecord:
    index: int
    syndrome: Word
    representative: Word
    leaders: tuple[Word, ...]
    weight: int


@dataclass(frozen=True)
class CosetTable:
    """All cosets of a code in discovery order, each with its full leader list."""

    code: LinearCode
    order: WeightCompatibleOrder
    records: tuple[CosetRecord, ...]
    syndrome_index: Mapping[int, int] = field(repr=False)
    iterations: int

    def __len__(self) -> int:
        return len(self.records)

    def record_for_syndrome(self, s: Word) -> CosetRecord:
        return self.records[self.syndrome_index[s.bits]]

    def record_of(self, w: Word) -> CosetRecord:
        """The record of the coset containing ``w``."""
        return self.record_for_syndrome(syndrome(self.code, w))

    def representative_of(self, w: Word) -> Word:
        return self.record_of(w).representative

    def is_leader(self, w: Word) -> bool:
        return w.weight == self.record_of(w).weight

    @property
    def leader_count(self) -> int:
        return sum(len(r.leaders) for r in self.records)

    def all_leaders(self) -> list[Word]:
        return [w for r in self.records for w in r.leaders]


@dataclass(frozen=True)
class Matphi:
    """phi(r, i): index of the representative of the coset of N_r + e_i."""

    table: tuple[tuple[int, ...], ...]

    def __call__(self, r: int, i: int) -> int:
        if i < 1:
            raise IndexError(f"coordinate {i} out of range")
        return self.table[r][i - 1]

    @property
    def n(self) -> int:
        return len(self.table[0])


@dataclass
class _Sweep:
    """Mutable state of one enumeration run."""

    reps: list[int]
    syns: list[int]
    weights: list[int]
    leaders: list[list[int]]
    index: dict[int, int]
    phi: dict[tuple[int, int], int]
    iterations: int


# hook(t, record_index, leaders_so_far, leader_of), called for every
# popped word that falls into an already known coset.
KnownCosetHook = Callable[[int, int, list[int], dict[int, int]], None]


def _sweep(
    code: LinearCode,
    order: WeightCompatibleOrder,
    max_cosets: int,
    on_known: KnownCosetHook | None = None,
) -> _Sweep:
    if order.n != code.n:
        raise LengthMismatchError(f"order is for length {order.n}, code has length {code.n}")
    if code.num_cosets > max_cosets:
        raise GuardExceededError(
            f"{code.num_cosets} cosets exceed the guard of {max_cosets}"
        )
    n = code.n
    cols = code.columns
    units = [unit_bit(i, n) for i in range(1, n + 1)]
    key = order.key

    reps: list[int] = []
    syns: list[int] = []
    weights: list[int] = []
    leaders: list[list[int]] = []
    index: dict[int, int] = {}
    rep_index: dict[int, int] = {}
    leader_of: dict[int, int] = {}
    phi: dict[tuple[int, int], int] = {}

    heap = [(key(0), 0, 0)]
    seen = {0}
    iterations = 0

    def insert_next(t: int, s: int) -> None:
        for i, u in enumerate(units):
            if not t & u:
                v = t | u
                if v not in seen:
                    seen.add(v)
                    heapq.heappush(heap, (key(v), v, s ^ cols[i]))

    while heap:
        _, t, s = heapq.heappop(heap)
        iterations += 1
        w = t.bit_count()
        j = index.get(s)
        if j is None:
            r = len(reps)
            index[s] = r
            reps.append(t)
            syns.append(s)
            weights.append(w)
            leaders.append([t])
            leader_of[t] = r
            insert_next(t, s)
            for i, u in enumerate(units):
                if t & u:
                    q = rep_index.get(t ^ u)
                    if q is not None:
                        phi[q, i] = r
                        phi[r, i] = q
            rep_index[t] = r
        else:
            # phi(t', e_i) for t' in N lands in coset j; store its representative.
            for i, u in enumerate(units):
                if t & u:
                    q = rep_index.get(t ^ u)
                    if q is not None:
                        phi[q, i] = j
            if w == weights[j]:
                leaders[j].append(t)
                leader_of[t] = j
                insert_next(t, s)
            if on_known is not None:
                on_known(t, j, leaders[j], leader_of)

    # Pairs (r, i) where N_r + e_i was never popped as t' + e_i with t' in N.
    for r in range(len(reps)):
        for i in range(n):
            if (r, i) not in phi:
                phi[r, i] = index[syns[r] ^ cols[i]]

    return _Sweep(reps, syns, weights, leaders, index, phi, iterations)


def _build_table(code: LinearCode, order: WeightCompatibleOrder, sw: _Sweep) -> CosetTable:
    n, m = code.n, code.n - code.k
    records = tuple(
        CosetRecord(
            index=r,
            syndrome=Word(sw.syns[r], m),
            representative=Word(sw.reps[r], n),
            leaders=tuple(Word(x, n) for x in sw.leaders[r]),
            weight=sw.weights[r],
        )
        for r in range(len(sw.reps))
    )
    return CosetTable(code, order, records, dict(sw.index), sw.iterations)


def _build_phi(code: LinearCode, sw: _Sweep) -> Matphi:
    n = code.n
    return Matphi(tuple(tuple(sw.phi[r, i] for i in range(n)) for r in range(len(sw.reps))))


def compute_coset_table(
    code: LinearCode,
    order: WeightCompatibleOrder | None = None,
    *,
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> tuple[CosetTable, Matphi]:
    """Every coset leader of ``code`` together with the Groebner representation (N, phi)."""
    order = order or WeightCompatibleOrder(code.n)
    sw = _sweep(code, order, max_cosets)
    return _build_table(code, order, sw), _build_phi(code, sw)


def wdcl(table: CosetTable) -> list[int]:
    """Weight distribution of the coset leaders: entry i counts cosets of weight i."""
    counts = [0] * (table.code.n + 1)
    for r in table.records:
        counts[r.weight] += 1
    return counts


def leader_count_histogram(table: CosetTable) -> list[int]:
    return [len(r.leaders) for r in table.records]


def covering_radius(table: CosetTable) -> int:
    return max(r.weight for r in table.records)


def newton_radius(table: CosetTable) -> int:
    """Largest weight among cosets that have a single leader."""
    return max(r.weight for r in table.records if len(r.leaders) == 1)


def iteration_count(table: CosetTable) -> int:
    return table.iterations


def unique_leader_split(table: CosetTable) -> tuple[int, int]:
    """Unique-leader cosets split as (weight <= t, weight > t); the code itself counts as low."""
    t = table.code.t
    low = high = 0
    for r in table.records:
        if len(r.leaders) == 1:
            if r.weight <= t:
                low += 1
            else:
                high += 1
    return low, high


def sphere_bounds(table: CosetTable) -> tuple[int, int]:
    """Lower and upper bounds on |CL(C)| from balls of radius t and rho."""
    n = table.code.n
    t = table.code.t
    rho = covering_radius(table)
    return (
        sum(comb(n, i) for i in range(t + 1)),
        sum(comb(n, j) for j in range(rho + 1)),
    )

"""Complete minimum-distance decoding from a coset table, Matphi or a test set."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .cosetleaders import CosetTable, Matphi
from .errors import LengthMismatchError, NotATestSetError
from .gf2 import LinearCode, Word, syndrome
from .leadercodewords import LeaderCodewordSet
from .ordering import WeightCompatibleOrder


@dataclass(frozen=True)
class DecodeResult:
    received: Word
    codeword: Word
    error: Word
    distance: int
    unique: bool
    all_nearest: frozenset[Word] | None = None


def _testset_words(testset: LeaderCodewordSet | Iterable[Word]) -> list[Word]:
    if isinstance(testset, LeaderCodewordSet):
        return [e.word for e in testset]
    return list(testset)


def gdda_steps(
    y: Word,
    testset: LeaderCodewordSet | Iterable[Word],
    order: WeightCompatibleOrder | None = None,
) -> Iterator[Word]:
    """Yield y, then every residual of gradient descent, ending at a local minimum.

    At each step the first test-set codeword (in ``order``) that lowers the
    weight is subtracted.
    """
    order = order or WeightCompatibleOrder(y.length)
    words = sorted(_testset_words(testset), key=order.word_key)
    bits = [t.bits for t in words]
    n = y.length
    r = y.bits
    w = r.bit_count()
    yield y
    for _ in range(n + 1):
        for t in bits:
            v = r ^ t
            vw = v.bit_count()
            if vw < w:
                r, w = v, vw
                yield Word(r, n)
                break
        else:
            return
    raise NotATestSetError("gradient descent exceeded n steps")


def gdda(
    y: Word,
    testset: LeaderCodewordSet | Iterable[Word],
    order: WeightCompatibleOrder | None = None,
    table: CosetTable | None = None,
) -> tuple[Word, Word]:
    """Reduce ``y`` by the test set; return (codeword, residual) with y = codeword + residual.

    When ``table`` is given the residual is checked to be a coset leader and
    :class:`NotATestSetError` is raised otherwise.
    """
    residual = y
    for residual in gdda_steps(y, testset, order):
        pass
    if table is not None and not table.is_leader(residual):
        raise NotATestSetError(f"descent stopped at {residual}, which is not a coset leader")
    return y + residual, residual


def matphi_reduce(table: CosetTable, phi: Matphi, y: Word, coords: Iterable[int] | None = None) -> Word:
    """Representative N(y), found by folding phi over supp(y) from the zero coset.

    ``coords`` overrides the fold order; it must be a permutation of supp(y).
    """
    if y.length != table.code.n:
        raise LengthMismatchError(f"word of length {y.length} for code of length {table.code.n}")
    r = 0
    for i in y.support if coords is None else coords:
        r = phi(r, i)
    return table.records[r].representative


def all_coset_leaders_of(
    code: LinearCode,
    y: Word,
    lset: LeaderCodewordSet | Iterable[Word],
    base: Word,
    *,
    mutating: bool = False,
) -> frozenset[Word]:
    """CL(y) from any coset leader ``base`` of the coset of ``y``.

    Every other leader z equals base + c for a leader codeword c with
    wt(base + c) = wt(base).  ``mutating=True`` runs the variant that moves
    the base along and drops each codeword once used; it is kept for
    comparison only and is not guaranteed complete.
    """
    if syndrome(code, y) != syndrome(code, base):
        raise ValueError("base is not in the coset of y")
    words = _testset_words(lset)
    w = base.weight
    if not mutating:
        return frozenset([base, *(base + c for c in words if (base + c).weight == w)])
    found = {base}
    current = base
    pool = list(words)
    while True:
        hit = next((c for c in pool if (current + c).weight == w), None)
        if hit is None:
            return frozenset(found)
        current = current + hit
        found.add(current)
        pool.remove(hit)


def decode(
    code: LinearCode,
    y: Word,
    *,
    table: CosetTable | None = None,
    phi: Matphi | None = None,
    leader_codewords: LeaderCodewordSet | None = None,
    mode: str = "table",
    all_nearest: bool = False,
) -> DecodeResult:
    """Nearest codeword to ``y``.

    ``mode="table"`` reads the coset representative (through Matphi when
    given, otherwise by syndrome lookup).  ``mode="testset"`` runs gradient
    descent over the leader codewords and counts leaders through them.
    """
    if y.length != code.n:
        raise LengthMismatchError(f"word of length {y.length} for code of length {code.n}")
    if mode == "table":
        if table is None:
            raise ValueError("table mode needs a coset table")
        record = table.record_of(y)
        error = matphi_reduce(table, phi, y) if phi is not None else record.representative
        leaders: frozenset[Word] | None = None
        if all_nearest:
            if leader_codewords is not None:
                leaders = all_coset_leaders_of(code, y, leader_codewords, error)
            else:
                leaders = frozenset(record.leaders)
        unique = len(record.leaders) == 1
    elif mode == "testset":
        if leader_codewords is None:
            raise ValueError("testset mode needs the leader codewords")
        order = table.order if table is not None else None
        _, error = gdda(y, leader_codewords, order, table)
        leaders = all_coset_leaders_of(code, y, leader_codewords, error)
        unique = len(leaders) == 1
        if not all_nearest:
            leaders = None
    else:
        raise ValueError(f"unknown decoding mode {mode!r}")
    return DecodeResult(
        received=y,
        codeword=y + error,
        error=error,
        distance=error.weight,
        unique=unique,
        all_nearest=leaders,
    )

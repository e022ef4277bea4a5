"""Weight-compatible total orders on F_2^n."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import LengthMismatchError
from .gf2 import Word


class TieBreak(enum.Enum):
    DEGREVLEX = "degrevlex"
    LEX = "lex"


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class WeightCompatibleOrder:
    """Compare by Hamming weight, then by a monomial tie-break on the 0/1 exponents.

    DEGREVLEX is degree reverse lexicographic with variables ranked
    x_1 < x_2 < ... < x_n: among words of equal weight, the one holding a 1 at
    the first coordinate where they differ is smaller.  So e_1 < e_2 < ... and
    e_1+e_2 < e_1+e_3.  LEX is the lexicographic order with x_1 > ... > x_n,
    which on equal weights happens to be the exact reverse.

    With coordinate 1 stored as the most significant bit, both reduce to a
    plain integer comparison of the packed words.
    """

    n: int
    tie_break: TieBreak = TieBreak.DEGREVLEX

    def key(self, bits: int) -> tuple[int, int]:
        """Sort key on packed words: ``a`` precedes ``b`` iff key(a) < key(b)."""
        if self.tie_break is TieBreak.DEGREVLEX:
            return (bits.bit_count(), -bits)
        return (bits.bit_count(), bits)

    def word_key(self, w: Word) -> tuple[int, int]:
        if w.length != self.n:
            raise LengthMismatchError(f"word of length {w.length} for an order on length {self.n}")
        return self.key(w.bits)

    def compare(self, a: Word, b: Word) -> Cmp:
        ka, kb = self.word_key(a), self.word_key(b)
        if ka < kb:
            return Cmp.LESS
        if ka > kb:
            return Cmp.GREATER
        return Cmp.EQUAL

    def sorted(self, words: Iterable[Word]) -> list[Word]:
        return sorted(words, key=self.word_key)

    def min_of(self, words: Iterable[Word]) -> Word:
        words = list(words)
        if not words:
            raise ValueError("min_of() of an empty collection")
        return min(words, key=self.word_key)


def make_order(n: int, tie_break: str | TieBreak = TieBreak.DEGREVLEX) -> WeightCompatibleOrder:
    return WeightCompatibleOrder(n, TieBreak(tie_break))


def compare(order: WeightCompatibleOrder, a: Word, b: Word) -> Cmp:
    return order.compare(a, b)


def min_of(order: WeightCompatibleOrder, words: Iterable[Word]) -> Word:
    return order.min_of(words)

"""Words, matrices and linear codes over GF(2).

Words are stored as Python ints.  Coordinate ``i`` (1-based, as in e_1..e_n)
lives at bit ``n - i``, so the natural 0/1 string of a word is simply its
binary expansion padded to ``n`` digits, leftmost digit = coordinate 1.
Python ints are arbitrary precision, which covers both the single-word fast
path and long codes without a separate limb type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    DegenerateCodeError,
    GuardExceededError,
    LengthMismatchError,
    MatrixFormatError,
)

#: Largest dimension for which codewords are enumerated exhaustively.
MAX_ENUM_DIMENSION = 30


def unit_bit(i: int, n: int) -> int:
    """Bit mask of the canonical basis vector e_i (1-based) in length ``n``."""
    return 1 << (n - i)


def bits_to_support(bits: int, n: int) -> tuple[int, ...]:
    """1-based support of a packed word, increasing."""
    return tuple(i for i in range(1, n + 1) if bits >> (n - i) & 1)


def support_to_bits(indices: Iterable[int], n: int) -> int:
    bits = 0
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"coordinate {i} out of range 1..{n}")
        bits |= 1 << (n - i)
    return bits


@dataclass(frozen=True, slots=True)
class Word:
    """A vector of F_2^n."""

    bits: int
    length: int

    def __post_init__(self) -> None:
        if self.length <= 0:
            raise ValueError("word length must be positive")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits do not fit in length {self.length}")

    @classmethod
    def zero(cls, n: int) -> Word:
        return cls(0, n)

    @classmethod
    def unit(cls, i: int, n: int) -> Word:
        """The canonical basis vector e_i."""
        if not 1 <= i <= n:
            raise ValueError(f"coordinate {i} out of range 1..{n}")
        return cls(unit_bit(i, n), n)

    @classmethod
    def from_support(cls, indices: Iterable[int], n: int) -> Word:
        return cls(support_to_bits(indices, n), n)

    @classmethod
    def from_string(cls, text: str) -> Word:
        """Parse a 0/1 string; leftmost character is coordinate 1."""
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a 0/1 string: {text!r}")
        return cls(int(text, 2), len(text))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        return bits_to_support(self.bits, self.length)

    def __add__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        if other.length != self.length:
            raise LengthMismatchError(
                f"cannot add words of lengths {self.length} and {other.length}"
            )
        return Word(self.bits ^ other.bits, self.length)

    __sub__ = __add__

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b")

    def __repr__(self) -> str:
        return f"Word('{self}')"

    def pretty(self) -> str:
        """Render as a sum of basis vectors, e.g. ``e1+e9+e10``."""
        supp = self.support
        return "+".join(f"e{i}" for i in supp) if supp else "0"


def weight(w: Word) -> int:
    """Hamming weight."""
    return w.weight


def support(w: Word) -> tuple[int, ...]:
    """Strictly increasing 1-based indices of the nonzero coordinates."""
    return w.support


def add(a: Word, b: Word) -> Word:
    return a + b


def distance(a: Word, b: Word) -> int:
    return (a + b).weight


@dataclass(frozen=True)
class BinaryMatrix:
    """Row-major binary matrix; each row is packed like a :class:`Word`."""

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self) -> None:
        if self.cols <= 0:
            raise ValueError("matrix must have at least one column")
        for r in self.rows:
            if r < 0 or r >> self.cols:
                raise ValueError(f"row does not fit in {self.cols} columns")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> BinaryMatrix:
        if not rows:
            raise ValueError("matrix needs at least one row")
        cols = len(rows[0])
        packed = []
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged matrix")
            packed.append(int("".join("1" if x else "0" for x in row), 2))
        return cls(tuple(packed), cols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row_words(self) -> list[Word]:
        return [Word(r, self.cols) for r in self.rows]

    def column(self, j: int) -> int:
        """Column ``j`` (1-based) packed with row 1 as the most significant bit."""
        m = self.nrows
        bit = unit_bit(j, self.cols)
        col = 0
        for idx, r in enumerate(self.rows):
            if r & bit:
                col |= 1 << (m - 1 - idx)
        return col

    def apply(self, w: Word) -> Word:
        """M w^T, packed with row 1 as the leftmost bit."""
        if w.length != self.cols:
            raise LengthMismatchError(f"word of length {w.length} for {self.cols} columns")
        m = self.nrows
        out = 0
        for idx, r in enumerate(self.rows):
            if (r & w.bits).bit_count() & 1:
                out |= 1 << (m - 1 - idx)
        return Word(out, m)

    def rref(self) -> tuple[BinaryMatrix, tuple[int, ...]]:
        """Reduced row echelon form with zero rows dropped, plus pivot columns."""
        work = list(self.rows)
        pivots: list[int] = []
        top = 0
        for j in range(1, self.cols + 1):
            bit = unit_bit(j, self.cols)
            pivot = next((r for r in range(top, len(work)) if work[r] & bit), None)
            if pivot is None:
                continue
            work[top], work[pivot] = work[pivot], work[top]
            for r in range(len(work)):
                if r != top and work[r] & bit:
                    work[r] ^= work[top]
            pivots.append(j)
            top += 1
            if top == len(work):
                break
        return BinaryMatrix(tuple(work[:top]), self.cols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def null_space(self) -> BinaryMatrix:
        """Basis of {x : M x^T = 0}, one basis vector per free column."""
        reduced, pivots = self.rref()
        n = self.cols
        pivot_set = set(pivots)
        basis = []
        for f in range(1, n + 1):
            if f in pivot_set:
                continue
            vec = unit_bit(f, n)
            fbit = unit_bit(f, n)
            for row, p in zip(reduced.rows, pivots):
                if row & fbit:
                    vec |= unit_bit(p, n)
            basis.append(vec)
        return BinaryMatrix(tuple(basis), n)

    def to_text(self) -> str:
        lines = [f"{self.cols} {self.nrows}"]
        for r in self.rows:
            lines.append(" ".join(format(r, f"0{self.cols}b")))
        return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> BinaryMatrix:
    """Parse the ``n m`` header + ``m`` rows of 0/1 digits format.

    ``#`` starts a comment; blank lines are ignored.  Digits on a row may be
    space separated or contiguous.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise MatrixFormatError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise MatrixFormatError(f"bad header {lines[0]!r}, expected 'n m'")
    n, m = int(header[0]), int(header[1])
    if n <= 0 or m <= 0:
        raise MatrixFormatError("n and m must be positive")
    body = lines[1:]
    if len(body) != m:
        raise MatrixFormatError(f"header announces {m} rows, found {len(body)}")
    rows = []
    for lineno, line in enumerate(body, start=2):
        digits = "".join(line.split())
        if len(digits) != n or set(digits) - {"0", "1"}:
            raise MatrixFormatError(f"row {lineno - 1}: expected {n} binary digits")
        rows.append(int(digits, 2))
    return BinaryMatrix(tuple(rows), n)


def read_matrix(path) -> BinaryMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


@dataclass(frozen=True)
class LinearCode:
    """An [n, k] binary code, held as a row-reduced parity-check matrix.

    Build instances with :func:`make_code`; equal row spaces give equal codes.
    """

    H: BinaryMatrix
    G: BinaryMatrix
    n: int
    k: int
    columns: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    @property
    def num_cosets(self) -> int:
        return 1 << (self.n - self.k)

    def syndrome_bits(self, bits: int) -> int:
        s = 0
        n = self.n
        cols = self.columns
        while bits:
            low = bits & -bits
            s ^= cols[n - low.bit_length()]
            bits ^= low
        return s

    def contains(self, w: Word) -> bool:
        return syndrome(self, w).bits == 0

    @cached_property
    def min_distance(self) -> int:
        return min_distance(self)

    @property
    def t(self) -> int:
        """Error-correcting capacity floor((d-1)/2)."""
        return (self.min_distance - 1) // 2


def syndrome(code: LinearCode, w: Word) -> Word:
    """H w^T as a word of length n - k (row 1 of H is the leftmost bit)."""
    if w.length != code.n:
        raise LengthMismatchError(f"word of length {w.length} for code of length {code.n}")
    return Word(code.syndrome_bits(w.bits), code.n - code.k)


def make_code(H: BinaryMatrix) -> LinearCode:
    """Canonicalise ``H`` by row reduction and derive a generator matrix."""
    reduced, pivots = H.rref()
    n = H.cols
    rank = len(pivots)
    if rank == 0:
        raise DegenerateCodeError("parity-check matrix has rank 0 (k = n, a single coset)")
    if rank == n:
        raise DegenerateCodeError("parity-check matrix has full rank n (k = 0, no nonzero codeword)")
    G = reduced.null_space()
    columns = tuple(reduced.column(j) for j in range(1, n + 1))
    return LinearCode(H=reduced, G=G, n=n, k=n - rank, columns=columns)


def code_from_generator(G: BinaryMatrix) -> LinearCode:
    """Code spanned by the rows of ``G``."""
    return make_code(G.null_space())


def _codeword_bits(code: LinearCode, max_k: int) -> Iterator[int]:
    if code.k > max_k:
        raise GuardExceededError(f"k = {code.k} exceeds the enumeration guard {max_k}")
    rows = code.G.rows
    c = 0
    yield c
    # Gray-code walk: step m flips the generator row at the lowest set bit of m.
    for m in range(1, 1 << code.k):
        c ^= rows[(m & -m).bit_length() - 1]
        yield c


def enumerate_codewords(code: LinearCode, max_k: int = MAX_ENUM_DIMENSION) -> Iterator[Word]:
    """Every codeword exactly once, in Gray-code order starting at zero."""
    n = code.n
    for c in _codeword_bits(code, max_k):
        yield Word(c, n)


def min_distance(code: LinearCode, max_k: int = MAX_ENUM_DIMENSION) -> int:
    cached = code.__dict__.get("min_distance")
    if cached is not None:
        return cached
    best = code.n + 1
    for c in _codeword_bits(code, max_k):
        if c:
            w = c.bit_count()
            if w < best:
                best = w
    code.__dict__["min_distance"] = best
    return best

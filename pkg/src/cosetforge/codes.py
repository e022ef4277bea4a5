"""Built-in codes.

Cyclic codes are stored as generator polynomials (coefficient of x^m at
coordinate m + 1) and expanded to a generator matrix of shifted copies.
"""

from __future__ import annotations

from .gf2 import BinaryMatrix, LinearCode, code_from_generator, make_code

EXAMPLE1_H = (
    "1000100000",
    "1011010000",
    "1101001000",
    "1110000100",
    "1111000010",
    "1111000001",
)

# x^11 + x^9 + x^7 + x^6 + x^5 + x + 1
GOLAY23_GENERATOR = (0, 1, 5, 6, 7, 9, 11)

# lcm of the minimal polynomials of a primitive 21st root of unity a and of a^3:
# (1 + x + x^2 + x^4 + x^6)(1 + x^2 + x^3) = 1 + x + x^4 + x^5 + x^7 + x^8 + x^9
BCH21_GENERATOR = (0, 1, 4, 5, 7, 8, 9)

HAMMING7_H = (
    "0001111",
    "0110011",
    "1010101",
)

REP3_H = (
    "110",
    "101",
)


def _from_strings(rows: tuple[str, ...]) -> BinaryMatrix:
    return BinaryMatrix(tuple(int(r, 2) for r in rows), len(rows[0]))


def cyclic_generator_matrix(exponents: tuple[int, ...], n: int) -> BinaryMatrix:
    degree = max(exponents)
    rows = []
    for shift in range(n - degree):
        row = 0
        for e in exponents:
            row |= 1 << (n - 1 - (e + shift))
        rows.append(row)
    return BinaryMatrix(tuple(rows), n)


def cyclic_code(exponents: tuple[int, ...], n: int) -> LinearCode:
    return code_from_generator(cyclic_generator_matrix(exponents, n))


def example1() -> LinearCode:
    return make_code(_from_strings(EXAMPLE1_H))


def golay23() -> LinearCode:
    return cyclic_code(GOLAY23_GENERATOR, 23)


def bch21() -> LinearCode:
    return cyclic_code(BCH21_GENERATOR, 21)


def hamming7() -> LinearCode:
    return make_code(_from_strings(HAMMING7_H))


def rep3() -> LinearCode:
    return make_code(_from_strings(REP3_H))


BUILTIN_CODES = {
    "example1": example1,
    "golay23": golay23,
    "bch21": bch21,
    "hamming7": hamming7,
    "rep3": rep3,
}


def builtin_code(name: str) -> LinearCode:
    try:
        factory = BUILTIN_CODES[name]
    except KeyError:
        raise ValueError(
            f"unknown built-in code {name!r}; choose from {', '.join(BUILTIN_CODES)}"
        ) from None
    return factory()

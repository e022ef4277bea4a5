"""Brute-force reference computations over all of F_2^n.

Nothing here calls into the enumeration, leader-codeword or decoding
modules: words are scanned exhaustively with numpy, syndromes are recomputed
from the rows of H, and every set is built straight from its definition.
Results are returned as :class:`~cosetforge.gf2.Word` objects so they can be
compared against the main algorithms.

Indexing: array position ``x`` is the word whose packed bits equal ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, NamedTuple

import numpy as np

from .errors import GuardExceededError
from .gf2 import LinearCode, Word
from .ordering import WeightCompatibleOrder

MAX_SCAN_N = 20
MAX_VORONOI_N = 14
MAX_GREEDY_N = 12


def _guard(code: LinearCode, limit: int) -> None:
    if code.n > limit:
        raise GuardExceededError(f"oracle limited to n <= {limit}, got n = {code.n}")


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a).astype(np.int64)


def _space(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def _syndromes(code: LinearCode) -> np.ndarray:
    """Syndrome of every word of F_2^n, one parity per row of H."""
    words = _space(code.n)
    m = code.H.nrows
    s = np.zeros_like(words)
    for idx, row in enumerate(code.H.rows):
        parity = _popcount(words & row) & 1
        s |= parity << (m - 1 - idx)
    return s


def _codewords(code: LinearCode) -> np.ndarray:
    return np.flatnonzero(_syndromes(code) == 0).astype(np.int64)


def _leader_mask(code: LinearCode) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(syndromes, weights, is_leader) for every word."""
    s = _syndromes(code)
    w = _popcount(_space(code.n))
    coset_min = np.full(1 << code.H.nrows, code.n + 1, dtype=np.int64)
    np.minimum.at(coset_min, s, w)
    return s, w, w == coset_min[s]


def brute_coset_leaders(code: LinearCode, max_n: int = MAX_SCAN_N) -> dict[Word, frozenset[Word]]:
    """Map syndrome -> set of minimum-weight words with that syndrome."""
    _guard(code, max_n)
    n, m = code.n, code.H.nrows
    s, _, lead = _leader_mask(code)
    out: dict[int, set[int]] = {}
    for x in np.flatnonzero(lead):
        out.setdefault(int(s[x]), set()).add(int(x))
    return {Word(k, m): frozenset(Word(x, n) for x in v) for k, v in out.items()}


def brute_coset_leaders_by_translates(code: LinearCode, max_n: int = MAX_SCAN_N) -> dict[Word, frozenset[Word]]:
    """Same map, computed coset by coset as y + C for a syndrome-solving y.

    Uses the pivot columns of the reduced H: placing the syndrome bits on the
    pivot coordinates gives a word with that syndrome.
    """
    _guard(code, max_n)
    n, m = code.n, code.H.nrows
    H = code.H
    pivots = []
    for row in H.rows:
        lead = row.bit_length()
        pivots.append(n - lead + 1)
    cw = _codewords(code)
    out = {}
    for s in range(1 << m):
        y = 0
        for idx, p in enumerate(pivots):
            if s >> (m - 1 - idx) & 1:
                y |= 1 << (n - p)
        coset = cw ^ y
        w = _popcount(coset)
        best = coset[w == w.min()]
        out[Word(s, m)] = frozenset(Word(int(x), n) for x in best)
    return out


def brute_covering_radius(code: LinearCode, max_n: int = MAX_SCAN_N) -> int:
    _guard(code, max_n)
    s, w, lead = _leader_mask(code)
    return int(w[lead].max())


def brute_leader_codewords(code: LinearCode, max_n: int = MAX_SCAN_N) -> frozenset[Word]:
    """Nonzero n1 + e_i + n2 with n1, n2 leaders, i outside supp(n1), wt(n1 + e_i) > wt(n2)."""
    _guard(code, max_n)
    n = code.n
    s, w, lead = _leader_mask(code)
    leaders = np.flatnonzero(lead)
    by_syn: dict[int, np.ndarray] = {}
    for x in leaders:
        by_syn.setdefault(int(s[x]), []).append(int(x))
    by_syn = {k: np.array(v, dtype=np.int64) for k, v in by_syn.items()}
    found: set[int] = set()
    for n1 in leaders:
        n1 = int(n1)
        for b in range(n):
            u = 1 << b
            if n1 & u:
                continue
            x = n1 | u
            n2 = by_syn[int(s[x])]
            keep = n2[_popcount(n2) < x.bit_count()]
            found.update(int(c) for c in keep ^ x)
    found.discard(0)
    return frozenset(Word(c, n) for c in found)


def brute_l1(code: LinearCode, order: WeightCompatibleOrder, max_n: int = MAX_SCAN_N) -> frozenset[Word]:
    """As brute_leader_codewords, with n2 restricted to the order-minimal leader of its coset."""
    _guard(code, max_n)
    n = code.n
    leaders = brute_coset_leaders(code, max_n)
    rep = {s: min(v, key=order.word_key).bits for s, v in leaders.items()}
    syn = _syndromes(code)
    m = code.H.nrows
    found = set()
    for group in leaders.values():
        for n1 in group:
            for b in range(n):
                u = 1 << b
                if n1.bits & u:
                    continue
                x = n1.bits | u
                r = rep[Word(int(syn[x]), m)]
                if r.bit_count() < x.bit_count():
                    found.add(x ^ r)
    return frozenset(Word(c, n) for c in found)


def nearest_distances(code: LinearCode, max_n: int = MAX_SCAN_N) -> np.ndarray:
    """min_c d(y, c) for every y, by scanning all codewords."""
    _guard(code, max_n)
    words = _space(code.n)
    best = np.full(words.shape, code.n + 1, dtype=np.int64)
    for c in _codewords(code):
        np.minimum(best, _popcount(words ^ c), out=best)
    return best


def nearest_distance(code: LinearCode, y: Word, max_n: int = MAX_SCAN_N) -> int:
    _guard(code, max_n)
    return int(_popcount(_codewords(code) ^ y.bits).min())


def nearest_codewords(code: LinearCode, y: Word, max_n: int = MAX_SCAN_N) -> frozenset[Word]:
    _guard(code, max_n)
    cw = _codewords(code)
    d = _popcount(cw ^ y.bits)
    return frozenset(Word(int(c), code.n) for c in cw[d == d.min()])


@dataclass(frozen=True)
class VoronoiAtlas:
    """Voronoi regions of every codeword as boolean rows over F_2^n.

    ``regions[c]`` holds the words at least as close to c as to every other
    codeword.  ``regions_verbatim[c]`` instead compares only against the
    nonzero codewords; the two agree on D(0) but for c != 0 the verbatim
    region ignores the zero codeword and can swallow the whole space.
    """

    n: int
    codewords: np.ndarray
    regions: np.ndarray
    regions_verbatim: np.ndarray

    def row(self, c: int) -> int:
        return int(np.flatnonzero(self.codewords == c)[0])

    def region(self, c: int, verbatim: bool = False) -> np.ndarray:
        return (self.regions_verbatim if verbatim else self.regions)[self.row(c)]

    def X(self, mask: np.ndarray) -> np.ndarray:
        """Words at distance exactly 1 from the set ``mask`` (row-wise on 2-D masks)."""
        return _at_distance_one(mask, self.n)

    def boundary(self, mask: np.ndarray) -> np.ndarray:
        return self.X(mask) | self.X(~mask)


def _at_distance_one(mask: np.ndarray, n: int) -> np.ndarray:
    idx = _space(n)
    near = np.zeros_like(mask)
    for b in range(n):
        near |= mask[..., idx ^ (1 << b)]
    return near & ~mask


def brute_voronoi(code: LinearCode, max_n: int = MAX_VORONOI_N) -> VoronoiAtlas:
    _guard(code, max_n)
    words = _space(code.n)
    cw = _codewords(code)
    dist = np.bitwise_count(cw[:, None] ^ words[None, :])
    ranked = np.sort(dist, axis=0)
    first, second = ranked[0], ranked[1]
    # Distance to the nearest *other* codeword: the runner-up when c is the nearest.
    others_min = np.where(dist == first[None, :], second[None, :], first[None, :])
    regions = dist <= others_min
    nonzero_min = dist[cw != 0].min(axis=0)
    verbatim = dist <= nonzero_min[None, :]
    return VoronoiAtlas(code.n, cw, regions, verbatim)


class ZeroNeighbours(NamedTuple):
    zero_neighbours: frozenset[Word]
    strong: frozenset[Word]


def brute_zero_neighbours(code: LinearCode, verbatim: bool = False, max_n: int = MAX_VORONOI_N) -> ZeroNeighbours:
    """Zero neighbours Z(C), and the subset of z with X(D(0)) meeting D(z).

    A nonzero codeword z is a zero neighbour when the boundaries of D(z) and
    D(0) intersect.
    """
    atlas = brute_voronoi(code, max_n)
    regions = atlas.regions_verbatim if verbatim else atlas.regions
    cw = atlas.codewords
    d0 = regions[atlas.row(0)]
    x0 = atlas.X(d0)
    b0 = x0 | atlas.X(~d0)
    bz = atlas.X(regions) | atlas.X(~regions)
    touch = (bz & b0[None, :]).any(axis=1)
    strong = (regions & x0[None, :]).any(axis=1)
    nz = cw != 0
    n = code.n
    return ZeroNeighbours(
        frozenset(Word(int(c), n) for c in cw[nz & touch]),
        frozenset(Word(int(c), n) for c in cw[nz & strong]),
    )


def greedy_min_testset(code: LinearCode, max_n: int = MAX_GREEDY_N) -> frozenset[Word]:
    """A minimal set of zero neighbours whose regions cover X(D(0)).

    Greedy set cover followed by dropping any member whose removal keeps the
    cover; minimal under inclusion, not necessarily of minimum size.
    """
    atlas = brute_voronoi(code, max_n)
    zeros = brute_zero_neighbours(code, max_n=max_n).zero_neighbours
    target = atlas.X(atlas.regions[atlas.row(0)])
    cand = [int(c.bits) for c in sorted(zeros, key=lambda w: w.bits)]
    cover = {c: atlas.region(c) & target for c in cand}
    chosen: list[int] = []
    left = target.copy()
    while left.any():
        best = max(cand, key=lambda c: int((cover[c] & left).sum()))
        if not (cover[best] & left).any():
            raise AssertionError("zero neighbours do not cover X(D(0))")
        chosen.append(best)
        left &= ~cover[best]
    for c in list(chosen):
        rest = [d for d in chosen if d != c]
        union = np.zeros_like(target)
        for d in rest:
            union |= cover[d]
        if not (target & ~union).any():
            chosen = rest
    return frozenset(Word(c, code.n) for c in chosen)


def find_test_set_counterexample(code: LinearCode, testset: Iterable[Word], max_n: int = MAX_VORONOI_N) -> Word | None:
    """A non-leader that no member of ``testset`` improves, or None."""
    _guard(code, max_n)
    _, w, lead = _leader_mask(code)
    words = _space(code.n)
    improved = lead.copy()
    for t in testset:
        improved |= _popcount(words ^ t.bits) < w
    bad = np.flatnonzero(~improved)
    return Word(int(bad[0]), code.n) if bad.size else None


def verify_test_set(code: LinearCode, testset: Iterable[Word], max_n: int = MAX_VORONOI_N) -> bool:
    return find_test_set_counterexample(code, testset, max_n) is None


def brute_min_distance(code: LinearCode, max_n: int = MAX_SCAN_N) -> int:
    _guard(code, max_n)
    cw = _codewords(code)
    return int(_popcount(cw[cw != 0]).min())


def is_perfect(code: LinearCode, max_n: int = MAX_SCAN_N) -> bool:
    """Balls of radius t around codewords tile the space."""
    t = (brute_min_distance(code, max_n) - 1) // 2
    return sum(comb(code.n, i) for i in range(t + 1)) == code.num_cosets

"""Classical linear codes over GF(2).

Wraps a parity-check matrix (redundant rows allowed, never deduplicated)
with its generator, dimension, exact distance search, information sets,
punctures, and the row-space cleaning primitive used to deform logical
representatives in product codes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from . import f2la
from .f2la import BinaryMatrix

# Full codeword enumeration is used up to this dimension; beyond it the
# search switches to ascending message weight with a certified early exit.
FULL_ENUMERATION_MAX_K = 20
_SEARCH_BUDGET = 1 << 22


@dataclass(frozen=True)
class InformationSet:
    """k coordinates on which the generator matrix has full rank."""

    indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.indices)


class ClassicalCode:
    """An [n, k, d] binary linear code given by parity checks.

    Attributes:
        h: Parity-check matrix (rows may be redundant).
        n: Block length.
        g: Generator matrix in reduced form; rows are a kernel basis of h.
        g_pivots: Pivot columns of g (the leftmost information set).
        k: Dimension, n - rank(h).
    """

    def __init__(self, h: BinaryMatrix):
        self.h = h
        self.n = h.cols
        red = f2la.rref(f2la.kernel_basis(h))
        self.g = red.reduced
        self.g_pivots = red.pivot_columns
        self.k = red.rank
        self._distance: Optional[int] = None
        self._witness: Optional[int] = None

    def __repr__(self) -> str:
        d = self._distance if self._distance is not None else "?"
        return f"ClassicalCode[[{self.n},{self.k},{d}]]"

    @property
    def d(self) -> int:
        return distance(self)


def distance(code: ClassicalCode, budget: int = _SEARCH_BUDGET) -> int:
    """Exact minimum weight over nonzero codewords.

    Enumerates all 2^k codewords for k <= 20 (Gray-code walk); otherwise
    enumerates messages by ascending weight over the reduced generator,
    stopping once the message weight exceeds the best codeword weight found
    (every codeword has weight >= the weight of its message restricted to
    the information set, which certifies the early exit).
    """
    if code.k == 0:
        raise ValueError("distance undefined for trivial code")
    if code._distance is not None:
        return code._distance
    best = None
    argbest = 0
    if code.k <= FULL_ENUMERATION_MAX_K:
        cur = 0
        prev_gray = 0
        for i in range(1, 1 << code.k):
            gray = i ^ (i >> 1)
            flip = gray ^ prev_gray
            prev_gray = gray
            cur ^= code.g.bits[flip.bit_length() - 1]
            w = cur.bit_count()
            if best is None or w < best:
                best, argbest = w, cur
    else:
        spent = 0
        for p in range(1, code.k + 1):
            if best is not None and p > best:
                break
            for combo in itertools.combinations(range(code.k), p):
                word = 0
                for r in combo:
                    word ^= code.g.bits[r]
                w = word.bit_count()
                if best is None or w < best:
                    best, argbest = w, word
                spent += 1
                if spent > budget:
                    raise ValueError("distance search budget exceeded")
    code._distance = best
    code._witness = argbest
    return best


def distance_at_least(code: ClassicalCode, w: int) -> bool:
    """Certify d >= w by enumerating all messages of weight < w."""
    if code.k == 0:
        raise ValueError("distance undefined for trivial code")
    for p in range(1, w):
        for combo in itertools.combinations(range(code.k), p):
            word = 0
            for r in combo:
                word ^= code.g.bits[r]
            if 0 < word.bit_count() < w:
                return False
    return True


def distance_certificate(code: ClassicalCode) -> dict:
    """JSON-ready certificate: parameters plus a minimum-weight witness."""
    d = distance(code)
    return {
        "n": code.n,
        "k": code.k,
        "d": d,
        "witness": f2la.vector_to_string(code._witness, code.n),
    }


def find_information_set(code: ClassicalCode, t: Optional[Iterable[int]] = None) -> InformationSet:
    """Lexicographically smallest information set contained in t.

    Greedy leftmost pivoting of g restricted to the allowed columns.  Also
    checks that h restricted to the complement has full column rank n - k,
    so the returned set doubles as a k-puncture of h.
    """
    allowed = sorted(set(range(code.n) if t is None else t))
    if any(i < 0 or i >= code.n for i in allowed):
        raise ValueError("index set out of range")
    work = list(code.g.bits)
    pivot_row = 0
    chosen = []
    for col in allowed:
        sel = None
        for r in range(pivot_row, len(work)):
            if (work[r] >> col) & 1:
                sel = r
                break
        if sel is None:
            continue
        work[pivot_row], work[sel] = work[sel], work[pivot_row]
        for r in range(len(work)):
            if r != pivot_row and (work[r] >> col) & 1:
                work[r] ^= work[pivot_row]
        chosen.append(col)
        pivot_row += 1
        if pivot_row == code.k:
            break
    if len(chosen) < code.k:
        raise ValueError(
            f"no information set inside the given columns: rank {len(chosen)} < k={code.k}"
        )
    info = InformationSet(tuple(chosen))
    comp = f2la.vector_from_indices(set(range(code.n)) - set(chosen))
    restricted = _restrict_columns(code.h, f2la.indices_of(comp))
    if f2la.rank(restricted) != code.n - code.k:
        raise AssertionError("information set complement is not full rank in h")
    return info


def disjoint_information_set(code: ClassicalCode, r: Iterable[int]) -> InformationSet:
    """Information set avoiding the region r; requires |r| < d."""
    region = set(r)
    if len(region) >= distance(code):
        raise ValueError("region too large to avoid")
    return find_information_set(code, set(range(code.n)) - region)


def classical_clean(code: ClassicalCode, gamma: Iterable[int]) -> int:
    """Row-space element of h equal to all-ones on gamma.

    Solves for row coefficients directly; existence is guaranteed for
    |gamma| <= (d-1)/2 but the solve is attempted for any gamma.
    """
    cols = sorted(set(gamma))
    if any(i < 0 or i >= code.n for i in cols):
        raise ValueError("index set out of range")
    if not cols:
        return 0
    h = clean_with_target(code.h, cols, f2la._full_mask(len(cols)))
    if h is None:
        raise ValueError(f"not cleanable: no row-space element is all-ones on {cols}")
    return h


def clean_with_target(h: BinaryMatrix, cols: list[int], target: int) -> Optional[int]:
    """Row-space element of h matching `target` on the listed columns."""
    restricted = _restrict_columns(h, cols)
    y = f2la.solve(f2la.transpose(restricted), target)
    if y is None:
        return None
    out = 0
    for r in f2la.indices_of(y):
        out ^= h.bits[r]
    return out


def is_puncture(code: ClassicalCode, gamma: Iterable[int]) -> bool:
    """True iff no nonzero row-space element of h fits inside gamma.

    Equivalent rank test: restricting h to the complement of gamma must not
    lose rank.
    """
    gamma_set = set(gamma)
    comp = [i for i in range(code.n) if i not in gamma_set]
    return f2la.rank(_restrict_columns(code.h, comp)) == f2la.rank(code.h)


def _restrict_columns(m: BinaryMatrix, cols: list[int]) -> BinaryMatrix:
    out = []
    for word in m.bits:
        w = 0
        for j, c in enumerate(cols):
            if (word >> c) & 1:
                w |= 1 << j
        out.append(w)
    return BinaryMatrix(m.rows, len(cols), out)


# -- common seed constructions ----------------------------------------------


def repetition_code(n: int) -> ClassicalCode:
    """[n, 1, n] repetition code with the n-1 adjacent-pair checks."""
    if n < 1:
        raise ValueError("need n >= 1")
    rows = [(1 << i) | (1 << (i + 1)) for i in range(n - 1)]
    return ClassicalCode(BinaryMatrix(n - 1, n, rows))


def cyclic_repetition_check(length: int) -> BinaryMatrix:
    """Full circulant of the 1+x check; all `length` rows kept (redundant).

    Degenerates to the 1x1 zero matrix at length 1 (the two taps coincide).
    """
    if length < 1:
        raise ValueError("need length >= 1")
    rows = [(1 << i) ^ (1 << ((i + 1) % length)) for i in range(length)]
    return BinaryMatrix(length, length, rows)


def hamming_7_4() -> ClassicalCode:
    """The [7, 4, 3] Hamming code; columns are 1..7 in binary."""
    rows = []
    for bit in range(3):
        word = 0
        for col in range(7):
            if ((col + 1) >> bit) & 1:
                word |= 1 << col
        rows.append(word)
    return ClassicalCode(BinaryMatrix(3, 7, rows))

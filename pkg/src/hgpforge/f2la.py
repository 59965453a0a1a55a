"""Bit-packed dense linear algebra over GF(2).

Every row of a matrix is stored as a single Python integer, with bit ``j``
holding the entry in column ``j``.  Row operations are therefore single
bignum XORs, which keeps Gaussian elimination fast enough for the desk-scale
matrices used throughout the package without any third-party dependency.

Matrices are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


def _full_mask(cols: int) -> int:
    return (1 << cols) - 1


class BinaryMatrix:
    """Dense matrix over GF(2) with bit-packed rows.

    Attributes:
        rows: Number of rows (may be 0).
        cols: Number of columns (may be 0).
        bits: Tuple of row words; bit ``j`` of ``bits[r]`` is entry (r, j).
              No bit at or beyond column ``cols`` is ever set.
    """

    __slots__ = ("rows", "cols", "bits")

    def __init__(self, rows: int, cols: int, bits: Sequence[int]):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(bits) != rows:
            raise ValueError(f"expected {rows} row words, got {len(bits)}")
        mask = _full_mask(cols)
        for r, word in enumerate(bits):
            if word < 0 or word & ~mask:
                raise ValueError(f"row {r} has bits outside {cols} columns")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "bits", tuple(bits))

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("BinaryMatrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinaryMatrix":
        return cls(rows, cols, [0] * rows)

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Iterable, cols: Optional[int] = None) -> "BinaryMatrix":
        """Build from an iterable of rows.

        Each row may be a string of ``0``/``1`` characters (leftmost char is
        column 0), an iterable of 0/1 ints, or an already-packed int (in
        which case ``cols`` is required).
        """
        words = []
        width = cols
        for row in rows:
            if isinstance(row, str):
                row = row.strip()
                word = 0
                for j, ch in enumerate(row):
                    if ch == "1":
                        word |= 1 << j
                    elif ch != "0":
                        raise ValueError(f"bad matrix character {ch!r}")
                n = len(row)
            elif isinstance(row, int):
                if width is None:
                    raise ValueError("cols is required for packed int rows")
                word, n = row, width
            else:
                entries = list(row)
                word = 0
                for j, e in enumerate(entries):
                    if e not in (0, 1):
                        raise ValueError(f"bad matrix entry {e!r}")
                    word |= e << j
                n = len(entries)
            if width is None:
                width = n
            elif width != n:
                raise ValueError("ragged rows")
            words.append(word)
        if width is None:
            raise ValueError("cannot infer column count from empty input")
        return cls(len(words), width, words)

    # -- element access ----------------------------------------------------

    def get(self, r: int, c: int) -> int:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError("matrix index out of range")
        return (self.bits[r] >> c) & 1

    def row(self, r: int) -> int:
        return self.bits[r]

    def row_weight(self, r: int) -> int:
        return self.bits[r].bit_count()

    def is_zero(self) -> bool:
        return all(w == 0 for w in self.bits)

    def to_strings(self) -> list[str]:
        return [
            "".join("1" if (w >> j) & 1 else "0" for j in range(self.cols))
            for w in self.bits
        ]

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.bits))

    def __repr__(self) -> str:
        if self.rows <= 8 and self.cols <= 24:
            body = ", ".join(self.to_strings())
            return f"BinaryMatrix({self.rows}x{self.cols}: [{body}])"
        return f"BinaryMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class RrefResult:
    """Reduced row-echelon form with its pivot bookkeeping.

    ``pivot_columns`` is strictly increasing and has length ``rank``.
    Row ``i`` of ``reduced`` has a 1 in column ``pivot_columns[i]`` and that
    column is zero in every other row.  No column swaps are performed, so
    column indices always refer to the original matrix.
    """

    reduced: BinaryMatrix
    pivot_columns: tuple[int, ...]
    rank: int

    def nonzero_rows(self) -> list[int]:
        return list(self.reduced.bits[: self.rank])


def rref(m: BinaryMatrix) -> RrefResult:
    """Reduced row-echelon form over GF(2), pivots leftmost-first."""
    work = list(m.bits)
    pivots = []
    pivot_row = 0
    for col in range(m.cols):
        sel = None
        for r in range(pivot_row, m.rows):
            if (work[r] >> col) & 1:
                sel = r
                break
        if sel is None:
            continue
        work[pivot_row], work[sel] = work[sel], work[pivot_row]
        for r in range(m.rows):
            if r != pivot_row and (work[r] >> col) & 1:
                work[r] ^= work[pivot_row]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == m.rows:
            break
    return RrefResult(BinaryMatrix(m.rows, m.cols, work), tuple(pivots), len(pivots))


def rank(m: BinaryMatrix) -> int:
    return rref(m).rank


def transpose(m: BinaryMatrix) -> BinaryMatrix:
    out = [0] * m.cols
    for r, word in enumerate(m.bits):
        while word:
            low = word & -word
            out[low.bit_length() - 1] |= 1 << r
            word ^= low
    return BinaryMatrix(m.cols, m.rows, out)


def matmul(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    """Matrix product over GF(2); requires cols(a) == rows(b)."""
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.cols} cols vs {b.rows} rows")
    out = []
    for word in a.bits:
        acc = 0
        w = word
        while w:
            low = w & -w
            acc ^= b.bits[low.bit_length() - 1]
            w ^= low
        out.append(acc)
    return BinaryMatrix(a.rows, b.cols, out)


def kron(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    """Kronecker product; entry ((ia*rb + ib), (ja*cb + jb)) = a[ia,ja]*b[ib,jb]."""
    out = []
    for ia in range(a.rows):
        arow = a.bits[ia]
        for ib in range(b.rows):
            word = 0
            w = arow
            while w:
                low = w & -w
                ja = low.bit_length() - 1
                word |= b.bits[ib] << (ja * b.cols)
                w ^= low
            out.append(word)
    return BinaryMatrix(a.rows * b.rows, a.cols * b.cols, out)


def mat_vec(m: BinaryMatrix, v: int) -> int:
    """Apply m to a packed column vector; bit r of the result is <row_r, v>."""
    if v < 0 or v & ~_full_mask(m.cols):
        raise ValueError("vector does not fit the column count")
    out = 0
    for r, word in enumerate(m.bits):
        if (word & v).bit_count() & 1:
            out |= 1 << r
    return out


def kernel_basis(m: BinaryMatrix) -> BinaryMatrix:
    """Basis for {v : m @ v = 0}, one packed vector per row.

    The basis has cols(m) - rank(m) rows.  Basis vector for free column f
    carries a 1 at f and reproduces the bound pivot entries, so the result
    is deterministic and in a canonical (echelon-complement) form.
    """
    red = rref(m)
    pivot_set = set(red.pivot_columns)
    rows = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = 1 << f
        for i, p in enumerate(red.pivot_columns):
            if (red.reduced.bits[i] >> f) & 1:
                v |= 1 << p
        rows.append(v)
    return BinaryMatrix(len(rows), m.cols, rows)


def solve(m: BinaryMatrix, b: int) -> Optional[int]:
    """Solve m @ x = b for a packed vector x, or None if inconsistent.

    Free variables are set to zero, so the returned solution is the unique
    representative with support inside the pivot columns.
    """
    if b < 0 or b & ~_full_mask(m.rows):
        raise ValueError("right-hand side does not fit the row count")
    # Augment each row word with its b-bit one position past the last column.
    aug = [m.bits[r] | (((b >> r) & 1) << m.cols) for r in range(m.rows)]
    pivots = []
    pivot_row = 0
    for col in range(m.cols):
        sel = None
        for r in range(pivot_row, m.rows):
            if (aug[r] >> col) & 1:
                sel = r
                break
        if sel is None:
            continue
        aug[pivot_row], aug[sel] = aug[sel], aug[pivot_row]
        for r in range(m.rows):
            if r != pivot_row and (aug[r] >> col) & 1:
                aug[r] ^= aug[pivot_row]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == m.rows:
            break
    body_mask = _full_mask(m.cols)
    for r in range(pivot_row, m.rows):
        if aug[r] >> m.cols and not (aug[r] & body_mask):
            return None
    x = 0
    for i, col in enumerate(pivots):
        if aug[i] >> m.cols:
            x |= 1 << col
    return x


class RowSpace:
    """Incremental row-space membership tester.

    Keeps an internal reduced basis; ``contains`` reduces a candidate
    against it.  ``extend`` adds an independent vector and reports whether
    the span grew.  Used for coset-membership tests in distance searches
    and correctability checks.
    """

    def __init__(self, m: Optional[BinaryMatrix] = None, cols: Optional[int] = None):
        if m is not None:
            self.cols = m.cols
            red = rref(m)
            self._basis = list(red.nonzero_rows())
            self._pivots = list(red.pivot_columns)
        else:
            if cols is None:
                raise ValueError("need a matrix or an explicit column count")
            self.cols = cols
            self._basis = []
            self._pivots = []

    @property
    def rank(self) -> int:
        return len(self._basis)

    def reduce(self, v: int) -> int:
        for word, p in zip(self._basis, self._pivots):
            if (v >> p) & 1:
                v ^= word
        return v

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def extend(self, v: int) -> bool:
        """Add v to the span; returns True if it was independent."""
        v = self.reduce(v)
        if v == 0:
            return False
        p = (v & -v).bit_length() - 1
        # Keep the basis reduced so pivot columns stay unique.
        for i, word in enumerate(self._basis):
            if (word >> p) & 1:
                self._basis[i] = word ^ v
        idx = 0
        while idx < len(self._pivots) and self._pivots[idx] < p:
            idx += 1
        self._basis.insert(idx, v)
        self._pivots.insert(idx, p)
        return True

    def copy(self) -> "RowSpace":
        out = RowSpace(cols=self.cols)
        out._basis = list(self._basis)
        out._pivots = list(self._pivots)
        return out


def compose_blocks(
    rows: int, cols: int, placements: Iterable[tuple[int, int, BinaryMatrix]]
) -> BinaryMatrix:
    """Assemble a matrix from (row_offset, col_offset, block) placements."""
    out = [0] * rows
    for ro, co, block in placements:
        if ro < 0 or co < 0 or ro + block.rows > rows or co + block.cols > cols:
            raise ValueError("block placement out of range")
        for r in range(block.rows):
            out[ro + r] ^= block.bits[r] << co
    return BinaryMatrix(rows, cols, out)


# -- text exchange format --------------------------------------------------
#
# Optional '#' comment lines, then a header line "rows cols", then exactly
# `rows` lines of `cols` characters from {0,1}.  Round-trips bit-exactly.


def parse_matrix_text(text: str) -> BinaryMatrix:
    lines = [ln.strip() for ln in text.splitlines()]
    data = [ln for ln in lines if ln and not ln.startswith("#")]
    if not data:
        raise ValueError("empty matrix file")
    head = data[0].split()
    if len(head) != 2:
        raise ValueError(f"bad matrix header {data[0]!r}, expected 'rows cols'")
    try:
        nrows, ncols = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ValueError(f"bad matrix header {data[0]!r}") from exc
    if nrows < 0 or ncols < 0:
        raise ValueError("negative dimensions in matrix header")
    body = data[1:]
    if len(body) != nrows:
        raise ValueError(f"expected {nrows} matrix rows, found {len(body)}")
    words = []
    for ln in body:
        if len(ln) != ncols or any(ch not in "01" for ch in ln):
            raise ValueError(f"bad matrix row {ln!r}")
        word = 0
        for j, ch in enumerate(ln):
            if ch == "1":
                word |= 1 << j
        words.append(word)
    return BinaryMatrix(nrows, ncols, words)


def format_matrix_text(m: BinaryMatrix, comment: Optional[str] = None) -> str:
    out = []
    if comment:
        for ln in comment.splitlines():
            out.append(f"# {ln}")
    out.append(f"{m.rows} {m.cols}")
    out.extend(m.to_strings())
    return "\n".join(out) + "\n"


def vector_to_string(v: int, n: int) -> str:
    return "".join("1" if (v >> j) & 1 else "0" for j in range(n))


def vector_from_indices(indices: Iterable[int]) -> int:
    v = 0
    for i in indices:
        v |= 1 << i
    return v


def indices_of(v: int) -> list[int]:
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out

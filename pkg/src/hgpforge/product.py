"""Homological products of 1-complexes over GF(2).

A t-dimensional product complex is built from t seed maps
A_i : F_2^{n_i} -> F_2^{m_i}.  The level-l space splits into sectors, one
per size-l subset J of the t directions; direction i of a sector has size
n_i when i is in J and m_i otherwise.  Boundary maps follow the graded
Leibniz rule (signs vanish in characteristic 2) and satisfy dd = 0 by
construction, which is asserted when the complex is assembled.

Sectors are listed in lexicographic order of their (sorted, 0-based) index
subsets, and every flat qubit index is row-major mixed radix within its
sector plus the sector offset.  This single convention is shared by the
file formats and by every downstream module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional, Sequence

from . import classical, f2la
from .classical import ClassicalCode
from .f2la import BinaryMatrix

MAX_DIMENSION = 6


class OneComplex:
    """A seed map A : F_2^n -> F_2^m with its kernel/cokernel data.

    ``code`` is the kernel of A viewed as a classical code (checks A) and
    ``code_t`` the kernel of A^T.  Distances of both are computed lazily.
    """

    def __init__(self, a: BinaryMatrix):
        self.a = a
        self.n = a.cols
        self.m = a.rows
        self.code = ClassicalCode(a)
        self.code_t = ClassicalCode(f2la.transpose(a))
        self.k = self.code.k
        self.k_t = self.code_t.k

    @property
    def d(self) -> int:
        """Distance of ker A (requires k >= 1)."""
        return classical.distance(self.code)

    @property
    def d_t(self) -> int:
        """Distance of ker A^T (requires k_t >= 1)."""
        return classical.distance(self.code_t)

    def min_distance(self) -> Optional[int]:
        """min(d, d_t) over whichever kernels are nontrivial; None if both are."""
        vals = []
        if self.k:
            vals.append(self.d)
        if self.k_t:
            vals.append(self.d_t)
        return min(vals) if vals else None

    def __repr__(self) -> str:
        return f"OneComplex({self.m}x{self.n}, k={self.k}, k_t={self.k_t})"


@dataclass(frozen=True)
class Sector:
    """One direct summand of a level: index subset J, its shape and offset."""

    J: tuple[int, ...]
    shape: tuple[int, ...]
    offset: int

    @property
    def size(self) -> int:
        return reduce(lambda x, y: x * y, self.shape, 1)

    def strides(self) -> tuple[int, ...]:
        out = [1] * len(self.shape)
        for i in range(len(self.shape) - 2, -1, -1):
            out[i] = out[i + 1] * self.shape[i + 1]
        return tuple(out)


class SectorTable:
    """Ordered sectors of one level, with subset -> index lookup."""

    def __init__(self, sectors: Sequence[Sector]):
        self.sectors = tuple(sectors)
        self._by_subset = {s.J: i for i, s in enumerate(self.sectors)}

    def __len__(self) -> int:
        return len(self.sectors)

    def __getitem__(self, mu: int) -> Sector:
        return self.sectors[mu]

    def index_of(self, J: Iterable[int]) -> int:
        return self._by_subset[tuple(sorted(J))]

    @property
    def dim(self) -> int:
        return sum(s.size for s in self.sectors)


@dataclass(frozen=True)
class Hyperplane:
    """Affine sub-grid of a sector: coordinates on fixed_dirs pinned to
    fixed_values, free on the remaining directions."""

    level: int
    sector: int
    fixed_dirs: tuple[int, ...]
    fixed_values: tuple[int, ...]

    def __post_init__(self):
        if len(self.fixed_dirs) != len(self.fixed_values):
            raise ValueError("fixed_dirs and fixed_values lengths differ")
        if list(self.fixed_dirs) != sorted(set(self.fixed_dirs)):
            raise ValueError("fixed_dirs must be strictly increasing")

    def value_at(self, direction: int) -> int:
        return self.fixed_values[self.fixed_dirs.index(direction)]


@dataclass(frozen=True)
class Hypertube:
    """Per-direction thick/thin classification of a vector in one sector.

    A direction is thick when the vector's block support there reaches the
    direction's threshold (by default min(d_i, d_i^T) of the seed).  The
    tube's dimension is the number of thick directions.
    """

    sector: int
    thin_dirs: tuple[int, ...]
    thresholds: tuple[int, ...]
    block_weights: tuple[int, ...]

    @property
    def thick_dirs(self) -> tuple[int, ...]:
        thin = set(self.thin_dirs)
        return tuple(i for i in range(len(self.thresholds)) if i not in thin)

    @property
    def dimension(self) -> int:
        return len(self.thresholds) - len(self.thin_dirs)


class ProductComplex:
    """The full t-dimensional product: sector tables and boundary maps."""

    def __init__(self, factors: Sequence[OneComplex], check: bool = True):
        if not (1 <= len(factors) <= MAX_DIMENSION):
            raise ValueError(f"need between 1 and {MAX_DIMENSION} factors")
        self.factors = tuple(factors)
        self.t = len(factors)
        self.tables: list[SectorTable] = []
        for level in range(self.t + 1):
            sectors = []
            offset = 0
            for J in itertools.combinations(range(self.t), level):
                shape = tuple(
                    factors[i].n if i in J else factors[i].m for i in range(self.t)
                )
                sec = Sector(J, shape, offset)
                sectors.append(sec)
                offset += sec.size
            self.tables.append(SectorTable(sectors))
        self._boundaries = {
            level: self._build_boundary(level) for level in range(1, self.t + 1)
        }
        if check:
            for level in range(2, self.t + 1):
                prod = f2la.matmul(self._boundaries[level - 1], self._boundaries[level])
                if not prod.is_zero():
                    raise AssertionError(f"boundary composition at level {level} is nonzero")

    def dim(self, level: int) -> int:
        return self.tables[level].dim

    def boundary(self, level: int) -> BinaryMatrix:
        """The map from level to level-1, as a dim(level-1) x dim(level) matrix."""
        return self._boundaries[level]

    def _build_boundary(self, level: int) -> BinaryMatrix:
        src = self.tables[level]
        dst = self.tables[level - 1]
        placements = []
        for sec in src.sectors:
            for j in sec.J:
                target = dst.sectors[dst.index_of(tuple(d for d in sec.J if d != j))]
                block = None
                for d in range(self.t):
                    piece = (
                        self.factors[d].a
                        if d == j
                        else BinaryMatrix.identity(sec.shape[d])
                    )
                    block = piece if block is None else f2la.kron(block, piece)
                placements.append((target.offset, sec.offset, block))
        return f2la.compose_blocks(dst.dim, src.dim, placements)

    def __repr__(self) -> str:
        dims = ", ".join(str(self.dim(level)) for level in range(self.t + 1))
        return f"ProductComplex(t={self.t}, dims=[{dims}])"


def build_product(factors: Sequence[OneComplex | BinaryMatrix], check: bool = True) -> ProductComplex:
    """Assemble the product complex; accepts raw seed matrices for convenience."""
    wrapped = [f if isinstance(f, OneComplex) else OneComplex(f) for f in factors]
    return ProductComplex(wrapped, check=check)


# -- coordinates -------------------------------------------------------------


def flat_index(pc: ProductComplex, level: int, mu: int, coords: Sequence[int]) -> int:
    """Flat index of a coordinate tuple in sector mu at the given level."""
    sec = pc.tables[level][mu]
    if len(coords) != pc.t:
        raise ValueError(f"expected {pc.t} coordinates")
    idx = sec.offset
    for c, size, stride in zip(coords, sec.shape, sec.strides()):
        if not (0 <= c < size):
            raise ValueError(f"coordinate {c} out of range for size {size}")
        idx += c * stride
    return idx


def coords_of(pc: ProductComplex, level: int, index: int) -> tuple[int, tuple[int, ...]]:
    """Inverse of flat_index: (sector, per-direction coordinates)."""
    table = pc.tables[level]
    if not (0 <= index < table.dim):
        raise ValueError("flat index out of range")
    for mu, sec in enumerate(table.sectors):
        if index < sec.offset + sec.size:
            rem = index - sec.offset
            coords = []
            for stride in sec.strides():
                coords.append(rem // stride)
                rem %= stride
            return mu, tuple(coords)
    raise AssertionError("unreachable: offsets do not cover the level")


def hyperplane_support(pc: ProductComplex, h: Hyperplane) -> frozenset[int]:
    """All flat indices whose fixed-direction coordinates match h."""
    sec = pc.tables[h.level][h.sector]
    fixed = dict(zip(h.fixed_dirs, h.fixed_values))
    for d, v in fixed.items():
        if not (0 <= d < pc.t):
            raise ValueError(f"direction {d} out of range")
        if not (0 <= v < sec.shape[d]):
            raise ValueError(f"fixed value {v} out of range in direction {d}")
    ranges = [
        [fixed[d]] if d in fixed else range(sec.shape[d]) for d in range(pc.t)
    ]
    return frozenset(
        flat_index(pc, h.level, h.sector, coords)
        for coords in itertools.product(*ranges)
    )


def intersect_hyperplanes(h1: Hyperplane, h2: Hyperplane) -> Optional[Hyperplane]:
    """Merge fixed coordinates; None when a shared direction disagrees."""
    if h1.level != h2.level or h1.sector != h2.sector:
        raise ValueError("disjoint sectors")
    merged = dict(zip(h1.fixed_dirs, h1.fixed_values))
    for d, v in zip(h2.fixed_dirs, h2.fixed_values):
        if d in merged and merged[d] != v:
            return None
        merged[d] = v
    dirs = tuple(sorted(merged))
    return Hyperplane(h1.level, h1.sector, dirs, tuple(merged[d] for d in dirs))


def sector_support_coords(
    pc: ProductComplex, level: int, v: int, mu: int
) -> list[tuple[int, ...]]:
    """Coordinates of the support of v restricted to sector mu."""
    sec = pc.tables[level][mu]
    out = []
    word = v >> sec.offset
    word &= (1 << sec.size) - 1
    while word:
        low = word & -word
        rem = low.bit_length() - 1
        coords = []
        for stride in sec.strides():
            coords.append(rem // stride)
            rem %= stride
        out.append(tuple(coords))
        word ^= low
    return out


def block_hamming_weight(
    pc: ProductComplex, level: int, v: int, mu: int, dirs: Iterable[int]
) -> int:
    """Number of distinct fixed-value assignments on `dirs` meeting supp(v).

    Counts the hyperplanes of orientation `dirs` in sector mu that carry a
    nontrivial part of v.
    """
    dirs = tuple(sorted(set(dirs)))
    if any(d < 0 or d >= pc.t for d in dirs):
        raise ValueError("direction out of range")
    seen = {
        tuple(coords[d] for d in dirs)
        for coords in sector_support_coords(pc, level, v, mu)
    }
    return len(seen)


def default_hypertube_thresholds(pc: ProductComplex) -> tuple[int, ...]:
    """Per-direction thresholds min(d_i, d_i^T); errors on trivial seeds."""
    out = []
    for i, fac in enumerate(pc.factors):
        md = fac.min_distance()
        if md is None:
            raise ValueError(f"factor {i} has trivial kernels; supply thresholds")
        out.append(md)
    return tuple(out)


def classify_hypertube(
    pc: ProductComplex,
    level: int,
    v: int,
    mu: int,
    thresholds: Optional[Sequence[int]] = None,
) -> Hypertube:
    """Classify a sector-restricted vector as a hypertube.

    A direction is thick when the number of distinct coordinate values taken
    by supp(v) in that direction reaches the threshold.
    """
    if thresholds is None:
        thresholds = default_hypertube_thresholds(pc)
    if len(thresholds) != pc.t:
        raise ValueError(f"expected {pc.t} thresholds")
    weights = tuple(
        block_hamming_weight(pc, level, v, mu, (d,)) for d in range(pc.t)
    )
    thin = tuple(d for d in range(pc.t) if weights[d] < thresholds[d])
    return Hypertube(mu, thin, tuple(thresholds), weights)

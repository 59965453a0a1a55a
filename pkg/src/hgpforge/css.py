"""CSS codes assembled from product complexes.

Qubits live on level l of a product complex.  X checks are the rows of the
boundary map out of level l (stars of (l-1)-cells) and Z checks are the
rows of the transposed boundary into level l (boundaries of (l+1)-cells),
so Hx @ Hz^T = 0 is the dd = 0 identity.  With this orientation the
canonical X logical representatives spread along the degree-zero
directions of a sector (an r = t - l dimensional hyperplane) and the Z
representatives along the degree-one directions (l-dimensional).

Hand-built CSS codes (explicit Hx, Hz) are also supported; they simply
lack the product structure needed for canonical bases.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Sequence

from . import classical, f2la, product
from .f2la import BinaryMatrix, RowSpace
from .product import Hyperplane, ProductComplex

_DISTANCE_BUDGET = 1 << 22


# -- Pauli algebra -----------------------------------------------------------


@dataclass(frozen=True)
class PauliOperator:
    """Symplectic (x, z, sign) representation of an n-qubit Pauli.

    ``x`` and ``z`` are packed support words.  Only signs +-1 are tracked;
    every circuit handled here is CSS-diagonal or Pauli, so i-phases never
    arise.
    """

    n: int
    x: int = 0
    z: int = 0
    sign: int = 1

    def __post_init__(self):
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask or self.x < 0 or self.z < 0:
            raise ValueError("Pauli support exceeds qubit count")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def support(self) -> frozenset[int]:
        return frozenset(f2la.indices_of(self.x | self.z))

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0


def symplectic_product(p: PauliOperator, q: PauliOperator) -> int:
    """<x_p, z_q> + <z_p, x_q> mod 2; 1 iff the Paulis anticommute."""
    if p.n != q.n:
        raise ValueError("length mismatch")
    return ((p.x & q.z).bit_count() + (p.z & q.x).bit_count()) & 1


def pauli_mul(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Product in the X-then-Z ordering convention."""
    if p.n != q.n:
        raise ValueError("length mismatch")
    sign = p.sign * q.sign
    if (p.z & q.x).bit_count() & 1:
        sign = -sign
    return PauliOperator(p.n, p.x ^ q.x, p.z ^ q.z, sign)


def group_commutator_pauli(p: PauliOperator, q: PauliOperator) -> int:
    """Scalar of P Q P^dagger Q^dagger for Paulis: (-1)^<P,Q>."""
    return -1 if symplectic_product(p, q) else 1


# -- logical representatives -------------------------------------------------


@dataclass(frozen=True)
class LogicalRep:
    """A logical representative with its construction provenance.

    ``factors`` holds one packed vector per direction whose tensor product
    is the representative; canonical representatives keep the hyperplane
    data (fixed_dirs / fixed_values), deformed ones set fixed_values to
    None because their support is no longer a single hyperplane.
    """

    pauli: PauliOperator
    kind: str  # "X" or "Z"
    sector: int
    fixed_dirs: tuple[int, ...]
    fixed_values: Optional[tuple[int, ...]]
    kernel_indices: tuple[int, ...]
    factors: tuple[int, ...]

    def hyperplane(self, level: int) -> Hyperplane:
        if self.fixed_values is None:
            raise ValueError("representative is not supported on a single hyperplane")
        return Hyperplane(level, self.sector, self.fixed_dirs, self.fixed_values)


@dataclass
class LogicalBasis:
    x_reps: list[LogicalRep]
    z_reps: list[LogicalRep]
    pairing: BinaryMatrix

    @property
    def k(self) -> int:
        return len(self.x_reps)


@dataclass(frozen=True)
class KunnethParameters:
    n: int
    k: int
    d_x: Optional[int]
    d_z: Optional[int]

    @property
    def d(self) -> Optional[int]:
        if self.d_x is None or self.d_z is None:
            return None
        return min(self.d_x, self.d_z)


class CssCode:
    """Stabilizer data for a CSS code, with optional product provenance."""

    def __init__(
        self,
        hx: BinaryMatrix,
        hz: BinaryMatrix,
        complex: Optional[ProductComplex] = None,
        level: Optional[int] = None,
    ):
        if hx.cols != hz.cols:
            raise ValueError("Hx and Hz qubit counts differ")
        if not f2la.matmul(hx, f2la.transpose(hz)).is_zero():
            raise ValueError("Hx @ Hz^T != 0: not a CSS pair")
        self.hx = hx
        self.hz = hz
        self.n = hx.cols
        self.complex = complex
        self.level = level
        self.rank_hx = f2la.rank(hx)
        self.rank_hz = f2la.rank(hz)
        self.k = self.n - self.rank_hx - self.rank_hz
        if self.k < 0:
            raise AssertionError("negative logical count; checks are inconsistent")
        weights = [hx.row_weight(r) for r in range(hx.rows)]
        weights += [hz.row_weight(r) for r in range(hz.rows)]
        self.stabilizer_weight = max(weights, default=0)
        self.logicals: Optional[LogicalBasis] = None
        self._hx_space: Optional[RowSpace] = None
        self._hz_space: Optional[RowSpace] = None
        self._x_domain: Optional[list[int]] = None

    def __repr__(self) -> str:
        return f"CssCode[[{self.n},{self.k}]]"

    @property
    def hx_space(self) -> RowSpace:
        if self._hx_space is None:
            self._hx_space = RowSpace(self.hx)
        return self._hx_space

    @property
    def hz_space(self) -> RowSpace:
        if self._hz_space is None:
            self._hz_space = RowSpace(self.hz)
        return self._hz_space

    def x_domain_basis(self) -> list[int]:
        """Reduced basis of ker Hz (the X-type codeword domain)."""
        if self._x_domain is None:
            red = f2la.rref(f2la.kernel_basis(self.hz))
            self._x_domain = red.nonzero_rows()
        return self._x_domain

    def set_logical_basis(self, x_reps: Sequence[PauliOperator], z_reps: Sequence[PauliOperator]):
        """Install a hand-made logical basis (for non-product codes).

        Validates kernel membership, coset non-membership, and that the
        symplectic pairing is the identity.
        """
        if len(x_reps) != self.k or len(z_reps) != self.k:
            raise ValueError(f"expected {self.k} representatives per type")
        wrapped_x, wrapped_z = [], []
        for i, op in enumerate(x_reps):
            _check_logical(self, op.x, "X")
            wrapped_x.append(LogicalRep(op, "X", -1, (), None, (i,), ()))
        for i, op in enumerate(z_reps):
            _check_logical(self, op.z, "Z")
            wrapped_z.append(LogicalRep(op, "Z", -1, (), None, (i,), ()))
        pairing = _pairing_matrix(wrapped_x, wrapped_z)
        if pairing != BinaryMatrix.identity(self.k):
            raise ValueError("pairing of supplied basis is not the identity")
        self.logicals = LogicalBasis(wrapped_x, wrapped_z, pairing)


def _check_logical(code: CssCode, v: int, kind: str):
    if kind == "X":
        if f2la.mat_vec(code.hz, v) != 0:
            raise ValueError("X representative is not in ker Hz")
        if code.hx_space.contains(v):
            raise ValueError("X representative lies in the stabilizer row space")
    else:
        if f2la.mat_vec(code.hx, v) != 0:
            raise ValueError("Z representative is not in ker Hx")
        if code.hz_space.contains(v):
            raise ValueError("Z representative lies in the stabilizer row space")


def assemble_css(pc: ProductComplex, level: int) -> CssCode:
    """CSS code on level `level` of the product, 1 <= level <= t-1."""
    if not (1 <= level <= pc.t - 1):
        raise ValueError(f"level must be in [1, {pc.t - 1}] for t={pc.t}")
    hx = pc.boundary(level)
    hz = f2la.transpose(pc.boundary(level + 1))
    return CssCode(hx, hz, complex=pc, level=level)


def kunneth_parameters(pc: ProductComplex, level: int) -> KunnethParameters:
    """Closed-form parameters of the level-l code from the seed data.

    k sums, over sectors J, the product of kernel dimensions (degree-one
    directions) and transpose-kernel dimensions (degree-zero directions).
    Distances take minima of seed-distance products over the sectors that
    contribute at least one logical class: Z representatives spread kernel
    codewords along J, X representatives spread transpose-kernel codewords
    along the complement.
    """
    if not (1 <= level <= pc.t - 1):
        raise ValueError(f"level must be in [1, {pc.t - 1}] for t={pc.t}")
    n = pc.dim(level)
    k = 0
    d_x: Optional[int] = None
    d_z: Optional[int] = None
    for J in itertools.combinations(range(pc.t), level):
        inside = set(J)
        sector_k = 1
        for i in range(pc.t):
            sector_k *= pc.factors[i].k if i in inside else pc.factors[i].k_t
        if sector_k == 0:
            continue
        k += sector_k
        dz_term = 1
        for j in J:
            dz_term *= pc.factors[j].d
        dx_term = 1
        for i in range(pc.t):
            if i not in inside:
                dx_term *= pc.factors[i].d_t
        d_z = dz_term if d_z is None else min(d_z, dz_term)
        d_x = dx_term if d_x is None else min(d_x, dx_term)
    return KunnethParameters(n, k, d_x, d_z)


# -- brute-force distance ----------------------------------------------------


@dataclass(frozen=True)
class DistanceResult:
    d_x: int
    d_z: int

    @property
    def d(self) -> int:
        return min(self.d_x, self.d_z)


def brute_distance(
    code: CssCode,
    max_weight: Optional[int] = None,
    jobs: int = 1,
    budget: int = _DISTANCE_BUDGET,
) -> DistanceResult:
    """Exact minimum logical weights by coset enumeration.

    d_z scans ker Hx modulo the Z-stabilizer row space (d_x symmetric).
    Each nonzero logical class is paired with a Gray-code walk over the
    stabilizer combinations; weight classes are split across `jobs`
    workers with a deterministic min-reduce.  Raises when the enumeration
    exceeds `budget` and no `max_weight` bounded pass is requested.
    """
    if code.k == 0:
        raise ValueError("no logical operators")
    d_z = _min_logical_weight(code.hx, code.hz, max_weight, jobs, budget)
    d_x = _min_logical_weight(code.hz, code.hx, max_weight, jobs, budget)
    return DistanceResult(d_x=d_x, d_z=d_z)


def _min_logical_weight(
    h_kernel: BinaryMatrix,
    h_stab: BinaryMatrix,
    max_weight: Optional[int],
    jobs: int,
    budget: int,
) -> int:
    stab = f2la.rref(h_stab)
    stab_rows = stab.nonzero_rows()
    space = RowSpace(h_stab)
    logical_rows = []
    for v in f2la.kernel_basis(h_kernel).bits:
        if space.extend(v):
            logical_rows.append(v)
    k = len(logical_rows)
    if k == 0:
        raise ValueError("no logical operators")
    cost = ((1 << k) - 1) * (1 << len(stab_rows))
    if cost > budget:
        if max_weight is None:
            raise ValueError(
                f"enumeration of {cost} cosets exceeds budget; pass max_weight"
            )
        return _bounded_weight_search(h_kernel, h_stab, max_weight)

    def class_min(class_index: int) -> int:
        base = 0
        for i in f2la.indices_of(class_index):
            base ^= logical_rows[i]
        best = base.bit_count()
        cur = base
        prev_gray = 0
        for i in range(1, 1 << len(stab_rows)):
            gray = i ^ (i >> 1)
            flip = gray ^ prev_gray
            prev_gray = gray
            cur ^= stab_rows[flip.bit_length() - 1]
            w = cur.bit_count()
            if w < best:
                best = w
        return best

    classes = range(1, 1 << k)
    if jobs > 1:
        chunks = [list(classes)[i::jobs] for i in range(jobs)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            mins = pool.map(
                lambda chunk: min((class_min(c) for c in chunk), default=None), chunks
            )
        return min(m for m in mins if m is not None)
    return min(class_min(c) for c in classes)


def _bounded_weight_search(h_kernel: BinaryMatrix, h_stab: BinaryMatrix, max_weight: int) -> int:
    space = RowSpace(h_stab)
    n = h_kernel.cols
    for w in range(1, max_weight + 1):
        for combo in itertools.combinations(range(n), w):
            v = f2la.vector_from_indices(combo)
            if f2la.mat_vec(h_kernel, v) == 0 and not space.contains(v):
                return w
    raise ValueError(f"no logical operator of weight <= {max_weight} found")


# -- canonical logical basis -------------------------------------------------


def canonical_logical_basis(code: CssCode) -> LogicalBasis:
    """Tensor-product logical basis from the seed standard forms.

    Within each sector, X representatives put a pivot unit vector on every
    degree-one direction (an information position of the seed kernel) and a
    transpose-kernel codeword on every degree-zero direction; Z
    representatives do the opposite.  Enumerating X and Z over the same
    sector-and-index order makes the symplectic pairing exactly the
    identity, with no permutation.
    """
    if code.complex is None or code.level is None:
        raise ValueError("no product structure")
    if code.logicals is not None:
        return code.logicals
    pc = code.complex
    level = code.level
    x_reps: list[LogicalRep] = []
    z_reps: list[LogicalRep] = []
    for mu, sec in enumerate(pc.tables[level].sectors):
        inside = set(sec.J)
        ranges = []
        for d in range(pc.t):
            fac = pc.factors[d]
            ranges.append(range(fac.k if d in inside else fac.k_t))
        for a in itertools.product(*ranges):
            x_factors, z_factors = [], []
            x_fixed, z_fixed = [], []
            for d in range(pc.t):
                fac = pc.factors[d]
                if d in inside:
                    x_factors.append(1 << fac.code.g_pivots[a[d]])
                    x_fixed.append(fac.code.g_pivots[a[d]])
                    z_factors.append(fac.code.g.bits[a[d]])
                else:
                    x_factors.append(fac.code_t.g.bits[a[d]])
                    z_factors.append(1 << fac.code_t.g_pivots[a[d]])
                    z_fixed.append(fac.code_t.g_pivots[a[d]])
            xbits = _tensor_support(pc, level, mu, x_factors)
            zbits = _tensor_support(pc, level, mu, z_factors)
            x_reps.append(
                LogicalRep(
                    PauliOperator(code.n, x=xbits),
                    "X",
                    mu,
                    tuple(sec.J),
                    tuple(x_fixed),
                    a,
                    tuple(x_factors),
                )
            )
            comp = tuple(d for d in range(pc.t) if d not in inside)
            z_reps.append(
                LogicalRep(
                    PauliOperator(code.n, z=zbits),
                    "Z",
                    mu,
                    comp,
                    tuple(z_fixed),
                    a,
                    tuple(z_factors),
                )
            )
    if len(x_reps) != code.k:
        raise AssertionError(
            f"canonical basis size {len(x_reps)} != k={code.k}"
        )
    for rep in x_reps:
        _check_logical(code, rep.pauli.x, "X")
    for rep in z_reps:
        _check_logical(code, rep.pauli.z, "Z")
    basis = LogicalBasis(x_reps, z_reps, _pairing_matrix(x_reps, z_reps))
    code.logicals = basis
    return basis


def _tensor_support(pc: ProductComplex, level: int, mu: int, factors: Sequence[int]) -> int:
    supports = [f2la.indices_of(w) for w in factors]
    bits = 0
    for coords in itertools.product(*supports):
        bits |= 1 << product.flat_index(pc, level, mu, coords)
    return bits


def _pairing_matrix(x_reps: Sequence[LogicalRep], z_reps: Sequence[LogicalRep]) -> BinaryMatrix:
    k = len(x_reps)
    rows = []
    for xr in x_reps:
        word = 0
        for j, zr in enumerate(z_reps):
            if symplectic_product(xr.pauli, zr.pauli):
                word |= 1 << j
        rows.append(word)
    return BinaryMatrix(k, k, rows)


# -- representative deformation ----------------------------------------------


def alternative_representative(
    code: CssCode, rep: LogicalRep, avoid: Sequence[Hyperplane]
) -> LogicalRep:
    """Equivalent representative whose support dodges the avoid hyperplanes.

    The avoid list must hold hyperplanes in the representative's sector
    with its orientation.  Each fixed direction is cleaned independently:
    the unit factor is deformed by a parity-check row-space element that
    reproduces it on the forbidden coordinate values, which translates the
    matching stabilizers along the representative's free directions.  The
    solve succeeds whenever the per-direction forbidden sets stay within
    the classical cleaning bound.
    """
    if code.complex is None or code.level is None:
        raise ValueError("no product structure")
    pc = code.complex
    if rep.fixed_values is None:
        raise ValueError("representative must be canonical (single hyperplane)")
    for h in avoid:
        if h.sector != rep.sector or h.level != code.level:
            raise ValueError("avoid hyperplane in a different sector")
        if tuple(h.fixed_dirs) != rep.fixed_dirs:
            raise ValueError("avoid hyperplane has a different orientation")
    if not avoid:
        return rep
    rep_support = rep.pauli.x | rep.pauli.z
    if all(
        not any((rep_support >> q) & 1 for q in product.hyperplane_support(pc, h))
        for h in avoid
    ):
        return rep
    new_factors = list(rep.factors)
    for pos, d in enumerate(rep.fixed_dirs):
        gamma = sorted({h.fixed_values[pos] for h in avoid})
        fac = pc.factors[d]
        unit = rep.factors[d]
        target = 0
        for j, c in enumerate(gamma):
            if (unit >> c) & 1:
                target |= 1 << j
        # X reps deform by rows of A (X-stabilizer translates); Z reps by
        # rows of A^T.  Both are "clean the unit factor off gamma".
        matrix = fac.a if rep.kind == "X" else f2la.transpose(fac.a)
        h_elem = classical.clean_with_target(matrix, gamma, target)
        if h_elem is None:
            raise ValueError(
                f"cleaning infeasible in direction {d}: no row-space element "
                f"matches the representative on coordinates {gamma}"
            )
        new = unit ^ h_elem
        if any((new >> c) & 1 for c in gamma):
            raise AssertionError("cleaned factor still meets a forbidden value")
        new_factors[d] = new
    bits = _tensor_support(pc, code.level, rep.sector, new_factors)
    if rep.kind == "X":
        pauli = PauliOperator(code.n, x=bits)
        if not code.hx_space.contains(bits ^ rep.pauli.x):
            raise AssertionError("deformation left the stabilizer coset")
    else:
        pauli = PauliOperator(code.n, z=bits)
        if not code.hz_space.contains(bits ^ rep.pauli.z):
            raise AssertionError("deformation left the stabilizer coset")
    for h in avoid:
        if any((bits >> q) & 1 for q in product.hyperplane_support(pc, h)):
            raise AssertionError("deformed representative still meets an avoid hyperplane")
    return replace(rep, pauli=pauli, fixed_values=None, factors=tuple(new_factors))

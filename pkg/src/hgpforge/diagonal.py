"""Phase polynomials for diagonal circuits and their logical analysis.

A diagonal circuit on basis state |x> applies the phase
exp(i*pi*f(x)/2^(m-1)) where f is a multilinear polynomial over the binary
variables x_i with coefficients in Z_{2^m}.  Conjugating by an X-type Pauli
with support g turns f into f(x^g) - f(x), another phase polynomial, which
drives both the Clifford-hierarchy level computation and the
codespace-preservation check.

Everything here is exact symbolic arithmetic mod 2^m; no state vectors are
ever enumerated.  Substituting a GF(2)-linear parameterization into a
polynomial expands each XOR multilinearly, pruning branches whose
coefficient 2-adic valuation already exceeds the modulus, which keeps the
kernel-substitution checks polynomial-sized in practice.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from . import f2la
from .correctability import Region, is_correctable
from .css import CssCode, LogicalRep, PauliOperator, canonical_logical_basis

Monomial = frozenset


class PhasePolynomial:
    """Multilinear polynomial over binary variables, coefficients mod 2^m.

    Zero-coefficient terms are never stored; the empty monomial is the
    constant term.  Instances are immutable.
    """

    __slots__ = ("modulus_log2", "nvars", "_terms")

    def __init__(self, nvars: int, modulus_log2: int, terms: Optional[dict] = None):
        if modulus_log2 < 1:
            raise ValueError("modulus_log2 must be >= 1")
        if nvars < 0:
            raise ValueError("nvars must be >= 0")
        mod = 1 << modulus_log2
        clean: dict[Monomial, int] = {}
        for mono, coeff in (terms or {}).items():
            mono = frozenset(mono)
            if any(v < 0 or v >= nvars for v in mono):
                raise ValueError("monomial variable out of range")
            c = coeff % mod
            if c:
                clean[mono] = c
        object.__setattr__(self, "modulus_log2", modulus_log2)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("PhasePolynomial is immutable")

    @property
    def modulus(self) -> int:
        return 1 << self.modulus_log2

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Sorted (monomial, coefficient) pairs; canonical presentation."""
        return sorted(
            ((tuple(sorted(mono)), c) for mono, c in self._terms.items()),
            key=lambda item: (len(item[0]), item[0]),
        )

    def coefficient(self, mono: Iterable[int]) -> int:
        return self._terms.get(frozenset(mono), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PhasePolynomial)
            and self.modulus_log2 == other.modulus_log2
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash(
            (self.modulus_log2, self.nvars, frozenset(self._terms.items()))
        )

    def __add__(self, other: "PhasePolynomial") -> "PhasePolynomial":
        if (self.nvars, self.modulus_log2) != (other.nvars, other.modulus_log2):
            raise ValueError("mismatched polynomials")
        merged = dict(self._terms)
        for mono, c in other._terms.items():
            merged[mono] = merged.get(mono, 0) + c
        return PhasePolynomial(self.nvars, self.modulus_log2, merged)

    def scale(self, factor: int) -> "PhasePolynomial":
        return PhasePolynomial(
            self.nvars,
            self.modulus_log2,
            {mono: c * factor for mono, c in self._terms.items()},
        )

    def evaluate(self, x: int) -> int:
        """Value of f at the packed assignment x, reduced mod 2^m."""
        total = 0
        for mono, c in self._terms.items():
            if all((x >> v) & 1 for v in mono):
                total += c
        return total % self.modulus

    def renumber(self, offset: int, nvars: int) -> "PhasePolynomial":
        """Shift every variable index by offset (multi-copy embedding)."""
        return PhasePolynomial(
            nvars,
            self.modulus_log2,
            {frozenset(v + offset for v in mono): c for mono, c in self._terms.items()},
        )

    def __repr__(self) -> str:
        if not self._terms:
            return f"PhasePolynomial(0 mod 2^{self.modulus_log2})"
        bits = [
            f"{c}*x{list(mono)}" if mono else str(c)
            for mono, c in self.terms()
        ]
        return f"PhasePolynomial({' + '.join(bits)} mod 2^{self.modulus_log2})"


def poly_zero(nvars: int, modulus_log2: int) -> PhasePolynomial:
    return PhasePolynomial(nvars, modulus_log2, {})


def poly_from_circuit(
    gates: Iterable[tuple[int, Iterable[int]]], modulus_log2: int, nvars: Optional[int] = None
) -> PhasePolynomial:
    """Sum monomials contributed by (coefficient, qubit set) gate terms.

    A C^{j-1}Z on a qubit set contributes 2^(m-1) times the product of its
    variables; a Z rotation by 2pi/2^l on one qubit contributes 2^(m-l)
    times that variable (see the coefficient helpers below).
    """
    terms: dict[Monomial, int] = {}
    maxvar = -1
    for coeff, qubits in gates:
        qubits = tuple(qubits)
        if len(set(qubits)) != len(qubits):
            raise ValueError(f"repeated qubit in gate {qubits}")
        mono = frozenset(qubits)
        terms[mono] = terms.get(mono, 0) + coeff
        if qubits:
            maxvar = max(maxvar, max(qubits))
    if nvars is None:
        nvars = maxvar + 1
    return PhasePolynomial(nvars, modulus_log2, terms)


def controlled_z_coeff(modulus_log2: int) -> int:
    """Coefficient of any C^{j-1}Z family gate: 2^(m-1)."""
    return 1 << (modulus_log2 - 1)


def z_rotation_coeff(level: int, modulus_log2: int) -> int:
    """Coefficient of Z^(1/2^(level-1)) (level 1 = Z, 2 = S, 3 = T, ...)."""
    if level < 1:
        raise ValueError("rotation level must be >= 1")
    if level > modulus_log2:
        raise ValueError(
            f"modulus 2^{modulus_log2} too small for a level-{level} rotation"
        )
    return 1 << (modulus_log2 - level)


def difference(f: PhasePolynomial, g: int) -> PhasePolynomial:
    """Exact multilinear form of f(x XOR g) - f(x) mod 2^m.

    Per monomial c*x_S with S1 = S intersect supp(g): substituting
    x_i -> 1 - x_i on S1 and expanding gives signed subset terms; the
    original monomial is subtracted once.
    """
    if g < 0 or g >> f.nvars:
        raise ValueError("difference vector does not fit the variable count")
    out: dict[Monomial, int] = {}
    for mono, c in f._terms.items():
        s1 = [v for v in mono if (g >> v) & 1]
        if not s1:
            continue
        s0 = frozenset(v for v in mono if not ((g >> v) & 1))
        for size in range(len(s1) + 1):
            for t in itertools.combinations(s1, size):
                key = s0 | frozenset(t)
                coeff = c if size % 2 == 0 else -c
                out[key] = out.get(key, 0) + coeff
        out[mono] = out.get(mono, 0) - c
    return PhasePolynomial(f.nvars, f.modulus_log2, out)


def hierarchy_level(f: PhasePolynomial) -> int:
    """Diagonal Clifford-hierarchy level from the monomial structure.

    A term c*x_S with 2-adic valuation v = v2(c) sits at level
    |S| + (m - 1 - v); the polynomial's level is the maximum over terms.
    Constants are trivial (level 0).  Cross-checked against iterated
    truth-table differences in the test suite.
    """
    best = 0
    for mono, c in f._terms.items():
        if not mono:
            continue
        v = (c & -c).bit_length() - 1
        best = max(best, len(mono) + f.modulus_log2 - 1 - v)
    return best


def substitute(
    f: PhasePolynomial, images: Sequence[Sequence[int]], new_nvars: int
) -> PhasePolynomial:
    """Compose f with the GF(2)-linear map x_i = XOR of images[i].

    The XOR of p bits has multilinear form sum over nonempty subsets T of
    (-2)^(|T|-1) * product(T), so a degree-d monomial expands into a
    product of such sums.  Branches whose coefficient valuation reaches m
    are pruned, which caps the expansion sharply for small m.
    """
    if len(images) != f.nvars:
        raise ValueError("need one image per variable")
    m = f.modulus_log2
    mod = 1 << m
    sorted_images = [tuple(sorted(set(img))) for img in images]
    for img in sorted_images:
        if any(v < 0 or v >= new_nvars for v in img):
            raise ValueError("image variable out of range")
    out: dict[Monomial, int] = {}

    def expand(factors: list[tuple[int, ...]], idx: int, acc: frozenset, coeff: int):
        if coeff % mod == 0:
            return
        if idx == len(factors):
            key = acc
            out[key] = (out.get(key, 0) + coeff) % mod
            return
        img = factors[idx]
        v = (coeff & -coeff).bit_length() - 1 if coeff else m
        # |T| - 1 extra powers of two per factor; deeper subsets vanish.
        max_size = min(len(img), m - v)
        for size in range(1, max_size + 1):
            unit = coeff if size % 2 == 1 else -coeff
            scaled = unit << (size - 1)
            for t in itertools.combinations(img, size):
                expand(factors, idx + 1, acc | frozenset(t), scaled)

    for mono, c in f._terms.items():
        expand([sorted_images[v] for v in sorted(mono)], 0, frozenset(), c)
    return PhasePolynomial(new_nvars, m, out)


# -- codespace preservation ---------------------------------------------------


@dataclass(frozen=True)
class PreservationResult:
    preserves: bool
    violating_copy: Optional[int] = None
    violating_row: Optional[int] = None

    def __bool__(self) -> bool:
        return self.preserves


def _kernel_images(code: CssCode, copies: int) -> tuple[list[tuple[int, ...]], int]:
    basis = code.x_domain_basis()
    kdim = len(basis)
    per_qubit = []
    for i in range(code.n):
        per_qubit.append(tuple(j for j, row in enumerate(basis) if (row >> i) & 1))
    images = []
    for c in range(copies):
        off = c * kdim
        images.extend(tuple(off + j for j in cols) for cols in per_qubit)
    return images, copies * kdim


def _infer_copies(f: PhasePolynomial, code: CssCode, copies: Optional[int]) -> int:
    if copies is None:
        if code.n == 0 or f.nvars % code.n:
            raise ValueError(
                f"cannot infer copies: {f.nvars} variables over blocks of {code.n}"
            )
        copies = f.nvars // code.n
    if f.nvars != copies * code.n:
        raise ValueError(
            f"polynomial has {f.nvars} variables, expected {copies}x{code.n}"
        )
    return copies


def preserves_codespace(
    f: PhasePolynomial, code: CssCode, copies: Optional[int] = None
) -> PreservationResult:
    """Symbolic check that the diagonal circuit fixes the codespace.

    For every X-stabilizer generator g (each row of Hx on each copy) the
    difference f(x XOR g) - f(x) must vanish identically on the codeword
    domain ker Hz; the domain restriction is a kernel-basis substitution,
    so the verdict is exact and never enumerates states.
    """
    copies = _infer_copies(f, code, copies)
    images, udim = _kernel_images(code, copies)
    for c in range(copies):
        shift = c * code.n
        for r in range(code.hx.rows):
            row = code.hx.bits[r]
            if row == 0:
                continue
            d = difference(f, row << shift)
            if d.is_zero():
                continue
            if not substitute(d, images, udim).is_zero():
                return PreservationResult(False, c, r)
    return PreservationResult(True)


def logical_action(
    f: PhasePolynomial, code: CssCode, copies: Optional[int] = None
) -> PhasePolynomial:
    """Reduced polynomial of the induced logical gate.

    Substitutes x = L a + G b per copy (L the canonical X-representative
    matrix, G the X-stabilizer row space) and verifies every b-dependent
    term cancels, which must happen when the circuit preserves the
    codespace.  Returns the polynomial over the k*copies logical variables.
    """
    copies = _infer_copies(f, code, copies)
    basis = code.logicals or canonical_logical_basis(code)
    l_rows = [rep.pauli.x for rep in basis.x_reps]
    g_rows = f2la.rref(code.hx).nonzero_rows()
    k, r = len(l_rows), len(g_rows)
    a_total = copies * k
    images = []
    for c in range(copies):
        for i in range(code.n):
            vars_a = tuple(c * k + j for j, row in enumerate(l_rows) if (row >> i) & 1)
            vars_b = tuple(
                a_total + c * r + j for j, row in enumerate(g_rows) if (row >> i) & 1
            )
            images.append(vars_a + vars_b)
    full = substitute(f, images, a_total + copies * r)
    reduced: dict[Monomial, int] = {}
    for mono, c in full._terms.items():
        if any(v >= a_total for v in mono):
            raise AssertionError(
                "stabilizer dependence failed to cancel; circuit does not "
                "preserve the codespace"
            )
        reduced[mono] = c
    return PhasePolynomial(a_total, f.modulus_log2, reduced)


# -- circuit text format -------------------------------------------------------
#
#   MOD m
#   PHASE c q        adds c * x_q
#   CZ a b           adds 2^(m-1) * x_a x_b
#   CCZ a b c        adds 2^(m-1) * x_a x_b x_c
#   CNZ q1 ... qt    adds 2^(m-1) * x_q1 ... x_qt
#
# Multi-copy circuits address qubit (copy, index) as copy*n + index.


def parse_circuit_text(text: str) -> PhasePolynomial:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("MOD"):
        raise ValueError("circuit file must start with a 'MOD m' header")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad circuit header {lines[0]!r}")
    m = int(head[1])
    if m < 1:
        raise ValueError("modulus exponent must be >= 1")
    gates: list[tuple[int, tuple[int, ...]]] = []
    for ln in lines[1:]:
        parts = ln.split()
        op, args = parts[0].upper(), parts[1:]
        if op == "PHASE":
            if len(args) != 2:
                raise ValueError(f"PHASE needs a coefficient and a qubit: {ln!r}")
            gates.append((int(args[0]), (int(args[1]),)))
        elif op in ("CZ", "CCZ", "CNZ"):
            qubits = tuple(int(a) for a in args)
            expected = {"CZ": 2, "CCZ": 3}.get(op)
            if expected is not None and len(qubits) != expected:
                raise ValueError(f"{op} needs {expected} qubits: {ln!r}")
            if len(qubits) < 1:
                raise ValueError(f"empty gate line {ln!r}")
            gates.append((controlled_z_coeff(m), qubits))
        else:
            raise ValueError(f"unknown circuit line {ln!r}")
    return poly_from_circuit(gates, m)


def format_circuit_text(f: PhasePolynomial, comment: Optional[str] = None) -> str:
    """Serialize a polynomial whose multi-variable terms are C^(j-1)Z shaped."""
    out = []
    if comment:
        for ln in comment.splitlines():
            out.append(f"# {ln}")
    out.append(f"MOD {f.modulus_log2}")
    cz = controlled_z_coeff(f.modulus_log2)
    for mono, c in f.terms():
        if len(mono) == 0:
            raise ValueError("constant phase terms are not representable")
        if len(mono) == 1:
            out.append(f"PHASE {c} {mono[0]}")
        else:
            if c != cz:
                raise ValueError(
                    f"multi-qubit term {mono} has coefficient {c}, not 2^(m-1)"
                )
            name = {2: "CZ", 3: "CCZ"}.get(len(mono), "CNZ")
            out.append(f"{name} " + " ".join(str(q) for q in mono))
    return "\n".join(out) + "\n"


# -- support calculus ----------------------------------------------------------

TRANSVERSAL = "transversal"
CONSTANT_DEPTH = "constant_depth"


@dataclass(frozen=True)
class CircuitSupportModel:
    """Declared support behaviour of a circuit under conjugation.

    ``spread_map`` (constant-depth only) sends a qubit set to the union of
    the supports its image may touch; it is supplied by the caller from the
    declared gate layout, never inferred.  The flags record the declared
    orientation/dimension behaviour and are not derived facts.
    """

    kind: str
    spread_c: int = 1
    orientation_preserving: bool = False
    dimension_preserving: bool = False
    spread_map: Optional[Callable[[frozenset[int]], Iterable[int]]] = None

    def __post_init__(self):
        if self.kind not in (TRANSVERSAL, CONSTANT_DEPTH):
            raise ValueError(f"unknown circuit kind {self.kind!r}")
        if self.kind == TRANSVERSAL and self.spread_c != 1:
            raise ValueError("transversal circuits cannot spread supports")

    def image(self, qubits: Iterable[int]) -> frozenset[int]:
        """Upper bound on supp(U P U^dagger) given supp(P) = qubits."""
        qubits = frozenset(qubits)
        if self.kind == TRANSVERSAL or self.spread_map is None:
            return qubits
        return qubits | frozenset(self.spread_map(qubits))


def transversal_model() -> CircuitSupportModel:
    return CircuitSupportModel(TRANSVERSAL)


def commutator_support_bound(
    p_image: Iterable[int], q_support: Iterable[int], model: CircuitSupportModel
) -> frozenset[int]:
    """Support bound of [U P U^dagger, Q] given supp bounds of both sides.

    The commutator only sees V = Q restricted to the image of P; a
    transversal circuit leaves V in place while a constant-depth circuit
    can spread it once more.
    """
    v = frozenset(p_image) & frozenset(q_support)
    if model.kind == TRANSVERSAL:
        return v
    return model.image(v)


@dataclass(frozen=True)
class CascadeStep:
    j: int
    support: tuple[int, ...]
    correctable: bool


@dataclass(frozen=True)
class CascadeReport:
    steps: tuple[CascadeStep, ...]
    concluded_level: Optional[int]

    @property
    def conclusion(self) -> str:
        if self.concluded_level is None:
            return "no correctable bound reached"
        return f"U in P_{self.concluded_level}"


def bk_cascade(
    code: CssCode,
    reps: Sequence[PauliOperator | LogicalRep],
    model: CircuitSupportModel,
) -> CascadeReport:
    """Iterated group-commutator support bounds (Bravyi-Koenig style).

    K_1 bounds U reps[0] U^dagger; each later K_j = [K_{j-1}, reps[j]] is
    bounded through the support calculus and tested for correctability.
    The first correctable bound at step j certifies the circuit's logical
    action lies in level j of the hierarchy.
    """
    if not reps:
        raise ValueError("need at least one representative")
    supports = [
        frozenset((r.pauli if isinstance(r, LogicalRep) else r).support) for r in reps
    ]
    steps = []
    current = model.image(supports[0])
    verdict = is_correctable(code, Region.of(current))
    steps.append(CascadeStep(1, tuple(sorted(current)), bool(verdict)))
    concluded = 1 if verdict else None
    j = 1
    while concluded is None and j < len(supports):
        j += 1
        current = commutator_support_bound(current, supports[j - 1], model)
        verdict = is_correctable(code, Region.of(current))
        steps.append(CascadeStep(j, tuple(sorted(current)), bool(verdict)))
        if verdict:
            concluded = j
    return CascadeReport(tuple(steps), concluded)


# -- transversal diagonal no-go harness ----------------------------------------


def kernel_mod_power_of_two(
    rows: Sequence[Sequence[int]], ncols: int, modulus_log2: int
) -> list[tuple[int, ...]]:
    """Generators of {c : M c = 0 mod 2^m} for an integer matrix M.

    Diagonalizes M over Z_{2^m} with unimodular row/column operations
    (pivots of minimal 2-adic valuation), tracking column operations so
    kernel generators of the diagonal system map back to original
    coordinates.  Returns one generator per diagonal entry 2^a with a >= 1
    (scaled by 2^(m-a)) plus one per free column.
    """
    m = modulus_log2
    mod = 1 << m
    mat = [[v % mod for v in row] for row in rows]
    nrows = len(mat)
    trans = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def val(x: int) -> int:
        return m if x == 0 else ((x & -x).bit_length() - 1)

    def col_op(dst: int, src: int, factor: int):
        for r in range(nrows):
            mat[r][dst] = (mat[r][dst] + factor * mat[r][src]) % mod
        for r in range(ncols):
            trans[r][dst] = (trans[r][dst] + factor * trans[r][src]) % mod

    def col_swap(a: int, b: int):
        for r in range(nrows):
            mat[r][a], mat[r][b] = mat[r][b], mat[r][a]
        for r in range(ncols):
            trans[r][a], trans[r][b] = trans[r][b], trans[r][a]

    diag_vals = []
    pos = 0
    limit = min(nrows, ncols)
    while pos < limit:
        best = None
        for i in range(pos, nrows):
            for j in range(pos, ncols):
                v = val(mat[i][j])
                if v < m and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        a, bi, bj = best
        if bi != pos:
            mat[pos], mat[bi] = mat[bi], mat[pos]
        if bj != pos:
            col_swap(pos, bj)
        unit = mat[pos][pos] >> a
        inv = pow(unit, -1, mod)
        mat[pos] = [(v * inv) % mod for v in mat[pos]]
        pivot = mat[pos][pos]  # equals 2^a
        for r in range(nrows):
            if r != pos and mat[r][pos]:
                factor = mat[r][pos] >> a
                for j in range(ncols):
                    mat[r][j] = (mat[r][j] - factor * mat[pos][j]) % mod
        for j in range(ncols):
            if j != pos and mat[pos][j]:
                col_op(j, pos, -(mat[pos][j] >> a))
        diag_vals.append(a)
        pos += 1
    gens = []
    for i, a in enumerate(diag_vals):
        if a >= 1:
            scale = 1 << (m - a)
            vec = tuple((trans[r][i] * scale) % mod for r in range(ncols))
            if any(vec):
                gens.append(vec)
    for j in range(pos, ncols):
        vec = tuple(trans[r][j] % mod for r in range(ncols))
        if any(vec):
            gens.append(vec)
    return gens


def _preservation_congruences(code: CssCode, modulus_log2: int) -> list[list[int]]:
    """Linear congruence rows over Z_{2^m} cutting out the preserving
    transversal phase patterns f(x) = sum c_i x_i."""
    m = modulus_log2
    basis = code.x_domain_basis()
    touching = [
        tuple(j for j, row in enumerate(basis) if (row >> i) & 1)
        for i in range(code.n)
    ]
    rows: list[list[int]] = []
    for r in range(code.hx.rows):
        g = code.hx.bits[r]
        if g == 0:
            continue
        support = f2la.indices_of(g)
        row = [0] * code.n
        for i in support:
            row[i] = 1
        rows.append(row)
        subsets: dict[tuple[int, ...], list[int]] = {}
        for i in support:
            cols = touching[i]
            for size in range(1, m):
                for t in itertools.combinations(cols, size):
                    subsets.setdefault(t, []).append(i)
        for t, members in sorted(subsets.items()):
            row = [0] * code.n
            coeff = 1 << len(t)
            for i in members:
                row[i] = coeff
            rows.append(row)
    return rows


@dataclass(frozen=True)
class NogoReport:
    modulus_log2: int
    generator_count: int
    sample_count: int
    levels: tuple[int, ...]
    max_level: int
    all_preserve: bool

    def to_json(self) -> dict:
        return {
            "modulus_log2": self.modulus_log2,
            "generator_count": self.generator_count,
            "sample_count": self.sample_count,
            "max_level": self.max_level,
            "all_preserve": self.all_preserve,
            "clifford_bound_respected": self.max_level <= 2,
        }


def transversal_nogo_harness(
    code: CssCode,
    modulus_log2: int,
    samples: int = 100,
    seed: int = 0,
    verify: bool = True,
) -> NogoReport:
    """Survey every codespace-preserving transversal diagonal family.

    Solves the preservation congruences for the coefficient vector of
    f(x) = sum c_i x_i over Z_{2^m}, then extracts the logical action of
    each solution-module generator plus `samples` random combinations and
    reports the maximum hierarchy level observed.  For hypergraph product
    codes with distance >= 3 the maximum must come out <= 2 (Clifford).
    """
    rows = _preservation_congruences(code, modulus_log2)
    gens = kernel_mod_power_of_two(rows, code.n, modulus_log2)
    rng = random.Random(seed)
    mod = 1 << modulus_log2
    solutions: list[tuple[int, ...]] = list(gens)
    for _ in range(samples):
        vec = [0] * code.n
        for g in gens:
            lam = rng.randrange(mod)
            for i, v in enumerate(g):
                vec[i] = (vec[i] + lam * v) % mod
        solutions.append(tuple(vec))
    levels = []
    all_preserve = True
    for sol in solutions:
        f = PhasePolynomial(
            code.n, modulus_log2, {frozenset((i,)): c for i, c in enumerate(sol) if c}
        )
        if verify:
            ok = preserves_codespace(f, code, copies=1)
            if not ok:
                all_preserve = False
                continue
        levels.append(hierarchy_level(logical_action(f, code, copies=1)))
    return NogoReport(
        modulus_log2=modulus_log2,
        generator_count=len(gens),
        sample_count=samples,
        levels=tuple(levels),
        max_level=max(levels, default=0),
        all_preserve=all_preserve,
    )

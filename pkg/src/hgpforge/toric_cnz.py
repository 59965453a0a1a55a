"""Toric-code C^(t-1)Z circuits on t code copies.

The t-dimensional toric code is the product of t circulant repetition
seeds, with qubits on level 1 so Z logicals are strings and X logicals are
(t-1)-dimensional planes.  Placing one physical C^(t-1)Z per monotone
corner-to-corner path of every lattice cell (copy i acts on the path's
i-th step) yields a constant-depth circuit whose logical action is the
C^(t-1)Z coupling the copies' plane classes, achieving hierarchy level t.

The per-path qubit selection is a convention; its correctness is verified
a posteriori through the symbolic invariance and logical-action checks
rather than assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from . import classical, css, diagonal, product
from .css import CssCode, canonical_logical_basis
from .diagonal import PhasePolynomial, PreservationResult, logical_action, preserves_codespace
from .product import ProductComplex

QUBIT_LEVEL = 1


def build_toric(t: int, length: int) -> CssCode:
    """Toric code from t circulant repetition seeds of the given length."""
    if t < 2:
        raise ValueError("need a product dimension t >= 2")
    if length < 2:
        raise ValueError("need lattice length >= 2")
    return _assemble(t, length)


def _assemble(t: int, length: int) -> CssCode:
    seeds = [classical.cyclic_repetition_check(length) for _ in range(t)]
    pc = product.build_product(seeds)
    return css.assemble_css(pc, QUBIT_LEVEL)


def _edge_qubit(pc: ProductComplex, cell, direction: int, stepped) -> int:
    """Flat index of the cell's edge along `direction`, offset by the
    already-stepped directions (periodic).

    The circulant seed makes edge c incident to vertices c-1 and c, so the
    edge leaving vertex v in its direction carries coordinate v+1.
    """
    length = pc.factors[0].n
    mu = pc.tables[QUBIT_LEVEL].index_of((direction,))
    coords = []
    for d in range(pc.t):
        if d == direction:
            coords.append((cell[d] + 1) % length)
        else:
            coords.append((cell[d] + (1 if d in stepped else 0)) % length)
    return product.flat_index(pc, QUBIT_LEVEL, mu, coords)


def build_cnz_circuit(t: int, length: int, pc: Optional[ProductComplex] = None) -> PhasePolynomial:
    """Phase polynomial of the physical C^(t-1)Z layer over t copies.

    For every lattice cell and every ordering sigma of the t step
    directions, one monomial couples copy i's qubit on the sigma(i)-th
    step edge.  Coefficients live mod 2, so coinciding monomials cancel.
    """
    if t < 2:
        raise ValueError("need a product dimension t >= 2")
    if length < 1:
        raise ValueError("need lattice length >= 1")
    if pc is None:
        seeds = [classical.cyclic_repetition_check(length) for _ in range(t)]
        pc = product.build_product(seeds)
    n = pc.dim(QUBIT_LEVEL)
    gates = []
    for cell in itertools.product(range(length), repeat=t):
        for sigma in itertools.permutations(range(t)):
            qubits = []
            stepped: set[int] = set()
            for copy, direction in enumerate(sigma):
                qubits.append(copy * n + _edge_qubit(pc, cell, direction, stepped))
                stepped.add(direction)
            gates.append((1, tuple(qubits)))
    return diagonal.poly_from_circuit(gates, 1, nvars=t * n)


@dataclass(frozen=True)
class ToricBundle:
    t: int
    length: int
    copies: int
    code: CssCode
    circuit: PhasePolynomial


def build_bundle(t: int, length: int) -> ToricBundle:
    code = build_toric(t, length)
    circuit = build_cnz_circuit(t, length, pc=code.complex)
    return ToricBundle(t, length, t, code, circuit)


def verify_invariance(bundle: ToricBundle) -> PreservationResult:
    """True iff the circuit preserves the codespace of all copies."""
    return preserves_codespace(bundle.circuit, bundle.code, copies=bundle.copies)


def expected_logical_monomials(bundle: ToricBundle) -> set[frozenset[int]]:
    """Degree-t logical monomials whose canonical planes meet transversally.

    With one logical class per sector and fixed direction, t planes (one
    per copy) intersect pairwise down to a point exactly when their fixed
    directions exhaust all t directions, i.e. the class tuple is a
    permutation.
    """
    basis = canonical_logical_basis(bundle.code)
    k = basis.k
    dir_of = {}
    for idx, rep in enumerate(basis.x_reps):
        if len(rep.fixed_dirs) != 1:
            raise AssertionError("toric X representative should fix one direction")
        dir_of[idx] = rep.fixed_dirs[0]
    out = set()
    for combo in itertools.permutations(range(k), bundle.copies):
        if len({dir_of[c] for c in combo}) == bundle.copies:
            out.add(frozenset(copy * k + c for copy, c in enumerate(combo)))
    return out


@dataclass(frozen=True)
class CnzVerification:
    verified: bool
    logical_poly: PhasePolynomial
    level: int
    expected: tuple[tuple[int, ...], ...]
    missing: tuple[tuple[int, ...], ...]

    def __bool__(self) -> bool:
        return self.verified


def verify_logical_cnz(bundle: ToricBundle) -> CnzVerification:
    """Extract the logical polynomial and check the C^(t-1)Z pattern.

    Requires every expected transversal-intersection monomial to appear
    with coefficient 1 mod 2 and the logical level to reach t.
    """
    poly = logical_action(bundle.circuit, bundle.code, copies=bundle.copies)
    expected = expected_logical_monomials(bundle)
    missing = [mono for mono in expected if poly.coefficient(mono) != 1]
    level = diagonal.hierarchy_level(poly)
    verified = bool(expected) and not missing and level == bundle.t
    return CnzVerification(
        verified,
        poly,
        level,
        tuple(sorted(tuple(sorted(m)) for m in expected)),
        tuple(sorted(tuple(sorted(m)) for m in missing)),
    )

"""Cleaning-lemma correctability of qubit regions.

A region is correctable exactly when it supports no nontrivial logical
operator; in that case every logical can be deformed by stabilizers to act
trivially on the region.  Both branches are decided by GF(2) rank
computations on the region-restricted check matrices, and the negative
branch always comes with an explicit witness logical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from . import f2la
from .css import CssCode, PauliOperator, pauli_mul
from .f2la import BinaryMatrix

# Regions up to this size get an exhaustive minimum-weight witness search;
# larger regions fall back to the first offending kernel basis vector.
_WITNESS_ENUM_MAX = 20


@dataclass(frozen=True)
class Region:
    qubits: frozenset[int]

    @classmethod
    def of(cls, qubits: Iterable[int]) -> "Region":
        return cls(frozenset(qubits))

    def __len__(self) -> int:
        return len(self.qubits)

    def mask(self) -> int:
        return f2la.vector_from_indices(self.qubits)


@dataclass(frozen=True)
class CorrectabilityVerdict:
    correctable: bool
    witness: Optional[PauliOperator] = None
    witness_type: Optional[str] = None

    def __bool__(self) -> bool:
        return self.correctable

    def to_json(self) -> dict:
        out: dict = {"correctable": self.correctable}
        if self.witness is not None:
            out["witness"] = sorted(self.witness.support)
            out["witness_type"] = self.witness_type
        return out


def is_correctable(code: CssCode, region: Region | Iterable[int]) -> CorrectabilityVerdict:
    """Cleaning-lemma dichotomy for a qubit region.

    Looks for an X-type witness (v supported on the region with Hz v = 0
    and v outside the X-stabilizer row space) and symmetrically for Z.  The
    returned witness is the lowest-weight one found, ties broken by
    lexicographic support, then X before Z.
    """
    region = region if isinstance(region, Region) else Region.of(region)
    if any(q < 0 or q >= code.n for q in region.qubits):
        raise ValueError("region index out of range")
    if not region.qubits:
        return CorrectabilityVerdict(True)
    x_wit = _witness(code.hz, code.hx_space, region)
    z_wit = _witness(code.hx, code.hz_space, region)
    if x_wit is None and z_wit is None:
        return CorrectabilityVerdict(True)
    best, best_type = x_wit, "X"
    if z_wit is not None and (
        best is None
        or z_wit.bit_count() < best.bit_count()
        or (z_wit.bit_count() == best.bit_count() and _lex_key(z_wit) < _lex_key(best))
    ):
        best, best_type = z_wit, "Z"
    if best_type == "X":
        op = PauliOperator(code.n, x=best)
    else:
        op = PauliOperator(code.n, z=best)
    return CorrectabilityVerdict(False, op, best_type)


def _lex_key(v: int) -> list[int]:
    return sorted(f2la.indices_of(v))


def _witness(h_kernel: BinaryMatrix, stab_space: f2la.RowSpace, region: Region) -> Optional[int]:
    """Minimum-weight v inside region with h_kernel v = 0, v not in the
    stabilizer row space."""
    cols = sorted(region.qubits)
    restricted = _restrict_columns(h_kernel, cols)
    inside = f2la.kernel_basis(restricted)
    lifted = [_lift(v, cols) for v in inside.bits]
    offending = [v for v in lifted if not stab_space.contains(v)]
    if not offending:
        return None
    if len(cols) > _WITNESS_ENUM_MAX:
        return offending[0]
    for w in range(1, len(cols) + 1):
        for combo in itertools.combinations(cols, w):
            v = f2la.vector_from_indices(combo)
            if f2la.mat_vec(h_kernel, v) == 0 and not stab_space.contains(v):
                return v
    raise AssertionError("witness existed in the kernel scan but not in enumeration")


def _restrict_columns(m: BinaryMatrix, cols: list[int]) -> BinaryMatrix:
    out = []
    for word in m.bits:
        w = 0
        for j, c in enumerate(cols):
            if (word >> c) & 1:
                w |= 1 << j
        out.append(w)
    return BinaryMatrix(m.rows, len(cols), out)


def _lift(v: int, cols: list[int]) -> int:
    out = 0
    for j, c in enumerate(cols):
        if (v >> j) & 1:
            out |= 1 << c
    return out


def clean_logical(code: CssCode, op: PauliOperator, region: Region | Iterable[int]) -> PauliOperator:
    """Multiply op by a stabilizer so the product avoids the region.

    Solves separately for an X-stabilizer combination matching the X part
    on the region and a Z-stabilizer combination matching the Z part;
    both solves succeed whenever the region is correctable.
    """
    region = region if isinstance(region, Region) else Region.of(region)
    mask = region.mask()
    result = op
    if op.x & mask:
        stab = _match_on_region(code.hx, op.x, sorted(region.qubits))
        if stab is None:
            raise ValueError("region is not cleanable for the X part")
        result = pauli_mul(result, PauliOperator(code.n, x=stab))
    if op.z & mask:
        stab = _match_on_region(code.hz, op.z, sorted(region.qubits))
        if stab is None:
            raise ValueError("region is not cleanable for the Z part")
        result = pauli_mul(result, PauliOperator(code.n, z=stab))
    if (result.x | result.z) & mask:
        raise AssertionError("cleaned operator still touches the region")
    return result


def _match_on_region(h: BinaryMatrix, part: int, cols: list[int]) -> Optional[int]:
    target = 0
    for j, c in enumerate(cols):
        if (part >> c) & 1:
            target |= 1 << j
    restricted = _restrict_columns(h, cols)
    y = f2la.solve(f2la.transpose(restricted), target)
    if y is None:
        return None
    out = 0
    for r in f2la.indices_of(y):
        out ^= h.bits[r]
    return out


def union_lemma_check(code: CssCode, r1: Region | Iterable[int], r2: Region | Iterable[int]) -> bool:
    """True iff no provided stabilizer generator meets both regions.

    Checked against the given generator rows only; searching over
    regenerated stabilizer bases is out of scope.
    """
    r1 = r1 if isinstance(r1, Region) else Region.of(r1)
    r2 = r2 if isinstance(r2, Region) else Region.of(r2)
    if r1.qubits & r2.qubits:
        raise ValueError("regions overlap")
    m1, m2 = r1.mask(), r2.mask()
    for mat in (code.hx, code.hz):
        for word in mat.bits:
            if word & m1 and word & m2:
                return False
    return True

"""Command-line surface for building and checking product codes.

Every command prints one canonical JSON report envelope to stdout:

    {"command": ..., "inputs": {path: sha256}, "results": ..., "status": ...}

Exit codes: 0 ok / property holds, 1 property violated (not correctable,
not codespace-preserving, hierarchy bound broken), 2 usage or parse error.
Output is byte-identical for identical inputs; randomized searches take a
--seed (default 0).  --jobs (or HGPFORGE_JOBS) sets the worker count for
parallelizable searches without affecting results.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from typing import Optional

from . import correctability, css, diagonal, f2la, product, toric_cnz

OK, VIOLATED, USAGE_ERROR = 0, 1, 2

BUNDLE_FORMAT = "hgpforge-bundle-v1"


class CliError(Exception):
    pass


def _digest(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _emit(command: str, inputs: dict, results: dict, status: str) -> None:
    report = {
        "command": command,
        "inputs": inputs,
        "results": results,
        "status": status,
    }
    sys.stdout.write(json.dumps(report, sort_keys=True) + "\n")


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _sparse_rows(m: f2la.BinaryMatrix) -> list[list[int]]:
    return [f2la.indices_of(m.bits[r]) for r in range(m.rows)]


def _matrix_from_sparse(rows: list[list[int]], cols: int) -> f2la.BinaryMatrix:
    return f2la.BinaryMatrix(
        len(rows), cols, [f2la.vector_from_indices(r) for r in rows]
    )


def write_bundle(path: str, code: css.CssCode, sources: Optional[list[str]] = None) -> dict:
    """Serialize a product CSS code; factor matrices are embedded so the
    bundle is self-contained."""
    pc = code.complex
    if pc is None or code.level is None:
        raise CliError("only product-built codes can be bundled")
    table = pc.tables[code.level]
    payload = {
        "format": BUNDLE_FORMAT,
        "t": pc.t,
        "level": code.level,
        "factors": [
            {
                "rows": fac.a.rows,
                "cols": fac.a.cols,
                "data": fac.a.to_strings(),
                "source": (sources[i] if sources and i < len(sources) else None),
            }
            for i, fac in enumerate(pc.factors)
        ],
        "sectors": [
            {"J": list(s.J), "shape": list(s.shape), "offset": s.offset}
            for s in table.sectors
        ],
        "n": code.n,
        "Hx": _sparse_rows(code.hx),
        "Hz": _sparse_rows(code.hz),
    }
    with open(path, "w", encoding="ascii") as fh:
        json.dump(payload, fh, sort_keys=True)
        fh.write("\n")
    return payload


def read_bundle(path: str) -> css.CssCode:
    """Rebuild the code from a bundle, verifying the stored checks match."""
    try:
        payload = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise CliError(f"bad bundle file {path}: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("format") != BUNDLE_FORMAT:
        raise CliError(f"{path} is not a {BUNDLE_FORMAT} file")
    try:
        factors = [
            f2la.BinaryMatrix.from_rows(entry["data"])
            if entry["data"]
            else f2la.BinaryMatrix.zeros(entry["rows"], entry["cols"])
            for entry in payload["factors"]
        ]
        pc = product.build_product(factors)
        code = css.assemble_css(pc, payload["level"])
        stored_hx, stored_hz = payload["Hx"], payload["Hz"]
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"bad bundle file {path}: {exc}") from exc
    if _sparse_rows(code.hx) != stored_hx or _sparse_rows(code.hz) != stored_hz:
        raise CliError(f"bundle {path} is inconsistent with its factors")
    return code


def _parse_region(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise CliError(f"bad region file: {exc}") from exc


# -- commands ----------------------------------------------------------------


def cmd_build(args) -> int:
    seeds = [f2la.parse_matrix_text(_read_text(p)) for p in args.seeds]
    pc = product.build_product(seeds)
    if not (1 <= args.level <= pc.t - 1):
        raise CliError(f"level {args.level} invalid: need 1..{pc.t - 1} for t={pc.t}")
    code = css.assemble_css(pc, args.level)
    params = css.kunneth_parameters(pc, args.level)
    write_bundle(args.output, code, sources=args.seeds)
    results = {
        "n": params.n,
        "k": params.k,
        "kunneth_d_x": params.d_x,
        "kunneth_d_z": params.d_z,
        "level": args.level,
        "t": pc.t,
        "bundle": args.output,
    }
    _emit("build", {p: _digest(p) for p in args.seeds}, results, "ok")
    return OK


def cmd_logicals(args) -> int:
    code = read_bundle(args.bundle)
    basis = css.canonical_logical_basis(code)
    entries = []
    for rep in basis.x_reps + basis.z_reps:
        entries.append(
            {
                "type": rep.kind,
                "sector": rep.sector,
                "fixed_dirs": list(rep.fixed_dirs),
                "fixed_values": list(rep.fixed_values),
                "support": sorted(rep.pauli.support),
            }
        )
    results = {
        "k": basis.k,
        "pairing_identity": basis.pairing == f2la.BinaryMatrix.identity(basis.k),
        "logicals": entries,
    }
    _emit("logicals", {args.bundle: _digest(args.bundle)}, results, "ok")
    return OK


def cmd_distance(args) -> int:
    code = read_bundle(args.bundle)
    result = css.brute_distance(code, max_weight=args.max_weight, jobs=args.jobs)
    results = {
        "n": code.n,
        "k": code.k,
        "d_x": result.d_x,
        "d_z": result.d_z,
        "d": result.d,
    }
    _emit("distance", {args.bundle: _digest(args.bundle)}, results, "ok")
    return OK


def cmd_correctable(args) -> int:
    code = read_bundle(args.bundle)
    region = _parse_region(_read_text(args.region))
    if any(q < 0 or q >= code.n for q in region):
        raise CliError("region index out of range for this code")
    verdict = correctability.is_correctable(code, region)
    inputs = {args.bundle: _digest(args.bundle), args.region: _digest(args.region)}
    _emit(
        "correctable",
        inputs,
        verdict.to_json(),
        "ok" if verdict.correctable else "violated",
    )
    return OK if verdict.correctable else VIOLATED


def cmd_verify_diagonal(args) -> int:
    code = read_bundle(args.bundle)
    poly = diagonal.parse_circuit_text(_read_text(args.circuit))
    expected = args.copies * code.n
    if poly.nvars > expected:
        raise CliError(
            f"circuit touches variable {poly.nvars - 1} but {args.copies} "
            f"copies give only {expected} qubits"
        )
    poly = diagonal.PhasePolynomial(
        expected, poly.modulus_log2, {frozenset(m): c for m, c in poly.terms()}
    )
    res = diagonal.preserves_codespace(poly, code, copies=args.copies)
    results: dict = {"preserves": res.preserves}
    if res.preserves:
        action = diagonal.logical_action(poly, code, copies=args.copies)
        results["logical_terms"] = [
            {"monomial": list(mono), "coeff": c} for mono, c in action.terms()
        ]
        results["level"] = diagonal.hierarchy_level(action)
    else:
        results["violating_copy"] = res.violating_copy
        results["violating_row"] = res.violating_row
    inputs = {args.bundle: _digest(args.bundle), args.circuit: _digest(args.circuit)}
    _emit("verify-diagonal", inputs, results, "ok" if res.preserves else "violated")
    return OK if res.preserves else VIOLATED


def cmd_nogo_transversal(args) -> int:
    code = read_bundle(args.bundle)
    report = diagonal.transversal_nogo_harness(
        code, args.mod, samples=args.samples, seed=args.seed
    )
    ok = report.max_level <= 2
    _emit(
        "nogo-transversal",
        {args.bundle: _digest(args.bundle)},
        report.to_json(),
        "ok" if ok else "violated",
    )
    return OK if ok else VIOLATED


def cmd_toric_cnz(args) -> int:
    bundle = toric_cnz.build_bundle(args.t, args.length)
    with open(args.output, "w", encoding="ascii") as fh:
        fh.write(
            diagonal.format_circuit_text(
                bundle.circuit,
                comment=f"C^{args.t - 1}Z layer, {args.t} copies of n={bundle.code.n}",
            )
        )
    inv = toric_cnz.verify_invariance(bundle)
    results: dict = {
        "t": bundle.t,
        "L": bundle.length,
        "copies": bundle.copies,
        "n_per_block": bundle.code.n,
        "k_per_block": bundle.code.k,
        "invariance": inv.preserves,
        "circuit": args.output,
    }
    verified = False
    if inv.preserves:
        ver = toric_cnz.verify_logical_cnz(bundle)
        verified = ver.verified
        results["logical_level"] = ver.level
        results["logical_cnz_verified"] = ver.verified
        results["logical_terms"] = [
            {"monomial": list(m), "coeff": c} for m, c in ver.logical_poly.terms()
        ]
    if args.report:
        with open(args.report, "w", encoding="ascii") as fh:
            json.dump(results, fh, sort_keys=True)
            fh.write("\n")
    _emit("toric-cnz", {}, results, "ok" if verified else "violated")
    return OK if verified else VIOLATED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hgpforge",
        description="hypergraph product code construction and verification",
    )
    default_jobs = int(os.environ.get("HGPFORGE_JOBS", "1"))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a product code bundle from seed matrices")
    p.add_argument("seeds", nargs="+", help="seed parity-check matrix files")
    p.add_argument("--level", type=int, required=True, help="qubit level l (1..t-1)")
    p.add_argument("-o", "--output", required=True, help="bundle JSON path")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("logicals", help="canonical logical basis of a bundle")
    p.add_argument("bundle")
    p.set_defaults(func=cmd_logicals)

    p = sub.add_parser("distance", help="brute-force code distance")
    p.add_argument("bundle")
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--jobs", type=int, default=default_jobs)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("correctable", help="cleaning-lemma verdict for a region")
    p.add_argument("bundle")
    p.add_argument("region", help="file of whitespace-separated qubit indices")
    p.set_defaults(func=cmd_correctable)

    p = sub.add_parser(
        "verify-diagonal", help="check a diagonal circuit preserves the codespace"
    )
    p.add_argument("bundle")
    p.add_argument("circuit", help="circuit text file")
    p.add_argument("--copies", type=int, default=1)
    p.set_defaults(func=cmd_verify_diagonal)

    p = sub.add_parser(
        "nogo-transversal",
        help="survey transversal diagonal phase patterns for the hierarchy bound",
    )
    p.add_argument("bundle")
    p.add_argument("--mod", type=int, required=True, help="modulus exponent m")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_nogo_transversal)

    p = sub.add_parser(
        "toric-cnz", help="build and verify the toric C^(t-1)Z circuit"
    )
    p.add_argument("--t", type=int, required=True, help="product dimension (copies)")
    p.add_argument("--L", dest="length", type=int, required=True, help="lattice size")
    p.add_argument("-o", "--output", required=True, help="circuit text output path")
    p.add_argument("--report", default=None, help="verification report JSON path")
    p.set_defaults(func=cmd_toric_cnz)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else OK
    try:
        return args.func(args)
    except (CliError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        _emit(args.command, {}, {"error": str(exc)}, "error")
        return USAGE_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command-line interface: spectra, wavefunctions, solver comparisons, tables.

Exit status: 0 on success (a state that is not bound is reported in-band),
2 on usage errors, 3 on numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import replace

import numpy as np

from . import __version__
from .core import (PotentialSpec, QuantumNumbers, SpecError, parse_key_values,
                   spec_from_mapping, validate_spec)
from .molecules import (MOLECULES, MoleculeDatabase, quantum_numbers_to_label,
                        state_label_to_quantum_numbers, table_spec)
from .oracle import CentrifugalMode, OracleConfig, OracleError, solve_state
from .spectrum import (critical_coupling, energy, potential_curvature, potential_minimum,
                       potential_value, printed_curvature, printed_minimum_value)
from .tables import ReportRow, attach_oracle, fill_oracle_diffs, reproduce
from .wavefunction import QuadratureError, count_nodes, radial_wavefunction, sign_changes

EXIT_USAGE = 2
EXIT_NUMERIC = 3

ROW_COLUMNS = ["state_label", "n", "l", "alpha", "column_inv_b", "e_closed_form", "e_paper",
               "e_oracle_approx", "e_oracle_exact", "abs_diff_vs_paper", "flag"]


class UsageError(Exception):
    pass


def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".15g")
    return str(x)


def _json_value(x):
    if isinstance(x, (float, np.floating)):
        x = float(format(float(x), ".15g"))
        return x if math.isfinite(x) else None
    if isinstance(x, np.integer):
        return int(x)
    return x


def emit(out, fmt_name: str, meta: dict, columns: list[str], rows: list[list],
         summary: list[str] = ()):
    """Write one table with a metadata header in csv or json."""
    if fmt_name == "json":
        payload = {
            "version": f"manning_rosen {__version__}",
            "meta": {k: _json_value(v) for k, v in meta.items()},
            "columns": columns,
            "rows": [[_json_value(v) for v in row] for row in rows],
            "summary": list(summary),
        }
        json.dump(payload, out, indent=1)
        out.write("\n")
        return
    out.write(f"# manning_rosen {__version__}\n")
    for k, v in meta.items():
        out.write(f"# {k} = {fmt(v)}\n")
    out.write(",".join(columns) + "\n")
    for row in rows:
        out.write(",".join(fmt(v) for v in row) + "\n")
    for line in summary:
        out.write(f"# {line}\n")


# -- argument handling -------------------------------------------------------

def _common(p: argparse.ArgumentParser):
    g = p.add_argument_group("global options")
    g.add_argument("--format", choices=("csv", "json"), default="csv")
    g.add_argument("--config", help="key = value file with A, alpha, inv_b, mu/mu_amu, units")
    g.add_argument("--units", choices=("atomic", "ev_angstrom"))
    g.add_argument("--molecules", help="key = value file of name = reduced mass (amu)")


def _spec_args(p: argparse.ArgumentParser):
    p.add_argument("--A", type=float, dest="A")
    p.add_argument("--alpha", type=float)
    p.add_argument("--inv-b", type=float, dest="inv_b", help="1/b in inverse length units")
    p.add_argument("--mu", type=float, help="reduced mass (amu in ev_angstrom units)")
    p.add_argument("--molecule", help="use a tabulated molecule (A = 2/column, b = 0.01/column A)")
    p.add_argument("--column", type=float, help="tabulated 1/b column value for --molecule")


def _state_args(p: argparse.ArgumentParser):
    p.add_argument("--state", help="spectroscopic label such as 2p or 6g")
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)


def _database(args) -> MoleculeDatabase:
    if getattr(args, "molecules", None):
        return MoleculeDatabase.load(args.molecules)
    return MOLECULES


def resolve_spec(args) -> PotentialSpec:
    if args.molecule:
        if args.column is None:
            raise UsageError("--molecule needs --column")
        if args.units == "atomic":
            raise UsageError("--molecule works in ev_angstrom units")
        alpha = args.alpha if args.alpha is not None else 0.0
        spec = table_spec(args.molecule, args.column, alpha, _database(args))
        if args.A is not None:
            spec = replace(spec, A=args.A)
        return validate_spec(spec)
    kv: dict[str, str] = {}
    if args.config:
        try:
            with open(args.config) as fh:
                kv.update(parse_key_values(fh.read()))
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}") from None
    for key, val in (("A", args.A), ("alpha", args.alpha), ("inv_b", args.inv_b)):
        if val is not None:
            kv[key] = repr(val)
    if args.units:
        kv["units"] = args.units
    if args.mu is not None:
        kv.pop("mu", None)
        kv.pop("mu_amu", None)
        kv["mu_amu" if kv.get("units") == "ev_angstrom" else "mu"] = repr(args.mu)
    return spec_from_mapping(kv)


def resolve_state(args) -> QuantumNumbers:
    if args.state:
        if args.n is not None or args.l is not None:
            raise UsageError("give either --state or --n/--l, not both")
        return state_label_to_quantum_numbers(args.state)
    if args.n is None or args.l is None:
        raise UsageError("a state is required: --state LABEL or --n N --l L")
    return QuantumNumbers(args.n, args.l)


def _spec_meta(spec: PotentialSpec) -> dict:
    return {"A": spec.A, "alpha": spec.alpha, "b": spec.b, "mu": spec.mu,
            "units": spec.units.name, "energy_unit": spec.units.energy_unit,
            "length_unit": spec.units.length_unit}


def _label(q: QuantumNumbers) -> str:
    try:
        return quantum_numbers_to_label(q)
    except SpecError:
        return f"n{q.n}l{q.l}"


def _row_for(spec: PotentialSpec, q: QuantumNumbers, column=None) -> ReportRow:
    res = energy(spec, q)
    return ReportRow(_label(q), q.n, q.l, spec.alpha, column,
                     res.energy if res.is_bound else None,
                     flag="ok" if res.is_bound else "not-bound")


def _row_values(row: ReportRow, columns: list[str]) -> list:
    d = row.as_dict()
    return [d.get(c) for c in columns]


# -- subcommands -------------------------------------------------------------

def cmd_energy(args, out):
    spec = resolve_spec(args)
    q = resolve_state(args)
    row = _row_for(spec, q, args.column if args.molecule else 1.0 / spec.b)
    res = energy(spec, q)
    meta = _spec_meta(spec)
    if res.is_bound:
        meta.update(epsilon=res.bound.epsilon, Lambda=res.bound.lambda_cap,
                    norm=res.bound.norm)
    emit(out, args.format, meta, ROW_COLUMNS, [_row_values(row, ROW_COLUMNS)])
    return row


def cmd_critical_coupling(args, out):
    alpha = args.alpha if args.alpha is not None else 0.0
    q = resolve_state(args)
    ac = critical_coupling(alpha, q)
    emit(out, args.format, {"alpha": alpha}, ["state_label", "n", "l", "alpha", "A_c"],
         [[_label(q), q.n, q.l, alpha, ac]])
    return ac


def cmd_table(args, out):
    report = reproduce(args.which, _database(args))
    columns = list(ROW_COLUMNS)
    if args.which == 1:
        columns += ["e_paper_ls"]
    else:
        columns = ["molecule"] + columns + ["rel_diff_vs_paper", "ratio_vs_paper"]
    if args.oracle:
        attach_oracle(report, _oracle_config(args), jobs=args.jobs, db=_database(args))
        columns += ["approx_minus_closed", "exact_minus_approx"]
    emit(out, args.format, {"table": args.which}, columns,
         [_row_values(r, columns) for r in report.rows], report.summary_lines())
    return report


def cmd_wavefunction(args, out):
    spec = resolve_spec(args)
    q = resolve_state(args)
    res = energy(spec, q)
    if not res.is_bound:
        emit(out, args.format, {**_spec_meta(spec), "state": _label(q), "flag": "not-bound"},
             ["r", "R", "R2"], [])
        return None
    w = radial_wavefunction(spec, q)
    r_max = args.rmax if args.rmax is not None else 60.0 * spec.b
    r, R = w.sample(r_max, args.samples)
    nodes = count_nodes(w, r_max)
    meta = {**_spec_meta(spec), "state": _label(q), "n": q.n, "l": q.l,
            "energy": res.bound.energy, "epsilon": res.bound.epsilon,
            "Lambda": res.bound.lambda_cap, "norm": w.norm, "nodes": nodes,
            "emitted_sign_changes": sign_changes(R[1:-1])}
    emit(out, args.format, meta, ["r", "R", "R2"], [[a, b, b * b] for a, b in zip(r, R)])
    return r, R


def _oracle_config(args) -> OracleConfig:
    return OracleConfig(r_max=args.rmax, grid_points=args.grid, refine_levels=args.refine,
                        max_error=args.max_error)


def cmd_compare(args, out):
    spec = resolve_spec(args)
    q = resolve_state(args)
    row = _row_for(spec, q, args.column if args.molecule else 1.0 / spec.b)
    cfg = _oracle_config(args)
    meta = _spec_meta(spec)
    for mode in CentrifugalMode:
        try:
            lv = solve_state(spec, q, replace(cfg, centrifugal_mode=mode))
        except OracleError as exc:
            if getattr(exc, "estimate", None) is not None:
                raise
            meta[f"{mode.value}_status"] = str(exc)
            continue
        meta[f"{mode.value}_grid_error_estimate"] = lv.grid_error_estimate
        if mode is CentrifugalMode.EXACT:
            row.e_oracle_exact = lv.energy
        else:
            row.e_oracle_approx = lv.energy
    fill_oracle_diffs(row)
    columns = ROW_COLUMNS + ["approx_minus_closed", "exact_minus_approx"]
    emit(out, args.format, meta, columns, [_row_values(row, columns)])
    return row


def cmd_potential(args, out):
    spec = resolve_spec(args)
    r_max = args.rmax if args.rmax is not None else 20.0 * spec.b
    r = np.linspace(r_max / args.samples, r_max, args.samples)
    v = potential_value(spec, r)
    summary = []
    m = potential_minimum(spec)
    if m is None:
        summary.append("no interior minimum")
    else:
        r0, v0 = m
        curv = potential_curvature(spec)
        printed = printed_curvature(spec)
        summary += [f"r0 = {fmt(r0)}", f"v_min = {fmt(v0)}",
                    f"v_min_printed_form = {fmt(printed_minimum_value(spec))}",
                    f"curvature = {fmt(curv)}",
                    f"curvature_printed_form = {fmt(printed)}",
                    f"curvature_ratio_printed_over_numeric = {fmt(printed / curv)}"]
    emit(out, args.format, _spec_meta(spec), ["r", "V"], [[a, b] for a, b in zip(r, v)],
         summary)
    return summary


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="manning-rosen", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("energy", help="closed-form level energy")
    _common(p)
    _spec_args(p)
    _state_args(p)
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("critical-coupling", help="coupling A at which a level unbinds")
    _common(p)
    _state_args(p)
    p.add_argument("--alpha", type=float)
    p.set_defaults(func=cmd_critical_coupling)

    p = sub.add_parser("table", help="reproduce a published eigenvalue table")
    _common(p)
    p.add_argument("--which", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--oracle", action="store_true", help="also run the finite-difference solver")
    p.add_argument("--jobs", type=int, default=1)
    _grid_args(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("wavefunction", help="sample the normalized radial wavefunction")
    _common(p)
    _spec_args(p)
    _state_args(p)
    p.add_argument("--samples", type=int, default=4000)
    p.add_argument("--rmax", type=float, help="default 60 b")
    p.set_defaults(func=cmd_wavefunction)

    p = sub.add_parser("compare", help="closed form against the finite-difference solver")
    _common(p)
    _spec_args(p)
    _state_args(p)
    _grid_args(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("potential", help="sample V(r) and report the minimum")
    _common(p)
    _spec_args(p)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--rmax", type=float, help="default 20 b")
    p.set_defaults(func=cmd_potential)
    return parser


def _grid_args(p):
    p.add_argument("--grid", type=int, default=20_000, help="intervals on the finest grid")
    p.add_argument("--rmax", type=float, help="solver box size, default 60 b")
    p.add_argument("--refine", type=int, default=3, help="number of grids in the ladder")
    p.add_argument("--max-error", type=float, dest="max_error",
                   help="fail when the extrapolation error estimate exceeds this")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except (UsageError, SpecError, ValueError) as exc:
        print(f"manning-rosen: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OracleError, QuadratureError, ArithmeticError) as exc:
        msg = f"manning-rosen: numerical failure: {exc}"
        if getattr(exc, "estimate", None) is not None:
            msg += f" (achieved grid error estimate {exc.estimate:.3g})"
        print(msg, file=sys.stderr)
        return EXIT_NUMERIC
    return 0


if __name__ == "__main__":
    sys.exit(main())

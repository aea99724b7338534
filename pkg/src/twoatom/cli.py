"""Command-line front end: build states, scan intensities, sweep curves.

Exit codes: 0 success, 2 argument/usage error, 3 validation or numerical
error.  Output is CSV (default) or JSON with shortest round-trip float
formatting, so identical invocations produce byte-identical documents.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__, coherence, farfield, qstate, scenarios
from .errors import TwoAtomError, ZeroEmissionError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twoatom",
        description="Far-field interference and coherence measures for two radiating atoms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_state_flags(p):
        p.add_argument(
            "--state",
            choices=["dicke", "product", "werner", "file"],
            required=True,
            help="state family, or 'file' to load a JSON density matrix",
        )
        p.add_argument("--alpha2", type=float, help="ground population for --state product")
        p.add_argument("--p", type=float, help="mixing weight for --state werner")
        p.add_argument("--file", help="path of the state JSON for --state file")

    def add_output_flags(p):
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--output", help="write here instead of standard output")

    p_state = sub.add_parser("state", help="construct, validate, and print a density matrix")
    add_state_flags(p_state)
    add_output_flags(p_state)

    p_int = sub.add_parser("intensity", help="scan the intensity pattern over the phase")
    add_state_flags(p_int)
    p_int.add_argument("--points", type=int, default=101, help="number of phase samples")
    p_int.add_argument("--delta-min", type=float, default=0.0, help="start phase in radians")
    p_int.add_argument(
        "--delta-max", type=float, default=2.0 * math.pi, help="end phase in radians"
    )
    add_output_flags(p_int)

    p_coh = sub.add_parser("coherence", help="coherence measures of a single state")
    add_state_flags(p_coh)
    add_output_flags(p_coh)

    p_curve = sub.add_parser("curve", help="sweep a state family over its parameter")
    p_curve.add_argument("family", choices=["product", "werner"])
    p_curve.add_argument("--points", type=int, default=101, help="grid points on [0, 1]")
    add_output_flags(p_curve)

    return parser


def _check_args(parser: argparse.ArgumentParser, args) -> None:
    if args.command in ("state", "intensity", "coherence"):
        if args.state == "product":
            if args.alpha2 is None:
                parser.error("--state product requires --alpha2")
            if not 0.0 <= args.alpha2 <= 1.0:
                parser.error(f"--alpha2 must lie in [0, 1], got {args.alpha2}")
        elif args.state == "werner":
            if args.p is None:
                parser.error("--state werner requires --p")
            if not 0.0 <= args.p <= 1.0:
                parser.error(f"--p must lie in [0, 1], got {args.p}")
        elif args.state == "file" and not args.file:
            parser.error("--state file requires --file")
    if args.command == "intensity":
        if args.points < 2:
            parser.error(f"--points must be at least 2, got {args.points}")
        if not args.delta_min < args.delta_max:
            parser.error("--delta-min must be below --delta-max")
    if args.command == "curve" and args.points < 2:
        parser.error(f"--points must be at least 2, got {args.points}")


def _build_state(args) -> qstate.DensityMatrix:
    if args.state == "dicke":
        return qstate.dicke_state()
    if args.state == "product":
        return qstate.product_state(args.alpha2)
    if args.state == "werner":
        return qstate.werner_state(args.p)
    return qstate.load_state(args.file)


def _state_params(args) -> dict:
    params = {"state": args.state}
    if args.state == "product":
        params["alpha2"] = args.alpha2
    elif args.state == "werner":
        params["p"] = args.p
    elif args.state == "file":
        params["file"] = args.file
    return params


def _fmt(x) -> str:
    x = float(x)
    if math.isnan(x):
        return ""
    return repr(x + 0.0)  # +0.0 folds -0.0 into 0.0


def _json_value(x):
    x = float(x)
    return None if math.isnan(x) else x + 0.0


def _render_table(table: scenarios.CurveTable, args, command: str, params: dict) -> str:
    if args.format == "csv":
        lines = [",".join((table.parameter_name,) + table.metric_names)]
        for value, metrics in table.rows:
            lines.append(",".join([_fmt(value)] + [_fmt(metrics[k]) for k in table.metric_names]))
        return "\n".join(lines) + "\n"
    record = {
        "command": command,
        "version": __version__,
        "params": params,
        "parameter": table.parameter_name,
        "columns": [table.parameter_name, *table.metric_names],
        "rows": [
            [_json_value(value)] + [_json_value(metrics[k]) for k in table.metric_names]
            for value, metrics in table.rows
        ],
    }
    return json.dumps(record, indent=2, allow_nan=False) + "\n"


def _render_metrics(metrics: dict, args, command: str, params: dict) -> str:
    if args.format == "csv":
        lines = ["metric,value"]
        lines.extend(f"{name},{_fmt(value)}" for name, value in metrics.items())
        return "\n".join(lines) + "\n"
    record = {
        "command": command,
        "version": __version__,
        "params": params,
        "metrics": {name: _json_value(value) for name, value in metrics.items()},
    }
    return json.dumps(record, indent=2, allow_nan=False) + "\n"


def _render_state(dm: qstate.DensityMatrix, args) -> str:
    if args.format == "json":
        # The bare state-file schema, so the output feeds back into --file.
        return json.dumps(qstate.state_to_dict(dm), indent=2, allow_nan=False) + "\n"
    header = ["basis"]
    for label in qstate.BASIS_LABELS:
        header += [f"{label}_re", f"{label}_im"]
    lines = [",".join(header)]
    for label, row in zip(qstate.BASIS_LABELS, dm.matrix):
        cells = [label]
        for z in row:
            cells += [_fmt(z.real), _fmt(z.imag)]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _coherence_metrics(dm: qstate.DensityMatrix) -> dict:
    discord = coherence.quantum_discord(dm)
    conc = coherence.concurrence(dm)
    try:
        visibility = farfield.visibility_analytic(dm)
    except ZeroEmissionError:
        visibility = float("nan")
    return {
        "entropy": coherence.von_neumann_entropy(dm),
        "mutual_information": discord.mutual_information,
        "classical_correlations": discord.classical_correlations,
        "discord": discord.discord,
        "concurrence": conc.concurrence,
        "eof": conc.eof,
        "visibility": visibility,
        "dipole": farfield.dipole_expectation(dm).magnitude,
    }


def _dispatch(args) -> str:
    if args.command == "state":
        return _render_state(_build_state(args), args)
    if args.command == "intensity":
        dm = _build_state(args)
        table = scenarios.intensity_scan(dm, args.delta_min, args.delta_max, args.points)
        params = _state_params(args) | {
            "points": args.points,
            "delta_min": args.delta_min,
            "delta_max": args.delta_max,
        }
        return _render_table(table, args, "intensity", params)
    if args.command == "coherence":
        dm = _build_state(args)
        return _render_metrics(_coherence_metrics(dm), args, "coherence", _state_params(args))
    # curve
    grid = np.linspace(0.0, 1.0, args.points)
    if args.family == "product":
        table = scenarios.product_curve(grid)
    else:
        table = scenarios.werner_curve(grid)
    return _render_table(
        table, args, f"curve {args.family}", {"family": args.family, "points": args.points}
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_args(parser, args)
    try:
        document = _dispatch(args)
    except OSError as exc:
        print(f"twoatom: cannot read state file: {exc}", file=sys.stderr)
        return 2
    except (TwoAtomError, ValueError) as exc:
        print(f"twoatom: {exc}", file=sys.stderr)
        return 3
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(document)
    else:
        sys.stdout.write(document)
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 a verification check failed.
Defaults for ``--tol``, ``--format`` and ``--seed`` can be set through the
SPORADIC_TOL, SPORADIC_FORMAT and SPORADIC_SEED environment variables.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import hidden_variables as hv
from . import kochen_specker as ks
from . import mermin, qmath, report
from .constructions import SIC_LABELS, build_hesse_sic, build_qutrit_mubs, build_sic, verify_sic
from .io import dumps, load_matrix
from .representation import negativity, probs_to_state, quasiprob, state_to_probs

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2
FORMATS = ("json", "csv", "markdown")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    tolerance: float = 1e-10
    output_format: str = "json"
    output_path: str | None = None
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.tolerance <= 1e-4:
            raise UsageError(f"--tol must lie in (0, 1e-4], got {self.tolerance}")
        if self.output_format not in FORMATS:
            raise UsageError(f"--format must be one of {FORMATS}")


def _emit(text: str, config: RunConfig) -> None:
    if config.output_path:
        with open(config.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _kv_table(pairs: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(pairs)
    if fmt == "csv":
        return "key,value\n" + "".join(f"{k},{json.dumps(v, default=str)}\n" for k, v in pairs.items())
    return "| key | value |\n|---|---|\n" + "".join(f"| {k} | {json.dumps(v, default=str)} |\n" for k, v in pairs.items())


def cmd_build_sic(args, config: RunConfig) -> int:
    sic = build_sic(args.type, config.tolerance)
    verification = verify_sic(sic, config.tolerance)
    _emit(dumps({"sic": sic.to_dict(), "verification": verification.to_dict()}), config)
    return EXIT_OK if verification.passed else EXIT_FAILED


def cmd_verify(args, config: RunConfig) -> int:
    labels = [args.type] if args.type else list(SIC_LABELS)
    results = [verify_sic(build_sic(label, config.tolerance), config.tolerance).to_dict() for label in labels]
    if config.output_format == "json":
        _emit(dumps(results), config)
    else:
        _emit("".join(_kv_table(r, config.output_format) for r in results), config)
    return EXIT_OK if all(r["passed"] for r in results) else EXIT_FAILED


def cmd_represent(args, config: RunConfig) -> int:
    if not args.state:
        raise UsageError("represent needs --state FILE")
    try:
        rho = load_matrix(args.state)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read state: {exc}") from exc
    sic = build_sic(args.type, config.tolerance)
    try:
        p = state_to_probs(rho, sic, config.tolerance)
    except qmath.InvalidStateError as exc:
        raise UsageError(f"invalid state: {exc}") from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    q = quasiprob(p)
    back, psd = probs_to_state(p, sic, config.tolerance)
    out = {
        "sic": sic.label,
        "probabilities": p.tolist(),
        "quasi_probabilities": q.tolist(),
        "negativity": negativity(q),
        "round_trip_psd": psd,
        "round_trip_error": float(np.max(np.abs(back - rho))),
    }
    _emit(_kv_table(out, config.output_format), config)
    return EXIT_OK


def cmd_bell(args, config: RunConfig) -> int:
    values = [v for _, v in mermin.enumerate_lhv()]
    b = mermin.bell_value(mermin.ghz_state(), config.tolerance)
    out = {
        "lhv_assignments": len(values),
        "lhv_min": min(values),
        "lhv_max": max(values),
        "lhv_values": sorted(set(values)),
        "bell_value_ghz": b,
        "violates_lhv": abs(b) > 2 + config.tolerance,
    }
    _emit(_kv_table(out, config.output_format), config)
    return EXIT_OK if out["violates_lhv"] and set(values) == {-2, 2} else EXIT_FAILED


def cmd_ghz(args, config: RunConfig) -> int:
    hoggar = build_sic("hoggar", config.tolerance)
    table = mermin.expectation_table(hoggar)
    if config.output_format == "csv":
        _emit(table.to_csv(), config)
        return EXIT_OK
    analysis = mermin.ghz_sic_analysis(hoggar, config.tolerance)
    parity = mermin.ghz_parity(hoggar, config.tolerance)
    out = {"analysis": analysis.to_dict(), "parity": parity.to_dict()}
    _emit(dumps(out) if config.output_format == "json" else _kv_table(out, "markdown"), config)
    ok = abs(analysis.deformed_total - 4) <= config.tolerance and abs(parity.p_odd - 1) <= config.tolerance
    return EXIT_OK if ok else EXIT_FAILED


def cmd_hv(args, config: RunConfig) -> int:
    if config.output_format == "csv":
        _emit(hv.anticoincidence_csv(), config)
        return EXIT_OK
    out: dict = {"instruction_sets": hv.enumerate_instruction_sets()}
    if args.state:
        try:
            rho = load_matrix(args.state)
            out["feasibility"] = hv.hv_from_state(rho, tol=config.tolerance).to_dict()
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot use state: {exc}") from exc
    out["dispersion_free"] = {
        s: {"bloch": b.tolist(), "psd": qmath.is_psd(op, config.tolerance)}
        for s in out["instruction_sets"]
        for op, b in [hv.dispersion_free_operator(s)]
    }
    quantum, hidden = hv.anticoincidence_table()
    out["anticoincidence"] = {"quantum": quantum.tolist(), "hidden_variable": hidden.tolist()}
    _emit(dumps(out) if config.output_format == "json" else _kv_table(out, "markdown"), config)
    return EXIT_OK


def cmd_ks(args, config: RunConfig) -> int:
    hesse = build_hesse_sic(config.tolerance)
    mubs = build_qutrit_mubs(hesse, config.tolerance)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(ks.build_graph(hesse, mubs).to_dot())
    result = ks.ks_report(hesse, mubs, seed=config.seed)
    if config.output_format == "json":
        _emit(dumps(result.to_dict()), config)
    else:
        rows = [("+".join(c), s) for c, s in result.per_assignment]
        if config.output_format == "csv":
            _emit("choice,survivors\n" + "".join(f"{c},{s}\n" for c, s in rows), config)
        else:
            _emit("| choice | survivors |\n|---|---|\n" + "".join(f"| {c} | {s} |\n" for c, s in rows), config)
    return EXIT_OK if result.contradiction else EXIT_FAILED


def cmd_report(args, config: RunConfig) -> int:
    rows = report.run_checks(config.tolerance, config.seed)
    if config.output_format == "json":
        text = dumps([r.to_dict() for r in rows])
    elif config.output_format == "csv":
        text = report.to_csv(rows)
    else:
        text = report.to_markdown(rows)
    _emit(text, config)
    failed = [r.quantity for r in rows if not r.passed]
    for name in failed:
        print(f"FAILED: {name}", file=sys.stderr)
    return EXIT_FAILED if failed else EXIT_OK


COMMANDS = {
    "build-sic": cmd_build_sic,
    "verify": cmd_verify,
    "represent": cmd_represent,
    "bell": cmd_bell,
    "ghz": cmd_ghz,
    "hv": cmd_hv,
    "ks": cmd_ks,
    "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=float(os.environ.get("SPORADIC_TOL", 1e-10)))
    common.add_argument("--format", choices=FORMATS, default=os.environ.get("SPORADIC_FORMAT", "json"))
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--seed", type=int, default=int(os.environ.get("SPORADIC_SEED", 0)))

    parser = _Parser(prog="sporadic-sics", description="Sporadic SICs and nonclassicality checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name in ("build-sic", "verify", "represent"):
            p.add_argument("--type", choices=SIC_LABELS, required=name == "build-sic", default=None if name == "verify" else "hoggar")
        if name in ("represent", "hv"):
            p.add_argument("--state", default=None, help="JSON density matrix {dim, entries}")
        if name == "ks":
            p.add_argument("--dot", default=None, help="also write the orthogonality graph as DOT")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    previous_tol = qmath.DEFAULT_TOL
    try:
        config = RunConfig(args.tol, args.format, args.out, args.seed)
        qmath.set_default_tol(config.tolerance)
        return COMMANDS[args.command](args, config)
    except UsageError as exc:
        print(f"sporadic-sics {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        qmath.DEFAULT_TOL = previous_tol


if __name__ == "__main__":
    sys.exit(main())

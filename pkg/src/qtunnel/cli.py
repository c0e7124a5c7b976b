"""Command-line front end.

Exit codes: 0 success, 1 verification threshold missed, 2 usage or
validation error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import oracle
from .circuit import dump_circuit, gate_census, to_unitary
from .diagsynth import decompose_diagonal, kinetic_gamma
from .errors import QTunnelError
from .formats import fmt_number, parse_config, parse_ket, trace_to_csv, trace_to_pgm
from .simulate import (
    LatticeSpec,
    PotentialSpec,
    SimulationConfig,
    build_step_circuit,
    kinetic_phase_vector,
    run,
)

DEVIATION_LIMIT = 1e-9
SLOPE_RANGE = (0.8, 1.2)
EXACT_LIMIT = 1e-9


class UsageError(Exception):
    pass


def _config_from(qubits, dt, steps, v=0.0, well_qubit=None, init=None, mass=0.5, omit=False):
    if qubits is None or dt is None or steps is None:
        missing = [k for k, x in (("qubits", qubits), ("dt", dt), ("steps", steps)) if x is None]
        raise UsageError(f"missing required setting(s): {', '.join(missing)}")
    qubits = int(qubits)
    lattice = LatticeSpec(qubits, float(mass))
    well = qubits - 1 if well_qubit is None else int(well_qubit)
    initial = 0 if init is None else parse_ket(str(init), qubits)
    return SimulationConfig(
        lattice,
        float(dt),
        int(steps),
        initial=initial,
        potential=PotentialSpec(well, float(v)),
        omit_trivial_potential=omit,
    )


def cmd_simulate(args) -> int:
    settings = {}
    if args.config:
        settings = parse_config(Path(args.config).read_text())
    for key in ("qubits", "dt", "steps", "v", "well_qubit", "init", "mass"):
        value = getattr(args, key)
        if value is not None:
            settings[key] = value
    known = {"qubits", "dt", "steps", "v", "well_qubit", "init", "mass", "output"}
    unknown = set(settings) - known
    if unknown:
        raise UsageError(f"unknown config key(s): {', '.join(sorted(unknown))}")
    csv_path = args.csv or settings.pop("output", None)
    settings.pop("output", None)
    for key in ("qubits", "dt", "steps"):
        settings.setdefault(key, None)
    config = _config_from(omit=args.omit_trivial_potential, **settings)
    trace = run(config)
    text = trace_to_csv(trace)
    if csv_path:
        Path(csv_path).write_text(text)
    else:
        sys.stdout.write(text)
    if args.pgm:
        Path(args.pgm).write_text(trace_to_pgm(trace))
    return 0


def _census_line(label, c) -> str:
    return (
        f"{label}: single={c.single_qubit} two={c.two_qubit} "
        f"three+={c.three_plus_qubit} total={c.total}"
    )


def cmd_census(args) -> int:
    config = _config_from(
        args.qubits, args.dt, 1, args.v, args.well_qubit, None, args.mass, args.omit_trivial_potential
    )
    step = build_step_circuit(config)
    per_step = gate_census(step)
    print(_census_line("per step", per_step))
    print(_census_line(f"{args.steps} steps", per_step * args.steps))
    if args.dump:
        sys.stdout.write(dump_circuit(step))
    return 0


def _subset_label(subset) -> str:
    return "{" + ",".join(str(q) for q in subset) + "}"


def cmd_decompose(args) -> int:
    n = args.qubits
    N = 1 << n
    if args.diag_file:
        try:
            values = [float(ln) for ln in Path(args.diag_file).read_text().split()]
        except ValueError as exc:
            raise UsageError(f"malformed diagonal file: {exc}") from None
        if len(values) != N:
            raise UsageError(f"diagonal file has {len(values)} entries, expected {N}")
        phases = np.array(values)
    else:
        phases = kinetic_phase_vector(LatticeSpec(n, args.mass), args.dt)
    decomp = decompose_diagonal(phases)
    rows = [((), decomp.global_phase)] + list(decomp.coefficients.items())
    # values below 1e-12 of the largest are round-off from the transform
    cutoff = 1e-12 * max(abs(a) for _, a in rows) if rows else 0.0
    norm = kinetic_gamma(n) * args.dt
    print(f"{'subset':<16}{'a_S':>22}{'c = a_S/(gamma dt)':>24}")
    for subset, a in rows:
        a = 0.0 if abs(a) <= cutoff else a
        print(f"{_subset_label(subset):<16}{fmt_number(a + 0.0):>22}{fmt_number(a / norm + 0.0):>24}")
    return 0


def cmd_verify(args) -> int:
    if not 1 <= args.qubits <= oracle.MAX_ORACLE_QUBITS:
        raise UsageError(f"--qubits must be in 1..{oracle.MAX_ORACLE_QUBITS} for dense verification")
    config = _config_from(args.qubits, args.dt, args.steps, args.v, args.well_qubit, None, args.mass)
    deviation = oracle.phase_aligned_deviation(
        oracle.exact_step_operator(config), to_unitary(build_step_circuit(config))
    )
    t_final = args.steps * args.dt
    dts = [args.dt / 2**k for k in range(4)]
    errors, slope = oracle.convergence_slope(config, t_final, dts)
    print(f"circuit vs oracle max deviation: {deviation:.3e}")
    print(f"trotter error at t={fmt_number(t_final)}:")
    for dt, err in zip(dts, errors):
        print(f"  dt={fmt_number(dt):<12} error={err:.6e}")
    exact = max(errors) < EXACT_LIMIT
    ok = deviation < DEVIATION_LIMIT
    if exact:
        print("convergence slope: n/a (splitting is exact)")
    else:
        print(f"convergence slope: {slope:.4f}")
        ok = ok and SLOPE_RANGE[0] <= slope <= SLOPE_RANGE[1]
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def paper_runs() -> dict[str, SimulationConfig]:
    two = LatticeSpec(2)
    return {
        "fig1_free": SimulationConfig(two, 0.1, 4, initial=1, potential=PotentialSpec(0, 0.0)),
        "fig1_tunnel": SimulationConfig(two, 0.1, 4, initial=1, potential=PotentialSpec(0, 10.0)),
        "fig2": SimulationConfig(LatticeSpec(3), 0.2, 10, initial=6, potential=PotentialSpec(1, 5.0)),
    }


def cmd_paper_figs(args) -> int:
    outdir = Path(args.outdir)
    try:
        outdir.mkdir(parents=True, exist_ok=True)
        for name, config in paper_runs().items():
            trace = run(config)
            (outdir / f"{name}.csv").write_text(trace_to_csv(trace))
            (outdir / f"{name}.pgm").write_text(trace_to_pgm(trace))
            print(f"wrote {outdir / name}.csv, {outdir / name}.pgm")
    except OSError as exc:
        raise UsageError(f"cannot write figures: {exc}") from None
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qtunnel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "simulate",
        help="run a split-operator simulation and emit a CSV trace",
        description="Row 0 of the trace is the initial state, so N steps give N+1 rows.",
    )
    p.add_argument("--config", help="key=value file; flags override its values")
    p.add_argument("--qubits", type=int)
    p.add_argument("--dt", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--v", type=float, help="square-well strength (default 0)")
    p.add_argument("--well-qubit", type=int, help="qubit whose 1-half is the well (default n-1)")
    p.add_argument("--init", help="initial site as a ket bitstring, e.g. 01")
    p.add_argument("--mass", type=float)
    p.add_argument("--csv", help="output path (default stdout)")
    p.add_argument("--pgm", help="also write a plain PGM heatmap")
    p.add_argument("--omit-trivial-potential", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("census", help="gate counts per step and for several steps")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--dump", action="store_true", help="print the step circuit")
    p.add_argument("--dt", type=float, default=0.1)
    p.add_argument("--v", type=float, default=0.0)
    p.add_argument("--well-qubit", type=int)
    p.add_argument("--mass", type=float, default=0.5)
    p.add_argument("--omit-trivial-potential", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("decompose", help="Z-product decomposition of a diagonal phase vector")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--mass", type=float, default=0.5)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--kinetic", action="store_true", help="the bit-reversed kinetic diagonal")
    src.add_argument("--diag-file", help="one phase per line, 2^n lines")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="compare the step circuit with the dense oracle")
    p.add_argument("--qubits", type=int, default=2)
    p.add_argument("--dt", type=float, default=0.1)
    p.add_argument("--steps", type=int, default=4)
    p.add_argument("--v", type=float, default=10.0)
    p.add_argument("--well-qubit", type=int, default=0)
    p.add_argument("--mass", type=float, default=0.5)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paper-figs", help="write the two- and three-qubit tunneling runs")
    p.add_argument("--outdir", required=True)
    p.set_defaults(func=cmd_paper_figs)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, QTunnelError, ValueError, OSError) as exc:
        print(f"qtunnel {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Regenerate tests/goldens.py from the dense-matrix oracle.

Only the oracle is used here; the circuit path is checked against the
written values by the test suite.
"""
from pathlib import Path

from qtunnel.oracle import trotter_error, trotter_trace
from qtunnel.simulate import LatticeSpec, PotentialSpec, SimulationConfig

RUNS = {
    "RUN_A": SimulationConfig(LatticeSpec(2), 0.1, 4, initial=1, potential=PotentialSpec(0, 0.0)),
    "RUN_B": SimulationConfig(LatticeSpec(2), 0.1, 4, initial=1, potential=PotentialSpec(0, 10.0)),
    "RUN_C": SimulationConfig(LatticeSpec(3), 0.2, 10, initial=6, potential=PotentialSpec(1, 5.0)),
}


def main() -> None:
    out = ['"""Oracle probability tables (generated by tools/freeze_goldens.py; do not edit)."""', ""]
    for name, cfg in RUNS.items():
        rows = trotter_trace(cfg)
        out.append(f"{name} = [")
        for row in rows:
            out.append("    [" + ", ".join(repr(float(x)) for x in row) + "],")
        out.append("]")
        out.append("")
    out.append(f"RUN_B_TROTTER_ERROR_T04 = {trotter_error(RUNS['RUN_B'], 0.4)!r}")
    path = Path(__file__).resolve().parents[1] / "tests" / "goldens.py"
    path.write_text("\n".join(out) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()

"""Text formats: CSV traces, plain PGM heatmaps and key=value run configs."""
from __future__ import annotations

import numpy as np

from .simulate import SimulationTrace


def fmt_number(x: float) -> str:
    return f"{x:.12g}"


def fmt_time(t: float) -> str:
    # round to 12 significant digits first so 3 * 0.1 prints as 0.3, then
    # repr keeps the trailing ".0" on whole times
    return repr(float(f"{t:.12g}"))


def trace_to_csv(trace: SimulationTrace) -> str:
    n_sites = trace.probabilities.shape[1]
    lines = ["step,t," + ",".join(f"p{k}" for k in range(n_sites))]
    for step, t, probs in trace.rows:
        lines.append(",".join([str(step), fmt_time(t)] + [fmt_number(p) for p in probs]))
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Inverse of :func:`trace_to_csv`: (steps, times, probabilities)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = lines[0].split(",")
    if header[:2] != ["step", "t"]:
        raise ValueError(f"unexpected CSV header {lines[0]!r}")
    body = np.array([[float(x) for x in ln.split(",")] for ln in lines[1:]])
    return body[:, 0].astype(int), body[:, 1], body[:, 2:]


def trace_to_pgm(trace: SimulationTrace) -> str:
    """Plain P2 image: one column per site, one row per step, scaled to the file max."""
    probs = trace.probabilities
    pmax = float(probs.max())
    scale = 255.0 / pmax if pmax > 0 else 0.0
    pixels = np.rint(probs * scale).astype(int)
    height, width = pixels.shape
    lines = ["P2", f"# pmax={fmt_number(pmax)}", f"{width} {height}", "255"]
    lines.extend(" ".join(str(v) for v in row) for row in pixels)
    return "\n".join(lines) + "\n"


def parse_pgm(text: str) -> tuple[float, np.ndarray]:
    pmax = None
    tokens = []
    for ln in text.splitlines():
        if ln.startswith("#"):
            if ln.startswith("# pmax="):
                pmax = float(ln.split("=", 1)[1])
            continue
        tokens.extend(ln.split())
    if tokens[0] != "P2":
        raise ValueError("not a plain PGM file")
    width, height, maxval = int(tokens[1]), int(tokens[2]), int(tokens[3])
    if maxval != 255:
        raise ValueError(f"unexpected maxval {maxval}")
    pixels = np.array([int(t) for t in tokens[4:]]).reshape(height, width)
    return pmax, pixels


def parse_config(text: str) -> dict[str, str]:
    """Flat ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key=value, got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


def parse_ket(bits: str, n_qubits: int) -> int:
    """Ket-order bitstring (leftmost = highest qubit) to a lattice index."""
    bits = bits.strip().strip("|>").strip()
    if len(bits) != n_qubits or set(bits) - {"0", "1"}:
        raise ValueError(f"init must be {n_qubits} binary digits, got {bits!r}")
    return int(bits, 2)

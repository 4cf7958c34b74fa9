"""Edge-list text format, trajectory CSV and JSON serialization.

Edge-list format: full-line comments start with ``#``; an optional first data
line ``n <N>`` fixes the node count; every other data line is ``i j w`` with
whitespace separation.  Node tokens may all be integers (used directly as
0-based ids, node count inferred as max id + 1 unless declared) or all be
arbitrary labels, which are mapped to ids in order of first appearance with
the label table retained on the graph.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Optional, TextIO, Union

import numpy as np

from .core import SignedGraph, build_graph
from .errors import EdgeListParseError

PathLike = Union[str, Path]


def _data_lines(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield line_no, line


def parse_edge_list(text: str) -> SignedGraph:
    """Parse edge-list text into a validated :class:`SignedGraph`."""
    declared_n: Optional[int] = None
    edges: list[tuple[int, int, float]] = []
    labels: Optional[dict[str, int]] = None
    int_mode: Optional[bool] = None
    first = True

    for line_no, line in _data_lines(text):
        parts = line.split()
        if first and len(parts) == 2 and parts[0] == "n":
            try:
                declared_n = int(parts[1])
            except ValueError:
                raise EdgeListParseError(line_no, f"invalid node count {parts[1]!r}")
            first = False
            continue
        first = False
        if len(parts) != 3:
            raise EdgeListParseError(line_no, f"expected 'i j w', got {line!r}")
        tok_i, tok_j, tok_w = parts
        try:
            w = float(tok_w)
        except ValueError:
            raise EdgeListParseError(line_no, f"invalid weight {tok_w!r}")
        if int_mode is None:
            int_mode = _is_int(tok_i) and _is_int(tok_j)
            if not int_mode:
                labels = {}
        if int_mode:
            if not (_is_int(tok_i) and _is_int(tok_j)):
                raise EdgeListParseError(line_no, f"mixed integer ids and labels at {line!r}")
            i, j = int(tok_i), int(tok_j)
        else:
            assert labels is not None
            i = labels.setdefault(tok_i, len(labels))
            j = labels.setdefault(tok_j, len(labels))
        edges.append((i, j, w))

    if not edges and declared_n is None:
        raise EdgeListParseError(1, "no edges found")
    inferred_n = 1 + max((max(i, j) for i, j, _ in edges), default=-1)
    n = declared_n if declared_n is not None else inferred_n
    label_table = None
    if labels is not None:
        label_table = [""] * len(labels)
        for name, idx in labels.items():
            label_table[idx] = name
        if declared_n is not None and declared_n != len(labels):
            raise EdgeListParseError(1, f"declared n {declared_n} does not match {len(labels)} labels")
        n = len(labels)
    return build_graph(n, edges, labels=label_table)


def _is_int(tok: str) -> bool:
    try:
        int(tok)
        return True
    except ValueError:
        return False


def load_graph(path: PathLike) -> SignedGraph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(G: SignedGraph, header: Optional[str] = None) -> str:
    """Serialize a graph; ``load`` of the result reproduces it exactly."""
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.append(f"n {G.n}")
    for i, j, w in G.edges:
        if G.labels is not None:
            lines.append(f"{G.labels[i]} {G.labels[j]} {w!r}")
        else:
            lines.append(f"{i} {j} {w!r}")
    return "\n".join(lines) + "\n"


def write_edge_list(G: SignedGraph, path: PathLike, header: Optional[str] = None) -> None:
    Path(path).write_text(format_edge_list(G, header=header))


# ---------------------------------------------------------------------------
# trajectory CSV and activation JSON
# ---------------------------------------------------------------------------

def write_trajectory_csv(states: np.ndarray, out: Union[PathLike, TextIO]) -> None:
    """Write a (T+1, n) state array as CSV rows ``t,node,value``."""
    if hasattr(out, "write"):
        _write_trajectory(states, out)  # type: ignore[arg-type]
    else:
        with open(out, "w", newline="") as fh:
            _write_trajectory(states, fh)


def _write_trajectory(states: np.ndarray, fh: TextIO) -> None:
    writer = csv.writer(fh)
    writer.writerow(["t", "node", "value"])
    for t, row in enumerate(np.asarray(states)):
        for node, value in enumerate(row):
            writer.writerow([t, node, repr(float(value))])


def read_trajectory_csv(path: PathLike) -> np.ndarray:
    rows = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        for rec in reader:
            rows.append((int(rec["t"]), int(rec["node"]), float(rec["value"])))
    if not rows:
        return np.zeros((0, 0))
    T = max(r[0] for r in rows)
    n = max(r[1] for r in rows) + 1
    states = np.zeros((T + 1, n))
    for t, node, value in rows:
        states[t, node] = value
    return states


def activation_sets_to_json(activations) -> list[dict]:
    """One record per step: active node lists split by state sign."""
    return [
        {"t": t, "plus": sorted(plus), "minus": sorted(minus)}
        for t, (plus, minus) in enumerate(activations)
    ]


# ---------------------------------------------------------------------------
# JSON views of analysis results
# ---------------------------------------------------------------------------

def sign_vector_to_json(s: Optional[np.ndarray]) -> Optional[list[int]]:
    return None if s is None else [int(v) for v in s]


def classification_to_json(classification, measures=None) -> dict:
    doc = {
        "verdict": classification.verdict.value,
        "balanced_partition": sign_vector_to_json(
            None if classification.balanced_partition is None else classification.balanced_partition.s
        ),
        "antibalanced_partition": sign_vector_to_json(
            None if classification.antibalanced_partition is None else classification.antibalanced_partition.s
        ),
    }
    if measures is not None:
        doc["d_b"] = measures.d_b
        doc["d_a"] = measures.d_a
    return doc


def measures_to_json(measures, verdict) -> dict:
    return {
        "d_b": measures.d_b,
        "d_a": measures.d_a,
        "rho_signed": measures.spectral_radius_signed,
        "rho_unsigned": measures.spectral_radius_unsigned,
        "contraction": measures.contraction,
        "verdict": verdict.value,
    }


def frustration_to_json(report) -> dict:
    return {
        "target": report.target,
        "flip_count": report.flip_count,
        "flipped_weight": report.flipped_weight,
        "flip_set": [[e.i, e.j, e.w] for e in report.flip_set],
        "exact": report.exact,
    }


def dump_json(doc, out: Union[PathLike, TextIO, None] = None) -> str:
    text = json.dumps(doc, indent=2, sort_keys=False)
    if out is None:
        return text
    if hasattr(out, "write"):
        out.write(text + "\n")  # type: ignore[union-attr]
    else:
        Path(out).write_text(text + "\n")
    return text

"""Edge-list and partition file formats plus CSV report writers.

Edge lists are plain text: one `u v w` triple per line with arbitrary
non-whitespace node tokens and a signed nonzero weight; `#` starts a
comment. Partitions are `u label` lines. Node tokens map to dense indices
in first-appearance order, and writers emit original tokens back.
"""

from __future__ import annotations

import csv
import io as _io
from pathlib import Path

import numpy as np

from .errors import ParseError, ShapeError
from .graph import SignedGraph
from .partition import Partition


def parse_edge_list(text: str) -> SignedGraph:
    """Parse `u v w` lines into a SignedGraph.

    Raises ParseError (with the line number) for malformed lines, zero
    weights, self-loops, or duplicate edges.
    """
    index: dict[str, int] = {}
    entries: dict[tuple[int, int], float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 'u v w', got {raw!r}")
        u_tok, v_tok, w_tok = parts
        try:
            w = float(w_tok)
        except ValueError:
            raise ParseError(f"line {lineno}: weight {w_tok!r} is not a number") from None
        if w == 0:
            raise ParseError(f"line {lineno}: zero weight is not allowed")
        if not np.isfinite(w):
            raise ParseError(f"line {lineno}: weight must be finite")
        if u_tok == v_tok:
            raise ParseError(f"line {lineno}: self-loop on node {u_tok!r}")
        for tok in (u_tok, v_tok):
            if tok not in index:
                index[tok] = len(index)
        i, j = index[u_tok], index[v_tok]
        key = (min(i, j), max(i, j))
        if key in entries:
            detail = "conflicting weights" if entries[key] != w else "repeated"
            raise ParseError(f"line {lineno}: duplicate edge {u_tok} {v_tok} ({detail})")
        entries[key] = w
    n = len(index)
    if n < 2:
        raise ParseError("edge list defines fewer than 2 nodes")
    a = np.zeros((n, n))
    for (i, j), w in entries.items():
        a[i, j] = a[j, i] = w
    labels = tuple(sorted(index, key=index.get))
    return SignedGraph(a, labels)


def write_edge_list(graph: SignedGraph) -> str:
    """Render a graph as `u v w` lines, each undirected edge once (i < j)."""
    out = []
    a = graph.adjacency
    labels = graph.node_labels
    for i, j in zip(*np.nonzero(np.triu(a, 1))):
        out.append(f"{labels[i]} {labels[j]} {_fmt_weight(a[i, j])}")
    return "\n".join(out) + "\n"


def _fmt_weight(w: float) -> str:
    return str(int(w)) if float(w).is_integer() else repr(float(w))


def parse_partition(text: str, graph: SignedGraph) -> Partition:
    """Parse `u label` lines into a Partition aligned with `graph`'s node order.

    Every node of the graph must appear exactly once.
    """
    seen: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u label', got {raw!r}")
        tok, lab = parts
        if tok in seen:
            raise ParseError(f"line {lineno}: node {tok!r} listed twice")
        seen[tok] = lab
    missing = [t for t in graph.node_labels if t not in seen]
    if missing:
        raise ParseError(f"partition is missing nodes: {', '.join(missing[:5])}")
    extra = [t for t in seen if t not in set(graph.node_labels)]
    if extra:
        raise ParseError(f"partition lists unknown nodes: {', '.join(extra[:5])}")
    labels = [seen[t] for t in graph.node_labels]
    return Partition.from_labels(np.asarray(labels))


def write_partition(part: Partition, graph: SignedGraph) -> str:
    """Render `u label` lines in the graph's node order."""
    if part.n != graph.n:
        raise ShapeError(f"partition covers {part.n} nodes, graph has {graph.n}")
    lines = [f"{tok} {part.assignment[i]}" for i, tok in enumerate(graph.node_labels)]
    return "\n".join(lines) + "\n"


def read_edge_list_file(path) -> SignedGraph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list_file(path, graph: SignedGraph) -> None:
    Path(path).write_text(write_edge_list(graph))


def read_partition_file(path, graph: SignedGraph) -> Partition:
    return parse_partition(Path(path).read_text(), graph)


def write_partition_file(path, part: Partition, graph: SignedGraph) -> None:
    Path(path).write_text(write_partition(part, graph))


SWEEP_CSV_SCHEMA = "sweep-v1: c,mean_density,std_density"
EXPERIMENT_CSV_SCHEMA = "experiment-v1: <grid columns...>,mean_nmi,std_nmi,mean_detected_c,std_detected_c"


def write_sweep_csv(report) -> str:
    """CSV rows (c, mean penalized density, std) behind a density-vs-c plot."""
    buf = _io.StringIO()
    buf.write(f"# {SWEEP_CSV_SCHEMA}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["c", "mean_density", "std_density"])
    for entry in report.per_c:
        writer.writerow([entry.c, f"{entry.mean_density:.10g}", f"{entry.std_density:.10g}"])
    return buf.getvalue()


def write_experiment_csv(grid_columns: list[str], rows: list[dict]) -> str:
    """CSV for benchmark experiment grids; one row per grid cell."""
    buf = _io.StringIO()
    buf.write(f"# {EXPERIMENT_CSV_SCHEMA}\n")
    writer = csv.writer(buf, lineterminator="\n")
    header = grid_columns + ["mean_nmi", "std_nmi", "mean_detected_c", "std_detected_c"]
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(row[k]) for k in header])
    return buf.getvalue()


def _csv_cell(v) -> str:
    if isinstance(v, float):
        return f"{v:.10g}"
    return str(v)

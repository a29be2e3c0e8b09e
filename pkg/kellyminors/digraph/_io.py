from pathlib import Path
from typing import List, Union

from kellyminors.exceptions import FormatError

from ._digraph import Digraph


def parse_edge_list(text: str) -> Digraph:
    """
    Parses the edge-list format: a header line ``n m`` followed by `m` lines
    ``u v`` with ``0 <= u, v < n`` and ``u != v``.

    Blank lines and lines starting with ``#`` are skipped. Duplicate arcs,
    self-loops, out-of-range ids and count mismatches raise `FormatError`
    with the offending line number.
    """

    rows = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise FormatError("Edge list is empty")

    number, header = rows[0]
    try:
        n, m = (int(token) for token in header)
    except ValueError as exc:
        raise FormatError("Header must be 'n m'", " ".join(header), line=number) from exc
    if n < 0 or m < 0:
        raise FormatError("Header counts must be non-negative", line=number)

    arcs = set()
    for number, tokens in rows[1:]:
        try:
            u, v = (int(token) for token in tokens)
        except ValueError as exc:
            raise FormatError("Arc line must be 'u v'", " ".join(tokens), line=number) from exc
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError("Vertex id out of range", f"{u} {v}", line=number)
        if u == v:
            raise FormatError("Self-loop", f"{u} {v}", line=number)
        if (u, v) in arcs:
            raise FormatError("Duplicate arc", f"{u} {v}", line=number)
        arcs.add((u, v))

    if len(arcs) != m:
        raise FormatError("Arc count does not match header", f"expected {m}, got {len(arcs)}")
    return Digraph(tuple(range(n)), frozenset(arcs))


def format_edge_list(g: Digraph) -> str:
    """Serializes `g` with vertices renumbered to 0..n-1 in id order."""
    compact = g.compact()
    lines: List[str] = [f"{compact.order} {compact.size}"]
    lines.extend(f"{u} {v}" for u, v in compact.sorted_arcs)
    return "\n".join(lines) + "\n"


def read_edge_list(path: Union[str, Path]) -> Digraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"Failed to read {path}", exc) from exc
    return parse_edge_list(text)


def write_edge_list(g: Digraph, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(format_edge_list(g), encoding="utf-8")
    return path


def to_dot(g: Digraph, name: str = "G") -> str:
    """
    Renders DOT with one line per unordered adjacent pair; bidirected pairs
    carry ``dir=both``.
    """

    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in g.vertices)
    for u, v in g.sorted_arcs:
        if g.has_arc(v, u):
            if u < v:
                lines.append(f"  {u} -> {v} [dir=both];")
        else:
            lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

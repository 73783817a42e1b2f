# Location: local_cde_discovery/graphs/io.py
"""
Graph Text Formats

DAG files start with ``dag <n>`` followed by ``<i> -> <j>`` lines. LEG files
start with ``leg <n> target=<i> hop=<h>`` followed by ``<i> -- <j>``,
``<i> -> <j>`` or ``<i> || <j>`` lines. Indices are 0-based; blank lines and
``#`` comments are ignored on input.
"""

import re
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from local_cde_discovery.core.exceptions import GraphError, GraphFormatError
from local_cde_discovery.graphs.dag import Dag
from local_cde_discovery.graphs.leg import EdgeMark, Leg, MarkedEdge

_EDGE_RE = re.compile(r"^(\d+)\s+(--|->|\|\|)\s+(\d+)$")
_LEG_HEADER_RE = re.compile(r"^leg\s+(\d+)\s+target=(\d+)\s+hop=(\d+)$")
_DAG_HEADER_RE = re.compile(r"^dag\s+(\d+)$")

PathLike = Union[str, Path]


def _content_lines(text: str) -> List[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphFormatError("Empty graph file")
    return lines


def _parse_edges(lines: Sequence[str]) -> List[Tuple[int, str, int]]:
    edges = []
    for line in lines:
        match = _EDGE_RE.match(line)
        if not match:
            raise GraphFormatError(f"Malformed edge line: {line!r}")
        edges.append((int(match.group(1)), match.group(2), int(match.group(3))))
    return edges


def format_dag(g: Dag) -> str:
    lines = [f"dag {g.n}"]
    lines.extend(f"{a} -> {b}" for a, b in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_dag(text: str, names: Optional[Sequence[str]] = None) -> Dag:
    """
    Parse the DAG text format.

    Args:
        text: File content
        names: Optional display names

    Returns:
        The DAG

    Raises:
        GraphFormatError: On malformed content
    """
    lines = _content_lines(text)
    header = _DAG_HEADER_RE.match(lines[0])
    if not header:
        raise GraphFormatError(f"Expected 'dag <n>' header, got {lines[0]!r}")
    pairs = []
    for a, token, b in _parse_edges(lines[1:]):
        if token != "->":
            raise GraphFormatError(f"DAG edges must use '->', got {token!r}")
        pairs.append((a, b))
    try:
        return Dag.from_edges(int(header.group(1)), pairs, names)
    except GraphError as e:
        if isinstance(e, GraphFormatError):
            raise
        raise GraphFormatError(f"Invalid DAG: {e}") from e


def format_leg(leg: Leg) -> str:
    lines = [f"leg {leg.n} target={leg.target} hop={leg.hop}"]
    lines.extend(f"{e.a} {e.mark.value} {e.b}" for e in leg.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_leg(text: str, names: Optional[Sequence[str]] = None) -> Leg:
    """
    Parse the LEG text format.

    Args:
        text: File content
        names: Optional display names

    Returns:
        The LEG

    Raises:
        GraphFormatError: On malformed content
    """
    lines = _content_lines(text)
    header = _LEG_HEADER_RE.match(lines[0])
    if not header:
        raise GraphFormatError(
            f"Expected 'leg <n> target=<i> hop=<h>' header, got {lines[0]!r}"
        )
    n, target, hop = (int(header.group(i)) for i in (1, 2, 3))
    edges = []
    for a, token, b in _parse_edges(lines[1:]):
        mark = EdgeMark(token)
        if mark is not EdgeMark.DIRECTED and a > b:
            a, b = b, a
        edges.append(MarkedEdge(a, b, mark))
    if len(edges) != len(set(edges)):
        raise GraphFormatError("Duplicate edge line")
    try:
        return Leg(
            n=n,
            edges=frozenset(edges),
            target=target,
            hop=hop,
            names=tuple(names or ()),
        )
    except GraphError as e:
        raise GraphFormatError(f"Invalid LEG: {e}") from e


def read_dag(path: PathLike) -> Dag:
    return parse_dag(Path(path).read_text())


def write_dag(path: PathLike, g: Dag) -> None:
    Path(path).write_text(format_dag(g))


def read_leg(path: PathLike) -> Leg:
    return parse_leg(Path(path).read_text())


def write_leg(path: PathLike, leg: Leg) -> None:
    Path(path).write_text(format_leg(leg))

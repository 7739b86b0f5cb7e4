"""
Plain-text instance files: graphs (with an optional role section), labelings
and X3C instances. Writing goes through the Jinja2 templates in templates/;
parsing reports the 1-based line of the first problem.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Optional
import logging

from jinja2 import Environment, FileSystemLoader

from roman3.errors import FormatError, GraphError, InstanceError, LabelingError
from roman3.graph import Graph, Labeling, build_graph
from roman3.reductions.roles import Role, parse_tag
from roman3.reductions.x3c import X3CInstance

logger = logging.getLogger(__name__)

ROLE_PREFIX = "# role"
PLANTED_PREFIX = "# planted"
X3C_HEADER = "x3c"


@dataclass(frozen=True)
class GraphFile:
    graph: Graph
    roles: Mapping[int, Role] = field(default_factory=dict)


class InstanceRenderer:
    """Renders instance files from the bundled templates."""

    def __init__(self):
        self.template_dir = Path(__file__).parent / "templates"
        self.env = self._create_jinja_env()

    def _create_jinja_env(self) -> Environment:
        return Environment(
            loader=FileSystemLoader(str(self.template_dir)),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

    def _render_template(self, template_path: str, context: dict) -> str:
        template = self.env.get_template(template_path)
        return template.render(**context)

    def render_graph(self, g: Graph, roles: Optional[Iterable[Role]] = None) -> str:
        role_lines = [(v, role.tag) for v, role in enumerate(roles)] if roles is not None else []
        return self._render_template(
            "graph.txt.j2", {"n": g.n, "m": g.m, "edges": g.edges, "roles": role_lines}
        )

    def render_labeling(self, f: Labeling) -> str:
        return self._render_template("labeling.txt.j2", {"labels": f.labels})

    def render_x3c(self, inst: X3CInstance) -> str:
        return self._render_template(
            "x3c.txt.j2",
            {"universe_size": inst.universe_size, "triples": inst.triples, "planted": inst.planted},
        )


_renderer: Optional[InstanceRenderer] = None


def renderer() -> InstanceRenderer:
    global _renderer
    if _renderer is None:
        _renderer = InstanceRenderer()
    return _renderer


def write_graph(g: Graph, roles: Optional[Iterable[Role]] = None) -> str:
    return renderer().render_graph(g, roles)


def write_labeling(f: Labeling) -> str:
    return renderer().render_labeling(f)


def write_x3c(inst: X3CInstance) -> str:
    return renderer().render_x3c(inst)


def _ints(line: str, lineno: int, count: int, what: str) -> list[int]:
    fields = line.split()
    if len(fields) != count:
        raise FormatError(lineno, f"expected {count} integers for {what}, found {len(fields)} fields")
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise FormatError(lineno, f"{what} must be integers, got '{line.strip()}'") from None


def parse_graph(text: str) -> GraphFile:
    """Parse "n m", m edge lines and optional "# role <vertex> <tag>" lines."""
    header: Optional[tuple[int, int]] = None
    edges: list[tuple[int, int]] = []
    roles: dict[int, Role] = {}
    role_lines: dict[int, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            if stripped.startswith(ROLE_PREFIX):
                fields = stripped[len(ROLE_PREFIX):].split()
                if len(fields) != 2:
                    raise FormatError(lineno, "role lines look like '# role <vertex> <tag>'")
                vertex = _ints(fields[0], lineno, 1, "role vertex")[0]
                roles[vertex] = parse_tag(fields[1], lineno)
                role_lines[vertex] = lineno
            continue
        if header is None:
            n, m = _ints(stripped, lineno, 2, "the header 'n m'")
            if n < 0 or m < 0:
                raise FormatError(lineno, f"negative size in header '{stripped}'")
            header = (n, m)
            continue
        u, v = _ints(stripped, lineno, 2, "an edge")
        if len(edges) == header[1]:
            raise FormatError(lineno, f"more edges than the {header[1]} announced in the header")
        if not (0 <= u < header[0] and 0 <= v < header[0]) or u == v:
            raise FormatError(lineno, f"edge ({u}, {v}) is not a valid edge on {header[0]} vertices")
        edges.append((u, v))
    if header is None:
        raise FormatError(1, "missing header 'n m'")
    if len(edges) != header[1]:
        raise FormatError(len(text.splitlines()), f"header announces {header[1]} edges, found {len(edges)}")
    for v, lineno in role_lines.items():
        if not 0 <= v < header[0]:
            raise FormatError(lineno, f"role names vertex {v}, outside the graph on {header[0]} vertices")
    try:
        graph = build_graph(header[0], edges)
    except GraphError as e:
        raise FormatError(1, str(e)) from e
    return GraphFile(graph, roles)


def parse_labeling(text: str, n: Optional[int] = None) -> Labeling:
    labels = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        label = _ints(stripped, lineno, 1, "a label")[0]
        if label not in (0, 1, 2, 3):
            raise FormatError(lineno, f"label {label} is not in 0..3")
        labels.append(label)
    if n is not None and len(labels) != n:
        raise LabelingError(f"labeling has {len(labels)} entries but the graph has {n} vertices")
    return Labeling(tuple(labels))


def parse_x3c(text: str) -> X3CInstance:
    """Parse "x3c <universe> <t>", t triple lines and an optional "# planted ..." line."""
    header: Optional[tuple[int, int]] = None
    triples: list[list[int]] = []
    planted = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            if stripped.startswith(PLANTED_PREFIX):
                fields = stripped[len(PLANTED_PREFIX):].split()
                planted = _ints(" ".join(fields), lineno, len(fields), "planted triple indices")
            continue
        if header is None:
            fields = stripped.split()
            if not fields or fields[0] != X3C_HEADER:
                raise FormatError(lineno, "missing header 'x3c <universe_size> <t>'")
            universe_size, t = _ints(" ".join(fields[1:]), lineno, 2, "the x3c header")
            header = (universe_size, t)
            continue
        triple = _ints(stripped, lineno, 3, "a triple")
        if len(set(triple)) != 3:
            raise FormatError(lineno, f"triple {triple} repeats an element")
        if not all(0 <= x < header[0] for x in triple):
            raise FormatError(lineno, f"triple {triple} leaves the universe 0..{header[0] - 1}")
        triples.append(triple)
    if header is None:
        raise FormatError(1, "missing header 'x3c <universe_size> <t>'")
    if len(triples) != header[1]:
        raise FormatError(len(text.splitlines()), f"header announces {header[1]} triples, found {len(triples)}")
    try:
        return X3CInstance.of(header[0], triples, planted)
    except InstanceError as e:
        raise FormatError(len(text.splitlines()), str(e)) from e


def read_graph(path: Path) -> GraphFile:
    return parse_graph(Path(path).read_text())


def read_labeling(path: Path, n: Optional[int] = None) -> Labeling:
    return parse_labeling(Path(path).read_text(), n)


def read_x3c(path: Path) -> X3CInstance:
    return parse_x3c(Path(path).read_text())

"""Command-line front end: graph documents, subcommands, and DOT export.

A graph document is a JSON file with string vertex labels:

    {
      "vertices": ["u", "v", "w"],
      "edges": [["u", "v"], ["v", "w"]],
      "k": 5,
      "hom": {"u": 0, "v": 1, "w": 2}
    }

``k`` and ``hom`` are optional; ``--k`` on the command line takes
precedence over the document. Reports go to stdout and are byte-identical
across runs on identical inputs; the elapsed-time line goes to stderr.

Exit codes: 0 success/PASS, 1 usage or input error, 2 verification FAIL,
3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import deque
from dataclasses import dataclass, field

from homcycle.cover import (
    ComponentReport,
    classify_full,
    deck_period,
    frozen_vertices,
    orient,
    project,
)
from homcycle.errors import (
    CapExceededError,
    DocumentError,
    HomcycleError,
)
from homcycle.graphs import SimpleGraph, connected_components
from homcycle.homs import (
    DEFAULT_HOM_CAP,
    CyclicHom,
    build_hom_skeleton,
    enumerate_homs,
    skeleton_components,
    validate_hom,
)
from homcycle.homology import verify_classification

_DOT_PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#a65628", "#f781bf", "#999999", "#dede00",
)


@dataclass
class GraphDocument:
    """Parsed graph document: labeled vertices, edges, optional k and hom."""

    vertices: list[str]
    edges: list[tuple[str, str]]
    k: int | None = None
    hom: dict[str, int] | None = None

    def index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.vertices)}

    def to_graph(self) -> SimpleGraph:
        index = self.index()
        return SimpleGraph(
            len(self.vertices), [(index[a], index[b]) for a, b in self.edges]
        )


def parse_document(text: str) -> GraphDocument:
    """Parse and validate a JSON graph document."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object")
    vertices = raw.get("vertices")
    if not isinstance(vertices, list) or any(not isinstance(v, str) for v in vertices):
        raise DocumentError("field 'vertices' must be a list of strings")
    if len(set(vertices)) != len(vertices):
        raise DocumentError("field 'vertices' contains duplicate labels")
    known = set(vertices)
    raw_edges = raw.get("edges", [])
    if not isinstance(raw_edges, list):
        raise DocumentError("field 'edges' must be a list of label pairs")
    edges = []
    for i, pair in enumerate(raw_edges):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise DocumentError(f"edges[{i}]: expected a pair of labels")
        a, b = pair
        if a not in known or b not in known:
            raise DocumentError(f"edges[{i}]: unknown vertex label in {pair}")
        if a == b:
            raise DocumentError(f"edges[{i}]: self-loop at {a!r}")
        edges.append((a, b))
    k = raw.get("k")
    if k is not None and (not isinstance(k, int) or isinstance(k, bool)):
        raise DocumentError("field 'k' must be an integer")
    hom = raw.get("hom")
    if hom is not None:
        if not isinstance(hom, dict):
            raise DocumentError("field 'hom' must be a label-to-residue object")
        for label, value in hom.items():
            if label not in known:
                raise DocumentError(f"hom: unknown vertex label {label!r}")
            if not isinstance(value, int) or isinstance(value, bool):
                raise DocumentError(f"hom[{label!r}]: residue must be an integer")
        missing = known - set(hom)
        if missing:
            raise DocumentError(f"hom: missing vertices {sorted(missing)}")
        if k is not None:
            hom = {label: value % k for label, value in hom.items()}
    return GraphDocument(vertices=list(vertices), edges=edges, k=k, hom=hom)


def serialize_document(doc: GraphDocument) -> str:
    """Serialize a document back to JSON (round-trips through parse)."""
    payload: dict = {
        "vertices": doc.vertices,
        "edges": [list(pair) for pair in doc.edges],
    }
    if doc.k is not None:
        payload["k"] = doc.k
    if doc.hom is not None:
        payload["hom"] = {label: doc.hom[label] for label in doc.vertices}
    return json.dumps(payload, indent=2) + "\n"


def _load(path: str) -> GraphDocument:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}")
    return parse_document(text)


def _resolve_k(args, doc: GraphDocument) -> int:
    k = args.k if args.k is not None else doc.k
    if k is None:
        raise DocumentError("no k given: pass --k or put a 'k' field in the document")
    return k


def _parse_hom_flag(text: str, doc: GraphDocument) -> dict[str, int]:
    known = set(doc.vertices)
    values: dict[str, int] = {}
    for item in text.split(","):
        name, sep, residue = item.partition("=")
        if not sep:
            raise DocumentError(f"--hom: expected name=value, got {item!r}")
        name = name.strip()
        if name not in known:
            raise DocumentError(f"--hom: unknown vertex label {name!r}")
        try:
            values[name] = int(residue)
        except ValueError:
            raise DocumentError(f"--hom: residue for {name!r} must be an integer")
    missing = known - set(values)
    if missing:
        raise DocumentError(f"--hom: missing vertices {sorted(missing)}")
    return values


def _resolve_hom(args, doc: GraphDocument, g: SimpleGraph, k: int) -> CyclicHom | None:
    """The homomorphism named by --hom or the document, if any (validated)."""
    if getattr(args, "hom", None) is not None:
        values = _parse_hom_flag(args.hom, doc)
    else:
        values = doc.hom
    if values is None:
        return None
    return validate_hom(g, k, [values[label] for label in doc.vertices])


@dataclass
class RunReport:
    """Deterministic run output plus wall-clock timing (stderr only)."""

    lines: list[str] = field(default_factory=list)
    payload: dict = field(default_factory=dict)
    started: float = field(default_factory=time.perf_counter)

    def emit(self, as_json: bool) -> None:
        if as_json:
            sys.stdout.write(json.dumps(self.payload, indent=2, sort_keys=True) + "\n")
        else:
            for line in self.lines:
                sys.stdout.write(line + "\n")
        elapsed = time.perf_counter() - self.started
        sys.stderr.write(f"elapsed: {elapsed:.3f}s\n")


def _input_echo(doc: GraphDocument, k: int) -> dict:
    return {
        "vertices": list(doc.vertices),
        "edges": [list(pair) for pair in doc.edges],
        "k": k,
    }


def _input_line(doc: GraphDocument, k: int) -> str:
    edges = " ".join(f"{a}-{b}" for a, b in doc.edges)
    return f"input: vertices={len(doc.vertices)} edges=[{edges}] k={k}"


def _component_dict(doc: GraphDocument, report: ComponentReport) -> dict:
    entry: dict = {
        "representative": report.representative.label(),
        "size": report.size,
        "homotopy_type": str(report.homotopy_type),
        "torus_dim": report.homotopy_type.torus_dim,
        "frozen": (
            sorted(doc.vertices[v] for v in report.frozen)
            if report.frozen is not None
            else None
        ),
        "k_prime": report.period,
    }
    if report.betti is not None:
        entry["betti"] = list(report.betti)
        entry["verdict"] = "PASS" if report.oracle_consistent else "FAIL"
    return entry


def _component_lines(doc: GraphDocument, index: int, report: ComponentReport) -> list[str]:
    frozen = (
        "n/a"
        if report.frozen is None
        else (" ".join(sorted(doc.vertices[v] for v in report.frozen)) or "(none)")
    )
    period = "n/a" if report.period is None else str(report.period)
    lines = [
        f"component {index}:",
        f"  representative: {report.representative.label()}",
        f"  size: {report.size}",
        f"  homotopy type: {report.homotopy_type}",
        f"  frozen vertices: {frozen}",
        f"  k': {period}",
    ]
    if report.betti is not None:
        verdict = "PASS" if report.oracle_consistent else "FAIL"
        lines.append(f"  betti: ({report.betti[0]}, {report.betti[1]})")
        lines.append(f"  verdict: {verdict}")
    return lines


def cmd_enumerate(args) -> int:
    doc = _load(args.file)
    k = _resolve_k(args, doc)
    g = doc.to_graph()
    report = RunReport()
    homs = enumerate_homs(g, k, args.cap)
    report.payload = {"input": _input_echo(doc, k), "hom_count": len(homs)}
    report.lines.append(_input_line(doc, k))
    report.lines.append(f"homomorphisms: {len(homs)}")
    if args.list:
        labels = [h.label() for h in homs]
        report.payload["homs"] = labels
        report.lines.extend(labels)
    report.emit(args.json)
    return 0


def _classify_reports(g: SimpleGraph, k: int, doc: GraphDocument, cap: int,
                      only: CyclicHom | None) -> list[ComponentReport]:
    skeleton = build_hom_skeleton(g, k, cap)
    components = skeleton_components(skeleton)
    if only is not None:
        target = skeleton.index_of(only)
        components = [c for c in components if target in c]
    period = deck_period(k) if k != 4 else None
    reports = []
    for component in components:
        representative = skeleton.homs[component[0]]
        reports.append(
            ComponentReport(
                representative=representative,
                homotopy_type=classify_full(g, k, representative),
                frozen=frozen_vertices(representative) if k != 4 else None,
                size=len(component),
                period=period,
            )
        )
    return reports


def cmd_classify(args) -> int:
    doc = _load(args.file)
    k = _resolve_k(args, doc)
    g = doc.to_graph()
    only = _resolve_hom(args, doc, g, k)
    report = RunReport()
    reports = _classify_reports(g, k, doc, args.cap, only)
    report.payload = {
        "input": _input_echo(doc, k),
        "components": [_component_dict(doc, r) for r in reports],
    }
    report.lines.append(_input_line(doc, k))
    report.lines.append(f"components: {len(reports)}")
    for i, r in enumerate(reports, start=1):
        report.lines.extend(_component_lines(doc, i, r))
    report.emit(args.json)
    return 0


def cmd_verify(args) -> int:
    doc = _load(args.file)
    k = _resolve_k(args, doc)
    g = doc.to_graph()
    report = RunReport()
    reports = verify_classification(g, k, hom_cap=args.cap)
    all_pass = all(r.oracle_consistent for r in reports)
    report.payload = {
        "input": _input_echo(doc, k),
        "components": [_component_dict(doc, r) for r in reports],
        "verdict": "PASS" if all_pass else "FAIL",
    }
    report.lines.append(_input_line(doc, k))
    report.lines.append(f"components: {len(reports)}")
    for i, r in enumerate(reports, start=1):
        report.lines.extend(_component_lines(doc, i, r))
    report.lines.append(f"overall: {'PASS' if all_pass else 'FAIL'}")
    report.emit(args.json)
    return 0 if all_pass else 2


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_skeleton_dot(g: SimpleGraph, k: int, cap: int = DEFAULT_HOM_CAP) -> str:
    """DOT text for the move graph, one color per connected component."""
    skeleton = build_hom_skeleton(g, k, cap)
    color_of = {}
    for ci, component in enumerate(skeleton_components(skeleton)):
        for v in component:
            color_of[v] = _DOT_PALETTE[ci % len(_DOT_PALETTE)]
    lines = ["graph move_skeleton {", "  node [shape=box, style=filled];"]
    for i, hom in enumerate(skeleton.homs):
        lines.append(
            f"  h{i} [label={_quote(hom.label())}, fillcolor={_quote(color_of[i])}];"
        )
    for i, j in skeleton.edges:
        lines.append(f"  h{i} -- h{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_orientation_dot(doc: GraphDocument, f: CyclicHom) -> str:
    """DOT text for the orientation induced by a homomorphism."""
    d = orient(f)
    lines = ["digraph orientation {"]
    for v, label in enumerate(doc.vertices):
        lines.append(f"  v{v} [label={_quote(f'{label}={f.values[v]}')}];")
    for u, v in d.arc_list():
        lines.append(f"  v{u} -> v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_cover_dot(f: CyclicHom, truncate: int) -> str:
    """DOT text for the universal cover truncated to 1-norm <= truncate.

    Every cover vertex of norm at most L is reachable from the origin
    through vertices of no larger norm, so a breadth-first walk bounded by
    the norm finds them all.
    """
    d = orient(f)
    n = f.graph.vertex_count
    start = (0,) * n
    seen = {start}
    queue = deque([start])
    points = []
    while queue:
        point = queue.popleft()
        points.append(point)
        for u in range(n):
            for delta in (1, -1):
                t = point[u] + delta
                ok = all(
                    point[x] <= t <= point[x] + 1 for x in d.out_neighbors(u)
                ) and all(t <= point[x] <= t + 1 for x in d.in_neighbors(u))
                if not ok:
                    continue
                neighbor = point[:u] + (t,) + point[u + 1:]
                if sum(abs(c) for c in neighbor) > truncate:
                    continue
                if any(neighbor[v] != 0 for v in frozen_vertices(f)):
                    continue
                if neighbor not in seen:
                    seen.add(neighbor)
                    queue.append(neighbor)
    points.sort()
    index = {p: i for i, p in enumerate(points)}
    lines = ["graph universal_cover {", "  node [shape=box];"]
    for p in points:
        coords = "(" + ",".join(str(c) for c in p) + ")"
        # digits, commas, and parens only, so no quoting needed around the \n escape
        lines.append(f'  a{index[p]} [label="{coords}\\n{project(f, p).label()}"];')
    for p in points:
        for u in range(n):
            neighbor = p[:u] + (p[u] + 1,) + p[u + 1:]
            if neighbor in index:
                lines.append(f"  a{index[p]} -- a{index[neighbor]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export(args) -> int:
    doc = _load(args.file)
    k = _resolve_k(args, doc)
    g = doc.to_graph()
    if args.what == "skeleton":
        sys.stdout.write(export_skeleton_dot(g, k, args.cap))
        return 0
    f = _resolve_hom(args, doc, g, k)
    if f is None:
        raise DocumentError(f"--what {args.what} needs a homomorphism (document 'hom' or --hom)")
    if args.what == "orientation":
        sys.stdout.write(export_orientation_dot(doc, f))
        return 0
    # cover
    deck_period(k)  # rejects k = 4 and k < 3
    if len(connected_components(g)) != 1:
        raise DocumentError("--what cover needs a connected graph")
    truncate = args.truncate if args.truncate is not None else 3 * deck_period(k)
    if truncate < 0:
        raise DocumentError("--truncate must be nonnegative")
    sys.stdout.write(export_cover_dot(f, truncate))
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="homcycle",
        description="Homomorphisms from a graph to a cycle: enumeration, "
        "component classification, homology verification, DOT export.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="graph document (JSON)")
        p.add_argument("--k", type=int, default=None, help="cycle length (overrides document)")
        p.add_argument("--cap", type=int, default=DEFAULT_HOM_CAP,
                       help="maximum number of homomorphisms to enumerate")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p_enum = sub.add_parser("enumerate", help="count (and list) homomorphisms")
    common(p_enum)
    p_enum.add_argument("--list", action="store_true", help="list every homomorphism")
    p_enum.set_defaults(func=cmd_enumerate)

    p_cls = sub.add_parser("classify", help="classify move-graph components")
    common(p_cls)
    p_cls.add_argument("--hom", default=None,
                       help="homomorphism as name=val,... (restrict to its component)")
    p_cls.set_defaults(func=cmd_classify)

    p_ver = sub.add_parser("verify", help="cross-check classification against homology")
    common(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    p_exp = sub.add_parser("export", help="emit DOT for skeleton, orientation, or cover")
    common(p_exp)
    p_exp.add_argument("--what", choices=("skeleton", "orientation", "cover"),
                       required=True)
    p_exp.add_argument("--hom", default=None,
                       help="homomorphism as name=val,... (orientation and cover)")
    p_exp.add_argument("--truncate", type=int, default=None,
                       help="cover: largest 1-norm to draw (default 3*k')")
    p_exp.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        sys.stderr.write(f"homcycle: cap exceeded: {exc}\n")
        return 3
    except (DocumentError, HomcycleError, ValueError) as exc:
        sys.stderr.write(f"homcycle: error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())

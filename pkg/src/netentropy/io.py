"""Edge-list ingestion, report serialization and flat config files.

Real-world edge lists are messy: duplicate rows and self-loops are
collapsed/dropped with counts reported in :class:`LoadStats` instead of
failing the load. All writers are bit-stable: identical inputs always
produce byte-identical files (sorted keys, fixed float formatting).
"""

from __future__ import annotations

import enum
import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from .centrality import PairConvention
from .entropy import EntropyReport, UpsilonSource
from .generators import GrowthConfig


class ParseError(ValueError):
    def __init__(self, path, line_number: int, message: str):
        super().__init__(f"{path}:{line_number}: {message}")
        self.path = str(path)
        self.line_number = line_number


class InconsistentIndexingError(ParseError):
    """A node id incompatible with the declared index base."""


class WriteFailure(OSError):
    pass


class Delimiter(enum.Enum):
    WHITESPACE = "whitespace"
    COMMA = "comma"


class IndexBase(enum.Enum):
    ZERO = "zero"
    ONE = "one"

    @property
    def offset(self) -> int:
        return 0 if self is IndexBase.ZERO else 1


class ReportFormat(enum.Enum):
    JSON_LINES = "json-lines"
    CSV = "csv"


@dataclass(frozen=True)
class EdgeListFormat:
    delimiter: Delimiter = Delimiter.WHITESPACE
    has_weights: bool = False
    index_base: IndexBase = IndexBase.ZERO
    comment_prefix: str = "#"


@dataclass(frozen=True)
class LoadStats:
    path: str
    lines: int
    duplicate_edges: int
    self_loops: int
    content_digest: str


def load_edge_list(path, fmt: EdgeListFormat = EdgeListFormat()):
    """Parse an edge-list file into a validated graph."""
    graph, _ = load_edge_list_with_stats(path, fmt)
    return graph


def load_edge_list_with_stats(path, fmt: EdgeListFormat = EdgeListFormat()):
    """Like :func:`load_edge_list` but also reports cleanup counts.

    Duplicate undirected edges keep their first weight; self-loops are
    dropped. Both are counted in the returned :class:`LoadStats` along
    with a sha256 digest of the raw bytes.
    """
    from .graph import build_graph  # local to keep module import light

    raw = Path(path).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    offset = fmt.index_base.offset
    edges: dict[tuple[int, int], float] = {}
    duplicates = 0
    self_loops = 0
    max_node = -1
    lines = 0
    for line_number, line in enumerate(raw.decode("utf-8").splitlines(), start=1):
        lines += 1
        stripped = line.strip()
        if not stripped or stripped.startswith(fmt.comment_prefix):
            continue
        parts = (
            [p.strip() for p in stripped.split(",")]
            if fmt.delimiter is Delimiter.COMMA
            else stripped.split()
        )
        expected = 3 if fmt.has_weights else 2
        if len(parts) != expected:
            raise ParseError(
                path, line_number, f"expected {expected} fields, got {len(parts)}"
            )
        try:
            u = int(parts[0])
            v = int(parts[1])
            w = float(parts[2]) if fmt.has_weights else 1.0
        except ValueError as exc:
            raise ParseError(path, line_number, str(exc)) from None
        if min(u, v) < offset:
            raise InconsistentIndexingError(
                path,
                line_number,
                f"node id {min(u, v)} below declared {fmt.index_base.value}-based origin",
            )
        u -= offset
        v -= offset
        if u == v:
            self_loops += 1
            continue
        if u > v:
            u, v = v, u
        if (u, v) in edges:
            duplicates += 1
            continue
        if w <= 0:
            raise ParseError(path, line_number, f"non-positive weight {w}")
        edges[(u, v)] = w
        max_node = max(max_node, v)
    graph = build_graph(max_node + 1, [(u, v, w) for (u, v), w in edges.items()])
    stats = LoadStats(
        path=str(path),
        lines=lines,
        duplicate_edges=duplicates,
        self_loops=self_loops,
        content_digest=digest,
    )
    return graph, stats


def write_edge_list(graph, path_or_file) -> None:
    """Canonical zero-based edge list; weights printed only when not all 1."""
    unit = all(w == 1.0 for _, _, w in graph.edges)
    lines = []
    for u, v, w in graph.edges:
        lines.append(f"{u} {v}" if unit else f"{u} {v} {w!r}")
    text = "\n".join(lines) + ("\n" if lines else "")
    if hasattr(path_or_file, "write"):
        path_or_file.write(text)
    else:
        Path(path_or_file).write_text(text)


# --- entropy report documents ---------------------------------------------


@dataclass(frozen=True)
class NetworkRecord:
    name: str
    report: EntropyReport
    source_path: str | None = None
    content_digest: str | None = None


@dataclass(frozen=True)
class ReportDocument:
    records: tuple[NetworkRecord, ...] = ()
    schema_version: str = "1"

    def conventions(self) -> dict | None:
        """Document-wide conventions, or None when records disagree."""
        combos = {
            (
                r.report.pair_convention,
                r.report.upsilon_source,
                r.report.zero_betweenness_policy,
                r.report.log_base,
            )
            for r in self.records
        }
        if len(combos) != 1:
            return None
        conv, source, policy, base = next(iter(combos))
        return {
            "pair_convention": conv.value,
            "upsilon_source": source.value,
            "zero_betweenness_policy": policy,
            "log_base": base,
        }


CSV_HEADER = "network,nodes,edges,e_deg,e_bet,e_t"


def _record_to_json_obj(record: NetworkRecord) -> dict:
    rep = record.report
    return {
        "name": record.name,
        "e_deg": rep.e_deg,
        "e_bet": rep.e_bet,
        "e_t": rep.e_t,
        "nodes": rep.node_count,
        "edges": rep.edge_count,
        "pair_convention": rep.pair_convention.value,
        "upsilon_source": rep.upsilon_source.value,
        "zero_betweenness_policy": rep.zero_betweenness_policy,
        "log_base": rep.log_base,
        "source_path": record.source_path,
        "content_digest": record.content_digest,
    }


def _record_from_json_obj(obj: dict) -> NetworkRecord:
    report = EntropyReport(
        e_deg=obj["e_deg"],
        e_bet=obj["e_bet"],
        e_t=obj["e_t"],
        node_count=obj["nodes"],
        edge_count=obj["edges"],
        pair_convention=PairConvention(obj["pair_convention"]),
        upsilon_source=UpsilonSource(obj["upsilon_source"]),
        zero_betweenness_policy=obj["zero_betweenness_policy"],
        log_base=obj["log_base"],
    )
    return NetworkRecord(
        name=obj["name"],
        report=report,
        source_path=obj.get("source_path"),
        content_digest=obj.get("content_digest"),
    )


def render_report(doc: ReportDocument, fmt: ReportFormat) -> str:
    """Serialize a document to text; deterministic for identical inputs.

    JSON lines keep full float precision and round-trip losslessly; CSV is
    the plot-ready view with 6-decimal floats.
    """
    if fmt is ReportFormat.CSV:
        rows = [CSV_HEADER]
        for r in doc.records:
            rep = r.report
            rows.append(
                f"{r.name},{rep.node_count},{rep.edge_count},"
                f"{rep.e_deg:.6f},{rep.e_bet:.6f},{rep.e_t:.6f}"
            )
        return "\n".join(rows) + "\n"
    header = {"schema_version": doc.schema_version, "kind": "entropy-report"}
    conventions = doc.conventions()
    if conventions is not None:
        header["conventions"] = conventions
    lines = [json.dumps(header, sort_keys=True)]
    for r in doc.records:
        lines.append(json.dumps(_record_to_json_obj(r), sort_keys=True))
    return "\n".join(lines) + "\n"


def write_report(doc: ReportDocument, path, fmt: ReportFormat) -> None:
    try:
        Path(path).write_text(render_report(doc, fmt))
    except OSError as exc:
        raise WriteFailure(str(exc)) from exc


def read_report(path) -> ReportDocument:
    """Round-trip reader for the JSON-lines report format."""
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise ParseError(path, 1, "empty report document")
    header = json.loads(lines[0])
    records = tuple(_record_from_json_obj(json.loads(line)) for line in lines[1:])
    return ReportDocument(records=records, schema_version=header["schema_version"])


# --- flat key-value config files -------------------------------------------

GROWTH_KEYS = {
    "growth.seed_nodes": ("seed_nodes", int),
    "growth.neighbor_k": ("neighbor_k", int),
    "growth.iterations": ("iterations", int),
    "growth.random_link_prob": ("random_link_prob", float),
    "growth.central_fraction": ("central_fraction", float),
    "growth.attach_prob_scale": ("attach_prob_scale", float),
    "growth.rng_seed": ("rng_seed", int),
}

ENTROPY_KEYS = {"entropy.convention", "entropy.upsilon_source"}


def read_flat_config(path) -> dict[str, str]:
    """Parse ``key = value`` lines; '#' comments and blank lines ignored."""
    values: dict[str, str] = {}
    for line_number, line in enumerate(Path(path).read_text().splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ParseError(path, line_number, f"expected 'key = value', got {stripped!r}")
        key, _, value = stripped.partition("=")
        values[key.strip()] = value.strip()
    return values


def growth_config_from_file(path) -> tuple[GrowthConfig, dict[str, str]]:
    """Build a GrowthConfig from a flat config file.

    Returns the config plus any non-growth keys (e.g. ``entropy.*``) for
    the caller to interpret. Unknown ``growth.*`` keys are errors.
    """
    values = read_flat_config(path)
    kwargs = {}
    extras: dict[str, str] = {}
    for key, value in values.items():
        if key in GROWTH_KEYS:
            name, cast = GROWTH_KEYS[key]
            kwargs[name] = cast(value)
        elif key.startswith("growth."):
            raise ParseError(path, 1, f"unknown growth key {key!r}")
        else:
            extras[key] = value
    return GrowthConfig(**kwargs), extras


def write_growth_config(cfg: GrowthConfig, path, extras: dict[str, str] | None = None) -> None:
    lines = []
    for key, (name, _) in GROWTH_KEYS.items():
        lines.append(f"{key} = {getattr(cfg, name)}")
    for key in sorted(extras or {}):
        lines.append(f"{key} = {extras[key]}")
    Path(path).write_text("\n".join(lines) + "\n")


# --- dataset manifest -------------------------------------------------------


def load_manifest(path) -> dict[str, tuple[int, int]]:
    """Tab/space-separated ``name nodes edges`` rows for count cross-checks."""
    expected: dict[str, tuple[int, int]] = {}
    for line_number, line in enumerate(Path(path).read_text().splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 3:
            raise ParseError(path, line_number, f"expected 'name nodes edges', got {stripped!r}")
        try:
            expected[parts[0]] = (int(parts[1]), int(parts[2]))
        except ValueError as exc:
            raise ParseError(path, line_number, str(exc)) from None
    return expected


def manifest_mismatch(name: str, graph, manifest: dict[str, tuple[int, int]]) -> str | None:
    """Warning text when a known dataset's counts drifted, else None."""
    if name not in manifest:
        return None
    nodes, edges = manifest[name]
    if graph.node_count == nodes and graph.edge_count == edges:
        return None
    return (
        f"{name}: expected {nodes} nodes / {edges} edges, "
        f"loaded {graph.node_count} / {graph.edge_count}"
    )

"""graph6 and edge-list I/O, plus deterministic certificate serialization."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .arith import to_decimal, to_pq
from .graph import MAX_ORDER, Graph, GraphError, from_edges

GRAPH6_SHORT_MAX = 62
GRAPH6_MAX_ORDER = 258047
_HEADER = ">>graph6<<"

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


class GraphParseError(ValueError):
    """Malformed graph6 or edge-list input.  ``offset`` is the byte position."""

    def __init__(self, message: str, offset: Optional[int] = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_ORDER:
        raise GraphError(f"graph6 supports n <= {GRAPH6_MAX_ORDER}, got {n}")
    if n <= GRAPH6_SHORT_MAX:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(s) -> Graph:
    if isinstance(s, bytes):
        s = s.decode("ascii", errors="replace")
    s = s.strip()
    base = 0
    if s.startswith(_HEADER):
        base = len(_HEADER)
        s = s[base:]
    if not s:
        raise GraphParseError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"byte {ord(ch)!r} outside graph6 range 63..126", base + i)
    n = ord(s[0]) - 63
    head = 1
    if n == 63:
        if len(s) < 4 or s[1] == "~":
            raise GraphParseError("orders above 258047 (8-byte header) are not supported", base + 1)
        n = sum((ord(ch) - 63) << sh for ch, sh in zip(s[1:4], (12, 6, 0)))
        if n <= GRAPH6_SHORT_MAX:
            raise GraphParseError(f"long-form header used for small order {n}", base + 1)
        head = 4
    if n > MAX_ORDER:
        raise GraphParseError(f"order {n} exceeds the supported maximum {MAX_ORDER}", base)
    total = n * (n - 1) // 2
    need = (total + 5) // 6
    if len(s) - head != need:
        raise GraphParseError(
            f"expected {need} data bytes for n={n}, found {len(s) - head}",
            base + min(len(s), need + head),
        )
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for pos in range(head, head + need):
        chunk = ord(s[pos]) - 63
        for b in range(5, -1, -1):
            bit = (chunk >> b) & 1
            if k >= total:
                if bit:
                    raise GraphParseError("nonzero padding bits", base + pos)
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph._trusted(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple]:
    """Yield ``(line_number, graph_or_error)``; blank lines are skipped."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield lineno, from_graph6(line)
        except GraphParseError as exc:
            yield lineno, exc


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphParseError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise GraphParseError(f"bad header line {lines[0]!r}; expected 'n m'") from None
    if len(lines) - 1 != m:
        raise GraphParseError(f"header declares {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphParseError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    try:
        return from_edges(n, edges)
    except GraphError as exc:
        raise GraphParseError(str(exc)) from None


def rational_field(x) -> Optional[dict]:
    if x is None:
        return None
    return {"exact": to_pq(x), "decimal": to_decimal(x)}


@dataclass
class BoundCertificate:
    """Verdict of one exhaustive check at one order.

    ``verdicts`` maps claim names to PASS / FAIL / SKIPPED.  Witnesses are
    graph6 strings kept sorted by canonical key, so serialization is stable.
    """

    claim: str
    graph_class: str
    n: int
    bound_lower: Optional[Fraction] = None
    bound_upper: Optional[Fraction] = None
    achieved_min: Optional[Fraction] = None
    achieved_max: Optional[Fraction] = None
    min_witnesses: list = field(default_factory=list)
    max_witnesses: list = field(default_factory=list)
    verdicts: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v != FAIL for v in self.verdicts.values())

    @property
    def status(self) -> str:
        if not self.passed:
            return FAIL
        if any(v == SKIPPED for v in self.verdicts.values()):
            return SKIPPED
        return PASS

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "class": self.graph_class,
            "n": self.n,
            "status": self.status,
            "bound_lower": rational_field(self.bound_lower),
            "bound_upper": rational_field(self.bound_upper),
            "achieved_min": to_pq(self.achieved_min) if self.achieved_min is not None else None,
            "achieved_min_decimal": to_decimal(self.achieved_min) if self.achieved_min is not None else None,
            "achieved_max": to_pq(self.achieved_max) if self.achieved_max is not None else None,
            "achieved_max_decimal": to_decimal(self.achieved_max) if self.achieved_max is not None else None,
            "min_witnesses": list(self.min_witnesses),
            "max_witnesses": list(self.max_witnesses),
            "verdicts": dict(sorted(self.verdicts.items())),
            "counterexamples": _jsonable(self.counterexamples),
            "details": _jsonable(self.details),
            "metadata": _jsonable(self.metadata),
        }


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return to_pq(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


CSV_COLUMNS = (
    "claim", "class", "n", "check", "verdict",
    "bound_lower", "bound_upper", "achieved_min", "achieved_max",
)


def emit_certificate(cert: BoundCertificate, fmt: str = "json") -> bytes:
    return emit_certificates([cert], fmt)


def emit_certificates(certs: Iterable[BoundCertificate], fmt: str = "json") -> bytes:
    """Serialize certificates; identical input always gives identical bytes."""
    certs = list(certs)
    if fmt == "json":
        payload = [c.as_dict() for c in certs]
        if len(payload) == 1:
            payload = payload[0]
        return (json.dumps(payload, indent=2, ensure_ascii=True) + "\n").encode("ascii")
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for c in certs:
            d = c.as_dict()
            for check, verdict in d["verdicts"].items():
                w.writerow([
                    d["claim"], d["class"], d["n"], check, verdict,
                    (d["bound_lower"] or {}).get("exact", ""),
                    (d["bound_upper"] or {}).get("exact", ""),
                    d["achieved_min"] or "", d["achieved_max"] or "",
                ])
        return buf.getvalue().encode("ascii")
    raise ValueError(f"unknown certificate format {fmt!r}; expected 'json' or 'csv'")

"""Exhaustive check of the two-sided bound on AZI(G) + AZI(complement of G)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional

from . import __version__
from .arith import to_decimal, to_pq
from .canon import canonical_form
from .enumeration import EnumSpec, enumerate_graphs
from .graph import Graph, complement, isomorphic, path_graph
from .indices import IndexDomainError, NgInputs, azi, ng_bounds
from .report import FAIL, PASS, SKIPPED, BoundCertificate, to_graph6


class EqualityClass(str, Enum):
    P4 = "P4"
    ODD_REGULAR = "ODD_REGULAR"
    NONE = "NONE"


@dataclass
class NgRecord:
    key: str
    graph6: str
    n: int
    status: str = PASS
    reason: str = ""
    azi_g: Optional[Fraction] = None
    azi_gbar: Optional[Fraction] = None
    total: Optional[Fraction] = None
    lower: Optional[Fraction] = None
    upper: Optional[Fraction] = None
    lower_tight: bool = False
    upper_tight: bool = False
    equality_class: EqualityClass = EqualityClass.NONE
    inputs: Optional[NgInputs] = None

    def as_dict(self) -> dict:
        def q(x):
            return None if x is None else to_pq(x)

        d = {
            "key": self.key,
            "graph6": self.graph6,
            "n": self.n,
            "status": self.status,
            "azi_g": q(self.azi_g),
            "azi_gbar": q(self.azi_gbar),
            "sum": q(self.total),
            "sum_decimal": None if self.total is None else to_decimal(self.total),
            "lower": q(self.lower),
            "upper": q(self.upper),
            "lower_tight": self.lower_tight,
            "upper_tight": self.upper_tight,
            "equality_class": self.equality_class.value,
        }
        if self.inputs is not None:
            d.update(alpha=self.inputs.alpha, beta=self.inputs.beta, p=self.inputs.p, p_bar=self.inputs.p_bar)
        if self.reason:
            d["reason"] = self.reason
        return d


_P4 = path_graph(4)


def classify_equality(rec: NgRecord, g: Graph) -> EqualityClass:
    """P4, an r-regular graph on 2r + 1 vertices, or neither."""
    if g.n == 4 and isomorphic(g, _P4):
        return EqualityClass.P4
    degs = set(g.degrees)
    if len(degs) == 1 and g.n == 2 * next(iter(degs)) + 1:
        return EqualityClass.ODD_REGULAR
    return EqualityClass.NONE


def ng_record(g: Graph) -> NgRecord:
    """Evaluate the bound on one graph whose complement is connected."""
    rec = NgRecord(key=canonical_form(g).decode("ascii"), graph6=to_graph6(g), n=g.n)
    try:
        inp = NgInputs.from_graph(g)
    except IndexDomainError as exc:
        rec.status, rec.reason = SKIPPED, str(exc)
        return rec
    gbar = complement(g)
    rec.inputs = inp
    rec.azi_g, rec.azi_gbar = azi(g), azi(gbar)
    rec.total = rec.azi_g + rec.azi_gbar
    rec.lower, rec.upper = ng_bounds(inp)
    rec.lower_tight = rec.total == rec.lower
    rec.upper_tight = rec.total == rec.upper
    rec.equality_class = classify_equality(rec, g)
    if not rec.lower <= rec.total <= rec.upper:
        rec.status, rec.reason = FAIL, "sum outside bounds"
    elif (rec.lower_tight and rec.upper_tight) != (rec.equality_class is not EqualityClass.NONE):
        rec.status, rec.reason = FAIL, "tightness disagrees with equality class"
    return rec


def ng_scan(n: int, workers=None) -> Iterator[NgRecord]:
    """One record per class with G and its complement both connected, in canonical order."""
    if n <= 3:
        raise ValueError(f"no graph on n <= 3 vertices has a connected complement (n={n})")
    spec = EnumSpec(n, complement_connected=True)
    for g in enumerate_graphs(spec, workers):
        yield ng_record(g)


def verify_ng(n: int, workers=None) -> BoundCertificate:
    records = list(ng_scan(n, workers))
    spec = EnumSpec(n, complement_connected=True)
    cert = BoundCertificate(
        claim="ng",
        graph_class="connected-with-connected-complement",
        n=n,
        metadata={
            "version": __version__,
            "enumeration": {"n": spec.n, "connected_only": spec.connected_only,
                            "complement_connected": spec.complement_connected},
            "class_size": len(records),
        },
    )
    evaluated = [r for r in records if r.status != SKIPPED]
    if evaluated:
        cert.achieved_min = min(r.total for r in evaluated)
        cert.achieved_max = max(r.total for r in evaluated)
    outside = [r for r in evaluated if not r.lower <= r.total <= r.upper]
    disagree = [
        r for r in evaluated
        if (r.lower_tight and r.upper_tight) != (r.equality_class is not EqualityClass.NONE)
    ]
    both = [r for r in evaluated if r.lower_tight and r.upper_tight]
    cert.verdicts = {
        "two_sided_bound": PASS if not outside else FAIL,
        "equality_iff_p4_or_odd_regular": PASS if not disagree else FAIL,
    }
    if any(r.status == SKIPPED for r in records):
        cert.verdicts["undefined_inputs"] = SKIPPED
    cert.min_witnesses = [r.graph6 for r in both]
    cert.counterexamples = [r.as_dict() for r in outside + disagree]
    cert.details = {
        "equality_witnesses": [{"graph6": r.graph6, "class": r.equality_class.value, "sum": r.total} for r in both],
        "lower_only_tight": [r.graph6 for r in evaluated if r.lower_tight and not r.upper_tight],
        "upper_only_tight": [r.graph6 for r in evaluated if r.upper_tight and not r.lower_tight],
        "skipped": [{"graph6": r.graph6, "reason": r.reason} for r in records if r.status == SKIPPED],
    }
    return cert


def records_to_jsonl(records) -> str:
    return "".join(json.dumps(r.as_dict(), sort_keys=False) + "\n" for r in records)


def records_summary_csv(records) -> str:
    """Per-order summary: class count, evaluated, skipped, failures, equality cases."""
    by_n = {}
    for r in records:
        row = by_n.setdefault(r.n, {"classes": 0, "evaluated": 0, "skipped": 0, "failed": 0, "equalities": 0})
        row["classes"] += 1
        if r.status == SKIPPED:
            row["skipped"] += 1
            continue
        row["evaluated"] += 1
        row["failed"] += r.status == FAIL
        row["equalities"] += r.lower_tight and r.upper_tight
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "classes", "evaluated", "skipped", "failed", "equalities"])
    for n in sorted(by_n):
        row = by_n[n]
        w.writerow([n, row["classes"], row["evaluated"], row["skipped"], row["failed"], row["equalities"]])
    return buf.getvalue()

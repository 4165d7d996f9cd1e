"""Exhaustive comparison of the closed-form engine against direct search."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .corona import corona, corona_identifiable
from .edgelist import serialize_edge_list
from .errors import CapacityError, IdcodeError
from .graph import MAX_VERTICES, Graph, is_identifiable
from .solver import min_identifying_code
from .theorem import gamma_id_corona


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every simple graph on vertices ``0..n-1``, ordered by edge-subset bit mask."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


def connected_labeled_graphs(n: int) -> Iterator[Graph]:
    return (g for g in labeled_graphs(n) if g.is_connected())


class VerificationMismatch(IdcodeError):
    def __init__(self, h: Graph, g: Graph, detail: str) -> None:
        self.h, self.g, self.detail = h, g, detail
        super().__init__(
            f"{detail}\nH:\n{serialize_edge_list(h)}G:\n{serialize_edge_list(g)}"
        )


@dataclass
class PairOutcome:
    tag: str
    theorem: int | None = None
    brute: int | None = None
    mismatch: str | None = None


def check_pair(h: Graph, g: Graph) -> PairOutcome:
    product, _ = corona(h, g)
    direct_ok = is_identifiable(product)
    if corona_identifiable(h, g) != direct_ok:
        return PairOutcome("T2.1-unidentifiable", mismatch=(
            f"identifiability criterion says {not direct_ok}, direct check says {direct_ok}"
        ))
    if not direct_ok:
        return PairOutcome("T2.1-unidentifiable")
    try:
        res = gamma_id_corona(h, g)
    except AssertionError as exc:
        return PairOutcome("error", mismatch=str(exc))
    brute = min_identifying_code(product).optimum
    out = PairOutcome(res.case_tag, res.value, brute)
    if res.value != brute:
        out.mismatch = f"theorem {res.value} ({res.case_tag}) != brute force {brute}"
    return out


def _check_batch(h: Graph, gs: list[Graph]) -> list[PairOutcome]:
    return [check_pair(h, g) for g in gs]


@dataclass
class SweepReport:
    max_h: int
    max_g: int
    pairs: int = 0
    identifiable: int = 0
    skipped: int = 0
    mismatches: int = 0
    histogram: dict[str, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "max_h": self.max_h,
            "max_g": self.max_g,
            "pairs": self.pairs,
            "identifiable": self.identifiable,
            "skipped_unidentifiable": self.skipped,
            "mismatches": self.mismatches,
            "histogram": dict(sorted(self.histogram.items())),
        }


def verify_sweep(max_h: int, max_g: int, jobs: int = 1) -> SweepReport:
    """Check every connected labeled ``H`` (``|V(H)| <= max_h``) against every labeled ``G``.

    Raises :class:`VerificationMismatch` on the first disagreement, in
    enumeration order, regardless of ``jobs``.
    """
    if max_h < 1 or max_g < 1:
        raise ValueError("sizes must be at least 1")
    if max_h + max_h * max_g > MAX_VERTICES:
        raise CapacityError(f"products of up to {max_h + max_h * max_g} vertices exceed {MAX_VERTICES}")
    hs = [h for k in range(1, max_h + 1) for h in connected_labeled_graphs(k)]
    gs = [g for k in range(1, max_g + 1) for g in labeled_graphs(k)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_check_batch, hs, [gs] * len(hs)))
    else:
        batches = [_check_batch(h, gs) for h in hs]

    report = SweepReport(max_h, max_g)
    hist: Counter[str] = Counter()
    for h, outcomes in zip(hs, batches):
        for g, out in zip(gs, outcomes):
            if out.mismatch:
                raise VerificationMismatch(h, g, out.mismatch)
            report.pairs += 1
            hist[out.tag] += 1
            if out.tag == "T2.1-unidentifiable":
                report.skipped += 1
            else:
                report.identifiable += 1
    report.histogram = dict(hist)
    return report

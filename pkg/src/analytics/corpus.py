"""
Corpus verification: every circulant up to a bound, one per multiplier
class, with formula values cross-checked against the oracle and the
exhaustive searches.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import pandas as pd

import config
from core.autgroup import group_order, is_arc_transitive
from core.circulant import CirculantSpec, all_connection_sets, build, multiplier_canonical
from core.symmetry import SymmetryEngine, is_determining, verify_distinguishing
from core.twins import TwinKind, circulant_quotient_step, detect_twins_circulant, detect_twins_generic
from utils.helpers import format_duration

logger = logging.getLogger(__name__)


@dataclass
class CorpusFailure:
    graph_spec: str
    check: str
    detail: str

    def to_dict(self) -> Dict:
        return {"graph_spec": self.graph_spec, "check": self.check, "detail": self.detail}


@dataclass
class CorpusSummary:
    max_n: int
    graphs: int = 0
    checks: Dict[str, int] = field(default_factory=dict)
    failures: List[CorpusFailure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def count(self, check: str):
        self.checks[check] = self.checks.get(check, 0) + 1

    def fail(self, spec_name: str, check: str, detail: str):
        logger.error(f"{spec_name}: {check} failed ({detail})")
        self.failures.append(CorpusFailure(spec_name, check, detail))

    def to_dict(self) -> Dict:
        return {
            "schema": config.EXPORT_CONFIG["json_schema"],
            "max_n": self.max_n,
            "graphs": self.graphs,
            "checks": dict(sorted(self.checks.items())),
            "failures": [f.to_dict() for f in self.failures],
            "ok": self.ok,
        }

    def frame(self) -> pd.DataFrame:
        rows = [{"check": name, "runs": runs,
                 "failures": sum(1 for f in self.failures if f.check == name)}
                for name, runs in sorted(self.checks.items())]
        return pd.DataFrame(rows)


class CorpusVerifier:
    """Formula-versus-oracle sweep over all circulants of order at most max_n"""

    def __init__(self, max_n: int, mode: str = "both"):
        self.logger = logging.getLogger(__name__)
        if max_n < 1:
            raise ValueError(f"max_n must be positive, got {max_n}")
        self.max_n = max_n
        self.engine = SymmetryEngine(mode)
        self.oracle_max = config.ORACLE_CONFIG["max_oracle_order"]
        self.detection_max = self.oracle_max

    def run(self) -> CorpusSummary:
        start = time.perf_counter()
        summary = CorpusSummary(self.max_n)
        try:
            for n in range(1, self.max_n + 1):
                sets = all_connection_sets(n)
                if n <= self.detection_max:
                    self.check_twin_detection(n, sets, summary)
                classes = {}
                for A in sets:
                    classes.setdefault(multiplier_canonical(A), A)
                for key in sorted(classes, key=lambda k: (len(k), k)):
                    self.check_graph(CirculantSpec(n, classes[key]), summary)
                self.logger.info(f"n={n}: {len(sets)} connection sets, {len(classes)} multiplier classes")
        except Exception as e:
            self.logger.error(f"Error during corpus verification: {e}")
            raise
        summary.elapsed = time.perf_counter() - start
        self.logger.info(f"Corpus to n={self.max_n}: {summary.graphs} graphs, "
                         f"{len(summary.failures)} failures in {format_duration(summary.elapsed)}")
        return summary

    def check_twin_detection(self, n: int, sets, summary: CorpusSummary):
        """Coset characterization against neighborhood comparison, every connection set"""
        for A in sets:
            spec = CirculantSpec(n, A)
            coset = detect_twins_circulant(spec)
            generic = detect_twins_generic(build(spec))
            summary.count("twin_detection")
            if coset.kind is not generic.kind or set(coset.classes) != set(generic.classes):
                summary.fail(spec.name, "twin_detection",
                             f"coset {coset.kind.value} vs generic {generic.kind.value}")

    def check_graph(self, spec: CirculantSpec, summary: CorpusSummary):
        graph = build(spec)
        summary.graphs += 1
        report = self.engine.analyze(spec, arc_transitivity=False)

        if spec.n <= self.oracle_max:
            summary.count("group_order")
            oracle = group_order(graph)
            if oracle != report.order:
                summary.fail(spec.name, "group_order", f"structural {report.order} vs oracle {oracle}")

        for name, measure in (("det", report.det), ("dist", report.dist)):
            if measure.exhaustive_value is None:
                continue
            summary.count(name)
            if measure.confirmed is False:
                summary.fail(spec.name, name,
                             f"{measure.method} [{measure.lo}, {measure.hi}] vs exhaustive {measure.exhaustive_value}")

        if report.determining_set is not None:
            self._check_determining(spec, graph, report.determining_set, summary)
        if report.distinguishing_coloring is not None:
            summary.count("coloring")
            if not verify_distinguishing(graph, report.distinguishing_coloring):
                summary.fail(spec.name, "coloring", "returned coloring is preserved by a non-identity automorphism")

        partition = detect_twins_circulant(spec)
        if partition.kind is TwinKind.NONADJACENT and spec.n <= 20:
            summary.count("arc_transitivity")
            quotient = circulant_quotient_step(spec, partition).quotient
            mine, theirs = is_arc_transitive(graph), is_arc_transitive(quotient)
            if mine != theirs:
                summary.fail(spec.name, "arc_transitivity", f"graph {mine} vs quotient {theirs}")

    def _check_determining(self, spec: CirculantSpec, graph, dset, summary: CorpusSummary):
        summary.count("determining_set")
        if not is_determining(graph, dset):
            summary.fail(spec.name, "determining_set", f"{list(dset)} is not determining")
            return
        extra: Optional[int] = next((v for v in range(graph.order) if v not in dset), None)
        if extra is not None:
            summary.count("determining_superset")
            if not is_determining(graph, list(dset) + [extra]):
                summary.fail(spec.name, "determining_superset", f"{list(dset)} + {extra} is not determining")


def verify_corpus(max_n: int, mode: str = "both") -> CorpusSummary:
    return CorpusVerifier(max_n, mode).run()

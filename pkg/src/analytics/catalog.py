"""
Catalog jobs: table scans of two- and three-generator circulants with
twins, circulant families with prescribed twin classes, and twin-free
circulants with co-twins. Results come as row objects and pandas frames.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import pandas as pd

import config
from core.circulant import CirculantSpec, ConnectionSet, build, multiplier_canonical
from core.cotwins import CoTwinPairing, detect_cotwins_circulant
from core.graph import Graph
from core.symmetry import SymmetryReport, symmetry_report
from core.twins import TwinKind, TwinPartition, detect_twins_circulant
from core.zn import cosets, subgroup

logger = logging.getLogger(__name__)


# -- fingerprints ---------------------------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism invariants; different fingerprints certify non-isomorphism"""
    order: int
    valency: Optional[int]
    components: int
    bipartite: bool
    triangles: int
    # per vertex, sorted (2 * common neighbors + adjacency) towards every other vertex
    common_neighbors: Tuple[Tuple[int, ...], ...]

    def summary(self) -> Dict:
        return {
            "order": self.order,
            "valency": self.valency,
            "components": self.components,
            "bipartite": self.bipartite,
            "triangles": self.triangles,
        }


def fingerprint(graph: Graph) -> Fingerprint:
    M = graph.adjacency_matrix().astype(np.int64)
    M2 = M @ M
    triangles = int(np.trace(M2 @ M)) // 6
    key = 2 * M2 + M
    np.fill_diagonal(key, -1)
    rows = np.sort(key, axis=1)
    if len(rows):
        rows = rows[np.lexsort(rows.T[::-1])]
    return Fingerprint(
        order=graph.order,
        valency=graph.is_regular(),
        components=graph.component_count(),
        bipartite=graph.is_bipartite(),
        triangles=triangles,
        common_neighbors=tuple(tuple(r) for r in rows.tolist()),
    )


@dataclass
class DistinctnessCertificate:
    """Pairwise non-isomorphism evidence for a list of graphs"""
    labels: List[str]
    by_fingerprint: int = 0
    by_vf2: List[Tuple[str, str]] = field(default_factory=list)
    isomorphic: List[Tuple[str, str]] = field(default_factory=list)
    unresolved: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def all_distinct(self) -> bool:
        return not self.isomorphic and not self.unresolved

    def to_dict(self) -> Dict:
        return {
            "graphs": len(self.labels),
            "pairs_separated_by_fingerprint": self.by_fingerprint,
            "pairs_separated_by_vf2": [list(p) for p in self.by_vf2],
            "isomorphic_pairs": [list(p) for p in self.isomorphic],
            "unresolved_pairs": [list(p) for p in self.unresolved],
        }


def certify_distinct(graphs: Sequence[Graph], labels: Sequence[str],
                     prints: Optional[Sequence[Fingerprint]] = None) -> DistinctnessCertificate:
    """Fingerprints first; ties resolved by VF2 isomorphism up to the configured order"""
    prints = prints or [fingerprint(g) for g in graphs]
    resolve_max = config.CATALOG_CONFIG["fingerprint_resolve_max_n"]
    cert = DistinctnessCertificate(list(labels))
    for a, b in combinations(range(len(graphs)), 2):
        if prints[a] != prints[b]:
            cert.by_fingerprint += 1
            continue
        pair = (labels[a], labels[b])
        if graphs[a].order > resolve_max:
            cert.unresolved.append(pair)
            logger.warning(f"Fingerprints of {pair[0]} and {pair[1]} agree; order above {resolve_max}, unresolved")
        elif nx.is_isomorphic(graphs[a].to_networkx(), graphs[b].to_networkx()):
            cert.isomorphic.append(pair)
        else:
            cert.by_vf2.append(pair)
    return cert


# -- catalog entries ------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    spec: CirculantSpec
    twins: TwinPartition
    cotwins: Optional[CoTwinPairing]
    fingerprint: Fingerprint
    symmetry: Optional[SymmetryReport] = None

    def to_dict(self) -> Dict:
        data = {
            "graph_spec": self.spec.name,
            "canonical": self.spec.canonical,
            "twins": {"kind": self.twins.kind.value, "w": self.twins.generator,
                      "t": self.twins.class_size if self.twins.kind is not TwinKind.NONE else None},
            "cotwins": self.cotwins.kind.value if self.cotwins is not None else None,
            "fingerprint": self.fingerprint.summary(),
        }
        if self.symmetry is not None:
            data["symmetry"] = self.symmetry.to_dict()
        return data


def catalog_entry(spec: CirculantSpec, with_symmetry: bool = False) -> CatalogEntry:
    twins = detect_twins_circulant(spec)
    pairing = detect_cotwins_circulant(spec) if twins.kind is TwinKind.NONE else None
    report = symmetry_report(spec, mode="formula", arc_transitivity=False) if with_symmetry else None
    return CatalogEntry(spec, twins, pairing, fingerprint(build(spec)), report)


# -- table patterns -------------------------------------------------------------

@dataclass(frozen=True)
class TablePattern:
    label: str
    kind: TwinKind
    w: Callable[[int], int]
    matches: Callable[[int, Tuple[int, ...]], bool]


def _sporadic(n: int, gens: Tuple[int, ...]) -> Callable[[int, Tuple[int, ...]], bool]:
    return lambda m, g: m == n and g == gens


# sporadic rows come first and win over family rows
TABLE1_PATTERNS = (
    TablePattern("C_6(1,3)", TwinKind.NONADJACENT, lambda n: 2, _sporadic(6, (1, 3))),
    TablePattern("K_4", TwinKind.ADJACENT, lambda n: 1, _sporadic(4, (1, 2))),
    TablePattern("C_8(1,3)", TwinKind.NONADJACENT, lambda n: 2, _sporadic(8, (1, 3))),
    TablePattern("K_5", TwinKind.ADJACENT, lambda n: 1, _sporadic(5, (1, 2))),
    TablePattern("i+j=n/2", TwinKind.NONADJACENT, lambda n: n // 2,
                 lambda n, g: 2 * (g[0] + g[1]) == n),
)

TABLE2_PATTERNS = (
    TablePattern("C_10(1,3,5)", TwinKind.NONADJACENT, lambda n: 2, _sporadic(10, (1, 3, 5))),
    TablePattern("K_6", TwinKind.ADJACENT, lambda n: 1, _sporadic(6, (1, 2, 3))),
    TablePattern("C_12(1,3,5)", TwinKind.NONADJACENT, lambda n: 2, _sporadic(12, (1, 3, 5))),
    TablePattern("K_7", TwinKind.ADJACENT, lambda n: 1, _sporadic(7, (1, 2, 3))),
    TablePattern("i+j=k=n/2", TwinKind.ADJACENT, lambda n: n // 2,
                 lambda n, g: g[0] + g[1] == g[2] and 2 * g[2] == n),
    TablePattern("i+j=n/3 & 2i+j=k", TwinKind.NONADJACENT, lambda n: n // 3,
                 lambda n, g: 3 * (g[0] + g[1]) == n and 2 * g[0] + g[1] == g[2]),
    TablePattern("i+k=2j=n/2", TwinKind.NONADJACENT, lambda n: n // 2,
                 lambda n, g: 2 * (g[0] + g[2]) == n and 4 * g[1] == n),
)


def match_pattern(patterns: Sequence[TablePattern], n: int, gens: Tuple[int, ...]) -> Optional[TablePattern]:
    for pattern in patterns:
        if pattern.matches(n, gens):
            return pattern
    return None


@dataclass(frozen=True)
class ScanRecord:
    """One connected circulant of a table scan, with detection and predicted row"""
    n: int
    generators: Tuple[int, ...]
    partition: TwinPartition
    pattern: Optional[TablePattern]

    @property
    def has_twins(self) -> bool:
        return self.partition.kind is not TwinKind.NONE

    @property
    def agrees(self) -> bool:
        """Pattern membership, kind and w all match direct detection"""
        if self.pattern is None:
            return not self.has_twins
        return (self.partition.kind is self.pattern.kind
                and self.partition.generator == self.pattern.w(self.n))

    def row(self) -> Dict:
        data = {"n": self.n}
        for name, g in zip("ijk", self.generators):
            data[name] = g
        data["kind"] = self.partition.kind.value
        data["w"] = self.partition.generator
        data["pattern"] = self.pattern.label if self.pattern is not None else ""
        return data


def _generator_tuples(n: int, size: int) -> Iterator[Tuple[int, ...]]:
    for gens in combinations(range(1, n // 2 + 1), size):
        if gcd(n, *gens) == 1:
            yield gens


def scan_generators(max_n: int, size: int) -> List[ScanRecord]:
    """Every connected C_n(g_1,...,g_size) with 0 < g_1 < ... <= n/2, n <= max_n"""
    patterns = TABLE1_PATTERNS if size == 2 else TABLE2_PATTERNS
    records = []
    for n in range(2 * size, max_n + 1):
        for gens in _generator_tuples(n, size):
            spec = CirculantSpec(n, ConnectionSet.generated_by(n, gens))
            records.append(ScanRecord(n, gens, detect_twins_circulant(spec), match_pattern(patterns, n, gens)))
    return records


def pattern_mismatches(records: Sequence[ScanRecord]) -> List[ScanRecord]:
    return [r for r in records if not r.agrees]


def _classify(max_n: int, size: int, minimum: int) -> List[ScanRecord]:
    if max_n < minimum:
        raise ValueError(f"max_n must be at least {minimum}, got {max_n}")
    records = scan_generators(max_n, size)
    mismatches = pattern_mismatches(records)
    for r in mismatches:
        logger.error(f"Table pattern disagrees with detection at C_{r.n}{r.generators}: "
                     f"{r.partition.kind.value} w={r.partition.generator}, "
                     f"pattern {r.pattern.label if r.pattern else None}")
    rows = [r for r in records if r.has_twins]
    logger.info(f"{size}-generator scan to n={max_n}: {len(records)} graphs, {len(rows)} with twins, "
                f"{len(mismatches)} pattern mismatches")
    return rows


def classify_two_generator(max_n: int) -> List[ScanRecord]:
    """Connected C_n(i,j) with twins"""
    return _classify(max_n, 2, 4)


def classify_three_generator(max_n: int) -> List[ScanRecord]:
    """Connected C_n(i,j,k) with twins"""
    return _classify(max_n, 3, 6)


# -- twin-class families ----------------------------------------------------------

@dataclass
class TwinClassFamily:
    n: int
    w: int
    blocks: List[Tuple[int, ...]]
    entries: List[CatalogEntry]
    certificate: Optional[DistinctnessCertificate]

    @property
    def specs(self) -> List[CirculantSpec]:
        return [e.spec for e in self.entries]

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "w": self.w,
            "blocks": [list(b) for b in self.blocks],
            "graphs": [e.to_dict() for e in self.entries],
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }


def coset_blocks(n: int, w: int) -> List[Tuple[int, ...]]:
    """Nontrivial cosets of <w>, each merged with its negative"""
    sub = subgroup(n, w)
    blocks = set()
    for coset in cosets(sub):
        if 0 in coset:
            continue
        blocks.add(tuple(sorted(set(coset) | {(n - a) % n for a in coset})))
    return sorted(blocks)


def enumerate_with_twin_classes(n: int, w: int, certify: bool = True) -> TwinClassFamily:
    """Every nonempty union of inverse-closed coset blocks of <w>"""
    sub = subgroup(n, w)
    if sub.order in (1, n):
        logger.warning(f"<{w}> in Z_{n} has order {sub.order}; no proper nontrivial cosets")
        return TwinClassFamily(n, w, [], [], None)
    blocks = coset_blocks(n, w)
    entries = []
    for choice in range(1, 1 << len(blocks)):
        members = [a for i, block in enumerate(blocks) if (choice >> i) & 1 for a in block]
        entries.append(catalog_entry(CirculantSpec(n, ConnectionSet(n, tuple(members)))))
    entries.sort(key=lambda e: (len(e.spec.connection_set), e.spec.connection_set.members))
    certificate = None
    if certify:
        certificate = certify_distinct([build(e.spec) for e in entries], [e.spec.name for e in entries],
                                       [e.fingerprint for e in entries])
    logger.info(f"<{w}> in Z_{n}: {len(blocks)} blocks, {len(entries)} circulants")
    return TwinClassFamily(n, w, blocks, entries, certificate)


# -- twin-free circulants with co-twins ---------------------------------------------

@dataclass
class CoTwinEnumeration:
    n: int
    entries: List[CatalogEntry]
    candidates: int
    certificate: Optional[DistinctnessCertificate]

    @property
    def specs(self) -> List[CirculantSpec]:
        return [e.spec for e in self.entries]

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "candidates": self.candidates,
            "graphs": [e.to_dict() for e in self.entries],
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }


def cotwin_candidates(n: int) -> Iterator[ConnectionSet]:
    """
    Connection sets with k not in A, |A| = k-1 and k+a not in A, k = n/2.

    Exactly one of a, a+k is chosen for every 0 < a < k, and inverse closure
    ties the choice at a to the opposite choice at k-a; even k leaves nothing.
    """
    k = n // 2
    if n % 2 or k % 2 == 0:
        return
    free = list(range(1, (k + 1) // 2))
    for choice in range(1 << len(free)):
        members = []
        for i, a in enumerate(free):
            upper = (choice >> i) & 1
            members.append(a + k if upper else a)
            members.append(k - a if upper else 2 * k - a)
        yield ConnectionSet(n, tuple(members))


def enumerate_twinfree_cotwin_circulants(n: int, certify: bool = True) -> CoTwinEnumeration:
    """Twin-free circulants of order n with co-twins, one per multiplier class"""
    if n % 2:
        raise ValueError(f"Co-twin circulants need even order, got {n}")
    seen = {}
    candidates = 0
    for A in cotwin_candidates(n):
        candidates += 1
        spec = CirculantSpec(n, A)
        if detect_twins_circulant(spec).kind is not TwinKind.NONE:
            continue
        if not detect_cotwins_circulant(spec).is_positive:
            continue
        key = multiplier_canonical(A)
        seen.setdefault(key, CirculantSpec(n, ConnectionSet(n, key)))
    entries = [catalog_entry(seen[key]) for key in sorted(seen)]
    certificate = None
    if certify and entries:
        certificate = certify_distinct([build(e.spec) for e in entries], [e.spec.name for e in entries],
                                       [e.fingerprint for e in entries])
        if certificate.isomorphic:
            logger.warning(f"Order {n}: isomorphic multiplier classes {certificate.isomorphic}")
    logger.info(f"Order {n}: {candidates} candidates, {len(entries)} co-twin circulants up to multipliers")
    return CoTwinEnumeration(n, entries, candidates, certificate)


# -- jobs ---------------------------------------------------------------------------

def table_frame(records: Sequence[ScanRecord]) -> pd.DataFrame:
    frame = pd.DataFrame([r.row() for r in records])
    if frame.empty:
        return frame
    return frame.sort_values(list(frame.columns[:-3])).reset_index(drop=True)


def cotwin_orders_frame(max_n: int) -> pd.DataFrame:
    rows = []
    for n in range(6, max_n + 1, 2):
        result = enumerate_twinfree_cotwin_circulants(n, certify=n <= config.CATALOG_CONFIG["fingerprint_resolve_max_n"])
        rows.append({
            "n": n,
            "k": n // 2,
            "count": len(result.entries),
            "graphs": ";".join(spec.name for spec in result.specs),
            "distinct": result.certificate.all_distinct if result.certificate else None,
        })
    return pd.DataFrame(rows)


def twin_class_families_frame(max_n: int) -> pd.DataFrame:
    """One row per proper nontrivial subgroup <w>; families with many blocks are counted only"""
    max_blocks = config.CATALOG_CONFIG["family_max_blocks"]
    rows = []
    for n in range(4, max_n + 1):
        for w in range(2, n):
            if n % w:
                continue
            blocks = coset_blocks(n, w)
            row = {"n": n, "w": w, "t": n // w, "blocks": len(blocks), "graphs": (1 << len(blocks)) - 1,
                   "distinct_fingerprints": None, "unresolved": None}
            if len(blocks) <= max_blocks:
                family = enumerate_with_twin_classes(n, w)
                row["distinct_fingerprints"] = len({e.fingerprint for e in family.entries})
                row["unresolved"] = len(family.certificate.unresolved)
            rows.append(row)
    return pd.DataFrame(rows)


def run_job(job: str, max_n: Optional[int] = None) -> pd.DataFrame:
    """Frame for a catalog job by name"""
    max_n = max_n or config.CATALOG_CONFIG["default_max_n"]
    if job == "table1":
        return table_frame(classify_two_generator(max_n))
    if job == "table2":
        return table_frame(classify_three_generator(max_n))
    if job == "cotwin-orders":
        return cotwin_orders_frame(max_n)
    if job == "twin-class-families":
        return twin_class_families_frame(max_n)
    raise ValueError(f"Unknown catalog job '{job}'; expected one of {', '.join(config.CATALOG_CONFIG['jobs'])}")


def compare_with_golden(frame: pd.DataFrame, golden_path) -> Dict:
    """Row-set comparison of a job frame against a golden CSV"""
    golden = pd.read_csv(golden_path, keep_default_na=False)
    columns = list(golden.columns)
    ours = frame[columns].astype(str)
    theirs = golden.astype(str)
    merged = ours.merge(theirs, how="outer", on=columns, indicator=True)
    extra = merged[merged["_merge"] == "left_only"][columns]
    missing = merged[merged["_merge"] == "right_only"][columns]
    return {
        "match": extra.empty and missing.empty,
        "extra": extra.to_dict(orient="records"),
        "missing": missing.to_dict(orient="records"),
    }

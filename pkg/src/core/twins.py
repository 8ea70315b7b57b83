"""
Twin detection, twin quotient graphs and iterated quotient sequences.

Circulant inputs are handled algebraically: C_n(A) has nonadjacent twins
iff A is a union of nontrivial cosets of some <w>, and adjacent twins iff
A + {0} is a union of cosets of some <w>. The twin class of 0 is then <w>
for the w of largest order.
"""

import logging
from collections import OrderedDict
from dataclasses import dataclass
from enum import Enum
from math import factorial, prod
from typing import Dict, List, Optional, Tuple

from core.circulant import (CirculantSpec, ConnectionSet, GraphSource, build,
                            complement_spec, resolve)
from core.errors import InvariantViolation, PartitionKindError, WrongKindError
from core.graph import Graph
from core.zn import cosets, divisors, is_union_of_cosets, subgroup

logger = logging.getLogger(__name__)


class TwinKind(Enum):
    NONADJACENT = "nonadjacent"
    ADJACENT = "adjacent"
    NONE = "none"

    @property
    def flipped(self) -> "TwinKind":
        """Kind seen in the complement graph"""
        if self is TwinKind.NONADJACENT:
            return TwinKind.ADJACENT
        if self is TwinKind.ADJACENT:
            return TwinKind.NONADJACENT
        return TwinKind.NONE


@dataclass(frozen=True)
class TwinPartition:
    """Twin classes of one kind; kind NONE carries singleton classes"""
    kind: TwinKind
    classes: Tuple[Tuple[int, ...], ...]
    generator: Optional[int] = None
    # every w whose cosets pass the test, largest subgroup first
    passing_generators: Tuple[int, ...] = ()

    @property
    def order(self) -> int:
        return sum(len(c) for c in self.classes)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def class_sizes(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.class_sizes)) <= 1

    @property
    def class_size(self) -> Optional[int]:
        """Common class size t, None for non-uniform partitions"""
        sizes = set(self.class_sizes)
        return sizes.pop() if len(sizes) == 1 else None

    @property
    def rejected_generators(self) -> Tuple[int, ...]:
        """Passing generators of smaller order than the chosen one"""
        return tuple(w for w in self.passing_generators if w != self.generator)

    @property
    def kernel_order(self) -> int:
        """prod(t_i!), the order of the group generated by twin transpositions"""
        return prod(factorial(len(c)) for c in self.classes)

    def class_index(self) -> Dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}

    def twin_cover(self) -> List[int]:
        """All but the least vertex of every class"""
        return sorted(v for cls in self.classes for v in cls[1:])

    def to_dict(self) -> Dict:
        return {
            "kind": self.kind.value,
            "generator": self.generator,
            "class_size": self.class_size,
            "class_count": self.class_count,
            "classes": [list(c) for c in self.classes],
            "passing_generators": list(self.passing_generators),
            "rejected_by_maximality": list(self.rejected_generators),
        }


@dataclass(frozen=True)
class QuotientStep:
    source: Graph
    kind: TwinKind
    classes: Tuple[Tuple[int, ...], ...]
    quotient: Graph
    source_spec: Optional[CirculantSpec] = None
    quotient_spec: Optional[CirculantSpec] = None

    @property
    def class_size(self) -> Optional[int]:
        sizes = {len(c) for c in self.classes}
        return sizes.pop() if len(sizes) == 1 else None

    def to_dict(self) -> Dict:
        return {
            "graph_spec": self.source_spec.name if self.source_spec else None,
            "kind": self.kind.value,
            "t": self.class_size,
            "order": self.source.order,
            "quotient_spec": self.quotient_spec.name if self.quotient_spec else None,
            "quotient_order": self.quotient.order,
        }


@dataclass(frozen=True)
class QuotientSequence:
    steps: Tuple[QuotientStep, ...]
    terminal: Graph
    terminal_spec: Optional[CirculantSpec] = None

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def kinds(self) -> Tuple[TwinKind, ...]:
        return tuple(step.kind for step in self.steps)

    @property
    def graphs(self) -> Tuple[Graph, ...]:
        """Input graph followed by every quotient"""
        if not self.steps:
            return (self.terminal,)
        return (self.steps[0].source,) + tuple(step.quotient for step in self.steps)

    def to_dict(self) -> Dict:
        return {
            "steps": [step.to_dict() for step in self.steps],
            "terminal": {
                "graph_spec": self.terminal_spec.name if self.terminal_spec else None,
                "order": self.terminal.order,
                "edges": self.terminal.edge_count,
            },
        }


# -- detection ----------------------------------------------------------------

def _group_by(keys: List[int]) -> List[Tuple[int, ...]]:
    groups: "OrderedDict[int, List[int]]" = OrderedDict()
    for v, key in enumerate(keys):
        groups.setdefault(key, []).append(v)
    # insertion order is already by minimum vertex
    return [tuple(g) for g in groups.values()]


def detect_twins_generic(graph: Graph) -> TwinPartition:
    """Group by equal open neighborhoods, else by equal closed neighborhoods"""
    open_classes = _group_by(list(graph.rows))
    if any(len(c) > 1 for c in open_classes):
        return TwinPartition(TwinKind.NONADJACENT, tuple(open_classes))
    closed_classes = _group_by([graph.closed_row(u) for u in range(graph.order)])
    if any(len(c) > 1 for c in closed_classes):
        return TwinPartition(TwinKind.ADJACENT, tuple(closed_classes))
    return TwinPartition(TwinKind.NONE, tuple((v,) for v in range(graph.order)))


def _passing_generators(n: int, S: Tuple[int, ...], include_trivial: bool) -> List[int]:
    passing = []
    # subgroups of Z_n are <n/d>, visited by decreasing order d
    for d in reversed(divisors(n)):
        if d == 1:
            continue
        w = n // d % n
        if is_union_of_cosets(S, subgroup(n, w), include_trivial):
            passing.append(w)
    return passing


def detect_twins_circulant(spec: CirculantSpec) -> TwinPartition:
    """Coset characterization of twins in C_n(A)"""
    n = spec.n
    A = spec.connection_set.members
    for kind, S, include_trivial in (
        (TwinKind.NONADJACENT, A, False),
        (TwinKind.ADJACENT, A + (0,), True),
    ):
        passing = _passing_generators(n, S, include_trivial)
        if passing:
            w = passing[0]
            classes = tuple(cosets(subgroup(n, w)))
            logger.debug(f"{spec.name}: {kind.value} twins, w={w}, passing={passing}")
            return TwinPartition(kind, classes, generator=w, passing_generators=tuple(passing))
    return TwinPartition(TwinKind.NONE, tuple((v,) for v in range(n)))


def detect_twins(source: GraphSource) -> TwinPartition:
    graph, spec = resolve(source)
    return detect_twins_circulant(spec) if spec else detect_twins_generic(graph)


# -- quotients ----------------------------------------------------------------

def quotient(graph: Graph, partition: TwinPartition) -> QuotientStep:
    """Collapse each twin class to one vertex; vertex i of the result is class i"""
    if partition.kind is TwinKind.NONE:
        raise PartitionKindError("Cannot form a quotient from a twin-free partition")
    if partition.order != graph.order:
        raise ValueError(f"Partition covers {partition.order} vertices, graph has {graph.order}")
    reps = [cls[0] for cls in partition.classes]
    rows = []
    for i, u in enumerate(reps):
        row = 0
        for j, v in enumerate(reps):
            if i != j and (graph.rows[u] >> v) & 1:
                row |= 1 << j
        rows.append(row)
    return QuotientStep(
        source=graph,
        kind=partition.kind,
        classes=partition.classes,
        quotient=Graph._trusted(len(reps), rows),
    )


def quotient_circulant(spec: CirculantSpec, partition: TwinPartition) -> CirculantSpec:
    """C_m(A mod m) for a nonadjacent partition with class size d, m = n/d"""
    if partition.kind is TwinKind.NONE:
        raise PartitionKindError("Cannot form a quotient from a twin-free partition")
    if partition.kind is not TwinKind.NONADJACENT:
        raise WrongKindError("Circulant quotient needs a nonadjacent partition; use the complement route")
    d = partition.class_size
    if d is None or spec.n % d:
        raise WrongKindError(f"Class size {d} does not divide n={spec.n}")
    m = spec.n // d
    reduced = {a % m for a in spec.connection_set.members}
    return CirculantSpec(m, ConnectionSet(m, tuple(reduced)))


def circulant_quotient_step(spec: CirculantSpec, partition: TwinPartition) -> QuotientStep:
    """Quotient step of C_n(A) carrying the circulant spec of the quotient"""
    graph = build(spec)
    step = quotient(graph, partition)
    if partition.kind is TwinKind.NONADJACENT:
        q_spec = quotient_circulant(spec, partition)
    else:
        # adjacent quotient of G is the complement of the nonadjacent quotient of its complement
        co = complement_spec(spec)
        co_partition = TwinPartition(TwinKind.NONADJACENT, partition.classes, partition.generator)
        q_spec = complement_spec(quotient_circulant(co, co_partition))
    return QuotientStep(
        source=graph,
        kind=partition.kind,
        classes=partition.classes,
        quotient=step.quotient,
        source_spec=spec,
        quotient_spec=q_spec,
    )


def quotient_sequence(source: GraphSource) -> QuotientSequence:
    """Alternate twin quotients until the graph is twin-free"""
    graph, spec = resolve(source)
    steps: List[QuotientStep] = []
    while True:
        if spec is not None:
            partition = detect_twins_circulant(spec)
        else:
            partition = detect_twins_generic(graph)
        if partition.kind is TwinKind.NONE:
            break
        if spec is not None:
            step = circulant_quotient_step(spec, partition)
            if build(step.quotient_spec) != step.quotient:
                raise InvariantViolation(f"Circulant quotient of {spec.name} disagrees with the collapsed graph")
            spec = step.quotient_spec
        else:
            step = quotient(graph, partition)
        steps.append(step)
        graph = step.quotient
    logger.info(f"Quotient sequence: {len(steps)} step(s), terminal order {graph.order}")
    return QuotientSequence(tuple(steps), graph, spec)


def complement_chain(source: GraphSource) -> QuotientSequence:
    """Quotient sequence of the complement graph"""
    graph, spec = resolve(source)
    return quotient_sequence(complement_spec(spec) if spec else graph.complement())


def chains_are_complementary(chain: QuotientSequence, other: QuotientSequence) -> bool:
    """Kinds flip, class sizes match and every graph is the other's complement"""
    if len(chain) != len(other):
        return False
    for a, b in zip(chain.steps, other.steps):
        if a.kind.flipped is not b.kind or a.classes != b.classes:
            return False
    return all(g.complement() == h for g, h in zip(chain.graphs, other.graphs))

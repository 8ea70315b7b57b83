"""
Co-twins: pairs u, v of a twin-free graph whose closed neighborhoods
partition V (nonadjacent co-twins) or whose open neighborhoods partition V
(adjacent co-twins), plus crown-graph recognition and the neighborhood
subgraph H_u used by the stabilizer reduction.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from core.circulant import CirculantSpec, ConnectionSet, GraphSource, complement_spec, resolve
from core.errors import CoTwinInvariantError, NotTwinFreeError
from core.graph import Graph
from core.twins import TwinKind, detect_twins_circulant, detect_twins_generic
from utils.helpers import popcount

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoTwinPairing:
    kind: TwinKind
    pairs: Tuple[Tuple[int, int], ...]
    order: int

    @property
    def is_positive(self) -> bool:
        return self.kind is not TwinKind.NONE

    @property
    def k(self) -> int:
        return len(self.pairs)

    @property
    def covers(self) -> bool:
        """Pairs partition the vertex set"""
        return 2 * len(self.pairs) == self.order

    def partner_map(self) -> Dict[int, int]:
        partner = {}
        for u, v in self.pairs:
            partner[u] = v
            partner[v] = u
        return partner

    def pair_index(self) -> Dict[int, int]:
        return {v: i for i, pair in enumerate(self.pairs) for v in pair}

    def to_dict(self) -> Dict:
        return {"kind": self.kind.value, "pairs": [list(p) for p in self.pairs]}


@dataclass(frozen=True)
class CrownWitness:
    """K_{k,k} minus a perfect matching"""
    k: int
    left: Tuple[int, ...]
    right: Tuple[int, ...]
    # removed matching, left vertex first; these are the co-twin pairs
    matching: Tuple[Tuple[int, int], ...]

    def to_dict(self) -> Dict:
        return {
            "k": self.k,
            "left": list(self.left),
            "right": list(self.right),
            "matching": [list(p) for p in self.matching],
        }


def _pair_up(partner: Dict[int, int]) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted((u, v) for u, v in partner.items() if u < v))


def detect_cotwins_generic(graph: Graph) -> CoTwinPairing:
    """Pair every vertex with its co-twin; the graph must be twin-free"""
    if detect_twins_generic(graph).kind is not TwinKind.NONE:
        raise NotTwinFreeError("Co-twin analysis requires a twin-free graph")
    full = graph.full_mask
    rows = graph.rows
    by_closed = {graph.closed_row(u): u for u in range(graph.order)}
    by_open = {row: u for u, row in enumerate(rows)}

    nonadjacent = {}
    adjacent = {}
    for u in range(graph.order):
        v = by_closed.get(full ^ graph.closed_row(u))
        if v is not None:
            nonadjacent[u] = v
        v = by_open.get(full ^ rows[u])
        if v is not None:
            adjacent[u] = v

    if nonadjacent and adjacent:
        # a single vertex never has both; mixed kinds only arise without vertex-transitivity
        logger.warning("Graph has both co-twin kinds at different vertices; reporting nonadjacent pairs")
    if nonadjacent:
        pairing = CoTwinPairing(TwinKind.NONADJACENT, _pair_up(nonadjacent), graph.order)
    elif adjacent:
        pairing = CoTwinPairing(TwinKind.ADJACENT, _pair_up(adjacent), graph.order)
    else:
        return CoTwinPairing(TwinKind.NONE, (), graph.order)

    if not pairing.covers:
        logger.warning(
            f"Co-twin pairs cover {2 * pairing.k} of {graph.order} vertices; "
            "graph is not vertex-transitive, only oracle-backed claims apply"
        )
    return pairing


def _nonadjacent_conditions(n: int, A: ConnectionSet) -> bool:
    k = n // 2
    members = set(A.members)
    return k not in members and len(members) == k - 1 and all((k + a) % n not in members for a in members)


def detect_cotwins_circulant(spec: CirculantSpec) -> CoTwinPairing:
    """Algebraic test on n = 2k: k not in A, |A| = k-1, k+a not in A for a in A"""
    n = spec.n
    if n % 2:
        return CoTwinPairing(TwinKind.NONE, (), n)
    if detect_twins_circulant(spec).kind is not TwinKind.NONE:
        raise NotTwinFreeError(f"{spec.name} has twins; co-twin analysis requires a twin-free graph")
    k = n // 2
    if _nonadjacent_conditions(n, spec.connection_set):
        kind = TwinKind.NONADJACENT
    elif _nonadjacent_conditions(n, complement_spec(spec).connection_set):
        kind = TwinKind.ADJACENT
    else:
        return CoTwinPairing(TwinKind.NONE, (), n)
    if k % 2 == 0:
        raise CoTwinInvariantError(f"{spec.name} passes the co-twin test with k={k} even")
    pairs = tuple((u, u + k) for u in range(k))
    logger.debug(f"{spec.name}: {kind.value} co-twins u <-> u+{k}")
    return CoTwinPairing(kind, pairs, n)


def detect_cotwins(source: GraphSource) -> CoTwinPairing:
    graph, spec = resolve(source)
    return detect_cotwins_circulant(spec) if spec else detect_cotwins_generic(graph)


def cross_pairs_are_matchings(graph: Graph, pairing: CoTwinPairing) -> bool:
    """Every two nonadjacent co-twin pairs induce K_2 + K_2"""
    if pairing.kind is not TwinKind.NONADJACENT:
        return False
    for (u, v), (x, y) in combinations(pairing.pairs, 2):
        quad = (1 << u) | (1 << v) | (1 << x) | (1 << y)
        degrees = [popcount(graph.rows[z] & quad) for z in (u, v, x, y)]
        edges = sum(degrees) // 2
        # two disjoint edges, each joining the two pairs
        if edges != 2 or degrees != [1, 1, 1, 1] or graph.has_edge(u, v) or graph.has_edge(x, y):
            return False
    return True


# -- crowns -------------------------------------------------------------------

def recognize_crown(graph: Graph) -> Optional[CrownWitness]:
    """Matching characterization of K_{k,k} minus a perfect matching, k >= 3"""
    n = graph.order
    if n < 6 or n % 2:
        return None
    k = n // 2
    if graph.is_regular() != k - 1:
        return None
    sides = graph.bipartition()
    if sides is None:
        return None
    left, right = sides
    if len(left) != k or len(right) != k:
        return None
    right_mask = sum(1 << v for v in right)
    matching = []
    for u in left:
        missing = right_mask & ~graph.rows[u]
        if popcount(missing) != 1:
            return None
        matching.append((u, missing.bit_length() - 1))
    if len({v for _, v in matching}) != k:
        return None
    return CrownWitness(k, tuple(left), tuple(right), tuple(matching))


def crown_circulant_spec(k: int) -> Optional[CirculantSpec]:
    """C_2k(±1,±3,...,±(k-2)) for odd k; even k gives no circulant"""
    if k < 3:
        raise ValueError(f"Crown graphs need k >= 3, got {k}")
    if k % 2 == 0:
        return None
    n = 2 * k
    odd = [a for a in range(1, k - 1, 2)]
    return CirculantSpec(n, ConnectionSet.generated_by(n, odd))


def crown_graph(k: int) -> Graph:
    """Left side 0..k-1, right side k..2k-1, i ~ k+j iff i != j"""
    if k < 1:
        raise ValueError(f"Crown graphs need k >= 1, got {k}")
    edges = [(i, k + j) for i in range(k) for j in range(k) if i != j]
    return Graph.from_edges(2 * k, edges)


# -- neighborhood subgraph ----------------------------------------------------

def neighborhood_subgraph(graph: Graph, u: int) -> Tuple[Graph, List[int]]:
    """H_u: subgraph induced by N(u), with labels[i] = vertex of G"""
    return graph.induced_subgraph(graph.open_neighborhood(u))


def cotwin_quotient(graph: Graph, pairing: CoTwinPairing) -> Graph:
    """Collapse every co-twin pair; pairs are joined when any edge runs between them"""
    if not pairing.is_positive:
        raise ValueError("Co-twin quotient needs a positive pairing")
    masks = [(1 << u) | (1 << v) for u, v in pairing.pairs]
    rows = []
    for i, (u, v) in enumerate(pairing.pairs):
        reach = graph.rows[u] | graph.rows[v]
        row = 0
        for j, mask in enumerate(masks):
            if i != j and reach & mask:
                row |= 1 << j
        rows.append(row)
    return Graph._trusted(len(masks), rows)


def nonadjacent_view(source: GraphSource) -> Tuple[Graph, Optional[CirculantSpec], CoTwinPairing, bool]:
    """Graph with nonadjacent co-twins equivalent to the input; flag set when complemented"""
    graph, spec = resolve(source)
    pairing = detect_cotwins(source)
    if pairing.kind is TwinKind.ADJACENT:
        co_spec = complement_spec(spec) if spec else None
        co_graph = graph.complement()
        co_pairing = CoTwinPairing(TwinKind.NONADJACENT, pairing.pairs, pairing.order)
        return co_graph, co_spec, co_pairing, True
    return graph, spec, pairing, False

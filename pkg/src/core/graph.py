"""
Immutable undirected simple graph on vertices 0..n-1.

Adjacency is stored as one integer bit row per vertex, so neighborhood
set algebra (twin tests, co-twin tests, refinement counts) is plain
integer arithmetic. A numpy adjacency matrix is derived on demand for
matrix invariants.
"""

import logging
from collections import deque
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

import config
from core.errors import SizeCapError, VertexRangeError
from utils.helpers import iter_bits, mask_of, popcount

logger = logging.getLogger(__name__)

VertexSet = FrozenSet[int]


class Graph:
    """Undirected simple graph with bitset adjacency rows"""

    __slots__ = ("_order", "_rows", "_full", "_hash")

    def __init__(self, order: int, rows: Sequence[int]):
        cap = config.GRAPH_CONFIG["max_order"]
        if order > cap:
            raise SizeCapError(f"Graph order {order} exceeds the size cap {cap}")
        if len(rows) != order:
            raise ValueError(f"Expected {order} adjacency rows, got {len(rows)}")
        full = (1 << order) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise VertexRangeError(f"Row {u} references vertices outside [0, {order})")
            if (row >> u) & 1:
                raise ValueError(f"Self-loop at vertex {u}")
            for v in iter_bits(row):
                if not (rows[v] >> u) & 1:
                    raise ValueError(f"Adjacency is not symmetric at edge {u}-{v}")
        self._order = order
        self._rows = tuple(rows)
        self._full = full
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def _trusted(cls, order: int, rows: Sequence[int]) -> "Graph":
        """Build without the symmetry scan; rows must already be valid"""
        cap = config.GRAPH_CONFIG["max_order"]
        if order > cap:
            raise SizeCapError(f"Graph order {order} exceeds the size cap {cap}")
        graph = cls.__new__(cls)
        graph._order = order
        graph._rows = tuple(rows)
        graph._full = (1 << order) - 1
        graph._hash = None
        return graph

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise VertexRangeError(f"Edge {u}-{v} outside [0, {order})")
            if u == v:
                raise ValueError(f"Self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(order, rows)

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        matrix = np.asarray(matrix, dtype=bool)
        order = matrix.shape[0]
        edges = [(int(u), int(v)) for u, v in zip(*np.nonzero(np.triu(matrix, k=1)))]
        graph = cls.from_edges(order, edges)
        if not np.array_equal(graph.adjacency_matrix(), matrix):
            raise ValueError("Adjacency matrix must be symmetric with zero diagonal")
        return graph

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        """Relabel nodes of a networkx graph to 0..n-1 in sorted node order"""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in nx_graph.edges()))

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls._trusted(order, [0] * order)

    @classmethod
    def complete(cls, order: int) -> "Graph":
        full = (1 << order) - 1
        return cls._trusted(order, [full ^ (1 << u) for u in range(order)])

    # -- basic queries ----------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def rows(self) -> Tuple[int, ...]:
        return self._rows

    @property
    def full_mask(self) -> int:
        return self._full

    def _check(self, u: int):
        if not 0 <= u < self._order:
            raise VertexRangeError(f"Vertex {u} outside [0, {self._order})")

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool((self._rows[u] >> v) & 1)

    def degree(self, u: int) -> int:
        self._check(u)
        return popcount(self._rows[u])

    def open_neighborhood(self, u: int) -> VertexSet:
        """N(u)"""
        self._check(u)
        return frozenset(iter_bits(self._rows[u]))

    def closed_neighborhood(self, u: int) -> VertexSet:
        """N[u] = N(u) + u"""
        self._check(u)
        return frozenset(iter_bits(self._rows[u] | (1 << u)))

    def closed_row(self, u: int) -> int:
        return self._rows[u] | (1 << u)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges (i, j) with i < j in lexicographic order"""
        for u, row in enumerate(self._rows):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self._rows) // 2

    def arcs(self) -> List[Tuple[int, int]]:
        """Ordered adjacent pairs"""
        return [(u, v) for u, row in enumerate(self._rows) for v in iter_bits(row)]

    # -- derived graphs ---------------------------------------------------

    def complement(self) -> "Graph":
        full = self._full
        return Graph._trusted(self._order, [full ^ row ^ (1 << u) for u, row in enumerate(self._rows)])

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple["Graph", List[int]]:
        """Subgraph induced by vertices; returns it with labels[i] = original vertex of i"""
        labels = sorted(set(vertices))
        for v in labels:
            self._check(v)
        position = {v: i for i, v in enumerate(labels)}
        rows = []
        for v in labels:
            row = 0
            for w in iter_bits(self._rows[v] & mask_of(labels)):
                row |= 1 << position[w]
            rows.append(row)
        return Graph._trusted(len(labels), rows), labels

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex perm[u] plays the role of u"""
        rows = [0] * self._order
        for u, row in enumerate(self._rows):
            image = 0
            for v in iter_bits(row):
                image |= 1 << perm[v]
            rows[perm[u]] = image
        return Graph._trusted(self._order, rows)

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        """True iff perm is a bijection preserving adjacency and non-adjacency"""
        if len(perm) != self._order or sorted(perm) != list(range(self._order)):
            return False
        rows = self._rows
        for u, row in enumerate(rows):
            image = 0
            for v in iter_bits(row):
                image |= 1 << perm[v]
            if image != rows[perm[u]]:
                return False
        return True

    # -- structural predicates --------------------------------------------

    def components(self) -> List[List[int]]:
        """Connected components, each sorted, ordered by minimum vertex"""
        seen = 0
        result = []
        for start in range(self._order):
            if (seen >> start) & 1:
                continue
            component_mask = 1 << start
            frontier = 1 << start
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self._rows[v]
                frontier = reach & ~component_mask
                component_mask |= frontier
            seen |= component_mask
            result.append(list(iter_bits(component_mask)))
        return result

    def component_count(self) -> int:
        return len(self.components())

    def is_connected(self) -> bool:
        return self._order <= 1 or self.component_count() == 1

    def bipartition(self) -> Optional[Tuple[List[int], List[int]]]:
        """2-coloring by BFS; None if an odd cycle exists"""
        color: Dict[int, int] = {}
        for start in range(self._order):
            if start in color:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for v in iter_bits(self._rows[u]):
                    if v not in color:
                        color[v] = 1 - color[u]
                        queue.append(v)
                    elif color[v] == color[u]:
                        return None
        left = [v for v in range(self._order) if color[v] == 0]
        right = [v for v in range(self._order) if color[v] == 1]
        return left, right

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def has_triangle(self) -> bool:
        rows = self._rows
        for u, v in self.edges():
            if rows[u] & rows[v]:
                return True
        return False

    def triangle_count(self) -> int:
        rows = self._rows
        # each triangle is counted once per edge
        return sum(popcount(rows[u] & rows[v]) for u, v in self.edges()) // 3

    def is_regular(self) -> Optional[int]:
        """Common degree if regular, else None"""
        degrees = {popcount(row) for row in self._rows}
        if len(degrees) > 1:
            return None
        return degrees.pop() if degrees else 0

    # -- conversions ------------------------------------------------------

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self._order, self._order), dtype=np.int64)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self._order))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    def to_dot(self, name: str = "G") -> str:
        """DOT text: vertices 0..n-1, then edges i -- j with i < j"""
        lines = [f"graph {_dot_id(name)} {{"]
        lines.extend(f"  {v};" for v in range(self._order))
        lines.extend(f"  {u} -- {v};" for u, v in self.edges())
        lines.append("}")
        return "\n".join(lines) + "\n"

    # -- dunder -----------------------------------------------------------

    def __len__(self) -> int:
        return self._order

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._order, self._rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={self.edge_count})"


def _dot_id(name: str) -> str:
    if name.isidentifier():
        return name
    escaped = name.replace('"', '\\"')
    return f'"{escaped}"'


def named_graph(name: str) -> Graph:
    """Small named vertex-transitive graphs used in examples and tests"""
    key = name.strip().lower()
    if key in ("q3", "cube", "hypercube"):
        return Graph.from_networkx(nx.hypercube_graph(3))
    if key in ("icosahedron", "icosahedral"):
        return Graph.from_networkx(nx.icosahedral_graph())
    if key == "envelope":
        return Graph.from_networkx(nx.complement(nx.cycle_graph(6)))
    if key == "petersen":
        return Graph.from_networkx(nx.petersen_graph())
    if key.startswith("crown:"):
        from core.cotwins import crown_graph
        return crown_graph(int(key.split(":", 1)[1]))
    if key.startswith("k:"):
        return Graph.complete(int(key.split(":", 1)[1]))
    if key.startswith("cycle:"):
        return Graph.from_networkx(nx.cycle_graph(int(key.split(":", 1)[1])))
    raise ValueError(f"Unknown named graph: {name}")

"""
Automorphism oracle and structural group orders.

The oracle is an individualization-refinement search. A fixed "left path"
individualizes the first vertex of the first non-trivial cell of an
equitable partition until the partition is discrete; every other branch is
compared with the left path through its refinement trace and every leaf is
checked against the adjacency rows before it is accepted.

Structural orders combine twin quotients, crown recognition and the
point-stabilizer reduction for co-twin graphs, falling back to the oracle.
"""

import logging
from dataclasses import dataclass
from math import factorial, prod
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

import config
from core.circulant import CirculantSpec, GraphSource, multiplier_stabilizer, resolve, translation
from core.cotwins import (CoTwinPairing, detect_cotwins, neighborhood_subgraph, nonadjacent_view,
                          recognize_crown)
from core.errors import BetaNotAutomorphismError, InvariantViolation, LimitExceededError, VertexRangeError
from core.graph import Graph
from core.groups import (AutOf, Direct, GroupExpression, Semidirect, Stabilized, Symmetric, Trivial,
                         Unclassified, circulant_normal_expression, twin_expression)
from core.twins import TwinKind, TwinPartition, circulant_quotient_step, detect_twins, quotient
from utils.helpers import mask_of, popcount

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]
Cells = Tuple[Tuple[int, ...], ...]


@dataclass
class _Node:
    cells: Cells
    trace: Tuple
    target: Optional[int] = None
    vertex: Optional[int] = None


def _target_cell(cells: Cells) -> Optional[int]:
    for i, cell in enumerate(cells):
        if len(cell) > 1:
            return i
    return None


def _individualize(cells: Cells, index: int, v: int) -> Cells:
    rest = tuple(x for x in cells[index] if x != v)
    return cells[:index] + ((v,), rest) + cells[index + 1:]


def individualized_colors(n: int, vertices: Sequence[int]) -> Tuple[int, ...]:
    """Colors fixing each listed vertex pointwise"""
    colors = [0] * n
    for i, v in enumerate(vertices):
        colors[v] = i + 1
    return tuple(colors)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """a after b"""
    return tuple(a[x] for x in b)


def identity(n: int) -> Permutation:
    return tuple(range(n))


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def groups(self) -> List[Tuple[int, ...]]:
        result: Dict[int, List[int]] = {}
        for x in range(len(self.parent)):
            result.setdefault(self.find(x), []).append(x)
        return sorted(tuple(g) for g in result.values())


def orbits_of(n: int, generators: Iterable[Permutation]) -> List[Tuple[int, ...]]:
    """Vertex orbits of the group generated by the given permutations"""
    uf = _UnionFind(n)
    for perm in generators:
        for x in range(n):
            uf.union(x, perm[x])
    return uf.groups()


def arc_orbits_of(graph: Graph, generators: Iterable[Permutation]) -> List[Tuple[Tuple[int, int], ...]]:
    arcs = graph.arcs()
    index = {arc: i for i, arc in enumerate(arcs)}
    uf = _UnionFind(len(arcs))
    for perm in generators:
        for i, (u, v) in enumerate(arcs):
            uf.union(i, index[(perm[u], perm[v])])
    return [tuple(arcs[i] for i in group) for group in uf.groups()]


@dataclass(frozen=True)
class PermutationList:
    """Automorphisms as image arrays, or generators plus the group order"""
    degree: int
    elements: Tuple[Permutation, ...] = ()
    generators: Tuple[Permutation, ...] = ()
    group_order: int = 0

    def __post_init__(self):
        if self.elements and not self.group_order:
            object.__setattr__(self, "group_order", len(self.elements))

    def __len__(self) -> int:
        return self.group_order

    def __iter__(self):
        return iter(self.elements)

    @property
    def is_explicit(self) -> bool:
        return len(self.elements) == self.group_order

    def as_array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64).reshape(len(self.elements), self.degree)

    def contains_identity(self) -> bool:
        return identity(self.degree) in set(self.elements)

    def verify(self, graph: Graph) -> bool:
        """Every listed permutation preserves adjacency and non-adjacency"""
        return all(graph.is_automorphism(p) for p in self.elements + self.generators)

    def vertex_orbits(self) -> List[Tuple[int, ...]]:
        return orbits_of(self.degree, self.generators or self.elements)

    def arc_orbits(self, graph: Graph) -> List[Tuple[Tuple[int, int], ...]]:
        return arc_orbits_of(graph, self.generators or self.elements)

    def pointwise_stabilizer(self, vertices: Sequence[int]) -> "PermutationList":
        arr = self.as_array()
        if vertices:
            keep = np.all(arr[:, list(vertices)] == np.array(vertices), axis=1)
            arr = arr[keep]
        return PermutationList(self.degree, tuple(tuple(row) for row in arr.tolist()))

    def to_dict(self) -> Dict:
        return {
            "degree": self.degree,
            "order": self.group_order,
            "elements": [list(p) for p in self.elements],
            "generators": [list(p) for p in self.generators],
        }


class AutomorphismOracle:
    """Individualization-refinement search over automorphisms of a vertex-colored graph"""

    def __init__(self, graph: Graph, colors: Optional[Sequence] = None, limit: Optional[int] = None):
        self.logger = logging.getLogger(__name__)
        self.graph = graph
        self.n = graph.order
        self.colors = tuple(colors) if colors is not None else (0,) * self.n
        if len(self.colors) != self.n:
            raise ValueError(f"Expected {self.n} colors, got {len(self.colors)}")
        self.limit = limit or config.ORACLE_CONFIG["enumeration_limit"]
        self.nodes_visited = 0
        self._path: Optional[List[_Node]] = None
        self._order: Optional[int] = None
        self._generators: Tuple[Permutation, ...] = ()
        self._orbits_done = False

    # -- refinement -------------------------------------------------------

    def initial_partition(self) -> Cells:
        keys = sorted(set(self.colors))
        return tuple(tuple(v for v in range(self.n) if self.colors[v] == key) for key in keys)

    def refine(self, cells: Cells) -> Tuple[Cells, Tuple]:
        """Equitable refinement; sub-cells ordered by neighbor-count signature"""
        rows = self.graph.rows
        cells = tuple(cells)
        trace = []
        while True:
            masks = [mask_of(cell) for cell in cells]
            split: List[Tuple[int, ...]] = []
            changed = False
            for cell in cells:
                if len(cell) == 1:
                    split.append(cell)
                    continue
                groups: Dict[Tuple[int, ...], List[int]] = {}
                for v in cell:
                    row = rows[v]
                    sig = tuple(popcount(row & m) for m in masks)
                    groups.setdefault(sig, []).append(v)
                if len(groups) == 1:
                    split.append(cell)
                    continue
                changed = True
                for sig in sorted(groups):
                    split.append(tuple(groups[sig]))
                    trace.append((len(split), len(groups[sig]), sig))
            cells = tuple(split)
            if not changed:
                return cells, tuple(trace)

    def _left_path(self) -> List[_Node]:
        if self._path is None:
            cells, trace = self.refine(self.initial_partition())
            path = [_Node(cells, trace)]
            while True:
                node = path[-1]
                target = _target_cell(node.cells)
                if target is None:
                    break
                node.target = target
                node.vertex = node.cells[target][0]
                cells, trace = self.refine(_individualize(node.cells, target, node.vertex))
                path.append(_Node(cells, trace))
            self._path = path
            self.logger.debug(f"Left path depth {len(path) - 1} for order {self.n}")
        return self._path

    # -- search -----------------------------------------------------------

    def _accepts(self, perm: Permutation) -> bool:
        colors = self.colors
        if any(colors[perm[v]] != colors[v] for v in range(self.n)):
            return False
        return self.graph.is_automorphism(perm)

    def _descend(self, level: int, cells: Cells) -> Optional[Permutation]:
        """First accepted leaf below an image node matching the left path at this level"""
        self.nodes_visited += 1
        path = self._path
        node = path[level]
        if node.target is None:
            perm = [0] * self.n
            for left, right in zip(node.cells, cells):
                perm[left[0]] = right[0]
            perm = tuple(perm)
            return perm if self._accepts(perm) else None
        child = path[level + 1]
        for w in cells[node.target]:
            image, trace = self.refine(_individualize(cells, node.target, w))
            if trace != child.trace:
                continue
            perm = self._descend(level + 1, image)
            if perm is not None:
                return perm
        return None

    def _search(self, level: int, w: int) -> Optional[Permutation]:
        """Some automorphism fixing the left-path prefix and sending its next vertex to w"""
        path = self._path
        node = path[level]
        image, trace = self.refine(_individualize(node.cells, node.target, w))
        if trace != path[level + 1].trace:
            return None
        return self._descend(level + 1, image)

    def transversal(self, level: int) -> List[Permutation]:
        """Coset representatives of the next stabilizer along the left path"""
        path = self._left_path()
        node = path[level]
        reps = []
        for w in node.cells[node.target]:
            if w == node.vertex:
                reps.append(identity(self.n))
                continue
            perm = self._search(level, w)
            if perm is not None:
                reps.append(perm)
        return reps

    def enumerate_automorphisms(self) -> PermutationList:
        """All automorphisms, lexicographically ordered by image array"""
        try:
            path = self._left_path()
            transversals = [self.transversal(i) for i in range(len(path) - 1)]
            size = prod(len(t) for t in transversals)
            if size > self.limit:
                raise LimitExceededError(f"Group of order {size} exceeds the enumeration limit {self.limit}")
            elements = np.arange(self.n, dtype=np.int64).reshape(1, self.n)
            for reps in reversed(transversals):
                table = np.array(reps, dtype=np.int64).reshape(len(reps), self.n)
                elements = table[:, elements].reshape(-1, self.n)
            perms = tuple(sorted(tuple(row) for row in elements.tolist()))
            gens = tuple(p for reps in transversals for p in reps if p != identity(self.n))
            self.logger.debug(f"Enumerated {len(perms)} automorphisms ({self.nodes_visited} nodes)")
            return PermutationList(self.n, perms, gens, len(perms))
        except LimitExceededError:
            raise
        except Exception as e:
            self.logger.error(f"Error enumerating automorphisms: {e}")
            raise

    def group_order(self) -> int:
        """Product of left-path orbit sizes, found bottom-up with orbit pruning"""
        if self._orbits_done:
            return self._order
        path = self._left_path()
        uf = _UnionFind(self.n)
        generators: List[Permutation] = []
        order = 1
        pruned = 0
        for level in reversed(range(len(path) - 1)):
            node = path[level]
            v = node.vertex
            bad: List[int] = []
            for w in node.cells[node.target]:
                root = uf.find(w)
                if root == uf.find(v):
                    continue
                if any(uf.find(b) == root for b in bad):
                    pruned += 1
                    continue
                perm = self._search(level, w)
                if perm is None:
                    bad.append(w)
                    continue
                generators.append(perm)
                for x in range(self.n):
                    uf.union(x, perm[x])
            root = uf.find(v)
            order *= sum(1 for w in node.cells[node.target] if uf.find(w) == root)
        self._order = order
        self._generators = tuple(generators)
        self._orbits_done = True
        self.logger.debug(
            f"Group order {order} from {len(generators)} generators "
            f"({self.nodes_visited} nodes, {pruned} pruned)"
        )
        return order

    @property
    def generators(self) -> Tuple[Permutation, ...]:
        self.group_order()
        return self._generators

    def left_path_vertices(self) -> Tuple[int, ...]:
        """Individualized vertices of the left path; only the identity fixes them all"""
        return tuple(node.vertex for node in self._left_path() if node.vertex is not None)

    def vertex_orbits(self) -> List[Tuple[int, ...]]:
        return orbits_of(self.n, self.generators)

    def permutation_list(self) -> PermutationList:
        """Generators and order without materializing the group"""
        order = self.group_order()
        return PermutationList(self.n, (), self.generators, order)


# -- module-level oracle entry points -------------------------------------------

def enumerate_automorphisms(graph: Graph, limit: Optional[int] = None,
                            colors: Optional[Sequence] = None) -> PermutationList:
    return AutomorphismOracle(graph, colors=colors, limit=limit).enumerate_automorphisms()


def stabilizer(graph: Graph, u: int, limit: Optional[int] = None) -> PermutationList:
    """All automorphisms fixing u"""
    if not 0 <= u < graph.order:
        raise VertexRangeError(f"Vertex {u} outside [0, {graph.order})")
    return enumerate_automorphisms(graph, limit, individualized_colors(graph.order, [u]))


def group_order(graph: Graph, colors: Optional[Sequence] = None) -> int:
    return AutomorphismOracle(graph, colors=colors).group_order()


def is_vertex_transitive(graph: Graph) -> bool:
    if graph.order <= 1:
        return True
    return len(AutomorphismOracle(graph).vertex_orbits()) == 1


def is_arc_transitive(graph: Graph) -> bool:
    """Vertex-transitive with a single orbit on ordered adjacent pairs"""
    oracle = AutomorphismOracle(graph)
    gens = oracle.generators
    if graph.order > 1 and len(orbits_of(graph.order, gens)) != 1:
        return False
    return len(arc_orbits_of(graph, gens)) <= 1


def vertex_transitivity_certificate(graph: Graph, spec: Optional[CirculantSpec] = None,
                                    use_oracle: bool = True) -> Optional[str]:
    """'circulant' when translations act, 'oracle' when the search finds one orbit"""
    if graph.order <= 1:
        return "trivial"
    if spec is not None and graph.is_automorphism(translation(spec.n, 1)):
        return "circulant"
    if use_oracle and is_vertex_transitive(graph):
        return "oracle"
    return None


def stabilizer_first_order(graph: Graph, vertex: int = 0, certificate: Optional[str] = None) -> int:
    """n * |stab(vertex)| for a vertex-transitive graph"""
    if certificate is None:
        certificate = vertex_transitivity_certificate(graph)
    if certificate is None:
        raise InvariantViolation("Stabilizer-first order needs a vertex-transitive graph")
    stab = AutomorphismOracle(graph, colors=individualized_colors(graph.order, [vertex])).group_order()
    return graph.order * stab


def orbit_stabilizer_check(graph: Graph, u: int = 0) -> Dict:
    oracle = AutomorphismOracle(graph)
    order = oracle.group_order()
    orbit = next(o for o in oracle.vertex_orbits() if u in o)
    stab = group_order(graph, individualized_colors(graph.order, [u]))
    return {
        "order": order,
        "orbit_size": len(orbit),
        "stabilizer_order": stab,
        "ok": order == len(orbit) * stab,
    }


# -- structural orders -----------------------------------------------------------

@dataclass(frozen=True)
class GroupStructure:
    order: int
    expression: GroupExpression
    provenance: str
    within_hypothesis: bool = True
    notes: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.expression.order != self.order:
            raise InvariantViolation(
                f"Expression {self.expression.render()} evaluates to {self.expression.order}, not {self.order}"
            )

    def render(self) -> str:
        return self.expression.render()

    def to_dict(self) -> Dict:
        return {
            "order": self.order,
            "expression": self.expression.render(),
            "provenance": self.provenance,
            "within_hypothesis": self.within_hypothesis,
            "notes": list(self.notes),
        }


def _label(graph: Graph, spec: Optional[CirculantSpec]) -> str:
    if spec is not None:
        return spec.name
    if graph.order == 1:
        return "K_1"
    return f"G_{graph.order}"


def _normal_expression(spec: Optional[CirculantSpec], order: int) -> Optional[GroupExpression]:
    if spec is None:
        return None
    stab = len(multiplier_stabilizer(spec.connection_set))
    if order != spec.n * stab:
        return None
    return circulant_normal_expression(spec.n, stab)


def _oracle_structure(graph: Graph, spec: Optional[CirculantSpec], certificate: Optional[str],
                      notes: List[str], within: bool = True) -> GroupStructure:
    if certificate:
        order = stabilizer_first_order(graph, 0, certificate)
    else:
        order = group_order(graph)
    normal = _normal_expression(spec, order)
    if normal is not None:
        notes.append("translation subgroup is normal; group is Z_n : stab_n(A)")
        return GroupStructure(order, normal, "oracle", within, tuple(notes))
    return GroupStructure(order, Unclassified(order), "oracle", within, tuple(notes))


def _structure(graph: Graph, spec: Optional[CirculantSpec]) -> GroupStructure:
    if graph.order <= 1:
        return GroupStructure(1, Trivial(), "trivial")
    notes: List[str] = []
    partition = detect_twins(spec if spec is not None else graph)

    if partition.kind is not TwinKind.NONE:
        # Aut(G) lifts every class-size preserving automorphism of the quotient
        if spec is not None:
            step = circulant_quotient_step(spec, partition)
        else:
            step = quotient(graph, partition)
        q_graph, q_spec = step.quotient, step.quotient_spec
        if partition.is_uniform:
            inner = _structure(q_graph, q_spec)
            t = partition.class_size
            expr = twin_expression(t, partition.class_count, AutOf(_label(q_graph, q_spec), inner.expression))
            order = factorial(t) ** partition.class_count * inner.order
            notes.extend(inner.notes)
            return GroupStructure(order, expr, "twins", inner.within_hypothesis, tuple(notes))
        logger.warning("Twin classes of unequal size; input is outside the vertex-transitive setting")
        q_order = group_order(q_graph, colors=partition.class_sizes)
        kernel = Direct(tuple(Symmetric(len(c)) for c in partition.classes if len(c) > 1))
        expr = Semidirect(kernel, Unclassified(q_order)) if q_order > 1 else kernel
        notes.append("non-uniform twin classes; quotient colored by class size")
        return GroupStructure(partition.kernel_order * q_order, expr, "twins", False, tuple(notes))

    certificate = vertex_transitivity_certificate(graph, spec)
    pairing = detect_cotwins(spec if spec is not None else graph)
    if pairing.is_positive:
        if certificate is None:
            logger.warning("Co-twins found but vertex-transitivity is not certified; using the oracle")
            notes.append("co-twins without a vertex-transitivity certificate")
            return _oracle_structure(graph, spec, None, notes, within=False)
        view, view_spec, view_pairing, complemented = nonadjacent_view(spec if spec is not None else graph)
        if complemented:
            notes.append("adjacent co-twins handled through the complement")
        if not view.has_triangle():
            crown = recognize_crown(view)
            if crown is not None:
                expr = Direct((Symmetric(crown.k), Symmetric(2)))
                return GroupStructure(expr.order, expr, "crown", True, tuple(notes))
            notes.append("triangle-free co-twin graph failed crown recognition")
            return _oracle_structure(graph, spec, certificate, notes, within=False)
        h_graph, _ = neighborhood_subgraph(view, 0)
        h_order = group_order(h_graph)
        order = h_order * graph.order
        normal = _normal_expression(spec, order)
        if normal is not None:
            notes.append("translation subgroup is normal; group is Z_n : stab_n(A)")
            return GroupStructure(order, normal, "StabAut", True, tuple(notes))
        expr = Stabilized(AutOf("H_0", Unclassified(h_order)), graph.order)
        return GroupStructure(order, expr, "StabAut", True, tuple(notes))

    if certificate is None:
        notes.append("no vertex-transitivity certificate")
    return _oracle_structure(graph, spec, certificate, notes, within=certificate is not None)


def structural_order(source: GraphSource) -> GroupStructure:
    """Automorphism group order and structure via twins, crowns, stabilizers or the oracle"""
    graph, spec = resolve(source)
    try:
        structure = _structure(graph, spec)
        logger.info(f"{_label(graph, spec)}: |Aut| = {structure.order} [{structure.provenance}]")
        return structure
    except Exception as e:
        logger.error(f"Error computing structural order of {_label(graph, spec)}: {e}")
        raise


# -- co-twin pair action ---------------------------------------------------------

def cotwin_swap(graph: Graph, pairing: CoTwinPairing) -> Permutation:
    """Simultaneous transposition of every co-twin pair"""
    if pairing.kind is not TwinKind.NONADJACENT or not pairing.covers:
        raise ValueError("Co-twin swap needs a positive nonadjacent pairing covering V")
    partner = pairing.partner_map()
    beta = tuple(partner[v] for v in range(graph.order))
    if not graph.is_automorphism(beta):
        raise BetaNotAutomorphismError("Swapping all co-twin pairs is not an automorphism")
    return beta


def _pair_image(perm: Permutation, pairing: CoTwinPairing, index: Dict[int, int]) -> Tuple[int, ...]:
    return tuple(index[perm[u]] for u, _ in pairing.pairs)


def kappa_kernel(graph: Graph, pairing: CoTwinPairing,
                 automorphisms: Optional[PermutationList] = None) -> List[Permutation]:
    """Automorphisms fixing every co-twin pair setwise"""
    automorphisms = automorphisms or enumerate_automorphisms(graph)
    partner = pairing.partner_map()
    return [p for p in automorphisms if all(p[u] in (u, partner[u]) for u in range(graph.order))]


def kappa_kernel_check(graph: Graph, pairing: CoTwinPairing,
                       automorphisms: Optional[PermutationList] = None) -> bool:
    beta = cotwin_swap(graph, pairing)
    kernel = set(kappa_kernel(graph, pairing, automorphisms))
    return kernel == {identity(graph.order), beta}


def kappa_image(graph: Graph, pairing: CoTwinPairing,
                automorphisms: Optional[PermutationList] = None) -> Set[Tuple[int, ...]]:
    """Permutations of the co-twin pairs induced by automorphisms"""
    automorphisms = automorphisms or enumerate_automorphisms(graph)
    index = pairing.pair_index()
    return {_pair_image(p, pairing, index) for p in automorphisms}


def kappa_surjectivity(graph: Graph, pairing: CoTwinPairing,
                       automorphisms: Optional[PermutationList] = None) -> bool:
    """Whether automorphisms induce every permutation of the k pairs"""
    image = kappa_image(graph, pairing, automorphisms)
    surjective = len(image) == factorial(pairing.k)
    logger.debug(f"Pair action image {len(image)} of {factorial(pairing.k)}")
    return surjective


# -- twin class action -----------------------------------------------------------

def twin_action_check(graph: Graph, partition: TwinPartition,
                      automorphisms: Optional[PermutationList] = None) -> Dict:
    """Induced action on twin classes: well-defined, lands in Aut(quotient), onto, kernel prod(t_i!)"""
    if partition.kind is TwinKind.NONE:
        raise ValueError("Twin action needs a partition with twins")
    automorphisms = automorphisms or enumerate_automorphisms(graph)
    q_graph = quotient(graph, partition).quotient
    index = partition.class_index()
    reps = [cls[0] for cls in partition.classes]
    image = set()
    kernel = 0
    well_defined = True
    lands_in_quotient = True
    for perm in automorphisms:
        induced = tuple(index[perm[r]] for r in reps)
        for cls, target in zip(partition.classes, induced):
            if any(index[perm[v]] != target for v in cls):
                well_defined = False
        if not q_graph.is_automorphism(induced):
            lands_in_quotient = False
        image.add(induced)
        if induced == identity(len(reps)):
            kernel += 1
    q_order = group_order(q_graph, colors=partition.class_sizes)
    return {
        "image_size": len(image),
        "quotient_order": q_order,
        "kernel_size": kernel,
        "expected_kernel": partition.kernel_order,
        "well_defined": well_defined,
        "homomorphism_ok": lands_in_quotient,
        "surjective": len(image) == q_order,
        "kernel_ok": kernel == partition.kernel_order,
    }

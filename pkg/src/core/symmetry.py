"""
Determining and distinguishing numbers.

Formula values come from the twin, crown and point-stabilizer structure of
the graph. Exhaustive values come from searches driven by the automorphism
oracle: breadth-first search over vertex sets for the determining number and
restricted-growth coloring search for the distinguishing number.
"""

import logging
from dataclasses import dataclass, field, replace
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

import config
from core.autgroup import (AutomorphismOracle, GroupStructure, PermutationList, enumerate_automorphisms,
                           group_order, individualized_colors, is_arc_transitive, structural_order,
                           vertex_transitivity_certificate)
from core.circulant import CirculantSpec, GraphSource, resolve
from core.cotwins import CoTwinPairing, detect_cotwins, neighborhood_subgraph, nonadjacent_view, recognize_crown
from core.errors import InvariantViolation, LimitExceededError, SizeCapError
from core.graph import Graph
from core.twins import TwinKind, circulant_quotient_step, detect_twins, quotient
from utils.helpers import log_timing

logger = logging.getLogger(__name__)

METHOD_DET_TWINS = "Cor-DetTwins"
METHOD_DIST_TWINS = "Thm-DistTwins"
METHOD_CROWN = "crown"
METHOD_STAB_AUT = "StabAut"
METHOD_EXHAUSTIVE = "exhaustive"

MODES = ("formula", "exhaustive", "both")


@dataclass(frozen=True)
class Measurement:
    """Exact value when lo == hi, otherwise bounds; exhaustive_value is the search result when one ran"""
    lo: int
    hi: int
    method: str
    exhaustive_value: Optional[int] = None
    confirmed: Optional[bool] = None
    notes: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"Bounds out of order: {self.lo} > {self.hi}")

    @classmethod
    def exact(cls, value: int, method: str, notes: Sequence[str] = ()) -> "Measurement":
        return cls(value, value, method, notes=tuple(notes))

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Optional[int]:
        return self.lo if self.is_exact else None

    @property
    def resolved(self) -> Optional[int]:
        """Exhaustive value when one ran, else the exact formula value"""
        return self.exhaustive_value if self.exhaustive_value is not None else self.value

    def admits(self, value: int) -> bool:
        return self.lo <= value <= self.hi

    def with_exhaustive(self, value: int) -> "Measurement":
        return replace(self, exhaustive_value=value, confirmed=self.admits(value))

    def to_dict(self) -> Dict:
        data = {"method": self.method}
        if self.is_exact:
            data["value"] = self.lo
        else:
            data["bounds"] = {"lo": self.lo, "hi": self.hi}
        if self.exhaustive_value is not None:
            data["exhaustive"] = self.exhaustive_value
            data["confirmed"] = self.confirmed
        if self.notes:
            data["notes"] = list(self.notes)
        return data


@dataclass(frozen=True)
class SymmetryReport:
    structure: GroupStructure
    det: Measurement
    dist: Measurement
    arc_transitive: Optional[bool] = None
    determining_set: Optional[Tuple[int, ...]] = None
    distinguishing_coloring: Optional[Tuple[int, ...]] = None

    @property
    def order(self) -> int:
        return self.structure.order

    @property
    def consistent(self) -> bool:
        """No exhaustive value contradicts a formula value"""
        return self.det.confirmed is not False and self.dist.confirmed is not False

    def to_dict(self) -> Dict:
        data = {
            "group": self.structure.to_dict(),
            "det": self.det.to_dict(),
            "dist": self.dist.to_dict(),
        }
        if self.arc_transitive is not None:
            data["arc_transitive"] = self.arc_transitive
        if self.determining_set is not None:
            data["determining_set"] = list(self.determining_set)
        if self.distinguishing_coloring is not None:
            data["distinguishing_coloring"] = list(self.distinguishing_coloring)
        return data


# -- closed forms -----------------------------------------------------------------

def dist_twin_recursion(t: int, d_quotient: int) -> int:
    """Smallest d with C(d, t) >= d_quotient"""
    if t < 2 or d_quotient < 1:
        raise ValueError(f"Need t >= 2 and d_quotient >= 1, got t={t}, d_quotient={d_quotient}")
    d = t
    while comb(d, t) < d_quotient:
        d += 1
    return d


def crown_distinguishing(k: int) -> int:
    """Smallest d with (d-1)^2 <= k <= d^2 - 1"""
    if k < 3:
        raise ValueError(f"Crown graphs need k >= 3, got {k}")
    d = 1
    while not (d - 1) ** 2 <= k <= d * d - 1:
        d += 1
    return d


def determining_lower_bound(n: int, order: int) -> int:
    """Smallest k with n(n-1)...(n-k+1) >= |Aut|"""
    k, images = 0, 1
    while images < order and k < n:
        images *= n - k
        k += 1
    return k


# -- determining sets ---------------------------------------------------------------

def is_determining(graph: Graph, vertices: Sequence[int]) -> bool:
    """Only the identity fixes every listed vertex"""
    return group_order(graph, colors=individualized_colors(graph.order, sorted(set(vertices)))) == 1


def minimum_twin_cover(source: GraphSource) -> List[int]:
    """All but one vertex of every twin class"""
    return detect_twins(source).twin_cover()


def left_path_determining_set(graph: Graph) -> Tuple[int, ...]:
    """Vertices individualized along the oracle's left path; always determining"""
    return tuple(sorted(AutomorphismOracle(graph).left_path_vertices()))


def _set_canonizer(automorphisms: Optional[PermutationList]):
    if automorphisms is None or not automorphisms.is_explicit:
        return lambda vertices: vertices
    table = automorphisms.as_array()

    def canon(vertices: Tuple[int, ...]) -> Tuple[int, ...]:
        images = np.sort(table[:, list(vertices)], axis=1)
        first = np.lexsort(images.T[::-1])[0]
        return tuple(int(v) for v in images[first])

    return canon


def minimum_determining_set(graph: Graph, automorphisms: Optional[PermutationList] = None) -> Tuple[int, ...]:
    """
    Breadth-first search over vertex sets by increasing size.

    A prefix is only extended by one representative of each non-trivial orbit
    of its pointwise stabilizer; sets equivalent under the full group are
    merged when the group is given explicitly.
    """
    n = graph.order
    canon = _set_canonizer(automorphisms)
    frontier = [()]
    visited = 0
    for size in range(n + 1):
        successors = set()
        for prefix in frontier:
            visited += 1
            oracle = AutomorphismOracle(graph, colors=individualized_colors(n, prefix))
            if oracle.group_order() == 1:
                logger.debug(f"Determining set of size {size} after {visited} stabilizer searches")
                return prefix
            for orbit in oracle.vertex_orbits():
                if len(orbit) > 1:
                    successors.add(canon(tuple(sorted(prefix + (orbit[0],)))))
        logger.debug(f"No determining set of size {size}; {len(successors)} candidates of size {size + 1}")
        frontier = sorted(successors)
    raise InvariantViolation("The full vertex set is always determining")


# -- distinguishing colorings -------------------------------------------------------

def _cycles(perm: Sequence[int]) -> List[Tuple[int, ...]]:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        v = start
        while not seen[v]:
            seen[v] = True
            cycle.append(v)
            v = perm[v]
        cycles.append(tuple(sorted(cycle)))
    return cycles


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


def prime_order_cycles(automorphisms: PermutationList) -> List[Tuple[Tuple[int, ...], ...]]:
    """
    Cycle structures of prime-order elements, one per cyclic subgroup.

    A coloring fixed by some non-identity automorphism is fixed by a power of
    it of prime order, and all generators of a prime-order subgroup share
    their cycles.
    """
    structures = set()
    for perm in automorphisms:
        cycles = _cycles(perm)
        lengths = {len(c) for c in cycles if len(c) > 1}
        if len(lengths) == 1 and _is_prime(lengths.pop()):
            structures.add(tuple(c for c in cycles if len(c) > 1))
    return sorted(structures)


class _ColoringSearch:
    """Restricted-growth colorings of 0..n-1 with per-element kill tracking"""

    def __init__(self, n: int, structures: List[Tuple[Tuple[int, ...], ...]]):
        self.n = n
        m = len(structures)
        # anchors[i, v]: least vertex of v's cycle under element i, -1 when v is that vertex or fixed
        self.anchors = np.full((m, n), -1, dtype=np.int64)
        self.last = np.full(m, -1, dtype=np.int64)
        for i, cycles in enumerate(structures):
            for cycle in cycles:
                for v in cycle[1:]:
                    self.anchors[i, v] = cycle[0]
                self.last[i] = max(self.last[i], cycle[-1])
        self.nodes = 0

    def find(self, colors_allowed: int) -> Optional[Tuple[int, ...]]:
        colors = np.full(self.n, -1, dtype=np.int64)
        alive = np.ones(len(self.last), dtype=bool)
        if self._extend(0, alive, colors, 0, colors_allowed):
            return tuple(int(c) for c in colors)
        return None

    def _extend(self, v: int, alive: np.ndarray, colors: np.ndarray, used: int, d: int) -> bool:
        if v == self.n:
            return True
        self.nodes += 1
        anchor = self.anchors[:, v]
        anchored = anchor >= 0
        anchor_colors = colors[np.where(anchored, anchor, 0)]
        closing = self.last == v
        for c in range(min(used + 1, d)):
            colors[v] = c
            still = alive & (~anchored | (anchor_colors == c))
            # an element still consistent once its whole support is colored preserves the coloring
            if np.any(still & closing):
                continue
            if self._extend(v + 1, still, colors, max(used, c + 1), d):
                return True
        colors[v] = -1
        return False


def distinguishing_coloring(graph: Graph, max_colors: int,
                            automorphisms: Optional[PermutationList] = None) -> Optional[Tuple[int, ...]]:
    """Distinguishing coloring with the fewest colors up to max_colors, or None"""
    automorphisms = automorphisms or enumerate_automorphisms(graph)
    structures = prime_order_cycles(automorphisms)
    search = _ColoringSearch(graph.order, structures)
    start = 1 if not structures else 2
    for d in range(start, max_colors + 1):
        coloring = search.find(d)
        logger.debug(f"{d}-coloring search: {'found' if coloring else 'none'} ({search.nodes} nodes)")
        if coloring is not None:
            return coloring
    return None


def verify_distinguishing(graph: Graph, coloring: Sequence[int],
                          automorphisms: Optional[PermutationList] = None) -> bool:
    """Every non-identity automorphism moves some color class"""
    if automorphisms is not None and automorphisms.is_explicit:
        col = np.asarray(coloring)
        preserved = np.all(col[automorphisms.as_array()] == col, axis=1)
        return int(preserved.sum()) == 1
    return group_order(graph, colors=list(coloring)) == 1


def determining_coloring(n: int, vertices: Sequence[int]) -> Tuple[int, ...]:
    """Distinct colors on a determining set, one shared color elsewhere"""
    return individualized_colors(n, vertices)


def cotwin_coloring(graph: Graph, pairing: CoTwinPairing, h_coloring: Sequence[int],
                    labels: Sequence[int], u: int = 0, swap: bool = False) -> Tuple[int, ...]:
    """
    Extend a coloring of H_u to the whole graph: every co-twin of a neighbor of
    u repeats the neighbor's color, and u and its co-twin take two distinct
    palette colors.
    """
    partner = pairing.partner_map()
    colors = [0] * graph.order
    for v, c in zip(labels, h_coloring):
        colors[v] = c
        colors[partner[v]] = c
    first, second = (1, 0) if swap else (0, 1)
    colors[u] = first
    colors[partner[u]] = second
    return tuple(colors)


# -- engine -------------------------------------------------------------------------

@dataclass
class _Context:
    graph: Graph
    spec: Optional[CirculantSpec]
    automorphisms: Optional[PermutationList] = None
    enumerated: bool = False
    determining_set: Optional[Tuple[int, ...]] = None
    coloring: Optional[Tuple[int, ...]] = None
    notes: List[str] = field(default_factory=list)

    @property
    def label(self) -> str:
        return self.spec.name if self.spec is not None else f"G_{self.graph.order}"


class SymmetryEngine:
    """Formula cascade for det and dist, cross-checked by exhaustive search"""

    def __init__(self, mode: Optional[str] = None):
        self.logger = logging.getLogger(__name__)
        self.mode = mode or config.SYMMETRY_CONFIG["default_mode"]
        if self.mode not in MODES:
            raise ValueError(f"Unknown mode '{self.mode}'; expected one of {', '.join(MODES)}")
        self.max_det_order = config.SYMMETRY_CONFIG["max_exhaustive_det_order"]
        self.max_dist_order = config.SYMMETRY_CONFIG["max_exhaustive_dist_order"]
        self.max_dist_colors = config.SYMMETRY_CONFIG["max_exhaustive_dist_colors"]
        self.group_limit = config.ORACLE_CONFIG["exhaustive_group_limit"]

    # -- group access -------------------------------------------------------

    def _group(self, ctx: _Context) -> Optional[PermutationList]:
        if not ctx.enumerated:
            ctx.enumerated = True
            try:
                ctx.automorphisms = enumerate_automorphisms(ctx.graph, limit=self.group_limit)
            except LimitExceededError as e:
                self.logger.warning(f"{ctx.label}: {e}; exhaustive searches skipped")
        return ctx.automorphisms

    def _det_feasible(self, ctx: _Context) -> bool:
        return ctx.graph.order <= self.max_det_order

    def _dist_feasible(self, ctx: _Context) -> bool:
        return ctx.graph.order <= self.max_dist_order and self._group(ctx) is not None

    # -- exhaustive ---------------------------------------------------------

    def exhaustive_det(self, ctx: _Context) -> Optional[int]:
        if not self._det_feasible(ctx):
            return None
        with log_timing(self.logger, f"{ctx.label}: exhaustive det"):
            ctx.determining_set = minimum_determining_set(ctx.graph, self._group(ctx))
        return len(ctx.determining_set)

    def exhaustive_dist(self, ctx: _Context) -> Tuple[Optional[int], List[str]]:
        """Exact dist, or None with a note when more than the color cap is needed"""
        if not self._dist_feasible(ctx):
            return None, []
        with log_timing(self.logger, f"{ctx.label}: exhaustive dist"):
            coloring = distinguishing_coloring(ctx.graph, self.max_dist_colors, self._group(ctx))
        if coloring is None:
            return None, [f"no distinguishing coloring with at most {self.max_dist_colors} colors"]
        d = max(coloring) + 1
        ctx.coloring = coloring
        notes = [f"no distinguishing {d - 1}-coloring"] if d > 1 else []
        return d, notes

    def _exhaustive_measures(self, ctx: _Context) -> Tuple[Measurement, Measurement]:
        if not self._det_feasible(ctx):
            raise SizeCapError(
                f"{ctx.label}: exhaustive det search is capped at order {self.max_det_order}"
            )
        if ctx.graph.order > self.max_dist_order:
            raise SizeCapError(
                f"{ctx.label}: exhaustive dist search is capped at order {self.max_dist_order}"
            )
        if self._group(ctx) is None:
            raise SizeCapError(
                f"{ctx.label}: automorphism group exceeds the exhaustive limit {self.group_limit}"
            )
        det_value = self.exhaustive_det(ctx)
        det = Measurement.exact(det_value, METHOD_EXHAUSTIVE).with_exhaustive(det_value)
        dist_value, notes = self.exhaustive_dist(ctx)
        if dist_value is None:
            dist = Measurement(self.max_dist_colors + 1, max(det_value + 1, self.max_dist_colors + 1),
                               METHOD_EXHAUSTIVE, notes=tuple(notes))
        else:
            dist = Measurement.exact(dist_value, METHOD_EXHAUSTIVE, notes).with_exhaustive(dist_value)
        return det, dist

    # -- formula cascade ----------------------------------------------------

    def _fallback_det(self, ctx: _Context, det_floor: int = 0) -> Measurement:
        """Exhaustive det where feasible, oracle bounds otherwise"""
        graph = ctx.graph
        det_value = self.exhaustive_det(ctx)
        if det_value is not None:
            det = Measurement.exact(det_value, METHOD_EXHAUSTIVE).with_exhaustive(det_value)
        else:
            order = group_order(graph)
            if order == 1:
                ctx.determining_set = ()
                return Measurement.exact(0, METHOD_EXHAUSTIVE, ("oracle finds only the identity",))
            upper = left_path_determining_set(graph)
            ctx.determining_set = upper
            lo = max(det_floor, determining_lower_bound(graph.order, order))
            det = Measurement(min(lo, len(upper)), len(upper), METHOD_EXHAUSTIVE,
                              notes=("search capped; upper bound from the oracle's left path",))
        return det

    def _fallback(self, ctx: _Context, det_floor: int = 0) -> Tuple[Measurement, Measurement]:
        """No closed form applies: exhaustive where feasible, bounds otherwise"""
        det = self._fallback_det(ctx, det_floor)
        if det.hi == 0:
            return det, Measurement.exact(1, METHOD_EXHAUSTIVE)

        dist_value, notes = self.exhaustive_dist(ctx)
        if dist_value is not None:
            return det, Measurement.exact(dist_value, METHOD_EXHAUSTIVE, notes).with_exhaustive(dist_value)
        lo = self.max_dist_colors + 1 if notes else 2
        hi = max(lo, det.hi + 1)
        notes.append("upper bound colors a determining set")
        return det, Measurement(lo, hi, METHOD_EXHAUSTIVE, notes=tuple(notes))

    def _twin_measures(self, ctx: _Context, partition) -> Tuple[Measurement, Measurement]:
        n = ctx.graph.order
        t = partition.class_size
        det = Measurement.exact(n - partition.class_count, METHOD_DET_TWINS)
        ctx.determining_set = tuple(partition.twin_cover())
        if ctx.spec is not None:
            step = circulant_quotient_step(ctx.spec, partition)
        else:
            step = quotient(ctx.graph, partition)
        q_ctx = _Context(step.quotient, step.quotient_spec)
        _, q_dist = self._formula_measures(q_ctx)
        dist = Measurement(dist_twin_recursion(t, q_dist.lo), dist_twin_recursion(t, q_dist.hi),
                           METHOD_DIST_TWINS, notes=(f"quotient {q_ctx.label}: dist {_span(q_dist)}, t={t}",))
        if partition.kind is TwinKind.ADJACENT:
            ctx.notes.append("distinguishing recursion applied to adjacent twins")
        return det, dist

    def _cotwin_measures(self, ctx: _Context) -> Optional[Tuple[Measurement, Measurement]]:
        source = ctx.spec if ctx.spec is not None else ctx.graph
        view, _, pairing, complemented = nonadjacent_view(source)
        if complemented:
            ctx.notes.append("adjacent co-twins handled through the complement")
        if not view.has_triangle():
            crown = recognize_crown(view)
            if crown is None:
                ctx.notes.append("triangle-free co-twin graph failed crown recognition")
                return None
            det = Measurement.exact(crown.k - 1, METHOD_CROWN)
            dist = Measurement.exact(crown_distinguishing(crown.k), METHOD_CROWN)
            return det, dist

        h_graph, labels = neighborhood_subgraph(view, 0)
        h_ctx = _Context(h_graph, None)
        h_det = self._fallback_det(h_ctx)
        det = Measurement(1 + h_det.lo, 1 + h_det.hi, METHOD_STAB_AUT,
                          notes=(f"H_0 has order {h_graph.order} and det {_span(h_det)}",))
        if h_ctx.determining_set is not None and det.is_exact:
            ctx.determining_set = tuple(sorted([0] + [labels[i] for i in h_ctx.determining_set]))

        h_coloring = self._h_coloring(h_ctx)
        automorphisms = self._group(ctx)
        for swap in (False, True):
            coloring = cotwin_coloring(view, pairing, h_coloring, labels, 0, swap)
            if verify_distinguishing(view, coloring, automorphisms):
                ctx.coloring = coloring
                colors = max(coloring) + 1
                dist = Measurement(2, colors, METHOD_STAB_AUT,
                                   notes=("upper bound from the co-twin extension of a coloring of H_0",))
                return det, dist
        self.logger.warning(f"{ctx.label}: co-twin extension is not distinguishing; bounding by det + 1")
        return det, Measurement(2, det.hi + 1, METHOD_STAB_AUT,
                                notes=("upper bound colors a determining set",))

    def _h_coloring(self, h_ctx: _Context) -> Tuple[int, ...]:
        """Distinguishing coloring of H_u, exhaustive when small enough"""
        coloring = None
        if self._dist_feasible(h_ctx):
            coloring = distinguishing_coloring(h_ctx.graph, h_ctx.graph.order, self._group(h_ctx))
        if coloring is None:
            dset = h_ctx.determining_set
            if dset is None:
                dset = left_path_determining_set(h_ctx.graph)
            coloring = determining_coloring(h_ctx.graph.order, dset)
        return coloring

    def _formula_measures(self, ctx: _Context) -> Tuple[Measurement, Measurement]:
        graph = ctx.graph
        if graph.order <= 1:
            return Measurement.exact(0, METHOD_EXHAUSTIVE), Measurement.exact(1, METHOD_EXHAUSTIVE)
        source = ctx.spec if ctx.spec is not None else graph
        partition = detect_twins(source)
        if partition.kind is not TwinKind.NONE:
            if partition.is_uniform:
                return self._twin_measures(ctx, partition)
            ctx.notes.append("twin classes of unequal size; twin cover gives a lower bound only")
            return self._fallback(ctx, det_floor=len(partition.twin_cover()))

        pairing = detect_cotwins(source)
        if pairing.is_positive and pairing.covers:
            if vertex_transitivity_certificate(graph, ctx.spec) is None:
                self.logger.warning(f"{ctx.label}: co-twins without vertex-transitivity; using search")
                ctx.notes.append("co-twins without a vertex-transitivity certificate")
            else:
                measures = self._cotwin_measures(ctx)
                if measures is not None:
                    return measures
        return self._fallback(ctx)

    # -- public -------------------------------------------------------------

    def _measures(self, ctx: _Context) -> Tuple[Measurement, Measurement]:
        if self.mode == "exhaustive":
            return self._exhaustive_measures(ctx)
        det, dist = self._formula_measures(ctx)
        if self.mode == "both":
            det, dist = self._cross_check(ctx, det, dist)
        return det, dist

    def _cross_check(self, ctx: _Context, det: Measurement,
                     dist: Measurement) -> Tuple[Measurement, Measurement]:
        if det.exhaustive_value is None and det.method != METHOD_EXHAUSTIVE:
            value = self.exhaustive_det(ctx)
            if value is not None:
                det = det.with_exhaustive(value)
        if dist.exhaustive_value is None and dist.method != METHOD_EXHAUSTIVE:
            value, notes = self.exhaustive_dist(ctx)
            if value is not None:
                dist = replace(dist.with_exhaustive(value), notes=dist.notes + tuple(notes))
        for name, measure in (("det", det), ("dist", dist)):
            if measure.confirmed is False:
                self.logger.error(
                    f"{ctx.label}: {name} {measure.method} gives {_span(measure)} "
                    f"but exhaustive search gives {measure.exhaustive_value}"
                )
        return det, dist

    def determining_number(self, source: GraphSource) -> Measurement:
        graph, spec = resolve(source)
        return self._measures(_Context(graph, spec))[0]

    def distinguishing_number(self, source: GraphSource) -> Measurement:
        graph, spec = resolve(source)
        return self._measures(_Context(graph, spec))[1]

    def analyze(self, source: GraphSource, arc_transitivity: bool = True) -> SymmetryReport:
        """Group structure, det and dist of one graph"""
        graph, spec = resolve(source)
        ctx = _Context(graph, spec)
        try:
            structure = structural_order(source)
            det, dist = self._measures(ctx)
            if ctx.notes:
                dist = replace(dist, notes=dist.notes + tuple(ctx.notes))
            arc = is_arc_transitive(graph) if arc_transitivity else None
            self.logger.info(f"{ctx.label}: det {_span(det)} [{det.method}], dist {_span(dist)} [{dist.method}]")
            return SymmetryReport(structure, det, dist, arc, ctx.determining_set, ctx.coloring)
        except Exception as e:
            self.logger.error(f"Error analyzing symmetry of {ctx.label}: {e}")
            raise


def _span(measure: Measurement) -> str:
    return str(measure.lo) if measure.is_exact else f"[{measure.lo}, {measure.hi}]"


def determining_number(source: GraphSource, mode: Optional[str] = None) -> Measurement:
    return SymmetryEngine(mode).determining_number(source)


def distinguishing_number(source: GraphSource, mode: Optional[str] = None) -> Measurement:
    return SymmetryEngine(mode).distinguishing_number(source)


def symmetry_report(source: GraphSource, mode: Optional[str] = None, arc_transitivity: bool = True) -> SymmetryReport:
    return SymmetryEngine(mode).analyze(source, arc_transitivity)

import pytest

from core.autgroup import enumerate_automorphisms
from core.circulant import build, parse_spec
from core.cotwins import crown_graph, detect_cotwins
from core.errors import SizeCapError
from core.graph import Graph, named_graph
from core.symmetry import (Measurement, SymmetryEngine, cotwin_coloring, crown_distinguishing, determining_lower_bound,
                           determining_number, dist_twin_recursion, distinguishing_coloring, distinguishing_number,
                           is_determining, left_path_determining_set, minimum_determining_set, minimum_twin_cover,
                           prime_order_cycles, symmetry_report, verify_distinguishing)


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.mark.parametrize("t, d_quotient, expected", [(2, 1, 2), (2, 2, 3), (2, 3, 3), (2, 4, 4), (3, 1, 3), (3, 4, 4)])
def test_dist_twin_recursion(t, d_quotient, expected):
    assert dist_twin_recursion(t, d_quotient) == expected


def test_dist_twin_recursion_rejects_bad_input():
    with pytest.raises(ValueError):
        dist_twin_recursion(1, 2)
    with pytest.raises(ValueError):
        dist_twin_recursion(2, 0)


@pytest.mark.parametrize("k, expected", [(3, 2), (4, 3), (5, 3), (6, 3), (8, 3), (9, 4), (16, 5)])
def test_crown_distinguishing(k, expected):
    assert crown_distinguishing(k) == expected


def test_determining_lower_bound():
    assert determining_lower_bound(12, 120) == 2
    assert determining_lower_bound(8, 128) == 3
    assert determining_lower_bound(5, 1) == 0


def test_measurement():
    m = Measurement.exact(3, "crown")
    assert m.is_exact and m.value == 3 and m.resolved == 3
    assert m.to_dict() == {"method": "crown", "value": 3}
    bounds = Measurement(2, 4, "StabAut")
    assert bounds.value is None
    assert bounds.admits(3) and not bounds.admits(5)
    checked = bounds.with_exhaustive(3)
    assert checked.confirmed and checked.resolved == 3
    assert checked.to_dict() == {"method": "StabAut", "bounds": {"lo": 2, "hi": 4}, "exhaustive": 3,
                                 "confirmed": True}
    with pytest.raises(ValueError):
        Measurement(3, 2, "exhaustive")


def test_determining_sets(c8_twins, icosahedron):
    graph = build(c8_twins)
    cover = minimum_twin_cover(c8_twins)
    assert cover == [4, 5, 6, 7]
    assert is_determining(graph, cover)
    assert not is_determining(graph, cover[:-1])
    assert is_determining(icosahedron, left_path_determining_set(icosahedron))
    assert len(minimum_determining_set(cycle(5))) == 2
    assert len(minimum_determining_set(named_graph("petersen"))) == 3
    assert len(minimum_determining_set(Graph.complete(5))) == 4
    assert minimum_determining_set(Graph.complete(3), enumerate_automorphisms(Graph.complete(3))) == (0, 1)


def test_prime_order_cycles_c5():
    structures = prime_order_cycles(enumerate_automorphisms(cycle(5)))
    # one rotation subgroup of order 5 and five reflections
    assert len(structures) == 6
    assert ((0, 1, 2, 3, 4),) in structures


def test_distinguishing_colorings():
    c6 = distinguishing_coloring(cycle(6), 3)
    assert max(c6) + 1 == 2
    assert verify_distinguishing(cycle(6), c6)
    assert max(distinguishing_coloring(cycle(5), 3)) + 1 == 3
    assert distinguishing_coloring(Graph.complete(4), 3) is None
    assert not verify_distinguishing(cycle(6), (0,) * 6)
    automorphisms = enumerate_automorphisms(cycle(6))
    assert verify_distinguishing(cycle(6), c6, automorphisms)


def test_cotwin_coloring_extension(crown4):
    pairing = detect_cotwins(crown4)
    neighbors = sorted(crown4.open_neighborhood(0))
    coloring = cotwin_coloring(crown4, pairing, (0, 1, 2), neighbors)
    assert coloring[0] == 0 and coloring[4] == 1
    assert coloring[5] == coloring[1]
    assert cotwin_coloring(crown4, pairing, (0, 1, 2), neighbors, swap=True)[0] == 1


def test_twin_formulas_c8(c8_twins):
    report = symmetry_report(c8_twins, mode="both")
    assert report.order == 128
    assert (report.det.value, report.det.method) == (4, "Cor-DetTwins")
    assert (report.dist.value, report.dist.method) == (3, "Thm-DistTwins")
    assert report.det.exhaustive_value == 4 and report.det.confirmed
    assert report.dist.exhaustive_value == 3 and report.dist.confirmed
    assert report.consistent
    assert is_determining(build(c8_twins), report.determining_set)


def test_stabilizer_formulas_c14(c14):
    report = symmetry_report(c14, mode="both")
    assert report.order == 28
    assert report.det.value == 2
    assert report.det.method == "StabAut"
    assert report.dist.method == "StabAut"
    assert report.dist.resolved == 2
    assert report.consistent


def test_stabilizer_formulas_icosahedron(icosahedron):
    report = symmetry_report(icosahedron, mode="both")
    assert report.order == 120
    assert report.det.value == 3
    assert report.dist.resolved == 3
    assert report.consistent
    assert verify_distinguishing(icosahedron, report.distinguishing_coloring)


@pytest.mark.parametrize("k, dist", [(3, 2), (4, 3), (5, 3), (6, 3)])
def test_crown_formulas(k, dist):
    report = symmetry_report(crown_graph(k), mode="both")
    assert report.det.value == k - 1
    assert report.dist.value == dist
    assert report.det.method == report.dist.method == "crown"
    assert report.consistent


def test_crown_through_complement(envelope, q3):
    assert determining_number(envelope, mode="formula").value == 2
    assert distinguishing_number(envelope, mode="formula").value == 2
    assert determining_number(q3, mode="formula").value == 3
    assert distinguishing_number(q3, mode="formula").method == "crown"


def test_c18_bounds(c18):
    report = symmetry_report(c18, mode="formula", arc_transitivity=False)
    assert report.order == 2592
    assert report.det.value == 6
    assert report.det.method == "StabAut"
    assert report.dist.lo == 2
    assert report.dist.hi <= 4
    assert verify_distinguishing(build(c18), report.distinguishing_coloring)


def test_exhaustive_fallback_petersen():
    report = symmetry_report(named_graph("petersen"), mode="formula")
    assert report.det.method == "exhaustive"
    assert report.det.value == 3
    assert report.dist.value == 3
    assert report.arc_transitive


def test_trivial_graphs():
    report = symmetry_report(Graph.empty(1))
    assert report.det.value == 0 and report.dist.value == 1


def test_exhaustive_mode_size_cap(c18):
    with pytest.raises(SizeCapError):
        SymmetryEngine("exhaustive").analyze(c18)


def test_exhaustive_mode_agrees(c14):
    report = SymmetryEngine("exhaustive").analyze(c14, arc_transitivity=False)
    assert report.det.value == 2
    assert report.dist.value == 2


def test_unknown_mode():
    with pytest.raises(ValueError):
        SymmetryEngine("guess")


def test_report_dict():
    data = symmetry_report(parse_spec(14, "±1,±2,±3"), mode="formula").to_dict()
    assert data["group"]["order"] == 28
    assert "det" in data and "dist" in data
    assert isinstance(data["arc_transitive"], bool)

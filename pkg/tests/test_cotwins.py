import networkx as nx
import pytest

from core.circulant import build, parse_spec
from core.cotwins import (cotwin_quotient, cross_pairs_are_matchings, crown_circulant_spec, crown_graph,
                          detect_cotwins, detect_cotwins_generic, neighborhood_subgraph, nonadjacent_view,
                          recognize_crown)
from core.errors import NotTwinFreeError
from core.graph import Graph
from core.twins import TwinKind


def test_circulant_nonadjacent_cotwins(c14):
    pairing = detect_cotwins(c14)
    assert pairing.kind is TwinKind.NONADJACENT
    assert pairing.k == 7
    assert pairing.pairs == tuple((u, u + 7) for u in range(7))
    assert pairing.covers


def test_circulant_and_generic_agree(c14):
    assert detect_cotwins_generic(build(c14)).pairs == detect_cotwins(c14).pairs


def test_adjacent_cotwins_through_complement():
    spec = parse_spec(10, "±2,±4,5")
    pairing = detect_cotwins(spec)
    assert pairing.kind is TwinKind.ADJACENT
    view, view_spec, view_pairing, complemented = nonadjacent_view(spec)
    assert complemented
    assert view_spec.name == "C_10(±1,±3)"
    assert view_pairing.kind is TwinKind.NONADJACENT
    assert view == build(view_spec)


def test_no_cotwins():
    assert not detect_cotwins(parse_spec(9, "±1,±2")).is_positive
    assert not detect_cotwins(parse_spec(8, "±1,±2,4")).is_positive
    assert not detect_cotwins(Graph.from_networkx(nx.petersen_graph())).is_positive


def test_requires_twin_free(c8_twins):
    with pytest.raises(NotTwinFreeError):
        detect_cotwins(c8_twins)
    with pytest.raises(NotTwinFreeError):
        detect_cotwins_generic(build(c8_twins))


def test_icosahedron_antipodal_pairs(icosahedron):
    pairing = detect_cotwins(icosahedron)
    assert pairing.kind is TwinKind.NONADJACENT
    assert pairing.k == 6
    assert pairing.covers
    assert cross_pairs_are_matchings(icosahedron, pairing)


def test_crown_recognition(crown4, q3, c14):
    witness = recognize_crown(crown4)
    assert witness.k == 4
    assert witness.matching == ((0, 4), (1, 5), (2, 6), (3, 7))
    assert recognize_crown(q3).k == 4
    assert recognize_crown(build(c14)) is None
    assert recognize_crown(Graph.complete(6)) is None


def test_crown_circulants():
    assert crown_circulant_spec(5).name == "C_10(±1,±3)"
    assert crown_circulant_spec(3).name == "C_6(±1)"
    assert crown_circulant_spec(4) is None
    with pytest.raises(ValueError):
        crown_circulant_spec(2)
    assert recognize_crown(build(crown_circulant_spec(7))).k == 7


def test_crown_pairs_and_quotient(crown4):
    pairing = detect_cotwins(crown4)
    assert pairing.pairs == ((0, 4), (1, 5), (2, 6), (3, 7))
    assert cross_pairs_are_matchings(crown4, pairing)
    assert cotwin_quotient(crown4, pairing) == Graph.complete(4)


def test_neighborhood_subgraph(icosahedron):
    h, labels = neighborhood_subgraph(icosahedron, 0)
    assert labels == sorted(icosahedron.open_neighborhood(0))
    assert h.order == 5
    assert h.is_regular() == 2
    assert h.is_connected()

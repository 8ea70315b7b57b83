import pytest

from core.circulant import CirculantSpec, all_connection_sets, build, parse_spec
from core.errors import PartitionKindError, WrongKindError
from core.graph import Graph
from core.twins import (TwinKind, chains_are_complementary, circulant_quotient_step, complement_chain,
                        detect_twins, detect_twins_circulant, detect_twins_generic, quotient, quotient_circulant,
                        quotient_sequence)


def test_adjacent_twins_c8(c8_twins):
    partition = detect_twins(c8_twins)
    assert partition.kind is TwinKind.ADJACENT
    assert partition.generator == 4
    assert partition.classes == ((0, 4), (1, 5), (2, 6), (3, 7))
    assert partition.class_size == 2
    assert partition.kernel_order == 16
    assert partition.twin_cover() == [4, 5, 6, 7]


def test_complement_has_nonadjacent_twins(c8_twins):
    co = detect_twins(parse_spec(8, "±2"))
    assert co.kind is TwinKind.NONADJACENT
    assert co.classes == detect_twins(c8_twins).classes


def test_maximal_subgroup_is_chosen():
    partition = detect_twins(parse_spec(60, "±1,±9,±11,±19,±21,±29"))
    assert partition.kind is TwinKind.NONADJACENT
    assert partition.generator == 10
    assert partition.class_size == 6
    assert partition.rejected_generators == (20, 30)


def test_complete_graph_is_one_adjacent_class():
    partition = detect_twins(parse_spec(5, "±1,±2"))
    assert partition.kind is TwinKind.ADJACENT
    assert partition.classes == ((0, 1, 2, 3, 4),)


def test_twin_free():
    partition = detect_twins(parse_spec(14, "±1,±2,±3"))
    assert partition.kind is TwinKind.NONE
    assert partition.class_count == 14
    assert partition.twin_cover() == []


@pytest.mark.parametrize("n", range(1, 11))
def test_coset_detection_matches_neighborhoods(n):
    for A in all_connection_sets(n):
        spec = CirculantSpec(n, A)
        coset = detect_twins_circulant(spec)
        generic = detect_twins_generic(build(spec))
        assert coset.kind is generic.kind, spec.name
        assert set(coset.classes) == set(generic.classes), spec.name


def test_generic_twins_on_non_circulant():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    partition = detect_twins(star)
    assert partition.kind is TwinKind.NONADJACENT
    assert partition.classes == ((0,), (1, 2, 3))
    assert not partition.is_uniform
    assert partition.class_size is None


def test_quotient_sequence_c8(c8_twins):
    chain = quotient_sequence(c8_twins)
    assert len(chain) == 3
    assert chain.kinds == (TwinKind.ADJACENT, TwinKind.NONADJACENT, TwinKind.ADJACENT)
    assert [step.quotient_spec.name for step in chain.steps] == ["C_4(±1)", "C_2(1)", "C_1()"]
    assert [g.order for g in chain.graphs] == [8, 4, 2, 1]
    assert chain.terminal.order == 1
    data = chain.to_dict()
    assert data["steps"][0]["t"] == 2
    assert data["terminal"]["order"] == 1


def test_twin_free_sequence_is_empty(c14):
    chain = quotient_sequence(c14)
    assert len(chain) == 0
    assert chain.graphs == (build(c14),)


def test_circulant_quotient_matches_collapse(c8_twins):
    partition = detect_twins(c8_twins)
    step = circulant_quotient_step(c8_twins, partition)
    assert build(step.quotient_spec) == step.quotient
    assert step.quotient == quotient(build(c8_twins), partition).quotient


def test_quotient_errors(c8_twins, c14):
    with pytest.raises(PartitionKindError):
        quotient(build(c14), detect_twins(c14))
    with pytest.raises(WrongKindError):
        quotient_circulant(c8_twins, detect_twins(c8_twins))


def test_complement_chain_flips_kinds(c8_twins):
    chain = quotient_sequence(c8_twins)
    co_chain = complement_chain(c8_twins)
    assert co_chain.kinds == (TwinKind.NONADJACENT, TwinKind.ADJACENT, TwinKind.NONADJACENT)
    assert chains_are_complementary(chain, co_chain)
    assert not chains_are_complementary(chain, chain)


def test_c9_quotient_is_triangle():
    spec = parse_spec(9, "±1,±2,±4")
    partition = detect_twins(spec)
    assert partition.kind is TwinKind.NONADJACENT
    assert partition.generator == 3
    assert quotient_circulant(spec, partition).name == "C_3(±1)"
    assert detect_twins(parse_spec(9, "±1,±3,±4")).kind is TwinKind.NONE

"""Constructive labelers: arbitrary graphs, complete graphs, restriction."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iasi import (
    ConstructionParams,
    Graph,
    LabelCollisionError,
    SubgraphError,
    check_gcd_invariant,
    check_multiplier_condition,
    classify_arithmetic,
    complete_graph,
    construct_arbitrary,
    construct_complete,
    cycle_graph,
    detect_ap,
    distinct_sum_sequence,
    path_graph,
    predicted_edge_cardinality,
    restrict_labeling,
    star_graph,
    verify_iasi,
)


def assert_arithmetic(lg):
    report = classify_arithmetic(lg)
    assert report.is_iasi, report.collision
    assert report.arithmetic
    return report


# -------------------------------------------------------------- parameters


def test_params_validation():
    with pytest.raises(ValueError):
        ConstructionParams(base_difference=0)
    with pytest.raises(ValueError):
        ConstructionParams(label_size_range=(2, 4))
    with pytest.raises(ValueError):
        ConstructionParams(label_size_range=(5, 4))
    with pytest.raises(ValueError):
        ConstructionParams(multiplier_policy="biggest")
    with pytest.raises(ValueError):
        ConstructionParams(start_offsets=(3, 3))
    with pytest.raises(ValueError):
        ConstructionParams(label_sizes=(3, 2))


def test_distinct_sum_sequence_has_distinct_pair_sums():
    terms = distinct_sum_sequence(20)
    sums = [terms[i] + terms[j] for i in range(20) for j in range(i + 1, 20)]
    assert len(sums) == len(set(sums))
    assert terms[:6] == [1, 2, 3, 5, 8, 13]


# ------------------------------------------------------- construct_arbitrary


def test_single_edge_frozen_example():
    g = Graph(["u", "v"], [("u", "v")])
    result = construct_arbitrary(
        g,
        ConstructionParams(
            base_difference=2,
            label_sizes=(3, 4),
            multiplier_policy="maximal",
            start_offsets=(0, 1),
        ),
    )
    lg = result.labeled_graph
    assert tuple(lg.vertex_labels["u"]) == (0, 2, 4)
    assert tuple(lg.vertex_labels["v"]) == (1, 7, 13, 19)
    edge = lg.edge_labels[("u", "v")]
    assert detect_ap(edge).difference == 2
    assert len(edge) == 12 == predicted_edge_cardinality(3, 4, 3)
    assert_arithmetic(lg)


def test_cycle_with_documented_offsets():
    # traversal from a visits a, b, d, c; offsets land in that order
    result = construct_arbitrary(
        cycle_graph(4),
        ConstructionParams(label_sizes=(3, 3, 3, 3), start_offsets=(0, 10, 20, 30)),
    )
    lg = result.labeled_graph
    labels = {v: tuple(s) for v, s in lg.vertex_labels.items()}
    assert labels == {
        "a": (0, 1, 2), "b": (10, 11, 12), "d": (20, 21, 22), "c": (30, 31, 32)
    }
    assert_arithmetic(lg)
    for label in lg.edge_labels.values():
        assert detect_ap(label).difference == 1


def test_explicit_offsets_can_collide():
    # same offsets, permuted so two edge sums coincide: b+c == a+d == 30
    with pytest.raises(LabelCollisionError) as exc:
        construct_arbitrary(
            cycle_graph(4),
            ConstructionParams(label_sizes=(3, 3, 3, 3), start_offsets=(0, 10, 30, 20)),
        )
    assert exc.value.witness.kind == "edge"


def test_offset_count_must_match():
    with pytest.raises(ValueError):
        construct_arbitrary(
            path_graph(3), ConstructionParams(start_offsets=(0, 1))
        )
    with pytest.raises(ValueError):
        construct_arbitrary(path_graph(3), ConstructionParams(label_sizes=(3, 3)))


@pytest.mark.parametrize("policy", ["fixed", "random", "maximal"])
@pytest.mark.parametrize(
    "graph",
    [path_graph(5), cycle_graph(5), complete_graph(5), star_graph(5)],
    ids=lambda g: g.graph_id(),
)
def test_families_construct_arithmetic(graph, policy):
    result = construct_arbitrary(
        graph, ConstructionParams(multiplier_policy=policy, seed=13, label_size_range=(3, 5))
    )
    report = assert_arithmetic(result.labeled_graph)
    assert not report.semi_arithmetic
    assert check_multiplier_condition(result.labeled_graph).ok
    assert check_gcd_invariant(result.labeled_graph).ok


def test_construction_deterministic():
    g = complete_graph(4)
    p = ConstructionParams(multiplier_policy="random", seed=99, label_size_range=(3, 6))
    assert construct_arbitrary(g, p).labeled_graph == construct_arbitrary(g, p).labeled_graph


def test_seed_changes_random_draws():
    g = complete_graph(4)
    a = construct_arbitrary(
        g, ConstructionParams(multiplier_policy="random", seed=1, label_size_range=(3, 6))
    )
    b = construct_arbitrary(
        g, ConstructionParams(multiplier_policy="random", seed=2, label_size_range=(3, 6))
    )
    assert a.labeled_graph != b.labeled_graph


def test_fallback_still_arithmetic():
    # seed 3 draws multipliers 2 and 3 for the two branches of the cycle, so
    # the closing vertex sees differences {2, 3} and cannot bridge them
    result = construct_arbitrary(
        cycle_graph(4),
        ConstructionParams(multiplier_policy="random", seed=3, label_size_range=(3, 5)),
    )
    assert result.fallback_applied and result.fallback_vertex is not None
    assert len(set(result.differences.values())) == 1
    assert_arithmetic(result.labeled_graph)


def test_multi_neighbor_takes_largest_difference():
    result = construct_arbitrary(
        complete_graph(3), ConstructionParams(multiplier_policy="maximal")
    )
    diffs = result.differences
    assert diffs["a"] == 1 and diffs["b"] == 3 and diffs["c"] == 3
    assert not result.fallback_applied
    assert_arithmetic(result.labeled_graph)


def test_disconnected_graph_labeled_per_component():
    g = Graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    result = construct_arbitrary(g, ConstructionParams())
    report = verify_iasi(result.labeled_graph)
    assert report.is_iasi


def test_edge_cardinalities_match_prediction():
    """Every constructed edge obeys the m + k(n-1) closed form."""
    for graph in (path_graph(4), cycle_graph(5), complete_graph(4), star_graph(6)):
        result = construct_arbitrary(
            graph, ConstructionParams(multiplier_policy="maximal", seed=5, label_size_range=(3, 4))
        )
        lg = result.labeled_graph
        for (u, v), label in lg.edge_labels.items():
            du, dv = result.differences[u], result.differences[v]
            (small, dsmall), (big, dbig) = sorted(
                [(u, du), (v, dv)], key=lambda t: t[1]
            )
            k = dbig // dsmall
            m, n = len(lg.vertex_labels[small]), len(lg.vertex_labels[big])
            assert dbig % dsmall == 0
            assert len(label) == predicted_edge_cardinality(m, n, k)


@given(st.integers(0, 2**64 - 1))
@settings(max_examples=25, deadline=None)
def test_any_seed_constructs_arithmetic(seed):
    result = construct_arbitrary(
        cycle_graph(5),
        ConstructionParams(multiplier_policy="random", seed=seed, label_size_range=(3, 6)),
    )
    assert_arithmetic(result.labeled_graph)


# -------------------------------------------------------- construct_complete


def test_complete_frozen_example():
    lg = construct_complete(4, (2, 2), d=3, k=2, sizes=3)
    assert_arithmetic(lg)
    diffs = {v: detect_ap(s).difference for v, s in lg.vertex_labels.items()}
    assert diffs == {"a": 3, "b": 3, "c": 6, "d": 6}


def test_complete_multiplier_bound():
    with pytest.raises(ValueError):
        construct_complete(4, (2, 2), d=3, k=4, sizes=3)


def test_complete_part_validation():
    with pytest.raises(ValueError):
        construct_complete(4, (0, 4), d=1, k=1)
    with pytest.raises(ValueError):
        construct_complete(4, (3, 2), d=1, k=1)
    with pytest.raises(ValueError):
        construct_complete(1, (1, 0), d=1, k=1)


def test_complete_single_band():
    lg = construct_complete(5, (5, 0), d=2, k=1, sizes=4)
    assert_arithmetic(lg)
    assert {detect_ap(s).difference for s in lg.vertex_labels.values()} == {2}


def test_complete_per_vertex_sizes():
    lg = construct_complete(4, (1, 3), d=1, k=3, sizes=(3, 4, 5, 6))
    assert_arithmetic(lg)
    assert [len(lg.vertex_labels[v]) for v in lg.graph.vertices] == [3, 4, 5, 6]


# --------------------------------------------------------------- restriction


def test_restriction_preserves_arithmetic():
    lg = construct_complete(4, (2, 2), d=1, k=2, sizes=3)
    spanning_path = Graph(
        ["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]
    )
    restricted = restrict_labeling(lg, spanning_path)
    assert_arithmetic(restricted)
    assert restricted.vertex_labels["a"] == lg.vertex_labels["a"]


def test_restriction_to_single_edge():
    lg = construct_complete(4, (2, 2), d=1, k=2, sizes=3)
    restricted = restrict_labeling(lg, Graph(["a", "b"], [("a", "b")]))
    assert_arithmetic(restricted)


def test_restriction_rejects_foreign_elements():
    lg = construct_complete(3, (3, 0), d=1, k=1)
    with pytest.raises(SubgraphError, match="x"):
        restrict_labeling(lg, Graph(["a", "x"], [("a", "x")]))
    with pytest.raises(SubgraphError):
        # both vertices exist but the edge does not
        restrict_labeling(
            construct_arbitrary(path_graph(3), ConstructionParams()).labeled_graph,
            Graph(["a", "c"], [("a", "c")]),
        )

import random
from itertools import permutations

import pytest

from chordck.errors import InvalidParameterError, InvalidVertexError
from chordck.graph import cartesian_product, from_edge_list, induced_subgraph, standard_graph
from chordck.patterns import (
    PATTERN_NAMES,
    NeighborhoodShape,
    check_shape,
    contains_induced,
    contains_induced_at,
    first_forbidden_witness,
    has_claw,
    is_free,
    is_traceable,
    make_pattern,
    neighborhood_structure,
    parse_pattern_list,
    pattern,
)

from oracles import atlas, brute_induced_witness, subset_contains, to_nx

ALL = [pattern(n) for n in PATTERN_NAMES]


def test_pattern_shapes():
    assert pattern("claw").graph.degrees() == [3, 1, 1, 1]
    assert pattern("p5").graph.num_edges() == 4
    z1 = pattern("z1").graph
    assert z1.order == 4 and z1.num_edges() == 4
    z2 = pattern("Z2").graph
    assert z2.order == 5 and sorted(z2.degrees()) == [1, 2, 2, 2, 3]
    assert make_pattern("path", 6).name == "p6"


def test_unknown_pattern_lists_names():
    with pytest.raises(InvalidParameterError, match="claw, p4"):
        pattern("k4")
    with pytest.raises(InvalidParameterError):
        make_pattern("path", 0)
    assert [p.name for p in parse_pattern_list("claw, p6")] == ["claw", "p6"]


def test_detectors_match_subset_oracle_on_all_small_graphs():
    mismatches = []
    for g in atlas(7):
        for p in ALL:
            if (contains_induced(g, p) is not None) != subset_contains(g, p.graph):
                mismatches.append((g, p.name))
    assert mismatches == []


def test_witness_is_least_embedding():
    rng = random.Random(8)
    for _ in range(150):
        n = rng.randint(4, 7)
        g = from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45])
        for p in ALL:
            assert contains_induced(g, p) == brute_induced_witness(g, p.graph)


def test_anchored_search_matches_deletion():
    rng = random.Random(9)
    for _ in range(200):
        n = rng.randint(4, 9)
        g = from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        for p in ALL:
            w = contains_induced(g, p)
            for v in range(n):
                through = contains_induced_at(g, p, v)
                # a copy avoids v exactly when G - v still has one
                rest = g.vertex_mask & ~(1 << v)
                avoid = contains_induced(induced_subgraph(g, rest), p) is not None
                assert (w is not None) == (through or avoid)
                if through:
                    assert w is not None


def test_known_containments():
    assert contains_induced(standard_graph("complete", 6), pattern("claw")) is None
    assert contains_induced(standard_graph("cycle", 8), pattern("p5")) == (0, 1, 2, 3, 4)
    assert contains_induced(standard_graph("cycle", 5), pattern("p5")) is None
    assert has_claw(from_edge_list(4, [(0, 1), (0, 2), (0, 3)]))
    assert not has_claw(cartesian_product(standard_graph("complete", 3), standard_graph("complete", 3)))
    hit = first_forbidden_witness(standard_graph("cycle", 8), [pattern("claw"), pattern("p5")])
    assert hit[0].name == "p5"
    assert is_free(standard_graph("complete", 5), ALL)


def test_has_claw_agrees_with_detector():
    for g in atlas(6):
        assert has_claw(g) == (contains_induced(g, pattern("claw")) is not None)


def test_is_traceable():
    assert is_traceable(standard_graph("path", 6)) is not None
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    assert is_traceable(star) is None
    for g in atlas(6):
        ng = to_nx(g)
        path = is_traceable(g)
        expected = any(
            all(ng.has_edge(a, b) for a, b in zip(p, p[1:]))
            for p in permutations(range(g.order))
        )
        assert (path is not None) == expected
        if path is not None:
            assert sorted(path) == list(range(g.order))
            assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def test_neighborhood_shapes():
    # centre 0 of a claw: independent triple
    claw = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    shape = neighborhood_structure(claw, 0)
    assert shape.classification == NeighborhoodShape.OTHER
    assert check_shape(claw, 0, shape)
    # bowtie centre: two disjoint cliques
    bowtie = from_edge_list(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    shape = neighborhood_structure(bowtie, 2)
    assert shape.classification == NeighborhoodShape.CLIQUES
    assert shape.witness == ((0, 1), (3, 4))
    assert check_shape(bowtie, 2, shape)
    # wheel hub: the rim is traceable
    wheel = from_edge_list(6, [(0, i) for i in range(1, 6)] + [(i, i % 5 + 1) for i in range(1, 6)])
    shape = neighborhood_structure(wheel, 0)
    assert shape.classification == NeighborhoodShape.TRACEABLE
    assert check_shape(wheel, 0, shape)
    # isolated vertex: empty neighbourhood counts as two (empty) cliques
    assert neighborhood_structure(from_edge_list(1, []), 0).classification == NeighborhoodShape.CLIQUES
    with pytest.raises(InvalidVertexError):
        neighborhood_structure(claw, 9)


def test_neighborhood_witnesses_always_check():
    for g in atlas(6):
        for x in range(g.order):
            assert check_shape(g, x, neighborhood_structure(g, x))

import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.sparse.csgraph import csgraph_from_dense, shortest_path

from routing_flowshop.instance import (
    DisconnectedInstanceError,
    InstanceError,
    ParseError,
    RawNetwork,
    ValidationError,
    build_reduced_network,
    from_raw,
    generate,
    parse,
    serialize,
    validate,
)

from conftest import make_instance


def scipy_closure(raw: RawNetwork) -> np.ndarray:
    weights = np.full((raw.node_count, raw.node_count), np.inf)
    for u, v, w in raw.arcs:
        weights[u, v] = min(weights[u, v], w)
    return shortest_path(csgraph_from_dense(weights, null_value=np.inf), method="D")


def random_raw(seed, nodes=6, density=0.6, max_w=9):
    rng = np.random.default_rng(seed)
    arcs = [(u, (u + 1) % nodes, int(rng.integers(0, max_w + 1))) for u in range(nodes)]  # ring: strongly connected
    for u, v in itertools.permutations(range(nodes), 2):
        if rng.random() < density:
            arcs.append((u, v, int(rng.integers(0, max_w + 1))))
    return RawNetwork(nodes, 0, tuple(arcs))


class TestBuildReducedNetwork:
    def test_two_node_depot_copies(self):
        raw = RawNetwork(2, 0, ((0, 1, 3), (1, 0, 5)))
        net = build_reduced_network(raw, {1})
        assert net.g == 1
        assert net.rho[0][1] == 3
        assert net.rho[1][2] == 5
        assert net.rho[0][2] == 0

    def test_closure_shortens_arc(self):
        raw = RawNetwork(3, 0, ((0, 1, 1), (1, 2, 1), (0, 2, 10), (2, 0, 1), (2, 1, 9)))
        net = build_reduced_network(raw, {1, 2})
        assert net.rho[0][1] == 1
        assert net.rho[0][2] == 2
        assert net.rho[2][1] == 2  # 2 -> depot -> 1

    @pytest.mark.parametrize("seed", range(5))
    def test_triangle_inequality_exhaustive(self, seed):
        raw = random_raw(seed)
        net = build_reduced_network(raw, {1, 3, 4})
        rho = net.rho
        size = net.g + 2
        for i, j, k in itertools.product(range(size), repeat=3):
            assert rho[i][k] <= rho[i][j] + rho[j][k]
        assert all(rho[i][i] == 0 for i in range(size))

    @pytest.mark.parametrize("seed", range(5))
    def test_matches_independent_shortest_paths(self, seed):
        raw = random_raw(seed, density=0.3)
        nodes = [2, 3, 5]
        expected = scipy_closure(raw)
        order = [0, *nodes, 0]
        net = build_reduced_network(raw, nodes)
        assert np.array_equal(net.as_array(), expected[np.ix_(order, order)].astype(int))

    def test_disconnected(self):
        raw = RawNetwork(3, 0, ((0, 1, 1), (1, 0, 1), (0, 2, 1)))
        with pytest.raises(DisconnectedInstanceError):
            build_reduced_network(raw, {1, 2})

    def test_jobs_at_depot(self):
        raw = RawNetwork(2, 0, ((0, 1, 4), (1, 0, 2)))
        inst = from_raw(raw, [(0, 1, 1), (1, 2, 2)])
        assert inst.g == 2
        assert inst.jobs[0].node == 1
        assert inst.rho[0][1] == 0 and inst.rho[1][3] == 0
        assert not validate(inst)


class TestValidate:
    def test_valid(self):
        inst = make_instance([[0, 1, 1], [1, 0, 1], [1, 1, 0]], [(1, 2, 3)])
        assert validate(inst) == []

    def test_triangle_violation(self):
        inst = make_instance([[0, 5, 9], [5, 0, 1], [9, 1, 0]], [(1, 2, 3)])
        violations = validate(inst)
        assert any("triangle" in v and "rho[0][2]=9" in v for v in violations)

    def test_node_index_zero(self):
        inst = make_instance([[0, 0, 0]] * 3, [(1, 1, 1), (0, 1, 1)])
        assert any("node index 0" in v for v in validate(inst))

    def test_non_metric_matrix_rejected(self):
        # raw arc weights used directly, skipping the closure step
        weights = {(0, 1): 1, (1, 2): 1, (0, 2): 10, (1, 0): 1, (2, 0): 1, (2, 1): 1}
        raw = RawNetwork(3, 0, tuple((u, v, w) for (u, v), w in weights.items()))
        order = [0, 1, 2, 0]
        rho = [[0 if u == v else weights[u, v] for v in order] for u in order]
        assert validate(make_instance(rho, [(1, 1, 1), (2, 1, 1)]))
        closed = build_reduced_network(raw, {1, 2})
        assert closed.rho[0][2] == 2
        assert not validate(make_instance(closed.rho, [(1, 1, 1), (2, 1, 1)]))

    def test_empty_node_and_negative_times(self):
        inst = make_instance([[0] * 4 for _ in range(4)], [(1, -1, 2)])
        violations = validate(inst)
        assert any("holds no jobs" in v for v in violations)
        assert any("negative processing" in v for v in violations)


class TestGenerate:
    def test_deterministic(self):
        assert generate(1, 2, 4, 10, 10) == generate(1, 2, 4, 10, 10)

    @pytest.mark.parametrize("seed", range(20))
    def test_valid(self, seed):
        inst = generate(seed, 3, 7, 10, 10)
        assert validate(inst) == []
        assert all(k >= 1 for k in inst.n_per_node)
        assert sum(inst.n_per_node) == 7
        assert all(0 <= j.a <= 10 and 0 <= j.b <= 10 for j in inst.jobs)

    def test_seeds_differ(self):
        assert serialize(generate(1, 3, 6, 10, 10)) != serialize(generate(2, 3, 6, 10, 10))

    @pytest.mark.parametrize("args", [(0, 0, 1, 1, 1), (0, 3, 2, 1, 1), (0, 1, 1, 0, 1), (0, 1, 1, 1, -1)])
    def test_bad_parameters(self, args):
        with pytest.raises(InstanceError):
            generate(*args)


class TestParse:
    @given(st.integers(0, 10_000), st.integers(1, 4), st.integers(0, 6))
    @settings(max_examples=50, deadline=None)
    def test_round_trip(self, seed, g, extra):
        inst = generate(seed, g, g + extra, 9, 9)
        assert parse(serialize(inst)) == inst

    def test_missing_jobs(self):
        with pytest.raises(ParseError, match="jobs"):
            parse(json.dumps({"format": "reduced", "g": 1, "rho": [[0] * 3] * 3}))

    def test_bad_json_position(self):
        with pytest.raises(ParseError) as err:
            parse('{"format": "reduced",\n "g": }')
        assert "line 2" in str(err.value)

    def test_unknown_format(self):
        with pytest.raises(ParseError, match="format"):
            parse(json.dumps({"format": "euclidean", "jobs": []}))

    def test_non_integer(self):
        doc = {"format": "reduced", "g": 1, "rho": [[0, 1, 1], [1, 0, 1], [1, 1, 0]],
               "jobs": [{"node": 1, "a": 1.5, "b": 2}]}
        with pytest.raises(ParseError, match=r"\$\.jobs\[0\]\.a"):
            parse(json.dumps(doc))

    def test_invalid_instance(self):
        doc = {"format": "reduced", "g": 1, "rho": [[0, 5, 9], [5, 0, 1], [9, 1, 0]],
               "jobs": [{"node": 1, "a": 1, "b": 2}]}
        with pytest.raises(ValidationError):
            parse(json.dumps(doc))

    @pytest.mark.parametrize("seed", range(3))
    def test_raw_form(self, seed):
        raw = random_raw(seed, nodes=5, density=0.3)
        doc = {
            "format": "raw", "nodes": 5, "depot": 0,
            "arcs": [{"from": u, "to": v, "w": w} for u, v, w in raw.arcs],
            "jobs": [{"node": 4, "a": 1, "b": 2}, {"node": 2, "a": 3, "b": 1}, {"node": 4, "a": 0, "b": 5}],
        }
        inst = parse(json.dumps(doc))
        order = [0, 2, 4, 0]
        expected = scipy_closure(raw)[np.ix_(order, order)].astype(int)
        assert np.array_equal(inst.network.as_array(), expected)
        assert [j.node for j in inst.jobs] == [2, 1, 2]
        assert inst.n_per_node == (1, 2)

import random

import pytest

from pclab import (
    BudgetExceededError,
    Graph,
    PreconditionError,
    SolverBudget,
    exact_pc,
    exists_k_coloring,
    greedy_proper_edge_coloring,
    has_strong_property,
    is_proper_connected,
    pc_bounds,
    pc_lower_bound,
    pc_upper_bound,
    relabel,
)
from pclab.generators import (
    complete_graph,
    complete_multipartite,
    cycle_graph,
    double_star,
    enumerate_connected,
    path_graph,
    star_graph,
    star_plus_edge,
)

from conftest import brute_pc, random_connected_graph, random_tree


def spider() -> Graph:
    """Center 0 with three pendant paths of length 2."""
    return Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


class TestBounds:
    def test_complete_lower_is_one(self):
        lb = pc_lower_bound(complete_graph(6))
        assert lb.value == 1 and lb.tag == "complete"

    def test_spider_lower_from_bridges(self):
        lb = pc_lower_bound(spider())
        assert lb.value == 3 and lb.tag == "bridges"

    def test_cycle_lower_two(self):
        lb = pc_lower_bound(cycle_graph(5))
        assert lb.value == 2 and lb.tag == "noncomplete"

    def test_tree_upper_is_max_degree(self):
        ub = pc_upper_bound(double_star(2, 4))
        assert ub.value == 4

    def test_cycle_upper_two(self):
        assert pc_upper_bound(cycle_graph(6)).value == 2

    def test_star_upper_exact(self):
        ub = pc_upper_bound(star_graph(6))
        assert ub.value == 5 and ub.tag == "star_exact"

    def test_upper_certificate_verifies(self):
        rng = random.Random(83)
        for _ in range(20):
            g = random_connected_graph(rng.randint(2, 8), rng)
            ub = pc_upper_bound(g)
            assert ub.certificate.k == ub.value
            assert is_proper_connected(g, ub.certificate)

    def test_sandwich_across_census(self):
        for n in range(2, 8):
            for g in enumerate_connected(n):
                bounds = pc_bounds(g)
                value = exact_pc(g).value
                assert bounds.lower.value <= value <= bounds.upper.value

    def test_single_vertex_rejected(self):
        with pytest.raises(PreconditionError):
            pc_lower_bound(Graph(1, (0,)))


class TestGreedyEdgeColoring:
    def test_proper_at_every_vertex(self):
        rng = random.Random(89)
        for _ in range(20):
            g = random_connected_graph(rng.randint(2, 9), rng)
            coloring = greedy_proper_edge_coloring(g)
            for v in range(g.n):
                incident = [coloring.color(v, w) for w in g.neighbors(v)]
                assert len(incident) == len(set(incident))


class TestExistsKColoring:
    def test_c4_strong_two(self):
        found = exists_k_coloring(cycle_graph(4), 2, require_strong=True)
        assert found is not None and has_strong_property(cycle_graph(4), found)

    def test_claw_refutes_two(self):
        assert exists_k_coloring(star_graph(4), 2) is None

    def test_p5_two(self):
        found = exists_k_coloring(path_graph(5), 2)
        assert found is not None and is_proper_connected(path_graph(5), found)

    def test_found_coloring_within_k(self):
        found = exists_k_coloring(cycle_graph(5), 3)
        assert found is not None and found.k == 3
        assert all(1 <= c <= 3 for c in found.assignment.values())

    def test_budget_raises(self):
        g = complete_multipartite(3, 3)
        with pytest.raises(BudgetExceededError):
            exists_k_coloring(g, 2, budget=SolverBudget(max_assignments=2, probes=0))

    def test_disconnected_rejected(self):
        with pytest.raises(PreconditionError):
            exists_k_coloring(Graph.from_edges(3, [(0, 1)]), 2)


class TestExactPc:
    @pytest.mark.parametrize("g,value", [
        (cycle_graph(5), 2),
        (star_plus_edge(5), 3),
        (double_star(2, 4), 4),
        (complete_multipartite(2, 3), 2),
        (complete_graph(7), 1),
        (star_graph(5), 4),
        (path_graph(7), 2),
        (cycle_graph(3), 1),
        (Graph(1, (0,)), 0),
    ])
    def test_known_values(self, g, value):
        result = exact_pc(g)
        assert result.value == value and result.exhausted
        if g.m:
            assert result.certificate.k == value
            assert is_proper_connected(g, result.certificate)

    def test_matches_brute_force_oracle(self):
        rng = random.Random(97)
        seen = 0
        while seen < 12:
            g = random_connected_graph(rng.randint(2, 5), rng)
            if g.m > 8:
                continue
            assert exact_pc(g).value == brute_pc(g)
            seen += 1

    def test_trees_equal_max_degree(self):
        rng = random.Random(101)
        for _ in range(30):
            t = random_tree(rng.randint(2, 9), rng)
            assert exact_pc(t).value == t.max_degree

    def test_complete_multipartite_two(self):
        # three or more parts, not complete: pc is always 2
        for sizes in [(1, 1, 2), (1, 2, 2), (2, 2, 2), (1, 1, 3), (1, 2, 3),
                      (2, 3, 3), (1, 1, 2, 2), (2, 2, 2, 2), (1, 1, 1, 2)]:
            g = complete_multipartite(*sizes)
            result = exact_pc(g)
            assert result.value == 2, sizes

    def test_isomorphism_invariance_sample(self):
        rng = random.Random(103)
        for _ in range(10):
            g = random_connected_graph(rng.randint(3, 6), rng)
            value = exact_pc(g).value
            for _ in range(5):
                perm = list(range(g.n))
                rng.shuffle(perm)
                assert exact_pc(relabel(g, perm)).value == value

    def test_spanning_subgraph_monotone_sample(self):
        rng = random.Random(107)
        done = 0
        while done < 15:
            g = random_connected_graph(rng.randint(3, 6), rng)
            sub = _random_connected_spanning_subgraph(g, rng)
            assert exact_pc(g).value <= exact_pc(sub).value
            done += 1

    def test_budget_cutoff_reports_unknown(self):
        g = star_plus_edge(5)  # lower bound 2, pc 3: refuting k=2 needs enumeration
        result = exact_pc(g, budget=SolverBudget(max_assignments=1, probes=0))
        assert not result.exhausted
        assert result.certificate is not None
        assert is_proper_connected(g, result.certificate)

    def test_telemetry(self):
        result = exact_pc(star_plus_edge(5), budget=SolverBudget())
        assert set(result.stats) == {"probes", "assignments", "elapsed_seconds"}
        assert result.stats["assignments"] > 0  # k=2 was refuted by enumeration

    def test_deterministic(self):
        g = random_connected_graph(6, random.Random(113))
        a, b = exact_pc(g), exact_pc(g)
        assert a.value == b.value and a.certificate == b.certificate


class TestStrongVariant:
    def test_bridge_makes_strong_impossible(self):
        result = exact_pc(path_graph(4), require_strong=True)
        assert result.strong is not None and not result.strong.possible

    def test_c4_strong_two(self):
        result = exact_pc(cycle_graph(4), require_strong=True)
        assert result.strong.possible and result.strong.value == 2
        assert has_strong_property(cycle_graph(4), result.strong.certificate)

    def test_triangle_strong_three(self):
        result = exact_pc(complete_graph(3), require_strong=True)
        assert result.strong.value == 3  # two colors cannot split both endpoints

    def test_bowtie_strong_exists(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        result = exact_pc(g, require_strong=True)
        assert result.strong.possible
        assert has_strong_property(g, result.strong.certificate)

    def test_strong_at_least_pc(self):
        for g in (cycle_graph(5), complete_multipartite(2, 2, 2)):
            result = exact_pc(g, require_strong=True)
            assert result.strong.value >= result.value


def _random_connected_spanning_subgraph(g: Graph, rng: random.Random) -> Graph:
    from pclab import bridge_profile

    edges = list(g.edges)
    current = g
    for _ in range(rng.randint(0, max(0, g.m - g.n + 1))):
        removable = [e for e in current.edges
                     if e not in set(bridge_profile(current).bridges)]
        if not removable:
            break
        drop = removable[rng.randrange(len(removable))]
        current = Graph.from_edges(g.n, [e for e in current.edges if e != drop])
    return current

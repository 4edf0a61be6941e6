"""Closed-form constructions: pinned label values, self-validation sweeps,
and agreement with the exact solver on small instances."""

from __future__ import annotations

import pytest

from labindex.constructions import (
    CONSTRUCTIONS,
    caterpillar_diff,
    complete_bipartite_diff,
    complete_diff,
    cycle_diff,
    cycle_sum,
    disjoint_triangles_sum,
    grid_diff,
    grid_sum,
    ladder_sum,
    path_diff,
    prescribed_sum_index,
    spider_diff,
    spider_sum,
    wheel_diff,
)
from labindex.labeling import Kind, index_of_labeling
from labindex.solver import solve_index


class TestPinnedValues:
    def test_cycle_sum_labels(self):
        c = cycle_sum(5)
        assert c.labeling.labels == (0, -1, 2, -3, 4)
        assert c.claimed == 3

    def test_spider_sum_labels(self):
        c = spider_sum(2, 1, 2)
        assert c.labeling.labels == (0, 1, -3, -2, 2, -4)
        assert c.claimed == 3

    def test_caterpillar_diff_labels(self):
        c = caterpillar_diff(4, 2, 1)
        assert c.labeling.labels == (4, 8, 12, 16, 7, 9, 13)
        assert c.claimed == 2

    def test_disjoint_triangles_first_triple(self):
        c = disjoint_triangles_sum(1)
        assert c.labeling.labels == (26, -22, 38)
        assert c.claimed == 3

    def test_wheel_diff_small(self):
        assert wheel_diff(3).labeling.labels == (0, 1, 2, 3)
        assert wheel_diff(4).labeling.labels == (0, 1, 2, -1, -2)


class TestSweeps:
    def test_cycles(self):
        for n in range(3, 15):
            assert cycle_sum(n).claimed == 3
            assert cycle_diff(n).claimed == 2

    def test_paths_and_complete(self):
        for n in range(2, 12):
            assert path_diff(n).claimed == 1
            assert complete_diff(n).claimed == n - 1

    def test_complete_bipartite(self):
        for n in range(1, 6):
            for m in range(n, 7):
                c = complete_bipartite_diff(n, m)
                assert c.claimed == (n + m) // 2

    def test_spiders(self):
        import itertools

        for delta in range(3, 8):
            for legs in itertools.product(range(1, 4), repeat=delta):
                assert spider_sum(*legs).claimed == delta
                assert spider_diff(*legs).claimed == (delta + 1) // 2

    def test_caterpillars_random(self):
        import random

        rng = random.Random(23)
        for _ in range(60):
            spine = rng.randint(3, 10)
            counts = [rng.randint(0, 4) for _ in range(spine - 2)]
            if sum(counts) == 0:
                counts[0] = 1
            c = caterpillar_diff(spine, *counts)
            delta = max(c.graph.degrees())
            assert c.claimed == (delta + 1) // 2

    def test_wheels(self):
        for k in range(3, 13):
            c = wheel_diff(k)
            assert c.claimed == (3 if k in (3, 4) else (k + 1) // 2)

    def test_ladders_and_grids(self):
        for n in range(2, 8):
            assert ladder_sum(n).claimed == 3
        for n in range(3, 7):
            for m in range(3, n + 1):
                assert grid_sum(n, m).claimed == 4
        assert grid_sum(3, 3, 3).claimed == 6
        assert grid_sum(4, 3, 3).claimed == 6
        for n in range(2, 7):
            for m in range(2, n + 1):
                assert grid_diff(n, m).claimed == 2

    def test_disjoint_triangles(self):
        import math

        for t in range(1, 21):
            c = disjoint_triangles_sum(t)
            k = c.claimed
            assert math.comb(k, 3) >= t
            assert k == 3 or math.comb(k - 1, 3) < t

    def test_prescribed_sum_index(self):
        for n in range(2, 9):
            valid = [2] if n >= 3 else []
            if n == 2:
                valid = [1]
            valid += [k for k in range(3, 2 * n - 2, 2)]          # odd
            valid += [k for k in range(4, 2 * n - 3, 2)]          # even
            for k in valid:
                c = prescribed_sum_index(n, k)
                assert c.graph.n == n
                assert len(c.graph.components()) == 1
                assert c.claimed == k

    def test_prescribed_invalid(self):
        with pytest.raises(ValueError):
            prescribed_sum_index(3, 1)
        with pytest.raises(ValueError):
            prescribed_sum_index(3, 5)


class TestSolverAgreement:
    @pytest.mark.parametrize(
        "con",
        [
            cycle_sum(6),
            cycle_diff(6),
            path_diff(6),
            complete_diff(5),
            complete_bipartite_diff(2, 3),
            spider_sum(2, 1, 2),
            spider_diff(2, 1, 2),
            wheel_diff(4),
            ladder_sum(3),
            grid_diff(3, 2),
        ],
        ids=lambda c: c.name,
    )
    def test_construction_is_optimal(self, con):
        cert = solve_index(con.graph, con.kind)
        assert cert.value == con.claimed


class TestRegistry:
    def test_all_callable_and_validated(self):
        args = {
            "cycle_sum": (5,),
            "cycle_diff": (5,),
            "path_diff": (4,),
            "complete_diff": (4,),
            "complete_bipartite_diff": (2, 3),
            "caterpillar_diff": (4, 2, 1),
            "spider_sum": (2, 1, 2),
            "spider_diff": (2, 1, 2),
            "wheel_diff": (5,),
            "ladder_sum": (4,),
            "grid_sum": (3, 3),
            "grid_diff": (3, 3),
            "disjoint_triangles_sum": (2,),
            "prescribed_sum_index": (6, 5),
        }
        assert set(args) == set(CONSTRUCTIONS)
        for name, a in args.items():
            con = CONSTRUCTIONS[name](*a)
            # the claimed count really is the induced count
            assert index_of_labeling(con.graph, con.labeling, con.kind) == con.claimed

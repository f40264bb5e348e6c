import json
import math

import numpy as np
import pytest

from penergy.bounds import (
    EQUALITY_TOL,
    bipartite_lower_check,
    e4_check,
    hong_check,
    inequality16_probe,
    key_claim_check,
    p_upper_check,
)
from penergy.graphs import Graph, complete, cycle, from_edges, path, star

LOG_GRID = np.geomspace(1e-3, 1e3, 200)


class TestHong:
    def test_star10_tight(self):
        rep = hong_check(star(10))
        assert rep.holds and rep.equality == "tight"
        assert rep.lhs == pytest.approx(3.0, abs=1e-9)
        assert rep.rhs == pytest.approx(math.sqrt(2 * 9 - 10 + 1))
        assert rep.equality_class == "star"

    def test_complete4_tight(self):
        rep = hong_check(complete(4))
        assert rep.equality == "tight" and rep.equality_class == "complete"
        assert rep.lhs == pytest.approx(3.0)

    def test_cycle4_strict(self):
        rep = hong_check(cycle(4))
        assert rep.equality == "strict"
        assert rep.lhs == pytest.approx(2.0)
        assert rep.rhs == pytest.approx(math.sqrt(5))

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            hong_check(from_edges(4, [(0, 1), (2, 3)]))

    def test_json_round_trip(self):
        blob = json.dumps(hong_check(star(5)).to_dict())
        back = json.loads(blob)
        assert back["name"] == "hong_spectral_radius" and back["holds"] is True


class TestPUpper:
    def test_star4_p4_tight_connected_bound(self):
        conn, gen = p_upper_check(star(4), 4.0)
        assert conn.lhs == pytest.approx(18.0, abs=1e-9)
        assert conn.rhs == pytest.approx(18.0)
        assert conn.equality == "tight" and conn.equality_class == "star"
        assert gen.holds

    def test_complete3_p4_strict(self):
        conn, _ = p_upper_check(complete(3), 4.0)
        assert conn.lhs == pytest.approx(18.0, abs=1e-9)
        assert conn.rhs == pytest.approx(24.0)
        assert conn.equality == "strict"

    def test_path4_p4_strict(self):
        conn, _ = p_upper_check(path(4), 4.0)
        assert conn.lhs == pytest.approx(14.0, abs=1e-9)
        assert conn.rhs == pytest.approx(18.0)
        assert conn.equality == "strict"

    def test_single_edge_attains_general_bound(self):
        # m = 1 forces sigma_1 = 1 = -1/2 + sqrt(2 + 1/4), hence equality in
        # the general bound as well; "holds" is what matters
        conn, gen = p_upper_check(complete(2), 3.0)
        assert conn.holds and gen.holds
        assert gen.equality == "tight"

    def test_connected_never_beats_general(self):
        for g in (star(6), path(6), cycle(6), complete(5)):
            for p in (2.5, 3.0, 4.0):
                conn, gen = p_upper_check(g, p)
                assert conn.rhs <= gen.rhs * (1 + 1e-12) + 1e-12

    def test_p_validation(self):
        with pytest.raises(ValueError):
            p_upper_check(star(4), 2.0)


class TestE4:
    def test_star6_tight(self):
        rep = e4_check(star(6))
        assert rep.lhs == pytest.approx(50.0) and rep.rhs == pytest.approx(50.0)
        assert rep.equality == "tight" and rep.equality_class == "star"

    def test_complete4_strict(self):
        rep = e4_check(complete(4))
        assert rep.lhs == pytest.approx(84.0) and rep.rhs == pytest.approx(108.0)
        assert rep.equality == "strict"

    def test_k2_tight_degenerate(self):
        rep = e4_check(complete(2))
        assert rep.equality == "tight" and rep.equality_class == "star"

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            e4_check(Graph(3))


class TestBipartiteLower:
    def test_star_tight_any_p(self):
        for n in (3, 5, 8):
            for p in (1.0, 1.5, 2.0):
                rep = bipartite_lower_check(star(n), p)
                assert rep.equality == "tight"

    def test_path4_p1(self):
        rep = bipartite_lower_check(path(4), 1.0)
        assert rep.lhs == pytest.approx(2 * math.sqrt(5), abs=1e-9)
        assert rep.rhs == pytest.approx(2 * math.sqrt(3))
        assert rep.holds

    def test_cycle6_p2_tight(self):
        rep = bipartite_lower_check(cycle(6), 2.0)
        assert rep.lhs == pytest.approx(12.0, abs=1e-9)
        assert rep.equality == "tight"

    def test_non_bipartite_rejected(self):
        with pytest.raises(ValueError):
            bipartite_lower_check(complete(3), 1.5)

    def test_p_range(self):
        with pytest.raises(ValueError):
            bipartite_lower_check(star(4), 0.5)
        with pytest.raises(ValueError):
            bipartite_lower_check(star(4), 2.5)


class TestKeyClaim:
    def test_complete3_positive(self):
        rep = key_claim_check(complete(3), [1.0])
        assert rep.min_margin == pytest.approx(math.log(20.0 / 9.0), rel=1e-9)
        assert rep.holds

    def test_star_identity_margin_zero(self):
        for n in (3, 5, 8):
            rep = key_claim_check(star(n), LOG_GRID)
            assert abs(rep.min_margin) <= 1e-9
            assert rep.origin_margin == pytest.approx(0.0, abs=1e-12)

    def test_path4_at_one(self):
        rep = key_claim_check(path(4), [1.0])
        assert rep.min_margin == pytest.approx(math.log(25.0 / 16.0), rel=1e-9)

    def test_positive_grid_required(self):
        with pytest.raises(ValueError):
            key_claim_check(path(4), [0.0, 1.0])

    def test_origin_strictly_dominant_when_fewer_zero_roots(self):
        # P4 has no zero eigenvalue, c = 0 < n - 2
        rep = key_claim_check(path(4), LOG_GRID)
        assert rep.origin_margin is None and rep.holds

    def test_origin_compared_exactly_for_complete_bipartite(self):
        # K_{2,3}: exactly two nonzero eigenvalues, c = n - 2; the reduced
        # constants compare as (ab)^2 vs (n-1)^2
        k23 = from_edges(5, [(u, v) for u in (0, 1) for v in (2, 3, 4)])
        rep = key_claim_check(k23, LOG_GRID)
        assert rep.origin_margin == pytest.approx(2 * (math.log(6) - math.log(4)))
        assert rep.holds

    def test_coverage_recorded(self):
        rep = key_claim_check(cycle(5), LOG_GRID)
        assert rep.points == 200
        assert rep.grid_min == pytest.approx(1e-3)
        assert rep.grid_max == pytest.approx(1e3)


class TestInequality16Probe:
    def test_c4_vs_p4_fails_near_zero(self):
        rep = inequality16_probe(cycle(4), path(4), 4, np.geomspace(1e-3, 0.099, 50))
        assert rep.min_margin < -0.5
        assert rep.argmin_x < 0.1
        assert not rep.holds

    def test_identical_graphs_zero(self):
        rep = inequality16_probe(path(4), path(4), 4, np.geomspace(1e-2, 10, 20))
        assert abs(rep.min_margin) <= 1e-12

    def test_k3_vs_p3_nonsingular_side(self):
        rep = inequality16_probe(complete(3), path(3), 4, [1e-6, 1e-3, 1e-2])
        # constant terms: prod lambda^2 = 4 for K3 vs 0 for the singular P3
        assert rep.min_margin > 3.9

    def test_orders_must_match(self):
        with pytest.raises(ValueError):
            inequality16_probe(cycle(4), path(5), 4, [0.5])

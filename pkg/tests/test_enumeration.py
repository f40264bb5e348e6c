import math

import pytest

from conftest import all_labeled_graphs
from penergy.enumeration import (
    connected_graph_list,
    connected_graphs,
    ingest_graph6,
    verify_extremal,
    verify_extremal_grid,
)
from penergy.graphs import (
    Graph,
    Graph6Error,
    canonical_form,
    complete,
    emit_graph6,
    is_connected,
    parse_graph6,
    path,
    star,
)
from penergy.spectral import eigenvalues, p_energy

EXPECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def brute_force_class_count(n: int) -> int:
    seen = set()
    for g in all_labeled_graphs(n):
        if is_connected(g):
            seen.add(canonical_form(g).data)
    return len(seen)


class TestGeneration:
    def test_counts_against_brute_force(self):
        # exhaustive labeled-graph oracle is affordable through n = 6
        for n in range(1, 7):
            assert len(connected_graph_list(n)) == brute_force_class_count(n)

    def test_counts_published(self):
        for n in range(1, 8):
            assert len(connected_graph_list(n)) == EXPECTED_COUNTS[n]

    def test_k1(self):
        assert connected_graph_list(1) == (Graph(1),)

    def test_all_connected_and_right_order(self):
        for n in (4, 5, 6):
            for g in connected_graphs(n):
                assert g.n == n and is_connected(g)

    def test_no_isomorphic_duplicates(self):
        for n in (5, 6):
            forms = [canonical_form(g).data for g in connected_graph_list(n)]
            assert len(forms) == len(set(forms))

    def test_contains_named_families(self):
        forms = {canonical_form(g) for g in connected_graph_list(6)}
        for g in (star(6), path(6), complete(6)):
            assert canonical_form(g) in forms

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            connected_graph_list(9)
        with pytest.raises(ValueError):
            connected_graph_list(0)

    def test_parallel_generation_matches(self):
        from penergy import enumeration

        serial = connected_graph_list(6)
        enumeration._cache.pop(6, None)
        parallel = connected_graph_list(6, jobs=2)
        assert serial == parallel


class TestIngest:
    def test_single_line(self, tmp_path):
        f = tmp_path / "one.g6"
        f.write_text("A_\n")
        graphs = list(ingest_graph6(f))
        assert len(graphs) == 1 and graphs[0] == complete(2)

    def test_empty_file(self, tmp_path):
        f = tmp_path / "empty.g6"
        f.write_text("")
        assert list(ingest_graph6(f)) == []

    def test_skip_mode_reports_line(self, tmp_path):
        f = tmp_path / "mixed.g6"
        f.write_text("A_\n~bad\nBW\n")
        errors = []
        graphs = list(ingest_graph6(f, skip_bad_lines=True, errors=errors))
        assert len(graphs) == 2
        assert len(errors) == 1 and errors[0][0] == 2

    def test_fail_fast(self, tmp_path):
        f = tmp_path / "bad.g6"
        f.write_text("A_\n~bad\n")
        with pytest.raises(Graph6Error, match="line 2"):
            list(ingest_graph6(f))

    def test_connected_filter(self, tmp_path):
        f = tmp_path / "two.g6"
        f.write_text(emit_graph6(Graph(3)) + "\n" + emit_graph6(path(3)) + "\n")
        graphs = list(ingest_graph6(f, connected_only=True))
        assert graphs == [path(3)]


class TestVerifyExtremal:
    def test_star_n5(self):
        rep = verify_extremal(5, 1.5, "star")
        assert rep.graph_count == 21
        assert rep.min_energy == pytest.approx(2 * 4 ** 0.75, abs=1e-9)
        assert rep.unique_minimizer
        assert rep.violations == []

    def test_path_n4_p4(self):
        rep = verify_extremal(4, 4.0, "path")
        assert rep.min_energy == pytest.approx(14.0, abs=1e-9)
        assert rep.violations == []
        assert rep.argmin == [canonical_form(path(4)).graph6]

    def test_star_fails_at_p3(self):
        rep = verify_extremal(4, 3.0, "star")
        assert rep.violations
        g6, energy = rep.violations[0]
        assert parse_graph6(g6).m == 3
        assert energy == pytest.approx(p_energy(eigenvalues(path(4)), 3.0), abs=1e-9)
        assert energy < rep.target_energy

    def test_p2_minimizers_are_trees(self):
        rep = verify_extremal(6, 2.0, "star")
        # every connected graph has E_2 = 2m, so the minimizers are the trees
        assert rep.min_energy == pytest.approx(10.0, abs=1e-9)
        assert len(rep.argmin) == 6  # six trees on six vertices
        for g6 in rep.argmin:
            assert parse_graph6(g6).m == 5
        assert not rep.unique_minimizer

    def test_mixed_orders_rejected(self):
        with pytest.raises(ValueError, match="mixed orders"):
            verify_extremal(4, 1.0, "star", source=[star(4), star(5)])

    def test_explicit_source(self):
        rep = verify_extremal(4, 1.0, "star", source=[star(4), path(4), complete(4)])
        assert rep.graph_count == 3
        assert rep.unique_minimizer

    def test_grid_shares_one_scan(self):
        reps = verify_extremal_grid(5, [0.5, 1.0, 1.5], "star")
        assert [r.p for r in reps] == [0.5, 1.0, 1.5]
        assert all(r.unique_minimizer and not r.violations for r in reps)

    def test_exploratory_flag(self):
        assert verify_extremal(4, 2.5, "path").exploratory
        assert verify_extremal(4, 3.0, "path").exploratory
        assert not verify_extremal(4, 4.0, "path").exploratory
        assert not verify_extremal(4, 1.0, "star").exploratory

    def test_parallel_matches_serial(self):
        serial = verify_extremal(6, 1.0, "star", jobs=1)
        parallel = verify_extremal(6, 1.0, "star", jobs=2)
        assert serial.min_energy == parallel.min_energy
        assert serial.argmin == parallel.argmin
        assert serial.graph_count == parallel.graph_count

    def test_bad_target(self):
        with pytest.raises(ValueError):
            verify_extremal(4, 1.0, "clique")

    def test_report_serializes(self):
        import json

        rep = verify_extremal(4, 1.0, "star")
        blob = json.loads(json.dumps(rep.to_dict()))
        assert blob["n"] == 4 and blob["unique_minimizer"] is True

import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import isomorphic_brute_force
from penergy.graphs import (
    CanonicalForm,
    Graph,
    Graph6Error,
    canonical_form,
    complete,
    cycle,
    emit_graph6,
    from_edges,
    is_bipartite,
    is_complete_graph,
    is_connected,
    is_path_graph,
    is_star_graph,
    named_graph,
    parse_graph6,
    path,
    relabel,
    star,
)


def random_graph(rng: random.Random, n: int) -> Graph:
    return Graph(n, rng.getrandbits(n * (n - 1) // 2))


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

class TestGraph6:
    def test_parse_k2(self):
        g = parse_graph6("A_")
        assert g.n == 2 and list(g.edges()) == [(0, 1)]

    def test_parse_empty_three(self):
        g = parse_graph6("B?")
        assert g.n == 3 and g.m == 0

    def test_parse_bw_is_p3(self):
        g = parse_graph6("BW")
        # bit order puts the edges at {0,2} and {1,2}: a path through vertex 2
        assert g.n == 3 and set(g.edges()) == {(0, 2), (1, 2)}
        assert isomorphic_brute_force(g, path(3))

    def test_emit_k2(self):
        assert emit_graph6(complete(2)) == "A_"

    def test_emit_empty_three(self):
        assert emit_graph6(Graph(3)) == "B?"

    def test_round_trip_connected_four(self):
        from penergy.enumeration import connected_graph_list

        for g in connected_graph_list(4):
            assert parse_graph6(emit_graph6(g)) == g

    def test_malformed_header(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("\x1cAA")
        assert exc.value.offset == 0

    def test_multibyte_header_rejected(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("~??")
        assert exc.value.offset == 0

    def test_truncated_payload(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("D")  # n=5 needs two payload bytes
        assert exc.value.offset == 1

    def test_trailing_garbage(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("A_X")
        assert exc.value.offset == 2

    def test_nonzero_padding_rejected(self):
        # n=2 uses one payload bit; set a padding bit too
        bad = chr(63 + 2) + chr(63 + 0b100001)
        with pytest.raises(Graph6Error) as exc:
            parse_graph6(bad)
        assert exc.value.offset == 1

    @given(st.integers(1, 16), st.randoms(use_true_random=False))
    @settings(max_examples=60, deadline=None)
    def test_round_trip_random(self, n, rng):
        g = Graph(n, rng.getrandbits(n * (n - 1) // 2))
        line = emit_graph6(g)
        assert parse_graph6(line) == g
        assert emit_graph6(parse_graph6(line)) == line


# ---------------------------------------------------------------------------
# named families and predicates
# ---------------------------------------------------------------------------

class TestFamilies:
    def test_star_degrees(self):
        assert sorted(star(4).degrees(), reverse=True) == [3, 1, 1, 1]

    def test_degenerate_families_coincide(self):
        assert star(2) == path(2) == complete(2)
        assert star(1) == path(1) == complete(1) == Graph(1)

    def test_path_degrees(self):
        assert sorted(path(4).degrees()) == [1, 1, 2, 2]

    def test_sizes(self):
        for n in range(1, 9):
            assert star(n).m == n - 1
            assert path(n).m == n - 1
            assert complete(n).m == n * (n - 1) // 2

    def test_cycle_requires_three(self):
        with pytest.raises(ValueError):
            cycle(2)

    def test_named_graph_dispatch(self):
        assert named_graph("cycle", 5) == cycle(5)
        with pytest.raises(ValueError):
            named_graph("wheel", 5)

    def test_predicates(self):
        assert is_star_graph(star(7)) and not is_star_graph(path(4))
        assert is_complete_graph(complete(5)) and not is_complete_graph(cycle(5))
        assert is_path_graph(path(6)) and not is_path_graph(cycle(6))
        assert is_star_graph(complete(2)) and is_path_graph(complete(2))


class TestConnectivity:
    def test_star_connected(self):
        assert is_connected(star(7))

    def test_two_edges_disjoint(self):
        g = from_edges(4, [(0, 1), (2, 3)])
        assert not is_connected(g)

    def test_path_connected(self):
        assert is_connected(path(8))

    def test_k1_connected(self):
        assert is_connected(Graph(1))


class TestBipartite:
    def test_cycle4(self):
        sides = is_bipartite(cycle(4))
        assert sides is not None
        assert sorted(map(len, sides)) == [2, 2]

    def test_triangle(self):
        assert is_bipartite(complete(3)) is None

    def test_star6(self):
        sides = is_bipartite(star(6))
        assert sides is not None
        assert sorted(map(len, sides)) == [1, 5]

    def test_disconnected_odd_component(self):
        g = from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)])
        assert is_bipartite(g) is None


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

class TestCanonicalForm:
    def test_reversed_path(self):
        assert canonical_form(path(4)) == canonical_form(relabel(path(4), [3, 2, 1, 0]))

    def test_star_vs_path(self):
        assert canonical_form(star(4)) != canonical_form(path(4))

    def test_paw_all_relabelings(self):
        paw = from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
        forms = {canonical_form(relabel(paw, p)) for p in permutations(range(4))}
        assert len(forms) == 1

    def test_matches_brute_force_oracle_n4(self):
        graphs = [Graph(4, bits) for bits in range(1 << 6)]
        for i, g1 in enumerate(graphs):
            for g2 in graphs[i + 1:]:
                same = canonical_form(g1) == canonical_form(g2)
                assert same == isomorphic_brute_force(g1, g2)

    def test_matches_brute_force_oracle_sampled_n5(self):
        rng = random.Random(11)
        graphs = [random_graph(rng, 5) for _ in range(40)]
        for i, g1 in enumerate(graphs):
            for g2 in graphs[i + 1:]:
                same = canonical_form(g1) == canonical_form(g2)
                assert same == isomorphic_brute_force(g1, g2)

    @given(st.integers(2, 8), st.randoms(use_true_random=False))
    @settings(max_examples=40, deadline=None)
    def test_relabel_invariance(self, n, rng):
        g = Graph(n, rng.getrandbits(n * (n - 1) // 2))
        base = canonical_form(g)
        for _ in range(10):
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_form(relabel(g, perm)) == base

    def test_vertex_transitive_worst_case(self):
        # one refinement cell, no twins: exercises the vectorized search
        base = canonical_form(cycle(8))
        rng = random.Random(5)
        for _ in range(3):
            perm = list(range(8))
            rng.shuffle(perm)
            assert canonical_form(relabel(cycle(8), perm)) == base

    def test_is_decodable_graph6(self):
        form = canonical_form(star(5))
        assert isinstance(form, CanonicalForm)
        assert isomorphic_brute_force(form.to_graph(), star(5))

    def test_order_limit(self):
        with pytest.raises(ValueError):
            canonical_form(path(11))

from chordalham import find_sdr, find_violating_subfamily
from chordalham.hamilton import build_structures
from chordalham.overspan import OverspanFamily, OverspanItem
from chordalham.graphs import Graph
from chordalham.sdr import verify_sdr

from corpus import K4_MINUS, P4, seeded_chordal_with_family_cap


def _family(g):
    return build_structures(g).family


class TestFindSdr:
    def test_k4_minus_edge_two_loops(self):
        sdr = find_sdr(_family(K4_MINUS))
        assert sdr is not None
        assert sdr.choice == ((1, 1), (2, 2))

    def test_p4_impossible(self):
        assert find_sdr(_family(P4)) is None

    def test_single_item_single_edge(self):
        item = OverspanItem(0, (0, 1), 0, Graph(3, frozenset({(1, 2)})))
        fam = OverspanFamily((item,), 3, frozenset())
        sdr = find_sdr(fam)
        assert sdr is not None and sdr.choice == ((1, 2),)

    def test_empty_family(self):
        fam = OverspanFamily((), 3, frozenset())
        sdr = find_sdr(fam)
        assert sdr is not None and sdr.choice == ()

    def test_forbidden_vertices_respected(self):
        fam = _family(K4_MINUS)
        sdr = find_sdr(fam, forbidden=frozenset({1}))
        assert sdr is None  # both copies would need vertex-disjoint picks in {2}

    def test_deterministic(self):
        for g, s in seeded_chordal_with_family_cap(15, max_n=9, item_cap=10, seed=41):
            first = find_sdr(s.family)
            second = find_sdr(s.family)
            assert first == second

    def test_soundness_on_corpus(self):
        for g, s in seeded_chordal_with_family_cap(25, max_n=10, item_cap=12, seed=43):
            sdr = find_sdr(s.family)
            if sdr is not None:
                verify_sdr(s.family, sdr)
                # symmetry-breaking rule between identical copies
                by_edge = {}
                for item in s.family.items:
                    by_edge.setdefault(item.tree_edge, []).append(item.index)
                for idxs in by_edge.values():
                    if len(idxs) == 2:
                        assert sdr.choice[idxs[0]] <= sdr.choice[idxs[1]]

    def test_completeness_against_threshold(self):
        # wherever no violating subfamily exists, a system must be found
        for g, s in seeded_chordal_with_family_cap(40, max_n=8, item_cap=10, seed=47):
            if find_violating_subfamily(s.family, cap=10) is None:
                assert find_sdr(s.family) is not None

"""Tests for simple subpolyhedra, poorness and the link oracle."""
import networkx as nx
import pytest
from pydantic import ValidationError

from spinekit.config import settings
from spinekit.errors import NotSimpleError, SpineKitError, TooManyComponentsError
from spinekit.models.schemas import Selection, SubpolyFamily
from spinekit.services.subpoly import is_admissible_link, subpoly_service
from spinekit.services.triangulate import triangulator


def _tets_connected(triangulation) -> bool:
    g = nx.Graph()
    g.add_nodes_from(range(triangulation.n_tets))
    g.add_edges_from((p.tet, p.partner_tet) for p in triangulation.face_pairs())
    return nx.is_connected(g)


class TestSelections:
    def test_mask_must_fit(self):
        with pytest.raises(ValidationError):
            Selection(k=2, mask=4)

    def test_full_and_empty(self):
        assert Selection.full(3).mask == 0b111
        assert Selection.full(3).is_full
        assert Selection.empty(3).is_empty
        assert Selection(k=4, mask=0b1010).classes == [1, 3]

    def test_wrong_component_count(self, g5_tri):
        with pytest.raises(SpineKitError):
            subpoly_service.is_simple(g5_tri, Selection(k=3, mask=1))


class TestG5:
    def test_family(self, g5_tri):
        family = subpoly_service.enumerate_simple(g5_tri)
        assert family.k == 2
        assert family.masks == [0, 3]
        assert family.is_poor
        assert subpoly_service.is_poor(g5_tri)

    def test_single_components_are_not_simple(self, g5_tri):
        for mask in (1, 2):
            assert not subpoly_service.is_simple(g5_tri, Selection(k=2, mask=mask))

    def test_sub_invariants(self, g5_tri, g9_tri):
        assert subpoly_service.sub_invariants(g5_tri, Selection.full(2)) == (5, -3)
        assert subpoly_service.sub_invariants(g5_tri, Selection.empty(2)) == (0, 0)
        assert subpoly_service.sub_invariants(g9_tri, Selection.full(2)) == (9, -7)

    def test_invariants_of_non_simple_selection(self, g5_tri):
        with pytest.raises(NotSimpleError):
            subpoly_service.sub_invariants(g5_tri, Selection(k=2, mask=1))

    def test_component_ceiling(self, g5_tri, monkeypatch):
        monkeypatch.setattr(settings, "max_components", 1)
        with pytest.raises(TooManyComponentsError) as exc_info:
            subpoly_service.enumerate_simple(g5_tri)
        assert exc_info.value.k == 2


def test_drawn_g9_is_poor(drawn_tri):
    family = subpoly_service.enumerate_simple(drawn_tri)
    assert family.masks == [0, 1]
    assert family.is_poor


def test_one_vertex_spine_is_not_poor(one_vertex_tri):
    family = subpoly_service.enumerate_simple(one_vertex_tri)
    assert family.masks == [0, 1, 3]
    assert not family.is_poor
    assert not subpoly_service.is_poor(one_vertex_tri)
    assert subpoly_service.sub_invariants(one_vertex_tri, Selection.full(2)) == (1, 1)


def test_doubled_tetrahedron_separating_selection(doubled_tet):
    selection = subpoly_service.separating_selection(doubled_tet, 0)
    assert selection.mask == 0b111
    assert subpoly_service.is_simple(doubled_tet, selection)
    assert not subpoly_service.is_poor(doubled_tet)


def test_parallel_scan_matches_serial(g9_tri, monkeypatch):
    serial = subpoly_service.enumerate_simple(g9_tri)
    monkeypatch.setattr(settings, "parallel_min_subsets", 1)
    monkeypatch.setattr(settings, "threads", 2)
    assert subpoly_service.enumerate_simple(g9_tri) == serial


def test_admissible_links():
    assert is_admissible_link(nx.MultiGraph(nx.cycle_graph(5)))
    assert is_admissible_link(nx.MultiGraph(nx.complete_graph(4)))
    assert is_admissible_link(nx.MultiGraph([(0, 1), (0, 1), (0, 2), (2, 1)]))
    four_arcs = nx.MultiGraph([(0, 1), (0, 2), (2, 1), (0, 1), (0, 1)])
    assert not is_admissible_link(four_arcs)
    path = nx.MultiGraph(nx.path_graph(3))
    assert not is_admissible_link(path)


class TestPopulation:
    def test_family_always_contains_empty_and_full(self, random_population):
        for seed, triangulation in random_population:
            family = subpoly_service.enumerate_simple(triangulation)
            assert family.masks[0] == 0, seed
            assert family.masks[-1] == (1 << family.k) - 1, seed
            assert family.masks == sorted(family.masks), seed

    def test_one_component_spines_are_poor(self, random_population):
        checked = 0
        for seed, triangulation in random_population:
            if triangulator.edge_classes(triangulation).k == 1:
                checked += 1
                assert subpoly_service.is_poor(triangulation), seed
        assert checked > 0

    def test_disconnected_boundary_is_never_poor(self, random_population):
        checked = 0
        for seed, triangulation in random_population:
            if triangulator.vertex_link_count(triangulation) < 2:
                continue
            checked += 1
            assert not subpoly_service.is_poor(triangulation), seed
            if _tets_connected(triangulation):
                selection = subpoly_service.separating_selection(triangulation, 0)
                assert subpoly_service.is_simple(triangulation, selection), seed
                assert not selection.is_empty and not selection.is_full, seed
        assert checked > 0

    def test_poor_spines_have_one_boundary_component(self, random_population):
        for seed, triangulation in random_population:
            if not subpoly_service.is_poor(triangulation):
                continue
            boundary = triangulator.boundary_surface(triangulation)
            assert boundary.component_count == 1, seed
            if boundary.genus_per_component == [0]:
                assert triangulation.n_tets == 1, seed

    def test_face_rule_matches_link_oracle(self, random_population):
        for seed, triangulation in random_population:
            classification = triangulator.edge_classes(triangulation)
            if classification.k > 4:
                continue
            for mask in range(1 << classification.k):
                selection = Selection(k=classification.k, mask=mask)
                assert subpoly_service.is_simple(triangulation, selection, classification) == \
                    subpoly_service.link_oracle_is_simple(triangulation, selection, classification), (seed, mask)


@pytest.mark.parametrize("k,masks,poor", [
    (0, [0], False),
    (1, [0, 1], True),
    (2, [0, 3], True),
    (2, [0, 1, 3], False),
    (3, [0, 7], True),
    (3, [0, 5], False),
])
def test_family_poor_verdict(k, masks, poor):
    family = SubpolyFamily(k=k, selections=[Selection(k=k, mask=m) for m in masks])
    assert family.is_poor is poor

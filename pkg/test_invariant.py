"""Tests for the exact epsilon invariant."""
import pytest

from spinekit.models.schemas import GoldenInt
from spinekit.services.golden_ring import golden_ring
from spinekit.services.invariant import invariant_service
from spinekit.services.subpoly import subpoly_service
from spinekit.services.triangulate import triangulator


@pytest.mark.parametrize(
    "vertices, chi, expected",
    [(0, 0, (1, 0)), (5, -3, (-34, 21)), (9, -7, (-1597, 987)), (1, 0, (1, -1))],
)
def test_weight(vertices, chi, expected):
    assert invariant_service.weight(vertices, chi) == GoldenInt.of(*expected)


def test_g5(g5_tri):
    result = invariant_service.epsilon_invariant(g5_tri)
    assert result.value == GoldenInt.of(-33, 21)
    assert [t.selection.mask for t in result.terms] == [0, 3]
    assert result.terms[1].vertices == 5
    assert result.terms[1].euler == -3
    assert golden_ring.to_real(result.value) == pytest.approx(0.97871376374, abs=1e-9)


def test_g9(g9_tri):
    assert invariant_service.epsilon_invariant(g9_tri).value == GoldenInt.of(-1596, 987)


def test_drawn_g9(drawn_tri):
    assert invariant_service.epsilon_invariant(drawn_tri).value == GoldenInt.of(2585, -1597)


def test_closed_form(g5_tri):
    assert invariant_service.poor_closed_form(5, -3) == invariant_service.epsilon_invariant(g5_tri).value


def test_terms_cover_every_simple_subpolyhedron(doubled_tet):
    result = invariant_service.epsilon_invariant(doubled_tet)
    family = subpoly_service.enumerate_simple(doubled_tet)
    assert [t.selection.mask for t in result.terms] == family.masks
    assert sum((t.weight for t in result.terms), GoldenInt.of(0)) == result.value


def test_closed_form_on_poor_population(random_population):
    for seed, triangulation in random_population:
        if not subpoly_service.is_poor(triangulation):
            continue
        strata = triangulator.strata_summary(triangulation)
        value = invariant_service.epsilon_invariant(triangulation).value
        assert value == invariant_service.poor_closed_form(strata.true_vertices, strata.euler), seed


@pytest.mark.parametrize("chi", [-7, -3, 0, 1])
def test_poor_weight_determines_vertex_count(chi):
    assert invariant_service.poor_vertex_injectivity(chi)

"""Turaev-Viro epsilon invariant t(M) as an exact element of Z[eps]."""
import logging
from typing import Optional

from spinekit.models.schemas import (
    EdgeClassification,
    EpsilonInvariant,
    EpsilonTerm,
    GoldenInt,
    IdealTriangulation,
)
from spinekit.services.golden_ring import ONE, golden_ring
from spinekit.services.subpoly import subpoly_service
from spinekit.services.triangulate import triangulator

logger = logging.getLogger(__name__)


class InvariantService:
    """Sums subpolyhedron weights over the simple subpolyhedra of a spine."""

    @staticmethod
    def weight(vertices: int, chi: int) -> GoldenInt:
        """(-1)^V * eps^(chi - V)."""
        value = golden_ring.eps_pow(chi - vertices)
        return -value if vertices % 2 else value

    def epsilon_invariant(
        self,
        triangulation: IdealTriangulation,
        classification: Optional[EdgeClassification] = None
    ) -> EpsilonInvariant:
        """
        t(M) = sum of w(Q) over all simple subpolyhedra Q, empty one included.

        Args:
            triangulation: Valid triangulation
            classification: Precomputed edge classes, if at hand

        Returns:
            EpsilonInvariant with the exact value and the term table

        Raises:
            TooManyComponentsError: Propagated from the enumeration
        """
        if classification is None:
            classification = triangulator.edge_classes(triangulation)
        family = subpoly_service.enumerate_simple(triangulation, classification)

        terms = []
        total = GoldenInt(a=0, b=0)
        for selection in family.selections:
            vertices, chi = subpoly_service.sub_invariants(triangulation, selection, classification)
            w = self.weight(vertices, chi)
            terms.append(EpsilonTerm(selection=selection, vertices=vertices, euler=chi, weight=w))
            total = total + w

        logger.info(f"t(M) = {total} over {len(terms)} simple subpolyhedra")
        return EpsilonInvariant(value=total, terms=terms)

    def poor_closed_form(self, vertices: int, chi: int) -> GoldenInt:
        """Two-term value of t(M) for a poor spine with V true vertices."""
        return self.weight(vertices, chi) + ONE

    def poor_vertex_injectivity(self, chi: int, max_vertices: int = 64) -> bool:
        """Whether V -> (-1)^V eps^(chi - V) is injective for 0 <= V <= max_vertices.

        Two poor spines of one manifold give the same t(M) and chi, hence the
        same weight of the full spine, hence the same V.
        """
        seen = {self.weight(v, chi) for v in range(max_vertices + 1)}
        return len(seen) == max_vertices + 1


# Global invariant service instance
invariant_service = InvariantService()

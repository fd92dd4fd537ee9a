"""Checks every slot/color convention variant against the G_5 and G_9 facts."""
import itertools
import logging
from typing import List

from spinekit.errors import SpineKitError
from spinekit.models.schemas import CalibrationResult, GluingConvention, OGraph
from spinekit.services.convention import FROZEN_CONVENTION
from spinekit.services.ograph_builder import DRAWN_G9_PAIRS, ograph_builder
from spinekit.services.subpoly import subpoly_service
from spinekit.services.triangulate import triangulator

logger = logging.getLogger(__name__)


class ConventionCalibrator:
    """Enumerates the 288 convention variants.

    24 slot-to-face maps, 6 color relabelings and 2 readings of the target face.
    """

    @staticmethod
    def variants() -> List[GluingConvention]:
        return [
            GluingConvention(slot_map=slots, color_shift=shift, ccw_target=ccw)
            for ccw in (False, True)
            for slots in itertools.permutations(range(4))
            for shift in itertools.permutations(range(3))
        ]

    @staticmethod
    def check(graph: OGraph, convention: GluingConvention) -> str:
        """
        Empty string when the graph meets the two-class facts under the convention.

        Expected: 2 edge classes of size 3n, a poor spine and one boundary
        component of genus n - 1.

        Returns:
            Reason for failure, or "" on success
        """
        n = graph.n_vertices
        triangulation = triangulator.from_ograph(graph, convention)
        classification = triangulator.edge_classes(triangulation)
        if classification.sizes != [3 * n, 3 * n]:
            return f"G_{n}: classes {classification.sizes}"
        if not subpoly_service.is_poor(triangulation, classification):
            return f"G_{n}: not poor"
        try:
            boundary = triangulator.boundary_surface(triangulation)
        except SpineKitError as exc:
            return f"G_{n}: {exc.detail}"
        if boundary.genus_per_component != [n - 1]:
            return f"G_{n}: boundary genera {boundary.genus_per_component}"
        return ""

    def calibrate_conventions(self) -> List[CalibrationResult]:
        """Pass/fail of every variant on G_5 and G_9."""
        graphs = [ograph_builder.generate_Gn(0), ograph_builder.generate_Gn(1)]
        drawn_g9 = ograph_builder.chain(DRAWN_G9_PAIRS)
        results = []
        for convention in self.variants():
            reasons = [r for r in (self.check(g, convention) for g in graphs) if r]
            results.append(CalibrationResult(
                convention=convention,
                passed=not reasons,
                frozen=convention == FROZEN_CONVENTION,
                detail="; ".join(reasons) if reasons else "2 classes of 3n, poor, genus n-1",
                reproduces_drawn_g9=not self.check(drawn_g9, convention)
            ))
        passing = [r.convention.label for r in results if r.passed]
        drawn = sum(r.reproduces_drawn_g9 for r in results)
        logger.info(f"{len(passing)} of {len(results)} conventions pass calibration, {drawn} reproduce the drawn G_9")
        logger.debug(f"Conventions passing calibration: {passing}")
        return results


# Global calibrator instance
convention_calibrator = ConventionCalibrator()

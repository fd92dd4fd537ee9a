"""Full spine analysis of single files and of whole directories."""
import asyncio
import logging
from pathlib import Path
from typing import List, Optional, Union

from spinekit.config import settings
from spinekit.errors import ParseError, SpineKitError
from spinekit.models.schemas import IdealTriangulation, SpineReport
from spinekit.services.golden_ring import golden_ring
from spinekit.services.invariant import invariant_service
from spinekit.services.ograph_io import HEADER as OGRAPH_HEADER
from spinekit.services.ograph_io import parse_ograph
from spinekit.services.subpoly import subpoly_service
from spinekit.services.triangulate import TRI_HEADER, triangulator
from spinekit.services.volume import volume_service

logger = logging.getLogger(__name__)

INPUT_SUFFIXES = (".og", ".tri")


class SpineAnalyzer:
    """Composes triangulation, poorness, invariant and volume into one report."""

    @staticmethod
    def load(path: Union[str, Path]) -> IdealTriangulation:
        """
        Read an o-graph or triangulation file, whichever its header says.

        Raises:
            SpineKitError: File cannot be read
            ParseError: Unknown header or malformed contents
        """
        path = Path(path)
        try:
            data = path.read_bytes()
        except OSError as exc:
            raise SpineKitError(f"cannot read {path}: {exc.strerror or exc}")

        text = data.decode("utf-8", errors="replace")
        first = next(
            (line.split("#", 1)[0].strip() for line in text.split("\n") if line.split("#", 1)[0].strip()),
            ""
        )
        if first == OGRAPH_HEADER:
            return triangulator.from_ograph(parse_ograph(data))
        if first == TRI_HEADER:
            return triangulator.parse_triangulation(data)
        raise ParseError(f"{path}: expected '{OGRAPH_HEADER}' or '{TRI_HEADER}' header, got '{first}'")

    def analyze_triangulation(self, triangulation: IdealTriangulation, source: str) -> SpineReport:
        """
        Analyze one triangulation.

        Args:
            triangulation: Valid triangulation
            source: Name recorded in the report

        Returns:
            Complete SpineReport
        """
        classification = triangulator.edge_classes(triangulation)
        strata = triangulator.strata_summary(triangulation)
        boundary = triangulator.boundary_surface(triangulation)
        family = subpoly_service.enumerate_simple(triangulation, classification)
        poor = family.is_poor
        epsilon = invariant_service.epsilon_invariant(triangulation, classification)
        angle = volume_service.regular_angle(triangulation, classification)
        volume = volume_service.triangulation_volume(triangulation, classification)

        n, k = strata.true_vertices, strata.components2
        geodesic_class = None
        complexity = None
        # necessary conditions for a hyperbolic manifold with geodesic boundary in M^k_n
        if poor and k < n and boundary.component_count == 1 and boundary.genus_per_component[0] > 0:
            geodesic_class = f"M^{k}_{n}"
            if (k == 1 and n >= 2) or (k == 2 and n >= 3):
                complexity = n

        return SpineReport(
            source=source,
            n_tets=n,
            edge_class_sizes=classification.sizes,
            triple_edges=strata.triple_edges,
            components2=k,
            euler=strata.euler,
            boundary_components=boundary.component_count,
            boundary_genera=boundary.genus_per_component,
            poor=poor,
            simple_subpolyhedra=len(family.selections),
            epsilon=epsilon.value,
            epsilon_float=golden_ring.to_real(epsilon.value),
            regular_angle=angle.theta if angle is not None else None,
            volume=volume,
            geodesic_class=geodesic_class,
            complexity_if_hyperbolic=complexity
        )

    def analyze_path(self, path: Union[str, Path]) -> SpineReport:
        """Load and analyze one file."""
        path = Path(path)
        logger.info(f"Analyzing {path}")
        return self.analyze_triangulation(self.load(path), path.name)

    async def analyze_directory(self, directory: Union[str, Path]) -> List[SpineReport]:
        """
        Analyze every ``.og``/``.tri`` file of a directory concurrently.

        Files that fail produce a report carrying the error instead of
        aborting the batch. Output is ordered by filename.

        Raises:
            SpineKitError: Directory cannot be listed
        """
        directory = Path(directory)
        try:
            files = sorted(
                (p for p in directory.iterdir() if p.is_file() and p.suffix in INPUT_SUFFIXES),
                key=lambda p: p.name
            )
        except OSError as exc:
            raise SpineKitError(f"cannot list {directory}: {exc.strerror or exc}")

        semaphore = asyncio.Semaphore(settings.worker_count())

        async def guarded(path: Path) -> SpineReport:
            async with semaphore:
                return await asyncio.to_thread(self.analyze_path, path)

        results = await asyncio.gather(*(guarded(p) for p in files), return_exceptions=True)

        reports = []
        for path, result in zip(files, results):
            if isinstance(result, Exception):
                logger.warning(f"{path.name}: {result}")
                reports.append(self._create_failed_report(path.name, result))
            else:
                reports.append(result)
        return reports

    @staticmethod
    def _create_failed_report(source: str, error: Exception) -> SpineReport:
        return SpineReport(source=source, error=f"{type(error).__name__}: {error}")


# Global analyzer instance
spine_analyzer = SpineAnalyzer()

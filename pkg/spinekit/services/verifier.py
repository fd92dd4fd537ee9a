"""Acceptance suite reproducing the checkable claims about poor spines."""
import logging
import math
import time
from pathlib import Path
from typing import Callable, List, Optional, Tuple

import numpy as np

from spinekit.config import settings
from spinekit.models.schemas import (
    CriterionResult,
    GoldenInt,
    IdealTriangulation,
    Selection,
    VerificationReport,
    VerificationSummary,
)
from spinekit.services.calibration import convention_calibrator
from spinekit.services.golden_ring import ONE, golden_ring
from spinekit.services.invariant import invariant_service
from spinekit.services.ograph_builder import ograph_builder
from spinekit.services.ograph_io import load_fixture
from spinekit.services.subpoly import subpoly_service
from spinekit.services.triangulate import triangulator
from spinekit.services.volume import volume_service

logger = logging.getLogger(__name__)

Check = Tuple[bool, str]

VOLUME_ANGLES = [0.0, math.pi / 12, 2 * math.pi / 15, math.pi / 6, math.pi / 4, 1.0]
POPULATION_SIZE = 120
POPULATION_MAX_VERTICES = 6


def fibonacci(count: int) -> List[int]:
    """F_0..F_{count-1} by plain iterative addition."""
    values = [0, 1]
    while len(values) < count:
        values.append(values[-1] + values[-2])
    return values[:count]


class AcceptanceSuite:
    """Runs acceptance criteria 1-11 and tabulates pass/fail."""

    def __init__(self):
        self._population: Optional[List[Tuple[int, IdealTriangulation]]] = None

    def population(self) -> List[Tuple[int, IdealTriangulation]]:
        """Seeded random o-graph triangulations with 1..6 vertices."""
        if self._population is None:
            self._population = [
                (seed, triangulator.from_ograph(
                    ograph_builder.random_ograph(1 + seed % POPULATION_MAX_VERTICES, seed)
                ))
                for seed in range(POPULATION_SIZE)
            ]
        return self._population

    @staticmethod
    def _fixture_facts(name: str, root: Optional[Path], n: int, genus: int) -> Check:
        triangulation = triangulator.from_ograph(load_fixture(name, root))
        classification = triangulator.edge_classes(triangulation)
        strata = triangulator.strata_summary(triangulation)
        boundary = triangulator.boundary_surface(triangulation)
        poor = subpoly_service.is_poor(triangulation, classification)
        observed = (
            triangulation.n_tets, classification.sizes, strata.triple_edges,
            strata.euler, boundary.genus_per_component, poor
        )
        expected = (n, [3 * n, 3 * n], 2 * n, 2 - n, [genus], True)
        detail = (
            f"tets={observed[0]} classes={observed[1]} triple={observed[2]} "
            f"chi={observed[3]} genera={observed[4]} poor={observed[5]}"
        )
        return observed == expected, detail

    def check_g5(self, root: Optional[Path]) -> Check:
        return self._fixture_facts("g5", root, 5, 4)

    def check_g9(self, root: Optional[Path]) -> Check:
        return self._fixture_facts("g9", root, 9, 8)

    @staticmethod
    def check_family_sweep(root: Optional[Path]) -> Check:
        failures = []
        for s in range(5):
            graph = ograph_builder.generate_Gn(s)
            n = graph.n_vertices
            triangulation = triangulator.from_ograph(graph)
            classification = triangulator.edge_classes(triangulation)
            boundary = triangulator.boundary_surface(triangulation)
            ok = (
                triangulation.n_tets == n
                and classification.sizes == [3 * n, 3 * n]
                and subpoly_service.is_poor(triangulation, classification)
                and boundary.component_count == 1
            )
            if not ok:
                failures.append(f"G_{n}")
        if failures:
            return False, f"failed: {', '.join(failures)}"
        return True, "G_5 .. G_21: 2 classes of 3n, poor, connected boundary"

    @staticmethod
    def check_epsilon(root: Optional[Path]) -> Check:
        expected = {"g5": (GoldenInt.of(-33, 21), 5, -3), "g9": (GoldenInt.of(-1596, 987), 9, -7)}
        parts = []
        ok = True
        for name, (value, vertices, chi) in expected.items():
            triangulation = triangulator.from_ograph(load_fixture(name, root))
            t = invariant_service.epsilon_invariant(triangulation).value
            closed = invariant_service.poor_closed_form(vertices, chi)
            ok = ok and t == value == closed
            parts.append(f"{name}: t = {t}")
        return ok, "; ".join(parts)

    @staticmethod
    def check_golden_ring(root: Optional[Path]) -> Check:
        fib = fibonacci(66)
        for k in range(1, 65):
            if golden_ring.eps_pow(k) != GoldenInt.of(fib[k - 1], fib[k]):
                return False, f"eps^{k} != (F_{k - 1}, F_{k})"
        for k in range(-64, 65):
            if golden_ring.eps_pow(k) * golden_ring.eps_pow(-k) != ONE:
                return False, f"eps^{k} * eps^{-k} != 1"
        return True, "Fibonacci oracle and inverses exact for |k| <= 64"

    @staticmethod
    def check_volume_formulas(root: Optional[Path]) -> Check:
        worst = 0.0
        for theta in VOLUME_ANGLES:
            pair = volume_service.volume_pair(theta)
            worst = max(worst, pair.discrepancy)
        ideal = 8 * volume_service.lobachevsky(math.pi / 4)
        at_zero = volume_service.volume_pair(0.0)
        limit_gap = max(abs(at_zero.via_integral - ideal), abs(at_zero.via_lobachevsky - ideal))
        ok = worst <= 1e-9 and limit_gap <= 1e-9
        return ok, f"max discrepancy {worst:.2e}, theta=0 gap {limit_gap:.2e}"

    @staticmethod
    def check_lobachevsky(root: Optional[Path]) -> Check:
        lam = volume_service.lobachevsky
        if abs(lam(0.0)) > 1e-12 or abs(lam(math.pi / 2)) > 1e-12:
            return False, "Lambda(0) or Lambda(pi/2) not zero"
        grid = np.linspace(-3.0, 3.0, 100)
        odd = max(abs(lam(-x) + lam(x)) for x in grid)
        periodic = max(abs(lam(x + math.pi) - lam(x)) for x in grid)
        interior = np.linspace(0.05, math.pi - 0.05, 25)
        oracle = max(abs(lam(x) - volume_service.lobachevsky_quadrature(x)) for x in interior)
        ok = odd <= 1e-12 and periodic <= 1e-12 and oracle <= 1e-9
        return ok, f"odd {odd:.1e}, periodic {periodic:.1e}, quadrature {oracle:.1e}"

    def check_one_component_poor(self, root: Optional[Path]) -> Check:
        checked = 0
        for seed, triangulation in self.population():
            classification = triangulator.edge_classes(triangulation)
            if classification.k != 1:
                continue
            checked += 1
            if not subpoly_service.is_poor(triangulation, classification):
                return False, f"seed {seed}: one 2-component but not poor"
        return True, f"{checked} one-component spines, all poor"

    def check_multi_boundary_not_poor(self, root: Optional[Path]) -> Check:
        checked = 0
        for seed, triangulation in self.population():
            if triangulator.vertex_link_count(triangulation) < 2:
                continue
            checked += 1
            if subpoly_service.is_poor(triangulation):
                return False, f"seed {seed}: several boundary components but poor"
        return True, f"{checked} spines with disconnected boundary, none poor"

    def check_link_oracle(self, root: Optional[Path]) -> Check:
        compared = 0
        for seed, triangulation in self.population():
            classification = triangulator.edge_classes(triangulation)
            k = classification.k
            if k > 4:
                continue
            for mask in range(1 << k):
                selection = Selection(k=k, mask=mask)
                local = subpoly_service.is_simple(triangulation, selection, classification)
                oracle = subpoly_service.link_oracle_is_simple(triangulation, selection, classification)
                if local != oracle:
                    return False, f"seed {seed} mask {mask:#b}: face rule {local}, links {oracle}"
                compared += 1
        return True, f"{compared} selections agree"

    @staticmethod
    def check_calibration(root: Optional[Path]) -> Check:
        results = convention_calibrator.calibrate_conventions()
        passing = [r.convention.label for r in results if r.passed]
        frozen_ok = any(r.frozen and r.passed for r in results)
        drawn = sum(r.reproduces_drawn_g9 for r in results)
        return frozen_ok, (
            f"frozen passes: {frozen_ok}; {len(passing)} of {len(results)} variants pass; "
            f"{drawn} reproduce the drawn G_9"
        )

    def criteria(self) -> List[Tuple[int, str, Callable[[Optional[Path]], Check]]]:
        return [
            (1, "G5 fixture", self.check_g5),
            (2, "G9 fixture", self.check_g9),
            (3, "family sweep s=0..4", self.check_family_sweep),
            (4, "epsilon invariant", self.check_epsilon),
            (5, "golden ring oracle", self.check_golden_ring),
            (6, "volume cross-validation", self.check_volume_formulas),
            (7, "Lobachevsky properties", self.check_lobachevsky),
            (8, "one 2-component => poor", self.check_one_component_poor),
            (9, "disconnected boundary => not poor", self.check_multi_boundary_not_poor),
            (10, "simplicity link oracle", self.check_link_oracle),
            (11, "convention calibration", self.check_calibration),
        ]

    def run(self, fixtures_root: Optional[Path] = None) -> VerificationReport:
        """
        Run every criterion.

        Args:
            fixtures_root: Directory with g5.og and g9.og (packaged fixtures by default)

        Returns:
            VerificationReport with per-criterion results and totals
        """
        root = Path(fixtures_root) if fixtures_root is not None else settings.fixture_root()
        results = []
        for number, name, check in self.criteria():
            started = time.perf_counter()
            try:
                passed, detail = check(root)
            except Exception as exc:
                logger.error(f"Criterion {number} raised: {exc}", exc_info=True)
                passed, detail = False, f"{type(exc).__name__}: {exc}"
            elapsed = time.perf_counter() - started
            logger.info(f"Criterion {number} ({name}): {'pass' if passed else 'FAIL'} in {elapsed:.2f}s")
            results.append(CriterionResult(
                number=number, name=name, passed=passed, detail=detail, seconds=elapsed
            ))
        return VerificationReport(results=results, summary=self._calculate_summary(results))

    @staticmethod
    def _calculate_summary(results: List[CriterionResult]) -> VerificationSummary:
        passed = sum(1 for r in results if r.passed)
        return VerificationSummary(total=len(results), passed=passed, failed=len(results) - passed)


# Global verifier instance
acceptance_suite = AcceptanceSuite()

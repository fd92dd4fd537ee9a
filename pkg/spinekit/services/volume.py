"""Lobachevsky function and volumes of regular truncated tetrahedra."""
import logging
import math
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy.integrate import quad
from scipy.special import zeta

from spinekit.config import settings
from spinekit.errors import DomainError
from spinekit.models.schemas import Angle, EdgeClassification, IdealTriangulation, VolumeResult
from spinekit.services.triangulate import triangulator

logger = logging.getLogger(__name__)

THETA_MAX = math.pi / 3


@lru_cache(maxsize=8)
def _clausen_coefficients(terms: int) -> np.ndarray:
    """zeta(2n) / (n (2n+1)) for n = 1..terms."""
    n = np.arange(1, terms + 1, dtype=float)
    return zeta(2 * n) / (n * (2 * n + 1))


def clausen2(theta: float, terms: Optional[int] = None) -> float:
    """
    Clausen function Cl_2 on [-pi, pi].

    Cl_2(t) = t - t ln|t| + sum_n zeta(2n) / (n (2n+1)) * (t / 2pi)^(2n) * t,
    a series whose ratio is at most 1/4 on this interval.
    """
    if theta == 0.0:
        return 0.0
    coefficients = _clausen_coefficients(terms or settings.lobachevsky_terms)
    ratio = (theta / (2 * math.pi)) ** 2
    powers = ratio ** np.arange(1, len(coefficients) + 1, dtype=float)
    series = coefficients * powers * theta
    return math.fsum([theta, -theta * math.log(abs(theta)), *series.tolist()])


def _arccosh_integrand(t: float) -> float:
    # arccosh(cos t / (2 cos t - 1)) = arccosh(1 + u), u = 2 sin^2(t/2) / (2 cos t - 1)
    u = 2.0 * math.sin(t / 2) ** 2 / (2.0 * math.cos(t) - 1.0)
    return math.log1p(u + math.sqrt(u * (u + 2.0)))


def _check_theta(theta: float) -> float:
    if not math.isfinite(theta) or not 0.0 <= theta < THETA_MAX:
        raise DomainError(f"theta must lie in [0, pi/3), got {theta}")
    return float(theta)


class VolumeService:
    """Volume formulas for regular truncated tetrahedra and the M_n, W_n families."""

    @staticmethod
    def lobachevsky(x: float) -> float:
        """
        Lobachevsky function Lambda(x) = -int_0^x ln|2 sin z| dz.

        Reduces x modulo pi into [-pi/2, pi/2] and evaluates
        Lambda(x) = Cl_2(2x) / 2.

        Raises:
            DomainError: Non-finite argument
        """
        if not math.isfinite(x):
            raise DomainError(f"Lobachevsky function needs a finite argument, got {x}")
        x = float(x)
        reduced = x - math.pi * round(x / math.pi)
        return 0.5 * clausen2(2.0 * reduced)

    @staticmethod
    def lobachevsky_fourier(x: float, terms: int = 200000) -> float:
        """Truncated sine series (1/2) sum sin(2mx) / m^2; slow reference, error ~ 1/terms."""
        if not math.isfinite(x):
            raise DomainError(f"Lobachevsky function needs a finite argument, got {x}")
        m = np.arange(1, terms + 1, dtype=float)
        return 0.5 * math.fsum((np.sin(2.0 * m * x) / m ** 2).tolist())

    @staticmethod
    def lobachevsky_quadrature(x: float) -> float:
        """Direct quadrature of the defining integral, split at multiples of pi."""
        if not math.isfinite(x):
            raise DomainError(f"Lobachevsky function needs a finite argument, got {x}")
        if x == 0.0:
            return 0.0
        sign = 1.0 if x > 0 else -1.0
        upper = abs(x)
        breaks = [k * math.pi for k in range(1, int(upper // math.pi) + 1) if k * math.pi < upper]
        value, _ = quad(
            lambda z: -math.log(abs(2.0 * math.sin(z))),
            0.0,
            upper,
            points=breaks or None,
            limit=200,
            epsabs=1e-11,
            epsrel=1e-11
        )
        return sign * value

    def vol_regular_truncated_integral(self, theta: float) -> float:
        """
        vol(T*_theta) = 8 Lambda(pi/4) - 3 int_0^theta arccosh(cos t / (2 cos t - 1)) dt.

        Raises:
            DomainError: theta outside [0, pi/3)
        """
        theta = _check_theta(theta)
        ideal = 8.0 * self.lobachevsky(math.pi / 4)
        if theta == 0.0:
            return ideal
        value, error = quad(
            _arccosh_integrand,
            0.0,
            theta,
            epsabs=settings.quad_tolerance,
            epsrel=1e-12,
            limit=200
        )
        if error > settings.quad_tolerance:
            logger.warning(f"Quadrature error estimate {error:.2e} above target at theta={theta}")
        return ideal - 3.0 * value

    def vol_regular_truncated_closed(self, theta: float) -> float:
        """
        vol(T*_theta) through Lobachevsky values.

        phi = arctan(sqrt(1 - 3 sin^2(theta/2)) / cos(theta/2)).

        Raises:
            DomainError: theta outside [0, pi/3)
        """
        theta = _check_theta(theta)
        radicand = 1.0 - 3.0 * math.sin(theta / 2) ** 2
        if radicand < 0:
            raise DomainError(f"negative radicand {radicand} at theta={theta}")
        phi = math.atan(math.sqrt(radicand) / math.cos(theta / 2))
        lam = self.lobachevsky
        half = theta / 2
        return 6.0 * math.fsum([
            lam(math.pi / 3 + phi),
            -lam(math.pi / 3 - phi),
            lam(5 * math.pi / 6 - phi),
            lam(math.pi / 6 - phi),
            lam(half + phi),
            -lam(half - phi),
            2.0 * lam(math.pi / 2 - phi),
        ])

    def volume_pair(self, theta: float, scale: int = 1) -> VolumeResult:
        """Both formulas at theta and whether they agree within the volume tolerance."""
        via_integral = self.vol_regular_truncated_integral(theta)
        via_lobachevsky = self.vol_regular_truncated_closed(theta)
        discrepancy = abs(via_integral - via_lobachevsky)
        agreed = discrepancy <= settings.volume_tolerance
        if not agreed:
            logger.warning(f"Volume formulas disagree by {discrepancy:.2e} at theta={theta}")
        return VolumeResult(
            theta=theta,
            via_integral=via_integral,
            via_lobachevsky=via_lobachevsky,
            discrepancy=discrepancy,
            agreed=agreed,
            scale=scale
        )

    def vol_Mn(self, n: int) -> float:
        """Volume of a manifold with a one-component spine on n true vertices: n vol(T*_{pi/(3n)})."""
        if isinstance(n, bool) or not isinstance(n, int) or n < 2:
            raise DomainError(f"n must be an integer >= 2, got {n}")
        return n * self.vol_regular_truncated_integral(math.pi / (3 * n))

    def vol_Wn(self, n: int) -> float:
        """Volume of W_n = n vol(T*_{2pi/(3n)}), n = 5 + 4s."""
        if isinstance(n, bool) or not isinstance(n, int) or n < 5 or (n - 5) % 4:
            raise DomainError(f"n must have the form 5 + 4s with s >= 0, got {n}")
        pair = self.volume_pair(2 * math.pi / (3 * n), scale=n)
        return n * pair.via_lobachevsky

    @staticmethod
    def regular_angle(
        triangulation: IdealTriangulation,
        classification: Optional[EdgeClassification] = None
    ) -> Optional[Angle]:
        """2pi/m when all edge classes have the same size m > 6, else None."""
        if classification is None:
            classification = triangulator.edge_classes(triangulation)
        sizes = set(classification.sizes)
        if len(sizes) != 1:
            return None
        m = sizes.pop()
        if m <= 6:
            return None
        return Angle(theta=2 * math.pi / m)

    def triangulation_volume(
        self,
        triangulation: IdealTriangulation,
        classification: Optional[EdgeClassification] = None
    ) -> Optional[VolumeResult]:
        """n_tets copies of the regular truncated tetrahedron at the regular angle, if any."""
        angle = self.regular_angle(triangulation, classification)
        if angle is None:
            return None
        return self.volume_pair(angle.theta, scale=triangulation.n_tets)


# Global volume service instance
volume_service = VolumeService()

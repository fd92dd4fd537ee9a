"""Exact arithmetic in Z[eps], eps = (1 + sqrt 5) / 2."""
import math

from spinekit.models.schemas import GoldenInt

ONE = GoldenInt(a=1, b=0)
EPS = GoldenInt(a=0, b=1)
EPS_INV = GoldenInt(a=-1, b=1)  # eps - 1
PHI = (1 + math.sqrt(5)) / 2
PSI = (1 - math.sqrt(5)) / 2
FLOAT_BITS = 960  # coefficient bits kept before scaling, below the 1024-bit float limit


class GoldenRing:
    """Operations on GoldenInt values."""

    @staticmethod
    def add(x: GoldenInt, y: GoldenInt) -> GoldenInt:
        return x + y

    @staticmethod
    def mul(x: GoldenInt, y: GoldenInt) -> GoldenInt:
        """Product reduced with eps^2 = eps + 1."""
        return x * y

    @staticmethod
    def eps_pow(k: int) -> GoldenInt:
        """
        eps**k for any signed integer k.

        Uses square-and-multiply on eps for k >= 0 and on eps^-1 = eps - 1
        for k < 0.

        Args:
            k: Exponent

        Returns:
            eps**k in canonical form
        """
        base = EPS if k >= 0 else EPS_INV
        exponent = abs(k)
        result = ONE
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    @staticmethod
    def to_real(x: GoldenInt) -> float:
        """Floating value a + b*phi, for reports only.

        Opposite-sign coefficients cancel; those go through the conjugate,
        x = norm(x) / (a + b*psi), whose terms share a sign. Coefficients past
        the float range are scaled by a shared power of two first, and a value
        that is itself out of range comes back as a signed infinity.
        """
        shift = max(0, max(abs(x.a), abs(x.b)).bit_length() - FLOAT_BITS)
        a, b = x.a >> shift, x.b >> shift
        if x.a * x.b < 0:
            norm = x.a * x.a + x.a * x.b - x.b * x.b
            norm_shift = max(0, abs(norm).bit_length() - FLOAT_BITS)
            mantissa = (norm >> norm_shift) / math.fsum((float(a), b * PSI))
            exponent = norm_shift - shift
        else:
            mantissa = math.fsum((float(a), b * PHI))
            exponent = shift
        try:
            return math.ldexp(mantissa, exponent)
        except OverflowError:
            return math.copysign(math.inf, mantissa)

    @staticmethod
    def norm(x: GoldenInt) -> int:
        """Field norm a^2 + ab - b^2; units have norm +-1."""
        return x.a * x.a + x.a * x.b - x.b * x.b


# Global ring instance
golden_ring = GoldenRing()

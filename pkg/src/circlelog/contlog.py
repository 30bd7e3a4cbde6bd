"""The continuous logarithm on the unit circle.

The logarithm of a point at angle theta is i*(theta + 2*pi*b) for every
integer branch b, so a single point has infinitely many logarithm values.
``principal_log`` picks branch 0, ``log_branches`` enumerates a finite window
of branches, and ``recover_exponent`` inverts the map k -> angle, which is
the operation whose difficulty the whole scheme rests on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .errors import AmbiguousAngle
from .group import GroupParams, NumericElement

DEFAULT_TOLERANCE = Fraction(1, 5)


@dataclass(frozen=True)
class ContinuousLogValue:
    """One logarithm value i*(2*pi*principal_t/2^p + 2*pi*branch)."""

    params: GroupParams
    principal_t: int
    branch: int

    def turn_units(self) -> int:
        """The imaginary part in units of 2*pi/2^p, branch included."""
        return self.principal_t + (self.branch << self.params.p)

    def imag(self) -> float:
        """The imaginary part of the logarithm as a float."""
        return math.tau * (self.turn_units() / (1 << self.params.p))


def principal_log(q: NumericElement) -> ContinuousLogValue:
    """The branch-0 logarithm; a relabeling of the angle as i*theta."""
    return ContinuousLogValue(q.params, q.t, 0)


def log_branches(q: NumericElement, window: int) -> list[ContinuousLogValue]:
    """Branches -window..+window of the logarithm, 2*window+1 values.

    Consecutive values differ by exactly one full turn (2^p turn-units); the
    full solution set is infinite, the caller picks the window.
    """
    return [ContinuousLogValue(q.params, q.t, b) for b in range(-window, window + 1)]


def recover_exponent(q: NumericElement, tolerance: Fraction = DEFAULT_TOLERANCE) -> int:
    """Invert the exponent map: nearest k to q.t * n / 2^p, reduced mod n.

    Succeeds iff the distance to the nearest integer is <= 1/2 - tolerance;
    the comparison is exact rational arithmetic, never floating division.
    """
    delta = Fraction(tolerance)
    if not 0 <= delta < Fraction(1, 2):
        raise ValueError(f"tolerance must lie in [0, 1/2), got {delta}")
    n, p = q.params.n, q.params.p
    k = _kernels.recover_t(q.t, n, p, delta.numerator, delta.denominator)
    if k < 0:
        raise AmbiguousAngle(
            f"angle t={q.t} sits within {float(delta):g} of the decision boundary "
            f"between two exponents (n={n}, p={p})"
        )
    return k


def exponent_recovery_bound(n: int, p: int) -> bool:
    """True iff p is high enough that recovery is guaranteed after one rounding.

    One rounding contributes angular error <= pi/2^p; with p >= ceil(log2 n)+2
    that is at most a quarter of the root spacing 2*pi/n, which keeps every
    rounded angle within 1/2 - 0.25 of its exponent, inside the delta <= 0.2
    success region.
    """
    return p >= (n - 1).bit_length() + 2

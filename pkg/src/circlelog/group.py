"""The cyclic group of n-th roots of unity, in two representations.

``ExactElement`` stores the exponent k of e^{i*2*pi*k/n} and does exact
modular arithmetic; it is what the protocols run on. ``NumericElement``
stores the angle as a p-bit fixed-point fraction of a full turn; converting
an exact element to it is the single rounding step in the package, which is
what makes angular-error experiments reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .errors import InvalidOrder, NotPrimitive, ParamsMismatch


@dataclass(frozen=True)
class GroupParams:
    """Group order n, generator exponent g, and angular precision p (bits)."""

    n: int
    g: int
    p: int


@dataclass(frozen=True)
class ExactElement:
    """The root e^{i*2*pi*k/n}, held as its canonical exponent k in [0, n)."""

    params: GroupParams
    k: int


@dataclass(frozen=True)
class NumericElement:
    """A point on the circle as a fixed-point angle: theta = 2*pi*t/2^p."""

    params: GroupParams
    t: int


def make_params(n: int, g: int, p: int) -> GroupParams:
    """Validate and build group parameters; g must be primitive."""
    if n < 1:
        raise InvalidOrder(f"group order must be >= 1, got {n}")
    if p < 1:
        raise InvalidOrder(f"angular precision must be >= 1 bit, got {p}")
    if n == 1:
        if g != 0:
            raise NotPrimitive(f"trivial group requires g=0, got {g}")
    elif not 1 <= g < n:
        raise NotPrimitive(f"generator exponent must lie in [1, {n}), got {g}")
    elif math.gcd(g, n) != 1:
        raise NotPrimitive(
            f"gcd({g}, {n}) = {math.gcd(g, n)}: the root generates a proper subgroup"
        )
    return GroupParams(n=n, g=g, p=p)


def element(params: GroupParams, k: int) -> ExactElement:
    """The root with exponent k, reduced to its canonical residue mod n."""
    return ExactElement(params, k % params.n)


def generator(params: GroupParams) -> ExactElement:
    """The primitive root chosen as generator."""
    return element(params, params.g)


def identity(params: GroupParams) -> ExactElement:
    return ExactElement(params, 0)


def _check_params(a, b) -> None:
    if a.params != b.params:
        raise ParamsMismatch(f"elements from different groups: {a.params} vs {b.params}")


def mul(a: ExactElement, b: ExactElement) -> ExactElement:
    _check_params(a, b)
    return ExactElement(a.params, (a.k + b.k) % a.params.n)


def inv(a: ExactElement) -> ExactElement:
    return ExactElement(a.params, (a.params.n - a.k) % a.params.n)


def power(a: ExactElement, e: int) -> ExactElement:
    """a raised to the e-th power; e is reduced mod n first (negatives fine)."""
    n = a.params.n
    return ExactElement(a.params, (a.k * (e % n)) % n)


def to_numeric(a: ExactElement) -> NumericElement:
    """Round the exact angle 2*pi*k/n to p fixed-point bits (half-to-even).

    The only rounding step on the exact-to-numeric path; the angular error is
    at most pi/2^p.
    """
    return NumericElement(a.params, _kernels.to_numeric_t(a.k, a.params.n, a.params.p))


def mul_numeric(a: NumericElement, b: NumericElement) -> NumericElement:
    """Multiply on the circle by adding angles mod one turn; addition is exact."""
    _check_params(a, b)
    return NumericElement(a.params, (a.t + b.t) & ((1 << a.params.p) - 1))


def complex_value(a: NumericElement) -> tuple[float, float]:
    """(cos theta, sin theta) for display and the spectral module."""
    theta = math.tau * (a.t / (1 << a.params.p))
    return (math.cos(theta), math.sin(theta))

"""Exact arithmetic on two-bridge fractions b(alpha, beta).

A two-bridge link is determined by its Schubert fraction alpha/beta with
gcd(alpha, beta) = 1.  Unoriented links are insensitive to inverting beta
mod alpha, and taking mirrors negates beta; orienting the link refines both
relations to work mod 2*alpha, where the odd representative of beta is the
meaningful one.  Everything here is integer arithmetic, no floats anywhere.

Conventions: alpha = 0 is the two-component unlink b(0,1), alpha = 1 the
unknot b(1,1), and a negative alpha input is read as the mirror (|alpha|,
-beta).  The canonical representative of an unoriented link is the fraction
(alpha, beta) with beta the minimum of {+-beta^{+-1} mod alpha} in
[1, alpha-1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class InvalidFractionError(ValueError):
    """alpha, beta do not describe a two-bridge link (gcd rule violated)."""


class OddFormRequiredError(ValueError):
    """An oriented operation was given an even beta (no odd normal form)."""


class DegenerateContinuedFractionError(ValueError):
    """A continued fraction evaluation hit a zero denominator."""


@dataclass(frozen=True, order=True)
class Fraction:
    """A validated (not necessarily canonical) two-bridge fraction."""

    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 0:
            raise InvalidFractionError(f"alpha must be non-negative, got {self.alpha}")
        # gcd(0, x) = |x|, so alpha = 0 forces beta = +-1
        if math.gcd(self.alpha, abs(self.beta)) != 1:
            raise InvalidFractionError(
                f"gcd({self.alpha}, {self.beta}) != 1: not a two-bridge fraction"
            )

    @property
    def pair(self) -> tuple[int, int]:
        return (self.alpha, self.beta)

    def canonical(self) -> "Fraction":
        return canonical(self.alpha, self.beta)

    def is_canonical(self) -> bool:
        return self == self.canonical()


def _as_fraction(f) -> Fraction:
    if isinstance(f, Fraction):
        return f
    a, b = f
    return Fraction(a, b)


def canonical(alpha: int, beta: int) -> Fraction:
    """Canonical unoriented mirror-identified form of b(alpha, beta).

    Negative alpha is treated as the mirror (|alpha|, -beta).  For alpha >= 2
    the result has beta equal to the minimum of {+-beta^{+-1} mod alpha};
    alpha in {0, 1} collapses to (0, 1) and (1, 1).  Idempotent.
    """
    if alpha < 0:
        alpha, beta = -alpha, -beta
    if alpha == 0:
        if abs(beta) != 1:
            raise InvalidFractionError(f"(0, {beta}) is invalid: beta must be +-1")
        return Fraction(0, 1)
    if alpha == 1:
        return Fraction(1, 1)
    b = beta % alpha
    if math.gcd(alpha, b) != 1:
        raise InvalidFractionError(f"gcd({alpha}, {beta}) != 1: not a two-bridge fraction")
    inv = pow(b, -1, alpha)
    return Fraction(alpha, min(b, inv, alpha - b, alpha - inv))


def orbit(alpha: int, beta: int, oriented: bool = False, mirror: bool = True) -> frozenset[int]:
    """Equivalence orbit of beta: mod alpha unoriented, mod 2*alpha oriented.

    Inversion is always applied; negation only when ``mirror`` is set.
    Oriented orbits require odd beta (the odd Schubert normal form is the
    only one the mod-2*alpha relation is defined for).
    """
    f = _as_fraction((alpha, beta))
    if oriented and f.beta % 2 == 0:
        raise OddFormRequiredError(
            f"oriented orbit needs odd beta, got ({f.alpha}, {f.beta})"
        )
    if f.alpha == 0:
        return frozenset({1})
    m = 2 * f.alpha if oriented else f.alpha
    b = f.beta % m
    inv = pow(b, -1, m)
    members = {b, inv}
    if mirror:
        members.update({(-b) % m, (-inv) % m})
    return frozenset(members)


def equivalent(f1, f2, oriented: bool = False, mirror: bool = True) -> bool:
    """Whether two fractions name the same link under the selected relation."""
    f1, f2 = _as_fraction(f1), _as_fraction(f2)
    if oriented and (f1.beta % 2 == 0 or f2.beta % 2 == 0):
        raise OddFormRequiredError("oriented comparison needs both betas odd")
    if f1.alpha != f2.alpha:
        return False
    if f1.alpha == 0:
        return True
    m = 2 * f1.alpha if oriented else f1.alpha
    return (f2.beta % m) in orbit(f1.alpha, f1.beta, oriented, mirror)


@dataclass(frozen=True)
class OrientationClass:
    """An orientation class of b(alpha, beta): odd representatives mod 2*alpha.

    ``reps`` is closed under x -> x^{-1} and x -> -x mod 2*alpha, so it has at
    most four members.  alpha = 0 uses the degenerate singleton {1}.
    """

    alpha: int
    reps: frozenset[int]


def _oriented_class(alpha: int, b0: int) -> OrientationClass:
    m = 2 * alpha
    b = b0 % m
    inv = pow(b, -1, m)
    return OrientationClass(alpha, frozenset({b, inv, (-b) % m, (-inv) % m}))


def orientation_classes(f) -> tuple[OrientationClass, ...]:
    """Orientation classes of the canonical fraction, mirror-identified.

    Knots (alpha odd) and the degenerate alpha in {0, 1} have one class.  A
    two-component link (alpha even >= 2) has candidate generators beta and
    beta + alpha mod 2*alpha; one class is returned when their orbits agree,
    otherwise two.
    """
    f = _as_fraction(f).canonical()
    if f.alpha == 0:
        return (OrientationClass(0, frozenset({1})),)
    if f.alpha == 1:
        return (_oriented_class(1, 1),)
    if f.alpha % 2 == 1:
        odd = f.beta if f.beta % 2 == 1 else f.beta + f.alpha
        return (_oriented_class(f.alpha, odd),)
    first = _oriented_class(f.alpha, f.beta)
    second = _oriented_class(f.alpha, f.beta + f.alpha)
    if first.reps == second.reps:
        return (first,)
    return (first, second)


def components(f) -> int:
    """Component count of the link: two for even alpha (including 0), else one."""
    f = _as_fraction(f)
    return 2 if f.alpha % 2 == 0 else 1


def cf_to_fraction(digits) -> tuple[tuple[int, int], Fraction]:
    """Evaluate Conway digits d1 + 1/(d2 + 1/(... + 1/dk)).

    Returns the raw (possibly negative, unnormalized) pair together with the
    canonical fraction.  Digits must be nonzero; a partial evaluation of 0 in
    denominator position is rejected.
    """
    digits = tuple(digits)
    if not digits or any(d == 0 for d in digits):
        raise DegenerateContinuedFractionError(f"digits must be nonzero, got {digits}")
    num, den = digits[-1], 1
    for d in reversed(digits[:-1]):
        if num == 0:
            raise DegenerateContinuedFractionError(
                f"partial evaluation of {digits} divides by zero"
            )
        num, den = d * num + den, num
    return (num, den), canonical(num, den)


def fraction_to_cf(f) -> tuple[int, ...]:
    """All-positive odd-length Conway digits of a fraction in canonical range.

    Euclidean expansion of alpha/beta; an even-length expansion has its last
    digit d >= 2 split into (d - 1, 1) so the length comes out odd, matching
    the usual alternating 4-plat convention.  Inverse of cf_to_fraction on
    the raw pair.
    """
    f = _as_fraction(f)
    if f.alpha < 2 or not (0 < f.beta < f.alpha):
        raise InvalidFractionError(
            f"({f.alpha}, {f.beta}) is outside the range alpha >= 2, 0 < beta < alpha"
        )
    digits = []
    a, b = f.alpha, f.beta
    while b:
        digits.append(a // b)
        a, b = b, a % b
    if len(digits) % 2 == 0:
        digits[-1] -= 1
        digits.append(1)
    return tuple(digits)

"""Non-additive mass arithmetic for the deformed Galilei group.

Two mass coordinates: the algebra mass m (eigenvalue of the primitive
generator M, additive) and the physical mass m_f, related by

    m_f = (k/2) (1 - e^(-2m/k))

so m_f is bounded by k/2, which plays the role of infinite mass.  Physical
masses compose by

    M_f = m_f + m'_f - 2 m_f m'_f / k

which is exactly addition transported through the parametrization above.  The
deformed reduced mass is v_f = m_f m'_f / M_f.

All composition formulas are rational, so they accept ints, floats, and
fractions.Fraction and are exact on exact inputs.  k may be ``math.inf``,
which selects the classical (undeformed) formulas.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "MassDomainError",
    "check_deformation",
    "check_physical",
    "to_physical",
    "to_algebra",
    "compose",
    "compose_many",
    "reduced",
    "classical_reduced",
]


class MassDomainError(ValueError):
    """Raised for masses outside the accepted domain."""


def check_deformation(k) -> None:
    if not (k > 0):
        raise MassDomainError(f"deformation parameter must be positive, got {k}")


def check_physical(m_f, k) -> None:
    check_deformation(k)
    if m_f < 0:
        raise MassDomainError(f"physical mass must be nonnegative, got {m_f}")
    if math.isfinite(k) and m_f > k / 2:
        raise MassDomainError(f"physical mass {m_f} exceeds the bound k/2 = {k / 2}")


def to_physical(m, k) -> float:
    """Physical mass of algebra mass m: (k/2)(1 - e^(-2m/k)); m for k = inf."""
    check_deformation(k)
    if m < 0:
        raise MassDomainError(f"algebra mass must be nonnegative, got {m}")
    if math.isinf(k):
        return m
    return (k / 2) * -math.expm1(-2 * m / k)


def to_algebra(m_f, k) -> float:
    """Algebra mass of physical mass m_f: -(k/2) ln(1 - 2 m_f / k).

    The boundary m_f = k/2 has no finite algebra coordinate and is rejected.
    """
    check_deformation(k)
    if m_f < 0:
        raise MassDomainError(f"physical mass must be nonnegative, got {m_f}")
    if math.isinf(k):
        return m_f
    if m_f >= k / 2:
        raise MassDomainError("infinite mass (m_f >= k/2) has no finite algebra coordinate")
    return -(k / 2) * math.log1p(-2 * m_f / k)


def compose(m_f, mp_f, k):
    """Deformed total physical mass of two subsystems.

    Commutative and associative; maps [0, k/2] x [0, k/2] into [0, k/2] and
    fixes k/2 ("infinite mass").  Exact on Fraction inputs.
    """
    check_physical(m_f, k)
    check_physical(mp_f, k)
    if math.isinf(k):
        return m_f + mp_f
    return m_f + mp_f - 2 * m_f * mp_f / k


def compose_many(masses, k):
    """Left fold of compose; associativity makes the value order-independent."""
    masses = list(masses)
    if not masses:
        raise MassDomainError("need at least one mass")
    total = masses[0]
    check_physical(total, k)
    for m in masses[1:]:
        total = compose(total, m, k)
    return total


def reduced(m_f, mp_f, k):
    """Deformed reduced mass m_f m'_f / M_f; equals v / (1 - 2v/k) with the
    classical reduced mass v."""
    total = compose(m_f, mp_f, k)
    if total == 0:
        raise MassDomainError("reduced mass undefined for two massless particles")
    return m_f * mp_f / total


def classical_reduced(m_f, mp_f):
    """Undeformed reduced mass m m' / (m + m')."""
    if m_f + mp_f == 0:
        raise MassDomainError("reduced mass undefined for two massless particles")
    return m_f * mp_f / (m_f + mp_f)

"""Operator realizations of the deformed Galilei algebra in the Weyl algebra.

One particle in slot A with deformation symbol lam = e^(-m/k):

    P_i -> p_{A,i}          K_i -> m_f x_{A,i}       H -> p_A^2 / (2 m_f)
    J_i -> eps_{ijl} x_{A,j} p_{A,l}   M -> m * 1      E -> lam * 1

with m_f = (k/2)(1 - lam^2) by default; m_f can be overridden by a free
symbol to demonstrate that the algebra brackets then fail (the [K, P]
residual is exactly i (m_f - (k/2)(1 - lam^2))).

Two particles compose through the coproduct with leg 1 = particle 1, so the
twist scalar multiplying particle 1's operators is lam' = e^(-m'/k):

    P_i^tot = lam' p_{1,i} + p_{2,i}
    K_i^tot = lam' m_f x_{1,i} + m'_f x_{2,i}

and the remaining generators are plain sums.  The module also builds the
center-of-mass / relative variable set, the transposed-coproduct ("tilde")
set, and the exact kinetic-split identity

    H^tot = P^2 / (2 M_f) + Pi^2 / (2 v_f).

Everything here is symbolic and exact; spin is carried as metadata only (the
scalar, spin-0 realization is the default and the only one realized).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import sympy as sp

from .hopf import GalileiHopf, UEAExpression, eps, GENERATOR_NAMES
from .scalars import RationalFunction, Rat, sym
from .weyl import WeylExpression, position, momentum, scalar

__all__ = [
    "OneParticleRealization",
    "TwoParticleSystem",
    "verify_one_particle",
    "compose_system",
    "canonical_residuals",
    "default_system",
    "CANONICAL_PAIRS",
]

_I = Rat(sp.I)

#: Generators whose brackets are checked against the realization.
_CHECKED = ("J1", "J2", "J3", "K1", "K2", "K3", "P1", "P2", "P3", "H", "M", "E")


def _axes():
    return (1, 2, 3)


@dataclass(frozen=True)
class OneParticleRealization:
    """Realization of one particle in Weyl-algebra slot 1 or 2."""

    slot: int
    lam: RationalFunction
    m_f: RationalFunction | None = None
    spin: int = 0
    algebra: GalileiHopf = field(default_factory=GalileiHopf, compare=False)

    def __post_init__(self):
        if self.slot not in (1, 2):
            raise ValueError("slot must be 1 or 2")
        if self.m_f is None:
            k = sym("k")
            object.__setattr__(self, "m_f", (k / 2) * (1 - self.lam ** 2))
        if isinstance(self.m_f, RationalFunction) and self.m_f.is_zero:
            raise ValueError("physical mass must be nonzero")

    @property
    def algebra_mass_symbol(self) -> RationalFunction:
        # opaque placeholder for the eigenvalue of M; never related to lam
        return sym(f"m{self.slot}")

    def realize(self, name: str) -> WeylExpression:
        """Weyl-algebra image of a named generator."""
        A = self.slot
        if name == "H":
            total = WeylExpression.zero()
            for i in _axes():
                total = total + momentum(A, i) * momentum(A, i)
            return total.scale(1 / (2 * self.m_f))
        if name == "M":
            return WeylExpression.unit(self.algebra_mass_symbol)
        if name == "E":
            return WeylExpression.unit(self.lam)
        if name == "Einv":
            return WeylExpression.unit(1 / self.lam)
        kind, axis = name[0], int(name[1])
        if kind == "P":
            return momentum(A, axis)
        if kind == "K":
            return position(A, axis).scale(self.m_f)
        if kind == "J":
            total = WeylExpression.zero()
            for j in _axes():
                for l in _axes():
                    e = eps(axis, j, l)
                    if e:
                        total = total + (position(A, j) * momentum(A, l)).scale(Rat(e))
            return total
        raise KeyError(f"unknown generator {name!r}")

    def realize_uea(self, expr: UEAExpression) -> WeylExpression:
        return _realize_words(expr, self.realize, self.lam, self.algebra_mass_symbol)


def _realize_words(expr: UEAExpression, gen_map, e_value: RationalFunction,
                   m_value: RationalFunction) -> WeylExpression:
    """Map a UEA expression through a generator realization."""
    total = WeylExpression.zero()
    for (letters, m, e), coeff in expr.terms.items():
        factor = coeff
        if m:
            factor = factor * m_value ** m
        if e:
            factor = factor * e_value ** e
        term = WeylExpression.unit(Rat(1))
        for kind, axis in letters:
            name = f"{kind}{axis}" if axis else kind
            term = term * gen_map(name)
        total = total + term.scale(factor)
    return total


def verify_one_particle(r: OneParticleRealization) -> list[tuple[str, WeylExpression]]:
    """Evaluate every algebra bracket in the realization; return residuals.

    Each entry is ("[g,h]", commutator(real g, real h) - realize([g, h])).
    All residuals vanish identically iff m_f = (k/2)(1 - lam^2).
    """
    alg = r.algebra
    results = []
    for i, g in enumerate(_CHECKED):
        for h in _CHECKED[i + 1:]:
            lhs = r.realize(g).commutator(r.realize(h))
            rhs = r.realize_uea(alg.bracket(g, h))
            results.append((f"[{g},{h}]", lhs - rhs))
    return results


@dataclass
class TwoParticleSystem:
    """Two one-particle realizations composed through the coproduct."""

    r1: OneParticleRealization
    r2: OneParticleRealization

    def __post_init__(self):
        if self.r1.slot == self.r2.slot:
            raise ValueError("the two particles must use distinct slots")
        if self.r1.algebra is not self.r2.algebra:
            raise ValueError("both particles must share one algebra instance")

    @property
    def algebra(self) -> GalileiHopf:
        return self.r1.algebra

    @property
    def M_f(self) -> RationalFunction:
        """Composed physical mass; equals (k/2)(1 - lam^2 lam'^2) by default."""
        k = sym("k")
        return self.r1.m_f + self.r2.m_f - 2 * self.r1.m_f * self.r2.m_f / k

    @property
    def v_f(self) -> RationalFunction:
        return self.r1.m_f * self.r2.m_f / self.M_f

    def total(self, name: str) -> WeylExpression:
        """Composed generator: realization of the coproduct with leg A = particle A."""
        out = WeylExpression.zero()
        for (w1, w2), coeff in self.algebra.coproduct(name).terms.items():
            left = self.r1.realize_uea(UEAExpression(self.algebra, {w1: Rat(1)}))
            right = self.r2.realize_uea(UEAExpression(self.algebra, {w2: Rat(1)}))
            out = out + (left * right).scale(coeff)
        return out

    def realize_total_uea(self, expr: UEAExpression) -> WeylExpression:
        """Composed image of a UEA expression (E -> lam lam', M -> m + m')."""
        return _realize_words(
            expr,
            self.total,
            self.r1.lam * self.r2.lam,
            self.r1.algebra_mass_symbol + self.r2.algebra_mass_symbol,
        )

    def verify_composed(self) -> list[tuple[str, WeylExpression]]:
        """Brackets of the composed generators against the algebra's table."""
        results = []
        for i, g in enumerate(_CHECKED):
            for h in _CHECKED[i + 1:]:
                lhs = self.total(g).commutator(self.total(h))
                rhs = self.realize_total_uea(self.algebra.bracket(g, h))
                results.append((f"[{g},{h}]", lhs - rhs))
        return results

    # -- relative variables -------------------------------------------------

    def relative_variables(self) -> dict[str, list[WeylExpression]]:
        """Total/center-of-mass/relative variable set of the direct coproduct."""
        lamp = self.r2.lam
        m1, m2, Mf = self.r1.m_f, self.r2.m_f, self.M_f
        out = {"P": [], "R": [], "Pi": [], "rho": []}
        for i in _axes():
            p1, p2 = momentum(1, i), momentum(2, i)
            K1 = self.r1.realize(f"K{i}")
            K2 = self.r2.realize(f"K{i}")
            out["P"].append(p1.scale(lamp) + p2)
            out["R"].append((K1.scale(lamp) + K2).scale(1 / Mf))
            out["Pi"].append((p1.scale(m2) - p2.scale(m1 * lamp)).scale(1 / Mf))
            out["rho"].append(K1.scale(1 / m1) - K2.scale(lamp / m2))
        return out

    def tilde_variables(self) -> dict[str, list[WeylExpression]]:
        """The transposed-coproduct counterpart of relative_variables."""
        lam = self.r1.lam
        m1, m2, Mf = self.r1.m_f, self.r2.m_f, self.M_f
        out = {"P": [], "R": [], "Pi": [], "rho": []}
        for i in _axes():
            p1, p2 = momentum(1, i), momentum(2, i)
            K1 = self.r1.realize(f"K{i}")
            K2 = self.r2.realize(f"K{i}")
            out["P"].append(p1 + p2.scale(lam))
            out["R"].append((K1 + K2.scale(lam)).scale(1 / Mf))
            out["Pi"].append((p1.scale(m2 * lam) - p2.scale(m1)).scale(1 / Mf))
            out["rho"].append(K1.scale(lam / m1) - K2.scale(1 / m2))
        return out

    def kinetic_split(self) -> WeylExpression:
        """H^tot - P^2/(2 M_f) - Pi^2/(2 v_f); normalizes to exactly zero."""
        variables = self.relative_variables()
        residual = self.total("H")
        for i in range(3):
            P = variables["P"][i]
            Pi = variables["Pi"][i]
            residual = residual - (P * P).scale(1 / (2 * self.M_f))
            residual = residual - (Pi * Pi).scale(1 / (2 * self.v_f))
        return residual


def compose_system(r1: OneParticleRealization, r2: OneParticleRealization) -> TwoParticleSystem:
    return TwoParticleSystem(r1, r2)


#: Expected commutators of the canonical set per axis: conjugate pairs give
#: i * delta, everything else vanishes.
CANONICAL_PAIRS = {("R", "P"), ("rho", "Pi")}


def canonical_residuals(sys: TwoParticleSystem, tilde: bool = False) -> dict[tuple, WeylExpression]:
    """All sixteen commutator pairings per axis pair, minus expected values."""
    variables = sys.tilde_variables() if tilde else sys.relative_variables()
    names = ("P", "R", "Pi", "rho")
    residuals = {}
    for a in names:
        for b in names:
            for i in _axes():
                for j in _axes():
                    comm = variables[a][i - 1].commutator(variables[b][j - 1])
                    expected = WeylExpression.zero()
                    if i == j:
                        if (a, b) in CANONICAL_PAIRS:
                            expected = scalar(_I)
                        elif (b, a) in CANONICAL_PAIRS:
                            expected = scalar(-_I)
                    residuals[(a, b, i, j)] = comm - expected
    return residuals


def default_system() -> TwoParticleSystem:
    """Two particles with the constraint-satisfying masses and symbols lam, lam'."""
    alg = GalileiHopf()
    r1 = OneParticleRealization(1, sym("lam"), algebra=alg)
    r2 = OneParticleRealization(2, sym("lamp"), algebra=alg)
    return TwoParticleSystem(r1, r2)

"""Noncommutative polynomial algebra in canonical position/momentum symbols.

Two particle slots (1, 2), three spatial axes, kinds ``x`` (position) and
``p`` (momentum), with the pairing [x_{A,i}, p_{B,j}] = i delta_{AB} delta_{ij}
and hbar = 1.  Every expression is kept in normal order: position symbols to
the left of momentum symbols, each block sorted by (slot, axis).  Reordering a
product of normal-ordered monomials uses the closed form

    p^a x^b = sum_j (-i)^j j! C(a,j) C(b,j) x^(b-j) p^(a-j)

per canonical pair, which is exact; all operator-identity checks downstream
reduce to a coefficient computation in the scalar field.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable, NamedTuple

import sympy as sp

from .scalars import RationalFunction, Rat

__all__ = [
    "BackendMismatchError",
    "CanonicalSymbol",
    "WeylExpression",
    "position",
    "momentum",
    "scalar",
    "normal_order",
    "commutator",
]

N_SLOTS = 6  # (particle, axis) pairs flattened: slot = 3*(A-1) + (i-1)


class BackendMismatchError(TypeError):
    """Raised when exact and numeric coefficients are mixed in one product."""


class CanonicalSymbol(NamedTuple):
    """One canonical generator: kind 'x' or 'p', particle 1..2, axis 1..3."""

    kind: str
    particle: int
    axis: int

    @property
    def slot(self) -> int:
        return 3 * (self.particle - 1) + (self.axis - 1)


def _check_symbol(s: CanonicalSymbol) -> None:
    if s.kind not in ("x", "p") or s.particle not in (1, 2) or s.axis not in (1, 2, 3):
        raise ValueError(f"invalid canonical symbol {s}")


# A monomial is a pair of exponent tuples (positions, momenta), each of
# length N_SLOTS.  The zero exponent tuple:
_ZERO = (0,) * N_SLOTS

_I_EXACT = Rat(sp.I)


def _is_exact(coeff) -> bool:
    return isinstance(coeff, RationalFunction)


def _imag_unit(exact: bool):
    return _I_EXACT if exact else 1j


class WeylExpression:
    """Finite sum of scalar coefficients times normal-ordered monomials.

    Immutable; arithmetic returns new values.  Coefficients are either all
    RationalFunction (exact backend) or all python complex (numeric backend).
    """

    __slots__ = ("terms", "exact")

    def __init__(self, terms: dict | None = None, exact: bool = True):
        self.terms = {}
        self.exact = exact
        if terms:
            for mono, coeff in terms.items():
                if _is_exact(coeff) != exact:
                    raise BackendMismatchError("coefficient backend does not match expression backend")
                if _is_zero_coeff(coeff):
                    continue
                self.terms[mono] = coeff

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, exact: bool = True) -> "WeylExpression":
        return cls({}, exact=exact)

    @classmethod
    def unit(cls, coeff=None, exact: bool = True) -> "WeylExpression":
        if coeff is None:
            coeff = Rat(1) if exact else 1.0 + 0.0j
        return cls({(_ZERO, _ZERO): coeff}, exact=_is_exact(coeff))

    @classmethod
    def generator(cls, symbol: CanonicalSymbol, exact: bool = True) -> "WeylExpression":
        _check_symbol(symbol)
        exp = list(_ZERO)
        exp[symbol.slot] = 1
        exp = tuple(exp)
        mono = (exp, _ZERO) if symbol.kind == "x" else (_ZERO, exp)
        return cls({mono: Rat(1) if exact else 1.0 + 0.0j}, exact=exact)

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(not _is_zero_coeff(c) for c in self.terms.values())

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(xs) + sum(ps) for xs, ps in self.terms)

    def pruned(self) -> "WeylExpression":
        """Drop terms whose coefficient normalizes to zero."""
        return WeylExpression(
            {m: c for m, c in self.terms.items() if not _is_zero_coeff(c)}, exact=self.exact
        )

    def coefficient(self, mono) -> object:
        return self.terms.get(mono, Rat(0) if self.exact else 0j)

    # -- arithmetic -----------------------------------------------------------

    def _check_backend(self, other: "WeylExpression") -> None:
        if self.exact != other.exact:
            raise BackendMismatchError("cannot combine exact and numeric expressions")

    def __add__(self, other: "WeylExpression") -> "WeylExpression":
        self._check_backend(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            if mono in out:
                out[mono] = out[mono] + coeff
            else:
                out[mono] = coeff
        return WeylExpression(out, exact=self.exact)

    def __neg__(self) -> "WeylExpression":
        return WeylExpression({m: -c for m, c in self.terms.items()}, exact=self.exact)

    def __sub__(self, other: "WeylExpression") -> "WeylExpression":
        return self + (-other)

    def scale(self, coeff) -> "WeylExpression":
        if _is_exact(coeff) != self.exact:
            raise BackendMismatchError("scalar backend does not match expression backend")
        if _is_zero_coeff(coeff):
            return WeylExpression.zero(self.exact)
        return WeylExpression({m: coeff * c for m, c in self.terms.items()}, exact=self.exact)

    def __mul__(self, other) -> "WeylExpression":
        if not isinstance(other, WeylExpression):
            return self.scale(other if _is_exact(other) or isinstance(other, complex) else Rat(other) if self.exact else complex(other))
        self._check_backend(other)
        out: dict = {}
        i_unit = _imag_unit(self.exact)
        for (x1, p1), c1 in self.terms.items():
            for (x2, p2), c2 in other.terms.items():
                base = c1 * c2
                for exps, weight in _reorder(p1, x2, i_unit):
                    mid_x, mid_p = exps
                    mono = (_add_exp(x1, mid_x), _add_exp(mid_p, p2))
                    coeff = base * weight
                    if mono in out:
                        out[mono] = out[mono] + coeff
                    else:
                        out[mono] = coeff
        return WeylExpression(out, exact=self.exact)

    def __rmul__(self, other) -> "WeylExpression":
        # scalars commute with everything
        return self.__mul__(other)

    def commutator(self, other: "WeylExpression") -> "WeylExpression":
        return self * other - other * self

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylExpression):
            return NotImplemented
        return (self - other).is_zero

    def __hash__(self):
        raise TypeError("WeylExpression is unhashable (equality is semantic)")

    def __repr__(self) -> str:
        if not self.terms:
            return "WeylExpression(0)"
        bits = []
        for (xs, ps), coeff in sorted(self.terms.items()):
            word = []
            for slot in range(N_SLOTS):
                if xs[slot]:
                    word.append(f"x{slot // 3 + 1}{slot % 3 + 1}^{xs[slot]}")
            for slot in range(N_SLOTS):
                if ps[slot]:
                    word.append(f"p{slot // 3 + 1}{slot % 3 + 1}^{ps[slot]}")
            coeff_str = repr(coeff.normalize().expr) if _is_exact(coeff) else repr(coeff)
            bits.append(f"({coeff_str})*{'*'.join(word) if word else '1'}")
        return "WeylExpression(" + " + ".join(bits) + ")"

    # -- evaluation -----------------------------------------------------------

    def substitute(self, assignment: dict) -> "WeylExpression":
        """Numeric backend copy with scalar symbols evaluated."""
        if not self.exact:
            return self
        return WeylExpression(
            {m: complex(c.evaluate(assignment)) for m, c in self.terms.items()}, exact=False
        )


def _is_zero_coeff(coeff) -> bool:
    if _is_exact(coeff):
        return coeff.is_zero
    return coeff == 0


def _add_exp(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


_REORDER_CACHE: dict = {}


def _reorder(pexp: tuple, xexp: tuple, i_unit):
    """Normal-order the middle block p^pexp * x^xexp.

    Yields ((x_exponents, p_exponents), scalar_weight) pairs.  Distinct slots
    commute, so the closed form applies slot by slot and contributions
    multiply; the weight of a pattern is w * (-i)^j with integer w.
    """
    key = (pexp, xexp)
    cached = _REORDER_CACHE.get(key)
    if cached is None:
        results = [(list(xexp), list(pexp), 1, 0)]
        for slot in range(N_SLOTS):
            a, b = pexp[slot], xexp[slot]
            if a == 0 or b == 0:
                continue
            expanded = []
            for xs, ps, w, jt in results:
                for j in range(min(a, b) + 1):
                    nxs = xs.copy()
                    nps = ps.copy()
                    nxs[slot] = b - j
                    nps[slot] = a - j
                    expanded.append((nxs, nps, w * comb(a, j) * comb(b, j) * factorial(j), jt + j))
            results = expanded
        cached = [((tuple(xs), tuple(ps)), w, jt) for xs, ps, w, jt in results]
        _REORDER_CACHE[key] = cached
    exact = isinstance(i_unit, RationalFunction)
    for exps, w, j in cached:
        if j:
            yield exps, w * (-i_unit) ** j
        else:
            yield exps, Rat(w) if exact else complex(w)


# -- convenience constructors -------------------------------------------------


def position(particle: int, axis: int, exact: bool = True) -> WeylExpression:
    return WeylExpression.generator(CanonicalSymbol("x", particle, axis), exact=exact)


def momentum(particle: int, axis: int, exact: bool = True) -> WeylExpression:
    return WeylExpression.generator(CanonicalSymbol("p", particle, axis), exact=exact)


def scalar(coeff) -> WeylExpression:
    """Multiple of the identity."""
    if not _is_exact(coeff) and not isinstance(coeff, complex):
        coeff = Rat(coeff)
    return WeylExpression.unit(coeff)


def normal_order(raw_terms: Iterable[tuple]) -> WeylExpression:
    """Build an expression from raw (coefficient, [CanonicalSymbol, ...]) terms.

    Symbols may appear in any order; the result is the same algebra element in
    normal order.
    """
    total = None
    for coeff, word in raw_terms:
        if not _is_exact(coeff) and not isinstance(coeff, complex):
            coeff = Rat(coeff)
        term = WeylExpression.unit(coeff)
        for s in word:
            term = term * WeylExpression.generator(s, exact=term.exact)
        total = term if total is None else total + term
    return total if total is not None else WeylExpression.zero()


def commutator(a: WeylExpression, b: WeylExpression) -> WeylExpression:
    return a.commutator(b)

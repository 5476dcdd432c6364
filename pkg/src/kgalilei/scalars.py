"""Exact scalar arithmetic: multivariate rational functions over the rationals.

All coefficients in the algebraic modules live here.  The canonical form of a
value is a coprime numerator/denominator pair of expanded polynomials in
formal symbols, with the denominator's leading coefficient (graded-lex over
alphabetically sorted symbols) normalized to 1.  Equality of canonical forms
is plain structural equality, so every identity check in the package is
decidable.

Arithmetic is lazy: operations build sympy expression trees (cheap), and the
canonical pair is computed on demand and cached.  This keeps long chains of
coefficient arithmetic in the operator modules fast while preserving exactness.

The deformation exponentials e^{-m/k} are adjoined as independent formal
symbols (``lam``, ``lamp``), never expanded as series; every identity in scope
is rational in them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from numbers import Number

import sympy as sp

__all__ = [
    "DegenerateInputError",
    "PoleError",
    "MissingSymbolError",
    "SymbolTable",
    "RationalFunction",
    "DEFAULT_SYMBOLS",
    "sym",
    "Rat",
]


class DegenerateInputError(ZeroDivisionError):
    """Raised when a denominator is the zero polynomial."""


class PoleError(ZeroDivisionError):
    """Raised when a numeric evaluation point lies on a pole."""


class MissingSymbolError(KeyError):
    """Raised when an evaluation assignment does not cover all symbols."""


# Role tags used by SymbolTable; "unit_interval" symbols (the e^{-m/k}
# exponentials) are sampled in (0, 1] by the numeric helpers.
ROLE_DEFORMATION = "deformation"
ROLE_UNIT_INTERVAL = "unit_interval"
ROLE_MASS = "mass"
ROLE_FREE = "free"


@dataclass
class SymbolTable:
    """Registry of named formal symbols with role tags."""

    roles: dict[str, str] = field(default_factory=dict)
    symbols: dict[str, sp.Symbol] = field(default_factory=dict)

    def add(self, name: str, role: str = ROLE_FREE) -> sp.Symbol:
        if name in self.symbols:
            if self.roles[name] != role:
                raise ValueError(f"symbol {name!r} already registered with role {self.roles[name]!r}")
            return self.symbols[name]
        symbol = sp.Symbol(name)
        self.symbols[name] = symbol
        self.roles[name] = role
        return symbol

    def __contains__(self, name: str) -> bool:
        return name in self.symbols

    def __getitem__(self, name: str) -> sp.Symbol:
        return self.symbols[name]

    def role(self, name: str) -> str:
        return self.roles[name]


#: Shared table holding the symbols every other module uses:
#: k   -- deformation parameter (mass units)
#: lam, lamp -- e^{-m/k} and e^{-m'/k}, dimensionless, valued in (0, 1]
#: mu, lam_mu -- reference mass unit and e^{-mu/k}, for the unnormalized
#:               central constant
DEFAULT_SYMBOLS = SymbolTable()
DEFAULT_SYMBOLS.add("k", ROLE_DEFORMATION)
DEFAULT_SYMBOLS.add("lam", ROLE_UNIT_INTERVAL)
DEFAULT_SYMBOLS.add("lamp", ROLE_UNIT_INTERVAL)
DEFAULT_SYMBOLS.add("mu", ROLE_MASS)
DEFAULT_SYMBOLS.add("lam_mu", ROLE_UNIT_INTERVAL)


def sym(name: str, role: str = ROLE_FREE) -> "RationalFunction":
    """Return the named symbol (registering it if new) as a RationalFunction."""
    if name not in DEFAULT_SYMBOLS:
        DEFAULT_SYMBOLS.add(name, role)
    return RationalFunction(DEFAULT_SYMBOLS[name])


def _grlex_lc(poly_expr: sp.Expr) -> sp.Expr:
    """Leading coefficient of an expanded polynomial under grlex order."""
    free = sorted(poly_expr.free_symbols, key=str)
    if not free:
        return poly_expr
    return sp.Poly(poly_expr, *free).LC(order="grlex")


def _canonical_pair(expr: sp.Expr) -> tuple[sp.Expr, sp.Expr]:
    """Split into coprime (num, den), den grlex-monic, both expanded."""
    if expr.is_number:
        return sp.expand(expr), sp.Integer(1)
    expr = sp.cancel(sp.together(expr))
    num, den = sp.fraction(expr)
    num = sp.expand(num)
    den = sp.expand(den)
    if den.is_zero:
        raise DegenerateInputError("zero denominator")
    lc = _grlex_lc(den)
    if lc != 1:
        num = sp.expand(sp.cancel(num / lc))
        den = sp.expand(sp.cancel(den / lc))
    return num, den


class RationalFunction:
    """A multivariate rational function over Q(i), canonicalized on demand.

    Immutable from the caller's point of view (the only mutation is the
    internal canonical-pair cache), so instances are safe to share between
    threads.
    """

    __slots__ = ("_expr", "_pair")

    def __init__(self, expr):
        if isinstance(expr, RationalFunction):
            self._expr = expr._expr
            self._pair = expr._pair
            return
        expr = sp.sympify(expr)
        self._expr = expr
        self._pair = (expr, sp.Integer(1)) if _is_simple_number(expr) else None

    @classmethod
    def _lazy(cls, expr: sp.Expr) -> "RationalFunction":
        out = object.__new__(cls)
        out._expr = expr
        out._pair = (expr, sp.Integer(1)) if _is_simple_number(expr) else None
        return out

    # -- canonical form ------------------------------------------------------

    def _canonical(self) -> tuple[sp.Expr, sp.Expr]:
        if self._pair is None:
            self._pair = _canonical_pair(self._expr)
            self._expr = self._pair[0] / self._pair[1]
        return self._pair

    @property
    def num(self) -> sp.Expr:
        return self._canonical()[0]

    @property
    def den(self) -> sp.Expr:
        return self._canonical()[1]

    def normalize(self) -> "RationalFunction":
        """Return self with the canonical pair computed (idempotent)."""
        self._canonical()
        return self

    @property
    def expr(self) -> sp.Expr:
        num, den = self._canonical()
        return num / den

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero is True

    @property
    def is_one(self) -> bool:
        num, den = self._canonical()
        return num == den

    def free_symbols(self) -> set[sp.Symbol]:
        return set(self._expr.free_symbols)

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _as_expr(other) -> sp.Expr:
        if isinstance(other, RationalFunction):
            return other._expr
        return sp.sympify(other)

    def __add__(self, other) -> "RationalFunction":
        return RationalFunction._lazy(self._expr + self._as_expr(other))

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._lazy(-self._expr)

    def __sub__(self, other) -> "RationalFunction":
        return RationalFunction._lazy(self._expr - self._as_expr(other))

    def __rsub__(self, other) -> "RationalFunction":
        return RationalFunction._lazy(self._as_expr(other) - self._expr)

    def __mul__(self, other) -> "RationalFunction":
        return RationalFunction._lazy(self._expr * self._as_expr(other))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        o = other if isinstance(other, RationalFunction) else RationalFunction(other)
        if o.is_zero:
            raise DegenerateInputError("division by the zero polynomial")
        return RationalFunction._lazy(self._expr / o._expr)

    def __rtruediv__(self, other) -> "RationalFunction":
        if self.is_zero:
            raise DegenerateInputError("division by the zero polynomial")
        return RationalFunction._lazy(self._as_expr(other) / self._expr)

    def __pow__(self, n: int) -> "RationalFunction":
        if not isinstance(n, int):
            raise TypeError("only integer powers are supported")
        if n < 0 and self.is_zero:
            raise DegenerateInputError("negative power of zero")
        return RationalFunction._lazy(self._expr ** n)

    # -- comparison / hashing --------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Number)) or isinstance(other, sp.Expr):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())

    def __repr__(self) -> str:
        return f"RationalFunction({self._expr})"

    # -- evaluation ------------------------------------------------------------

    def evaluate(self, assignment: dict) -> complex | float:
        """Substitute numbers for all symbols and divide in double precision.

        ``assignment`` maps symbol names (or sympy Symbols) to numbers.  A
        vanishing denominator raises PoleError; an uncovered symbol raises
        MissingSymbolError.
        """
        subs = {}
        for key, value in assignment.items():
            subs[sp.Symbol(key) if isinstance(key, str) else key] = value
        num, den = self._canonical()
        missing = (set(num.free_symbols) | set(den.free_symbols)) - set(subs)
        if missing:
            raise MissingSymbolError(f"assignment missing symbols: {sorted(map(str, missing))}")
        den_val = complex(den.subs(subs))
        if abs(den_val) == 0.0:
            raise PoleError(f"denominator vanishes at {assignment}")
        num_val = complex(num.subs(subs))
        value = num_val / den_val
        if value.imag == 0.0:
            return value.real
        return value


def _is_simple_number(expr: sp.Expr) -> bool:
    """True for values already in canonical shape: exact numbers over Q(i)."""
    if expr.is_Rational:
        return True
    if expr is sp.I:
        return True
    if expr.is_Mul and len(expr.args) == 2 and expr.args[1] is sp.I and expr.args[0].is_Rational:
        return True
    return False


def Rat(expr) -> RationalFunction:
    """Shorthand constructor used throughout the package."""
    return RationalFunction(expr)

"""Finite Galilei transformations acting on sampled momentum-space wavepackets.

The classical Galilei group element (tau, a, v, R) multiplies by

    tau'' = tau + tau'      a'' = R a' + v tau' + a
    v''   = R v' + v        R''  = R R'

and acts projectively on a momentum wavefunction (spin 0) by

    psi(p) -> exp(i(-p^2 tau / (2 m_f) + p . a)) psi(R^{-1} p - m_f v)

The composition of two such actions differs from the action of the product by
a constant phase (the 2-cocycle); ``cocycle_phase`` extracts it numerically
and checks that the pointwise ratio really is grid-constant.  The closed form
exp(i m_f (v^2 tau' / 2 + v . R a')) is validated against this extraction in
the tests, never assumed.
"""

from __future__ import annotations

import cmath
import csv
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.ndimage import map_coordinates

__all__ = [
    "GroupElement",
    "GridWavefunction",
    "OutOfGridError",
    "ProjectivityError",
    "galilei_multiply",
    "act",
    "cocycle_phase",
    "cocycle_angle",
    "expected_cocycle_angle",
    "angle_difference",
    "gaussian_packet",
    "axis_aligned_rotations",
    "random_in_grid_element",
    "random_in_grid_tuple",
    "write_grid_csv",
]


class OutOfGridError(ValueError):
    """Raised when a boost would shift the wavepacket outside the grid."""


class ProjectivityError(RuntimeError):
    """Raised when the composition ratio is not constant across the grid."""


def _check_rotation(R: np.ndarray, tol: float = 1e-12) -> None:
    R = np.asarray(R, dtype=float)
    if R.shape != (3, 3):
        raise ValueError("rotation must be a 3x3 matrix")
    if np.abs(R.T @ R - np.eye(3)).max() > tol:
        raise ValueError("rotation is not orthogonal")
    if abs(np.linalg.det(R) - 1.0) > 1e-10:
        raise ValueError("rotation must have determinant +1")


@dataclass(frozen=True)
class GroupElement:
    """One classical Galilei transformation (time shift, translation, boost, rotation)."""

    tau: float = 0.0
    a: np.ndarray = field(default_factory=lambda: np.zeros(3))
    v: np.ndarray = field(default_factory=lambda: np.zeros(3))
    R: np.ndarray = field(default_factory=lambda: np.eye(3))

    def __post_init__(self):
        object.__setattr__(self, "a", np.asarray(self.a, dtype=float))
        object.__setattr__(self, "v", np.asarray(self.v, dtype=float))
        object.__setattr__(self, "R", np.asarray(self.R, dtype=float))
        _check_rotation(self.R)

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls()

    def inverse(self) -> "GroupElement":
        Rinv = self.R.T
        return GroupElement(
            tau=-self.tau,
            a=-Rinv @ (self.a - self.v * self.tau),
            v=-Rinv @ self.v,
            R=Rinv,
        )


def galilei_multiply(g: GroupElement, gp: GroupElement) -> GroupElement:
    """Group product g * g'."""
    return GroupElement(
        tau=g.tau + gp.tau,
        a=g.R @ gp.a + g.v * gp.tau + g.a,
        v=g.R @ gp.v + g.v,
        R=g.R @ gp.R,
    )


@dataclass
class GridWavefunction:
    """Complex samples on a regular centered 3-D momentum grid."""

    values: np.ndarray         # shape (N, N, N), complex
    p_max: float
    m_f: float

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.ndim != 3 or len(set(self.values.shape)) != 1:
            raise ValueError("values must be a cubic 3-D array")

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def spacing(self) -> float:
        return 2.0 * self.p_max / self.n

    def axis(self) -> np.ndarray:
        # cell-centered grid, uniform spacing, no duplicated endpoint
        return -self.p_max + (np.arange(self.n) + 0.5) * self.spacing

    def mesh(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        ax = self.axis()
        return np.meshgrid(ax, ax, ax, indexing="ij")

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2) * self.spacing ** 3))


def gaussian_packet(n: int = 32, p_max: float = 8.0, m_f: float = 1.0,
                    center=(0.0, 0.0, 0.0), width: float = 1.0) -> GridWavefunction:
    """A unit-width Gaussian test packet, the default acceptance workload."""
    psi = GridWavefunction(np.zeros((n, n, n), dtype=complex), p_max, m_f)
    px, py, pz = psi.mesh()
    c = np.asarray(center, dtype=float)
    r2 = (px - c[0]) ** 2 + (py - c[1]) ** 2 + (pz - c[2]) ** 2
    psi.values = np.exp(-r2 / (2.0 * width ** 2)).astype(complex)
    return psi


def _interpolate(values: np.ndarray, coords: list[np.ndarray], order: int = 1) -> np.ndarray:
    real = map_coordinates(values.real, coords, order=order, mode="constant", cval=0.0)
    imag = map_coordinates(values.imag, coords, order=order, mode="constant", cval=0.0)
    return real + 1j * imag


def act(g: GroupElement, psi: GridWavefunction, in_grid_guard: bool = True,
        order: int = 1) -> GridWavefunction:
    """Projective action of g on psi (spin 0).

    Phase multiplication is exact pointwise; the argument shift/rotation uses
    trilinear interpolation (``order`` selects the spline degree for callers
    needing generic rotations at higher accuracy).  Boost shifts larger than
    p_max/4 are rejected to keep the packet on the grid.
    """
    shift = psi.m_f * np.linalg.norm(g.v)
    if in_grid_guard and shift > 0.25 * psi.p_max:
        raise OutOfGridError(f"boost shift {shift:.3g} exceeds p_max/4 = {psi.p_max / 4:.3g}")
    px, py, pz = psi.mesh()
    phase = np.exp(1j * (-(px ** 2 + py ** 2 + pz ** 2) * g.tau / (2.0 * psi.m_f)
                         + px * g.a[0] + py * g.a[1] + pz * g.a[2]))
    # argument: R^{-1}(p - m_f v) -- the grouping that composes with the
    # group law; converted to fractional grid indices below
    Rinv = g.R.T
    sx = px - psi.m_f * g.v[0]
    sy = py - psi.m_f * g.v[1]
    sz = pz - psi.m_f * g.v[2]
    qx = Rinv[0, 0] * sx + Rinv[0, 1] * sy + Rinv[0, 2] * sz
    qy = Rinv[1, 0] * sx + Rinv[1, 1] * sy + Rinv[1, 2] * sz
    qz = Rinv[2, 0] * sx + Rinv[2, 1] * sy + Rinv[2, 2] * sz
    h = psi.spacing
    coords = [(qx + psi.p_max) / h - 0.5, (qy + psi.p_max) / h - 0.5, (qz + psi.p_max) / h - 0.5]
    moved = _interpolate(psi.values, coords, order=order)
    return GridWavefunction(phase * moved, psi.p_max, psi.m_f)


def cocycle_phase(g: GroupElement, gp: GroupElement, psi: GridWavefunction,
                  amplitude_cut: float = 0.05, spread_tol: float = 1e-6) -> complex:
    """Extract the projective phase of the pair (g, g').

    Computes act(g) act(g') psi and act(g g') psi, masks small-amplitude
    points, and demands the pointwise ratio be constant across the grid
    (max deviation from its mean <= spread_tol); returns the mean phase.
    """
    lhs = act(g, act(gp, psi)).values
    rhs = act(galilei_multiply(g, gp), psi).values
    mask = np.abs(rhs) >= amplitude_cut * np.abs(rhs).max()
    if not mask.any():
        raise ValueError("wavefunction vanishes on the reference region")
    ratio = lhs[mask] / rhs[mask]
    mean = ratio.mean()
    spread = float(np.abs(ratio - mean).max())
    if spread > spread_tol:
        raise ProjectivityError(
            f"composition ratio varies across the grid (spread {spread:.3e})"
        )
    return complex(mean / abs(mean))


def cocycle_angle(g: GroupElement, gp: GroupElement, psi: GridWavefunction, **kwargs) -> float:
    """The extracted 2-cocycle exponent omega(g, g') in [-pi, pi).

    Defined through act(g) act(g') = exp(-i omega) act(g g'), matching the
    e^{-i m (...)} grouplike composition factor of the central element, so the
    extracted value is directly comparable with expected_cocycle_angle.
    """
    ratio = cocycle_phase(g, gp, psi, **kwargs)
    return -cmath.phase(ratio)


def expected_cocycle_angle(g: GroupElement, gp: GroupElement, m_f: float) -> float:
    """The standard Galilei 2-cocycle m_f (v^2 tau' / 2 + v . R a')."""
    return m_f * (0.5 * float(g.v @ g.v) * gp.tau + float(g.v @ (g.R @ gp.a)))


def angle_difference(a: float, b: float) -> float:
    """|a - b| reduced modulo 2 pi into [0, pi]."""
    d = (a - b) % (2.0 * math.pi)
    return min(d, 2.0 * math.pi - d)


def axis_aligned_rotations() -> list[np.ndarray]:
    """All 24 proper rotations of the cubic grid (exact under interpolation)."""
    mats = []
    for perm in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
        for sx in (1, -1):
            for sy in (1, -1):
                for sz in (1, -1):
                    R = np.zeros((3, 3))
                    for row, col in enumerate(perm):
                        R[row, col] = (sx, sy, sz)[row]
                    if abs(np.linalg.det(R) - 1.0) < 1e-12:
                        mats.append(R)
    return mats


def random_in_grid_element(rng: np.random.Generator, psi: GridWavefunction,
                           rotations: bool = True, max_cells: int = 2) -> GroupElement:
    """A random element whose action on psi is interpolation-exact.

    Time shifts and translations are continuous (their action is phase-only);
    boost shifts are snapped to whole grid cells (at most ``max_cells`` per
    axis) and rotations drawn from the axis-aligned set, so argument moves
    land on sample points.
    """
    tau = float(rng.uniform(-2.0, 2.0))
    a = rng.uniform(-2.0, 2.0, size=3)
    cells = rng.integers(-max_cells, max_cells + 1, size=3)
    v = cells * psi.spacing / psi.m_f
    R = np.eye(3)
    if rotations:
        mats = axis_aligned_rotations()
        R = mats[int(rng.integers(len(mats)))]
    return GroupElement(tau=tau, a=a, v=v, R=R)


def random_in_grid_tuple(rng: np.random.Generator, psi: GridWavefunction, count: int,
                         rotations: bool = True, max_cells: int = 2,
                         max_tries: int = 1000) -> tuple[GroupElement, ...]:
    """``count`` random in-grid elements whose partial products also stay in grid.

    Rejection-samples until every product of a contiguous subsequence keeps its
    boost shift within the p_max/4 guard, so cocycle extraction on the tuple
    never leaves the grid.
    """
    bound = 0.25 * psi.p_max
    for _ in range(max_tries):
        elements = tuple(
            random_in_grid_element(rng, psi, rotations=rotations, max_cells=max_cells)
            for _ in range(count)
        )
        ok = True
        for i in range(count):
            prod = elements[i]
            if psi.m_f * np.linalg.norm(prod.v) > bound:
                ok = False
                break
            for j in range(i + 1, count):
                prod = galilei_multiply(prod, elements[j])
                if psi.m_f * np.linalg.norm(prod.v) > bound:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return elements
    raise OutOfGridError(f"no in-grid {count}-tuple found in {max_tries} tries")


def write_grid_csv(psi: GridWavefunction, path) -> None:
    """Dump grid samples as (i, j, k, re, im) rows for external inspection."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["i", "j", "k", "re", "im"])
        n = psi.n
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    val = psi.values[i, j, k]
                    writer.writerow([i, j, k, repr(float(val.real)), repr(float(val.imag))])

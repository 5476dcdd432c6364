"""Tests for the numeric projective Galilei action and cocycle extraction."""

import csv
import math

import numpy as np
import pytest

from kgalilei.gridrep import (
    GridWavefunction,
    GroupElement,
    OutOfGridError,
    act,
    angle_difference,
    axis_aligned_rotations,
    cocycle_angle,
    cocycle_phase,
    expected_cocycle_angle,
    galilei_multiply,
    gaussian_packet,
    random_in_grid_element,
    random_in_grid_tuple,
    write_grid_csv,
)


def random_element(rng):
    # generic (not grid-snapped) element with a proper random rotation
    from scipy.spatial.transform import Rotation
    return GroupElement(
        tau=rng.uniform(-1, 1),
        a=rng.uniform(-1, 1, size=3),
        v=rng.uniform(-0.5, 0.5, size=3),
        R=Rotation.random(random_state=int(rng.integers(10 ** 6))).as_matrix(),
    )


def test_group_law_associative():
    rng = np.random.default_rng(0)
    for _ in range(20):
        g1, g2, g3 = (random_element(rng) for _ in range(3))
        a = galilei_multiply(galilei_multiply(g1, g2), g3)
        b = galilei_multiply(g1, galilei_multiply(g2, g3))
        assert abs(a.tau - b.tau) <= 1e-12
        assert np.abs(a.a - b.a).max() <= 1e-12
        assert np.abs(a.v - b.v).max() <= 1e-12
        assert np.abs(a.R - b.R).max() <= 1e-12


def test_inverse():
    rng = np.random.default_rng(1)
    for _ in range(20):
        g = random_element(rng)
        e = galilei_multiply(g, g.inverse())
        assert abs(e.tau) <= 1e-12
        assert np.abs(e.a).max() <= 1e-12
        assert np.abs(e.v).max() <= 1e-12
        assert np.abs(e.R - np.eye(3)).max() <= 1e-12


def test_rotation_validation():
    with pytest.raises(ValueError):
        GroupElement(R=np.diag([1.0, 1.0, -1.0]))  # improper
    with pytest.raises(ValueError):
        GroupElement(R=2.0 * np.eye(3))


def test_identity_acts_trivially():
    psi = gaussian_packet(n=16)
    out = act(GroupElement.identity(), psi)
    assert np.abs(out.values - psi.values).max() <= 1e-12


def test_translation_is_pure_phase():
    psi = gaussian_packet(n=16)
    g = GroupElement(a=np.array([0.7, -0.2, 0.1]))
    out = act(g, psi)
    assert np.abs(np.abs(out.values) - np.abs(psi.values)).max() <= 1e-12
    px, py, pz = psi.mesh()
    phase = np.exp(1j * (px * 0.7 - py * 0.2 + pz * 0.1))
    assert np.abs(out.values - phase * psi.values).max() <= 1e-12


def test_boost_moves_packet():
    # psi(p) -> psi(p - m_f v): the packet's center moves to p0 + m_f v
    psi = gaussian_packet(n=32, m_f=2.0)
    v = np.array([psi.spacing, 0.0, 0.0])  # one grid cell, exact under interpolation
    out = act(GroupElement(v=v), psi)
    px, _, _ = psi.mesh()
    weights = np.abs(out.values) ** 2
    center = float((px * weights).sum() / weights.sum())
    assert abs(center - 2.0 * psi.spacing) <= 1e-10


def test_axis_aligned_rotation_exact():
    psi = gaussian_packet(n=16, center=(1.25, 0.25, -0.75))
    mats = axis_aligned_rotations()
    assert len(mats) == 24
    for R in mats[:6]:
        out = act(GroupElement(R=R), psi)
        assert abs(out.norm() - psi.norm()) <= 1e-12


def test_generic_rotation_approximate():
    # spline interpolation at order 3 keeps a smooth packet to ~1e-4
    psi = gaussian_packet(n=32, width=2.0)
    rng = np.random.default_rng(3)
    g = random_element(rng)
    g = GroupElement(tau=0.0, a=np.zeros(3), v=np.zeros(3), R=g.R)
    out = act(g, psi, order=3)
    assert abs(out.norm() - psi.norm()) / psi.norm() <= 1e-4


def test_out_of_grid_guard():
    psi = gaussian_packet(n=16, p_max=8.0)
    with pytest.raises(OutOfGridError):
        act(GroupElement(v=np.array([3.0, 0.0, 0.0])), psi)
    # the guard can be disabled explicitly
    act(GroupElement(v=np.array([3.0, 0.0, 0.0])), psi, in_grid_guard=False)


def test_cocycle_constant_and_matches_closed_form():
    psi = gaussian_packet()
    rng = np.random.default_rng(4)
    for _ in range(10):
        g, gp = random_in_grid_tuple(rng, psi, 2)
        ratio = cocycle_phase(g, gp, psi)
        assert abs(abs(ratio) - 1.0) <= 1e-12
        angle = cocycle_angle(g, gp, psi)
        expected = expected_cocycle_angle(g, gp, psi.m_f)
        assert angle_difference(angle, expected) <= 1e-8


def test_cocycle_identity_on_triples():
    psi = gaussian_packet()
    rng = np.random.default_rng(5)
    for _ in range(5):
        g1, g2, g3 = random_in_grid_tuple(rng, psi, 3, max_cells=1)
        lhs = (cocycle_angle(g1, g2, psi)
               + cocycle_angle(galilei_multiply(g1, g2), g3, psi))
        rhs = (cocycle_angle(g2, g3, psi)
               + cocycle_angle(g1, galilei_multiply(g2, g3), psi))
        assert angle_difference(lhs, rhs) <= 1e-7


def test_cocycle_trivial_for_rotations_and_translations():
    psi = gaussian_packet()
    g = GroupElement(tau=0.5, a=np.array([0.3, 0.1, -0.2]))
    gp = GroupElement(R=axis_aligned_rotations()[3])
    assert abs(cocycle_angle(g, gp, psi)) <= 1e-10
    assert abs(expected_cocycle_angle(g, gp, psi.m_f)) <= 1e-15


def test_random_in_grid_elements_stay_in_grid():
    psi = gaussian_packet()
    rng = np.random.default_rng(6)
    bound = 0.25 * psi.p_max
    for _ in range(50):
        g = random_in_grid_element(rng, psi)
        assert psi.m_f * np.linalg.norm(g.v) <= bound + 1e-12
        act(g, psi)  # must not raise


def test_angle_difference_wraps():
    assert angle_difference(math.pi - 0.01, -math.pi + 0.01) <= 0.02 + 1e-12
    assert abs(angle_difference(0.0, 1.0) - 1.0) <= 1e-15


def test_grid_csv_dump(tmp_path):
    psi = gaussian_packet(n=4)
    path = tmp_path / "grid.csv"
    write_grid_csv(psi, path)
    with open(path, newline="") as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["i", "j", "k", "re", "im"]
    assert len(rows) == 1 + 4 ** 3
    i, j, k, re, im = rows[1]
    assert complex(float(re), float(im)) == psi.values[int(i), int(j), int(k)]

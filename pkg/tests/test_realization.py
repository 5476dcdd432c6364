"""Tests for the one- and two-particle operator realizations."""

import math

import pytest
import sympy as sp

from kgalilei.hopf import GalileiHopf
from kgalilei.realization import (
    CANONICAL_PAIRS,
    OneParticleRealization,
    TwoParticleSystem,
    canonical_residuals,
    compose_system,
    default_system,
    verify_one_particle,
)
from kgalilei.scalars import Rat, sym
from kgalilei.weyl import momentum, position, scalar

I = Rat(sp.I)


@pytest.fixture(scope="module")
def system():
    return default_system()


def test_default_mass_satisfies_constraint():
    r = OneParticleRealization(1, sym("lam"))
    k, lam = sym("k"), sym("lam")
    assert (r.m_f - (k / 2) * (1 - lam ** 2)).is_zero


def test_generator_images():
    r = OneParticleRealization(1, sym("lam"))
    assert r.realize("P2") == momentum(1, 2)
    assert r.realize("K3") == position(1, 3).scale(r.m_f)
    assert r.realize("E") == scalar(sym("lam"))
    # J_3 = x_1 p_2 - x_2 p_1
    expected = position(1, 1) * momentum(1, 2) - position(1, 2) * momentum(1, 1)
    assert r.realize("J3") == expected


def test_one_particle_brackets_all_vanish():
    r = OneParticleRealization(1, sym("lam"))
    for name, residual in verify_one_particle(r):
        assert residual.is_zero, name


def test_free_mass_breaks_constraint_exactly():
    # with m_f free, the [K, P] residual is i (m_f - (k/2)(1 - lam^2))
    mf, k, lam = sym("mf"), sym("k"), sym("lam")
    r = OneParticleRealization(1, lam, m_f=mf)
    residuals = dict(verify_one_particle(r))
    expected = scalar(I * (mf - (k / 2) * (1 - lam ** 2)))
    for i in (1, 2, 3):
        assert residuals[f"[K{i},P{i}]"] == expected
    assert not residuals["[K1,P1]"].is_zero


def test_composed_mass_formula(system):
    k, lam, lamp = sym("k"), sym("lam"), sym("lamp")
    assert (system.M_f - (k / 2) * (1 - lam ** 2 * lamp ** 2)).is_zero


def test_total_momentum_twist(system):
    lamp = sym("lamp")
    for i in (1, 2, 3):
        expected = momentum(1, i).scale(lamp) + momentum(2, i)
        assert system.total(f"P{i}") == expected


def test_composed_brackets_sample(system):
    # spot-check the structurally loaded pairs; the full scan runs in acceptance
    alg = system.algebra
    for g, h in (("K1", "P1"), ("K1", "H"), ("J1", "J2"), ("K1", "P2"), ("J3", "P1")):
        lhs = system.total(g).commutator(system.total(h))
        rhs = system.realize_total_uea(alg.bracket(g, h))
        assert (lhs - rhs).is_zero, (g, h)


def test_canonical_pairs_direct(system):
    residuals = canonical_residuals(system)
    for key, res in residuals.items():
        assert res.is_zero, key


def test_canonical_pairs_tilde(system):
    residuals = canonical_residuals(system, tilde=True)
    for key, res in residuals.items():
        assert res.is_zero, key


def test_expected_canonical_pairs():
    assert CANONICAL_PAIRS == {("R", "P"), ("rho", "Pi")}


def test_kinetic_split(system):
    assert system.kinetic_split().is_zero


def test_kinetic_split_at_infinite_partner_mass():
    # lam' = 0 puts particle 2 at the bound m'_f = k/2 and forces v_f = m_f
    alg = GalileiHopf()
    r1 = OneParticleRealization(1, sym("lam"), algebra=alg)
    r2 = OneParticleRealization(2, Rat(0), algebra=alg)
    sys2 = compose_system(r1, r2)
    assert (sys2.v_f - r1.m_f).is_zero
    assert sys2.kinetic_split().is_zero


def test_classical_limit_of_relative_variables(system):
    # at lam = lam' = 1 the variables reduce to the undeformed ones
    point = {"k": 1.0, "lam": 1.0, "lamp": 1.0}
    mf = mpf = 0.0  # m_f = (k/2)(1 - lam^2) = 0 is degenerate; use floats below
    point = {"k": 10.0, "lam": math.exp(-0.3 / 10.0), "lamp": math.exp(-0.4 / 10.0)}
    m1 = 5.0 * (1.0 - point["lam"] ** 2)
    m2 = 5.0 * (1.0 - point["lamp"] ** 2)
    variables = system.relative_variables()
    P1 = variables["P"][0].substitute(point)
    # the coefficient of p_{1,1} in P is lam', close to 1 for weak deformation
    mono = ((0,) * 6, (1, 0, 0, 0, 0, 0))
    assert abs(P1.terms[mono] - 1.0) <= 0.05
    Pi1 = variables["Pi"][0].substitute(point)
    classical = m2 / (m1 + m2)
    assert abs(Pi1.terms[mono] - classical) <= 0.05


def test_slot_and_algebra_validation():
    alg = GalileiHopf()
    r1 = OneParticleRealization(1, sym("lam"), algebra=alg)
    with pytest.raises(ValueError):
        TwoParticleSystem(r1, OneParticleRealization(1, sym("lamp"), algebra=alg))
    with pytest.raises(ValueError):
        TwoParticleSystem(r1, OneParticleRealization(2, sym("lamp")))
    with pytest.raises(ValueError):
        OneParticleRealization(3, sym("lam"))


def test_spin_is_metadata_only():
    r = OneParticleRealization(1, sym("lam"), spin=1)
    assert r.spin == 1
    assert r.realize("J1") == OneParticleRealization(1, sym("lam")).realize("J1")

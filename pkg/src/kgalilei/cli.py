"""Command-line front end.

Subcommands:

    verify hopf                         all exact Hopf-algebra residual suites
    verify realization --exact          one/two-particle operator identities
    verify equivalence --mf --mfp --k   theta* search, (US)^2, projectors
    mass compose|convert|reduced --k    non-additive mass arithmetic
    hydrogen spectrum --mf --mfp --k --nmax [--solver closed|radial|both]
    cocycle demo [--seed]               projective-phase extraction demo

Every subcommand emits a RunReport (text by default, ``--format json|csv``,
``--out <path>``).  Exit status: 0 if no check failed, 1 on a failed check
(with the failing residual printed), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import math
import sys
import time

import numpy as np

from . import equivalence, gridrep, hopf, hydrogen, masses, realization
from .report import (RunReport, CheckResult, STATUS_EXACT, STATUS_PASS,
                     STATUS_FAIL, format_number)
from .scalars import sym

__all__ = ["main", "run"]

#: Reference numeric point used to size symbolic (exact-check) residuals.
_REFERENCE_POINT = {
    "k": 1.0,
    "lam": math.exp(-0.3),
    "lamp": math.exp(-0.4),
    "m1": 0.3,
    "m2": 0.4,
    "mf": 0.35,
}


def _weyl_residual_magnitude(expr) -> float:
    """Max coefficient magnitude of a symbolic Weyl expression at the reference point."""
    worst = 0.0
    for coeff in expr.terms.values():
        worst = max(worst, abs(complex(coeff.evaluate(_REFERENCE_POINT))))
    return worst


def _exact_suite_check(name: str, residuals) -> CheckResult:
    """Summarize a family of symbolic residuals as one exact check."""
    worst = 0.0
    for res in residuals:
        if not res.is_zero:
            worst = max(worst, _weyl_residual_magnitude(res))
    if worst == 0.0:
        return CheckResult(name, STATUS_EXACT, 0.0)
    return CheckResult(name, STATUS_FAIL, worst)


# ---------------------------------------------------------------------------
# verify hopf


def _cmd_verify_hopf(args) -> RunReport:
    report = RunReport("verify hopf", {})
    alg = hopf.GalileiHopf()
    names = hopf.GENERATOR_NAMES

    failures = 0
    for g in names:
        for h in names:
            for f in names:
                if not alg.check_jacobi(g, h, f).is_zero:
                    failures += 1
    report.add(CheckResult("jacobi", STATUS_EXACT if not failures else STATUS_FAIL,
                           float(failures)))

    failures = 0
    for g in names:
        for h in names:
            if not alg.check_hom(g, h).is_zero:
                failures += 1
    report.add(CheckResult("coproduct-homomorphism",
                           STATUS_EXACT if not failures else STATUS_FAIL, float(failures)))

    failures = sum(0 if alg.check_coassoc(g).is_zero else 1 for g in names)
    report.add(CheckResult("coassociativity",
                           STATUS_EXACT if not failures else STATUS_FAIL, float(failures)))

    failures = sum(0 if alg.check_hopf_axiom(g).is_zero else 1 for g in names)
    report.add(CheckResult("hopf-axiom",
                           STATUS_EXACT if not failures else STATUS_FAIL, float(failures)))

    report.results["generators"] = len(names)
    return report


# ---------------------------------------------------------------------------
# verify realization


def _cmd_verify_realization(args) -> RunReport:
    report = RunReport("verify realization",
                       {"exact": bool(args.exact), "perturb": bool(args.perturb)})
    alg = hopf.GalileiHopf()
    if args.perturb:
        # intentionally break the constraint m_f = (k/2)(1 - lam^2)
        r1 = realization.OneParticleRealization(1, sym("lam"), m_f=sym("mf"), algebra=alg)
    else:
        r1 = realization.OneParticleRealization(1, sym("lam"), algebra=alg)
    residuals = [res for _, res in realization.verify_one_particle(r1)]
    report.add(_exact_suite_check("one-particle-brackets", residuals))

    if not args.perturb:
        system = realization.TwoParticleSystem(
            r1, realization.OneParticleRealization(2, sym("lamp"), algebra=alg))
        report.add(_exact_suite_check(
            "composed-brackets", [res for _, res in system.verify_composed()]))
        report.add(_exact_suite_check(
            "canonical-direct", realization.canonical_residuals(system).values()))
        report.add(_exact_suite_check(
            "canonical-tilde", realization.canonical_residuals(system, tilde=True).values()))
        report.add(_exact_suite_check("kinetic-split", [system.kinetic_split()]))
    return report


# ---------------------------------------------------------------------------
# verify equivalence


def _cmd_verify_equivalence(args) -> RunReport:
    m_f, mp_f, k = args.mf, args.mfp, args.k
    report = RunReport("verify equivalence", {"mf": m_f, "mfp": mp_f, "k": k})
    theta = equivalence.find_theta(m_f, mp_f, k)
    report.results["theta"] = theta.theta
    report.results["closed_form_match"] = theta.closed_form_match
    report.add(CheckResult.from_residual("theta-maps-all-variables", theta.residual, 1e-10))
    pairing_ok = theta.map.preserves_pairing(m_f, mp_f, tol=1e-10)
    report.add(CheckResult("pairing-preservation",
                           STATUS_PASS if pairing_ok else STATUS_FAIL,
                           0.0 if pairing_ok else 1.0))
    report.add(CheckResult.from_residual(
        "involution-(US)^2", equivalence.check_involution(m_f, k), 1e-10))

    grid = np.linspace(-2.0, 2.0, 21)
    plus = equivalence.symmetry_projector(+1, m_f, k)
    minus = equivalence.symmetry_projector(-1, m_f, k)
    f = lambda p, pp: np.exp(-(p - 0.5) ** 2 - (pp + 0.3) ** 2)
    fp, fm = plus(f), minus(f)
    idem = max(
        float(np.abs(plus.sample(plus(fp), grid) - plus.sample(fp, grid)).max()),
        float(np.abs(minus.sample(minus(fm), grid) - minus.sample(fm, grid)).max()),
    )
    report.add(CheckResult.from_residual("projector-idempotence", idem, 1e-8))
    comp = float(np.abs(plus.sample(fp, grid) + minus.sample(fm, grid)
                        - plus.sample(f, grid)).max())
    report.add(CheckResult.from_residual("projector-complementarity", comp, 1e-8))

    # US keeps the total variables and flips the relative ones (tilde set)
    theta_eq = equivalence.find_theta(m_f, m_f, k)
    us = theta_eq.map.matrix @ equivalence.exchange_map().matrix
    tilde = equivalence.variable_vectors(m_f, m_f, k)[1]
    flip = 0.0
    for name, sign in (("P", +1), ("R", +1), ("Pi", -1), ("rho", -1)):
        v = tilde[name].as_array()
        flip = max(flip, float(np.abs(us @ v - sign * v).max()))
    report.add(CheckResult.from_residual("us-reverses-relative-sign", flip, 1e-10))
    return report


# ---------------------------------------------------------------------------
# mass arithmetic


def _cmd_mass_compose(args) -> RunReport:
    k = args.k
    values = args.masses
    report = RunReport("mass compose", {"k": k, "masses": list(values)})
    total = masses.compose_many(values, k)
    report.results["M_f"] = float(total)
    algebra_values = []
    at_bound = any(math.isfinite(k) and m >= k / 2 for m in values)
    if not at_bound:
        algebra_values = [masses.to_algebra(m, k) for m in values]
        for idx, m in enumerate(algebra_values, start=1):
            report.results[f"m_algebra_{idx}"] = m
        report.results["M_algebra"] = masses.to_algebra(total, k)
        gap = abs(masses.to_algebra(total, k) - sum(algebra_values))
        report.add(CheckResult.from_residual("algebra-additivity", gap, 1e-12))
    else:
        report.results["note"] = "infinite-mass fixed point: no finite algebra coordinate"
        report.add(CheckResult.from_residual(
            "fixed-point", abs(total - k / 2) if math.isfinite(k) else 0.0, 1e-12))
    return report


def _cmd_mass_convert(args) -> RunReport:
    k = args.k
    report = RunReport("mass convert", {"k": k, "to": args.to, "masses": list(args.masses)})
    worst = 0.0
    for idx, m in enumerate(args.masses, start=1):
        if args.to == "physical":
            out = masses.to_physical(m, k)
            back = masses.to_algebra(out, k)
        else:
            out = masses.to_algebra(m, k)
            back = masses.to_physical(out, k)
        report.results[f"value_{idx}"] = out
        worst = max(worst, abs(back - m) / max(abs(m), 1.0))
    report.add(CheckResult.from_residual("round-trip", worst, 1e-12))
    return report


def _cmd_mass_reduced(args) -> RunReport:
    k = args.k
    m_f, mp_f = args.masses
    report = RunReport("mass reduced", {"k": k, "masses": [m_f, mp_f]})
    v_f = masses.reduced(m_f, mp_f, k)
    v = masses.classical_reduced(m_f, mp_f)
    report.results["v_f"] = v_f
    report.results["v_classical"] = v
    if math.isfinite(k):
        expected = v / (1.0 - 2.0 * v / k)
        report.results["first_order_coefficient"] = 2.0 * v / k
    else:
        expected = v
        report.results["first_order_coefficient"] = 0.0
    report.add(CheckResult.from_residual(
        "ratio-identity", abs(v_f - expected) / abs(expected), 1e-12))
    return report


# ---------------------------------------------------------------------------
# hydrogen spectrum


def _cmd_hydrogen_spectrum(args) -> RunReport:
    cfg = hydrogen.HydrogenConfig(m_f=args.mf, mp_f=args.mfp, k=args.k,
                                  n_max=args.nmax, l=args.l)
    report = RunReport("hydrogen spectrum",
                       {"mf": args.mf, "mfp": args.mfp, "k": args.k,
                        "nmax": args.nmax, "l": args.l, "solver": args.solver})
    report.results["v_f"] = cfg.v_f
    closed = hydrogen.bohr_levels(cfg) if args.solver in ("closed", "both") else None
    radial = hydrogen.radial_solve(cfg) if args.solver in ("radial", "both") else None
    rows = []
    for i in range(cfg.n_max - cfg.l):
        n = cfg.l + 1 + i
        e_closed = closed[n - 1] if closed is not None else None
        e_radial = radial[i] if radial is not None else None
        rel = (abs(e_radial - e_closed) / abs(e_closed)
               if closed is not None and radial is not None else None)
        rows.append([n, cfg.l, e_closed, e_radial, rel])
        report.results[f"E_{n}"] = e_radial if closed is None else e_closed
    report.results["rows"] = rows
    if closed is not None and radial is not None:
        worst = max(r[4] for r in rows)
        report.add(CheckResult.from_residual("radial-vs-closed", worst, 1e-6))
    else:
        report.add(CheckResult(f"{args.solver}-solver-completed", STATUS_PASS, 0.0))
    return report


def _spectrum_csv(report: RunReport) -> str:
    lines = ["n,l,E_closed,E_radial,rel_err"]
    for n, l, e_closed, e_radial, rel in report.results["rows"]:
        cells = [str(int(n)), str(int(l))]
        cells += ["" if v is None else format_number(v) for v in (e_closed, e_radial, rel)]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# cocycle demo


def _cmd_cocycle_demo(args) -> RunReport:
    report = RunReport("cocycle demo",
                       {"seed": args.seed, "pairs": args.pairs, "n": args.n})
    rng = np.random.default_rng(args.seed)
    psi = gridrep.gaussian_packet(n=args.n)
    worst_match = 0.0
    for _ in range(args.pairs):
        g, gp = gridrep.random_in_grid_tuple(rng, psi, 2)
        angle = gridrep.cocycle_angle(g, gp, psi)
        expected = gridrep.expected_cocycle_angle(g, gp, psi.m_f)
        worst_match = max(worst_match, gridrep.angle_difference(angle, expected))
    report.add(CheckResult.from_residual("cocycle-closed-form", worst_match, 1e-8))

    worst_identity = 0.0
    for _ in range(max(args.pairs // 3, 1)):
        g1, g2, g3 = gridrep.random_in_grid_tuple(rng, psi, 3, max_cells=1)
        lhs = (gridrep.cocycle_angle(g1, g2, psi)
               + gridrep.cocycle_angle(gridrep.galilei_multiply(g1, g2), g3, psi))
        rhs = (gridrep.cocycle_angle(g2, g3, psi)
               + gridrep.cocycle_angle(g1, gridrep.galilei_multiply(g2, g3), psi))
        worst_identity = max(worst_identity, gridrep.angle_difference(lhs, rhs))
    report.add(CheckResult.from_residual("cocycle-identity", worst_identity, 1e-7))
    report.results["worst_closed_form_mismatch"] = worst_match
    report.results["worst_identity_mismatch"] = worst_identity
    return report


# ---------------------------------------------------------------------------
# plumbing


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--out", default=None, help="write the report to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgalilei",
        description="Verification suites for the deformed Galilei group G_k.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    vsub = verify.add_subparsers(dest="suite", required=True)

    p = vsub.add_parser("hopf", help="exact Hopf-algebra residual suites")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_verify_hopf)

    p = vsub.add_parser("realization", help="operator-realization identities")
    p.add_argument("--exact", action="store_true",
                   help="run the symbolic (rational-backend) checks")
    p.add_argument("--perturb", action="store_true",
                   help="break the mass constraint on purpose (must exit 1)")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_verify_realization)

    p = vsub.add_parser("equivalence", help="theta*, (US)^2, projectors")
    p.add_argument("--mf", type=float, required=True)
    p.add_argument("--mfp", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_verify_equivalence)

    mass = sub.add_parser("mass", help="non-additive mass arithmetic")
    msub = mass.add_subparsers(dest="op", required=True)

    p = msub.add_parser("compose", help="compose physical masses")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("masses", type=float, nargs="+")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_mass_compose)

    p = msub.add_parser("convert", help="convert between mass coordinates")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--to", choices=("physical", "algebra"), default="physical")
    p.add_argument("masses", type=float, nargs="+")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_mass_convert)

    p = msub.add_parser("reduced", help="deformed reduced mass of a pair")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("masses", type=float, nargs=2)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_mass_reduced)

    hyd = sub.add_parser("hydrogen", help="deformed hydrogen spectrum")
    hsub = hyd.add_subparsers(dest="op", required=True)
    p = hsub.add_parser("spectrum")
    p.add_argument("--mf", type=float, required=True)
    p.add_argument("--mfp", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--solver", choices=("closed", "radial", "both"), default="both")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_hydrogen_spectrum)

    coc = sub.add_parser("cocycle", help="projective-phase extraction")
    csub = coc.add_subparsers(dest="op", required=True)
    p = csub.add_parser("demo")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pairs", type=int, default=10)
    p.add_argument("--n", type=int, default=32, help="grid points per axis")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_cocycle_demo)

    return parser


def _render(report: RunReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        if report.command == "hydrogen spectrum":
            return _spectrum_csv(report)
        return report.to_csv()
    return report.to_text()


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    report = args.handler(args)
    report.wall_ms = (time.perf_counter() - start) * 1000.0
    text = _render(report, args.format)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    for check in report.failed:
        print(f"FAIL {check.name}: residual = {format_number(check.residual)}",
              file=sys.stderr)
    return report.exit_code


def main() -> None:
    sys.exit(run())

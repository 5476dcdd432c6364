"""Exact verification toolkit for a deformed centrally extended Galilei group.

Modules:

    scalars      exact multivariate rational-function coefficients
    weyl         the Weyl (canonical) algebra with exact normal ordering
    hopf         the deformed Hopf algebra: brackets, coproduct, antipode
    masses       non-additive physical-mass arithmetic
    realization  one- and two-particle operator realizations
    equivalence  unitary equivalence of the two coproduct orderings
    hydrogen     the deformed hydrogen spectrum (closed form + radial solver)
    gridrep      numeric projective action and 2-cocycle extraction
    cli, report  command-line front end and machine-readable reports
"""

__version__ = "0.1.0"

__all__ = [
    "scalars",
    "weyl",
    "hopf",
    "masses",
    "realization",
    "equivalence",
    "hydrogen",
    "gridrep",
    "report",
    "cli",
]

"""Exact rational models for characteristic classes of fibrations with
fiberwise vector bundles.

Core layers, bottom to top: linalg (sparse exact elimination over Q),
gca (free graded-commutative algebras, derivations, cohomology),
presentations (generators/relations for subrings and quotients), dgla
(differential graded Lie algebras and their actions), cemodel
(Chevalley-Eilenberg relative models and characteristic cochains),
fibered (truncated-polynomial total rings, fiber integration, kappa
classes), tautrings (tautological-ring presentations and reports),
lpoly (Hirzebruch L-polynomials), presets/dsl/cli (ready-made pipelines,
the setup language, and the command-line tool), checks (named
verification suites).
"""

from .gca import (Cdga, Derivation, Element, FreeGCA, Generator,
                  cohomology, format_element)
from .fibered import FiberedModel, TotalElement
from .presets import cpn, even_sphere, odd_sphere
from .tautrings import KahlerRing, cp2_report, kappa_ring
from .dsl import DslError, parse_setup, pipeline_from_setup, print_setup
from .checks import SUITES, run_suite

__all__ = [
    "Cdga", "Derivation", "Element", "FreeGCA", "Generator",
    "cohomology", "format_element", "FiberedModel", "TotalElement",
    "cpn", "even_sphere", "odd_sphere", "KahlerRing", "cp2_report",
    "kappa_ring", "DslError", "parse_setup", "pipeline_from_setup",
    "print_setup", "SUITES", "run_suite",
]

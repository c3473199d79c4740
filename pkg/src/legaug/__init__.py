"""Augmentation categories of Legendrian links in plat position."""

from .augcat import MINUS, PLUS, AugCategory, HomBasis, HomElement, enumerate_augmentations
from .bordered import assemble, glue, sections
from .dga import Augmentation, Dga, check_dga, make_dga, twist
from .errors import LegaugError, VerificationError
from .mcopy import build_mcopy
from .ncpoly import ZZ, NcPoly, Ring, field
from .plat import PlatDiagram, classical_invariants, parse_plat, solve_maslov, trace_knot

__all__ = [
    "MINUS",
    "PLUS",
    "ZZ",
    "AugCategory",
    "Augmentation",
    "Dga",
    "HomBasis",
    "HomElement",
    "LegaugError",
    "NcPoly",
    "PlatDiagram",
    "Ring",
    "VerificationError",
    "assemble",
    "build_mcopy",
    "check_dga",
    "classical_invariants",
    "enumerate_augmentations",
    "field",
    "glue",
    "make_dga",
    "parse_plat",
    "sections",
    "solve_maslov",
    "trace_knot",
    "twist",
]

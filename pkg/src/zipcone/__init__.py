"""Exact weight cones for reductive groups with Frobenius action.

Given a root datum, a q-power Frobenius acting on it and a Levi type I,
this package computes the Griffiths-Schmid cone, the partial-Hasse-invariant
cone, the highest/lowest-weight cones, the X*_-(L) cone and Weil-restriction
inner bounds on the zip cone, detects Hasse-type contexts (where the zip
cone equals the partial-Hasse cone exactly) and classifies Hasse-type
Dynkin triples, all in exact rational arithmetic.
"""

from .cones import RationalCone, cone_from_generators, cone_from_inequalities
from .errors import ZipconeError
from .rootdata import (
    FrobeniusDatum,
    RootDatum,
    build_root_datum,
    pair,
    split_frobenius,
    validate_frobenius,
)
from .weyl import WeylElement, enumerate_parabolic, longest_element
from .zipcones import ZipContext, make_context, zip_report

__version__ = "0.1.0"

__all__ = [
    "FrobeniusDatum",
    "RationalCone",
    "RootDatum",
    "WeylElement",
    "ZipContext",
    "ZipconeError",
    "build_root_datum",
    "cone_from_generators",
    "cone_from_inequalities",
    "enumerate_parabolic",
    "longest_element",
    "make_context",
    "pair",
    "split_frobenius",
    "validate_frobenius",
    "zip_report",
    "__version__",
]

"""Exact dual-polynomial certificates for approximate degree.

Constructs, verifies, and searches for dual witnesses that certify lower
bounds on the epsilon-approximate degree of symmetric Boolean functions,
with every scalar an exact rational.
"""

from dualdeg.dual_or import make_certificate
from dualdeg.lp_degree import approx_degree, min_eps_for_degree, verify_certificate
from dualdeg.rational import Rat
from dualdeg.sympoly import (
    MultilinearPoly,
    SinglePoly,
    SymBoolFn,
    or_function,
    parity_function,
    threshold_function,
)

__version__ = "0.1.0"

__all__ = [
    "Rat",
    "SymBoolFn",
    "SinglePoly",
    "MultilinearPoly",
    "or_function",
    "parity_function",
    "threshold_function",
    "make_certificate",
    "approx_degree",
    "min_eps_for_degree",
    "verify_certificate",
    "__version__",
]

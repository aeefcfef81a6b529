"""Exact verification toolkit for total positivity and oscillatory elements.

The combinatorial layer (`cartan`, `weyl`, `hecke`) covers every simple
Dynkin type; the exact-rational matrix layer (`tpmatrix`) realizes the
criteria for SL(n).  `suites` bundles the seeded verification runs, and
`service`/`cli` expose everything over HTTP and the command line.
"""

from .cartan import CartanData, DynkinType, cartan_data, cartan_data_from_string
from .hecke import ExponentReport, min_tp_exponent, oscillatory_exponent
from .tpmatrix import (
    FactorizationInput,
    RationalMatrix,
    bruhat_label,
    eval_factorization,
    is_oscillatory,
    is_totally_nonnegative,
    is_totally_positive,
)
from .weyl import WeylElement

__version__ = "0.1.0"

__all__ = [
    "CartanData",
    "DynkinType",
    "ExponentReport",
    "FactorizationInput",
    "RationalMatrix",
    "WeylElement",
    "bruhat_label",
    "cartan_data",
    "cartan_data_from_string",
    "eval_factorization",
    "is_oscillatory",
    "is_totally_nonnegative",
    "is_totally_positive",
    "min_tp_exponent",
    "oscillatory_exponent",
]

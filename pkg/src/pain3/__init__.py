"""Painleve III3 tau function: short- and long-distance expansions and the connection constant."""

from .connection import ChiResult, chi_formula, chi_numeric
from .errors import (
    ConvergenceError,
    DivergentRhoError,
    DomainError,
    Pain3Error,
    PoleError,
    SingularMonodromyError,
    TableExhaustedError,
    WindowTooWildError,
    ZeroOfTauError,
)
from .monodromy import MonodromyPoint, build_matrices, generating_W
from .nekrasov import BlockParams, B_series, F_block, SeriesValue, instanton_coefficients
from .partitions import Partition, enumerate_partitions
from .specfun import G_hat, barnes_G, dilog, log_barnes_G
from .tau_asymptotics import G_irregular, LongKernelParams, tau_long_unnormalized, u_long
from .tau_series import TruncationSpec, tau_short, u_from_tau, zeta

__version__ = "0.1.0"

__all__ = [
    "B_series",
    "BlockParams",
    "ChiResult",
    "ConvergenceError",
    "DivergentRhoError",
    "DomainError",
    "F_block",
    "G_hat",
    "G_irregular",
    "LongKernelParams",
    "MonodromyPoint",
    "Pain3Error",
    "Partition",
    "PoleError",
    "SeriesValue",
    "SingularMonodromyError",
    "TableExhaustedError",
    "TruncationSpec",
    "WindowTooWildError",
    "ZeroOfTauError",
    "barnes_G",
    "build_matrices",
    "chi_formula",
    "chi_numeric",
    "dilog",
    "enumerate_partitions",
    "generating_W",
    "instanton_coefficients",
    "log_barnes_G",
    "tau_long_unnormalized",
    "tau_short",
    "u_from_tau",
    "u_long",
    "zeta",
]

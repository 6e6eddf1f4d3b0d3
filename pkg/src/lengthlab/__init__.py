"""Nonsoluble length and generalized Fitting height of finite permutation groups."""

from .errors import (
    CapacityError,
    CertificateError,
    CorpusSyntaxError,
    DomainError,
    InputError,
    LengthLabError,
)
from .group import PermGroup, limits
from .perm import Permutation
from .records import SeriesRecord

__all__ = [
    "CapacityError",
    "CertificateError",
    "CorpusSyntaxError",
    "DomainError",
    "InputError",
    "LengthLabError",
    "PermGroup",
    "Permutation",
    "SeriesRecord",
    "limits",
]
__version__ = "0.1.0"

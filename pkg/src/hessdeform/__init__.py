"""Exact root-system, Borel-Weil-Bott and Hessenberg-variety computations."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    HessdeformError,
    InternalContradiction,
    RejectedInput,
    ResourceLimit,
    Unresolved,
    UnsupportedInput,
)
from .rootsys import CartanType, build_root_system  # noqa: E402

__all__ = [
    "__version__",
    "CartanType",
    "build_root_system",
    "HessdeformError",
    "InternalContradiction",
    "RejectedInput",
    "ResourceLimit",
    "Unresolved",
    "UnsupportedInput",
]

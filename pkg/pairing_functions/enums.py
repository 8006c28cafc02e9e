"""Common enumeration types for pairing_functions."""

from enum import Enum


class CheckStrictness(Enum):
    """Strictness levels for contract and document checks."""

    STRICT = "strict"  # Raise on any violation
    LENIENT = "lenient"  # Log a warning and continue
    PERMISSIVE = "permissive"  # Skip the check silently


class Predicate(Enum):
    """Definitional predicates the verify module can check."""

    BIJECTION = "bijection"
    BASE_N_PERFECT = "base_n_perfect"
    PROPORTIONAL = "proportional"
    SHELL_NUMBERING = "shell_numbering"
    BASE_N_SHELLS = "base_n_shells"


class TraceFormat(Enum):
    """Output formats for curve traces."""

    CSV = "csv"
    JSON = "json"
    SVG = "svg"

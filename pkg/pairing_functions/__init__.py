"""Pairing functions - exact bijections between N^d and N.

The modules are organized by dependency:
- errors, enums: Exception hierarchy and enumeration types
- json_document, settings: JSON-backed documents and runtime settings
- intmath: Digit lengths and integer roots
- pairing_core: Generic pairing functions phi_g and psi_g
- proportional: The p_{a,b} family with closed-form inverses
- rosenberg_strong: Cubic-shell d-tupling functions r_d
- permutation, sfc: Permutation-defined space-filling curves
- verify: Bounded checkers for perfectness, proportionality and shells
- packer: Bit-budget key packing with p_{a,b} folds
- cli: Command-line interface

Usage:
    from pairing_functions import Proportions, pair, unpair, plan, pack

    assert pair(Proportions(3, 2), 8, 4) == 76
    assert unpair(Proportions(3, 2), 76) == (8, 4)
    key_plan = plan([32, 48, 64])
    assert key_plan.total_bits == 144
"""

# Errors and enums
from .enums import CheckStrictness, Predicate, TraceFormat
from .errors import (
    ContractViolation,
    DocumentError,
    DomainError,
    IntegrityError,
    PairingError,
    UnknownCurveError,
    UsageError,
)

# Documents and settings
from .json_document import JsonDocument
from .settings import Settings, default_settings

# Integer arithmetic
from .intmath import ceil_root, floor_root, len_base

# Pairing functions
from .pairing_core import MonotoneSource, phi, psi, pseudo_inverse, step_point
from .proportional import Proportions, pair, unpair, unpair_fast
from .rosenberg_strong import rs_pair, rs_unpair

# Curves
from .permutation import Permutation
from .sfc import CurveSpec, builtin, builtin_names, decode, encode, load_curve

# Checkers
from .verify import Counterexample, TuplerHandle, VerificationResult

# Packing
from .packer import PackPlan, pack, perfect_tupler, plan, unpack

__version__ = "1.0.0"

__all__ = [
    # Errors and enums
    "CheckStrictness",
    "Predicate",
    "TraceFormat",
    "ContractViolation",
    "DocumentError",
    "DomainError",
    "IntegrityError",
    "PairingError",
    "UnknownCurveError",
    "UsageError",
    # Documents and settings
    "JsonDocument",
    "Settings",
    "default_settings",
    # Integer arithmetic
    "ceil_root",
    "floor_root",
    "len_base",
    # Pairing functions
    "MonotoneSource",
    "phi",
    "psi",
    "pseudo_inverse",
    "step_point",
    "Proportions",
    "pair",
    "unpair",
    "unpair_fast",
    "rs_pair",
    "rs_unpair",
    # Curves
    "Permutation",
    "CurveSpec",
    "builtin",
    "builtin_names",
    "decode",
    "encode",
    "load_curve",
    # Checkers
    "Counterexample",
    "TuplerHandle",
    "VerificationResult",
    # Packing
    "PackPlan",
    "pack",
    "perfect_tupler",
    "plan",
    "unpack",
]

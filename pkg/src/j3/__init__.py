"""Arithmetic, equations and transcendental functions for J3-numbers."""

from .basis import ALPHA, BETA, GAMMA, AbgCoords, DirectSum, dsum_mul, from_abg, phi, phi_inv, to_abg
from .core import (
    DEFAULT_TOL,
    ONE,
    ZERO,
    J,
    J3,
    J3Class,
    add,
    altitude,
    apply_j,
    classify,
    cone_form,
    conj,
    det,
    inverse,
    modulus,
    mul,
    pow,
    scale,
    square,
    sub,
)
from .equations import (
    SolutionKind,
    SolutionSet,
    idempotents,
    solve_linear,
    solve_monic_quadratic,
    solve_quadratic,
    sqrt_real,
)
from .errors import (
    DomainError,
    J3Error,
    J3Overflow,
    NotInvertible,
    PatternViolation,
    Singular,
    Unsupported,
    ZeroInput,
    ZeroLHS,
)
from .transcend import (
    CylCoords,
    PolarForm,
    direction,
    exp,
    from_cyl,
    log,
    log_branch,
    poly_eval,
    polar_decompose,
    to_cyl,
    trig,
)

__version__ = "0.1.0"

__all__ = [
    "AbgCoords",
    "add",
    "ALPHA",
    "altitude",
    "apply_j",
    "BETA",
    "classify",
    "cone_form",
    "conj",
    "CylCoords",
    "DEFAULT_TOL",
    "det",
    "direction",
    "DirectSum",
    "DomainError",
    "dsum_mul",
    "exp",
    "from_abg",
    "from_cyl",
    "GAMMA",
    "idempotents",
    "inverse",
    "J",
    "J3",
    "J3Class",
    "J3Error",
    "J3Overflow",
    "log",
    "log_branch",
    "modulus",
    "mul",
    "NotInvertible",
    "ONE",
    "PatternViolation",
    "phi",
    "phi_inv",
    "polar_decompose",
    "PolarForm",
    "poly_eval",
    "pow",
    "scale",
    "Singular",
    "SolutionKind",
    "SolutionSet",
    "solve_linear",
    "solve_monic_quadratic",
    "solve_quadratic",
    "sqrt_real",
    "square",
    "sub",
    "to_abg",
    "to_cyl",
    "trig",
    "Unsupported",
    "ZERO",
    "ZeroInput",
    "ZeroLHS",
]

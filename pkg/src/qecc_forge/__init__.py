"""Quantum error-correcting codes from k-uniform and AME states over GF(q)."""

from .codes import (
    ClassicalCode,
    GeneratorMatrix,
    SingletonArray,
    classical_code,
    enumerate_codewords,
    is_mds,
    mds_generator,
    min_hamming_distance,
    parity_check,
    singleton_array,
)
from .construct import QuantumCode, kuniform_code, modified_shorten, mtilde, shorten, shortening_chain
from .errors import BudgetExceeded, QeccError
from .gf import FieldElement, MatrixGF, PrimeField, field_new
from .pauli import PauliString, apply, multiply, parse_pauli, symplectic, weight
from .states import CodeState, CyclotomicInt, inner_product, marginal_is_maximally_mixed, uniformity
from .verify import (
    VerificationReport,
    check_knill_laflamme,
    check_logical_algebra,
    check_orthonormal,
    check_stabilizes,
    code_distance,
    dual_logical_z,
    verify_code,
)

__all__ = [
    "BudgetExceeded",
    "ClassicalCode",
    "CodeState",
    "CyclotomicInt",
    "FieldElement",
    "GeneratorMatrix",
    "MatrixGF",
    "PauliString",
    "PrimeField",
    "QeccError",
    "QuantumCode",
    "SingletonArray",
    "VerificationReport",
    "apply",
    "check_knill_laflamme",
    "check_logical_algebra",
    "check_orthonormal",
    "check_stabilizes",
    "classical_code",
    "code_distance",
    "dual_logical_z",
    "enumerate_codewords",
    "field_new",
    "inner_product",
    "is_mds",
    "kuniform_code",
    "marginal_is_maximally_mixed",
    "mds_generator",
    "min_hamming_distance",
    "modified_shorten",
    "mtilde",
    "multiply",
    "parity_check",
    "parse_pauli",
    "shorten",
    "shortening_chain",
    "singleton_array",
    "symplectic",
    "uniformity",
    "verify_code",
    "weight",
]

__version__ = "0.1.0"

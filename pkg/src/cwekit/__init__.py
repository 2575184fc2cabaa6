"""Exact toolkit for x^(q+1) - c factorizations, complete weight
enumerators of dimension-two trace codes, and the authentication codes
they induce."""

from .authcodes import AuthReport, OptimalityClass, classify, encode, p_substitution
from .codes import (
    CodeSpec,
    Codeword,
    CompleteWeight,
    HammingDistribution,
    code_spec,
    codeword,
    complete_weight,
    hamming_distribution,
    min_distance,
    zero_symbol_count,
)
from .cwe import (
    CWEnum,
    WeightVectors,
    build_weight_vectors,
    check_fold_shift_identity,
    codeword_complete_weight,
    cwe_brute_force,
    cwe_closed_form,
    fold_sum,
    hamming_from_cwe,
    repeat_to_full,
    repeat_to_k,
    shift,
)
from .cyclotomy import class_field_intersection, class_of, enumerate_class
from .factorizer import (
    Factorization,
    IrreducibilitySets,
    NormFactor,
    Polynomial,
    brute_force_factor,
    expand,
    factor_norm_poly,
    irreducibility_sets,
    is_irreducible_quadratic,
    norm_binomial,
    quadratic_from_root,
)
from .galois import (
    FQ2_ONE,
    FQ2_ZERO,
    FQ_ONE,
    FQ_ZERO,
    FieldContext,
    FieldSpec,
    Fq2Elem,
    FqElem,
    build_field,
    prime_powers,
)

__version__ = "0.1.0"

__all__ = [
    "AuthReport",
    "CWEnum",
    "CodeSpec",
    "Codeword",
    "CompleteWeight",
    "Factorization",
    "FieldContext",
    "FieldSpec",
    "Fq2Elem",
    "FqElem",
    "FQ2_ONE",
    "FQ2_ZERO",
    "FQ_ONE",
    "FQ_ZERO",
    "HammingDistribution",
    "IrreducibilitySets",
    "NormFactor",
    "OptimalityClass",
    "Polynomial",
    "WeightVectors",
    "build_field",
    "build_weight_vectors",
    "brute_force_factor",
    "check_fold_shift_identity",
    "class_field_intersection",
    "class_of",
    "classify",
    "code_spec",
    "codeword",
    "codeword_complete_weight",
    "complete_weight",
    "cwe_brute_force",
    "cwe_closed_form",
    "encode",
    "enumerate_class",
    "expand",
    "factor_norm_poly",
    "fold_sum",
    "hamming_distribution",
    "hamming_from_cwe",
    "irreducibility_sets",
    "is_irreducible_quadratic",
    "min_distance",
    "norm_binomial",
    "p_substitution",
    "prime_powers",
    "quadratic_from_root",
    "repeat_to_full",
    "repeat_to_k",
    "shift",
    "zero_symbol_count",
]

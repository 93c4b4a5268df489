"""Adjoint and flip calculus of multilinear maps and their Aron-Berner extensions."""

from ._core import (
    ExtensionOrder,
    apply_word,
    canonical_word,
    check_i_extension_factorization,
    check_j_extension_factorization,
    check_mixed_word_identities,
    check_r_extension_factorization,
    compose_bilinear,
    example_names,
    extension_order,
    flip_compose,
    run_identity_battery,
    six_extensions,
    word_permutation,
    word_signature,
)

__all__ = [
    "ExtensionOrder",
    "apply_word",
    "canonical_word",
    "check_i_extension_factorization",
    "check_j_extension_factorization",
    "check_mixed_word_identities",
    "check_r_extension_factorization",
    "compose_bilinear",
    "example_names",
    "extension_order",
    "flip_compose",
    "run_identity_battery",
    "six_extensions",
    "word_permutation",
    "word_signature",
]

"""Exact arithmetic for set compositions and descent algebras.

Set compositions (ordered partitions of finite integer sets) span an algebra
with a concatenation product, an intersection-refinement product, and a
blockwise-split coproduct.  This package implements that arithmetic with
integer coefficients, the classical descent algebra embedded in it (orbit
sums, Solomon's rule, descent classes, shuffles, Young factorization), and a
brute-force endomorphism model for independent verification.
"""

from .algebra import (
    TDElement,
    TensorElement,
    UNIT,
    ZERO,
    act,
    basis,
    chamber,
    chamber_word,
    composition_product,
    convolution,
    coproduct,
    graded_component,
    multiply_tensor_legs,
    permutation_basis,
    tensor,
    tensor_composition,
    tensor_convolution,
)
from .limits import SizeLimitError
from .oracle import (
    Endomorphism,
    all_words,
    b_coproduct,
    b_product,
    characteristic_endo,
    endo_compose,
    endo_convolution,
    endo_of,
    oracle_check_composition,
    represent,
)
from .permutations import (
    check_permutation,
    compose,
    descent_set,
    enumerate_shuffles,
    identity,
    inverse,
    symmetric_group,
    young_subgroup,
)
from .setcomp import (
    SetComposition,
    as_increasing_partition,
    compositions,
    count_set_compositions,
    enumerate_set_compositions,
    interval_partition,
    multinomial,
    support,
    type_of,
)
from .solomon import (
    DescentElement,
    GroupAlgebraElement,
    descent_basis_expand,
    descent_class,
    descent_to_orbit,
    fixed_space_check,
    orbit_sum,
    shuffle_test,
    solomon_compose,
    star,
    truncation_check,
    young_decompose,
)
from .textio import (
    ParseError,
    element_from_json,
    element_to_json,
    parse,
    render,
    render_tensor,
    tensor_from_json,
    tensor_to_json,
)

__version__ = "1.0.0"

__all__ = [
    "DescentElement",
    "Endomorphism",
    "GroupAlgebraElement",
    "ParseError",
    "SetComposition",
    "SizeLimitError",
    "TDElement",
    "TensorElement",
    "UNIT",
    "ZERO",
    "act",
    "all_words",
    "as_increasing_partition",
    "b_coproduct",
    "b_product",
    "basis",
    "chamber",
    "chamber_word",
    "characteristic_endo",
    "check_permutation",
    "compose",
    "composition_product",
    "compositions",
    "convolution",
    "coproduct",
    "count_set_compositions",
    "descent_basis_expand",
    "descent_class",
    "descent_set",
    "descent_to_orbit",
    "element_from_json",
    "element_to_json",
    "endo_compose",
    "endo_convolution",
    "endo_of",
    "enumerate_set_compositions",
    "enumerate_shuffles",
    "fixed_space_check",
    "graded_component",
    "identity",
    "interval_partition",
    "inverse",
    "multinomial",
    "multiply_tensor_legs",
    "oracle_check_composition",
    "orbit_sum",
    "parse",
    "permutation_basis",
    "render",
    "render_tensor",
    "represent",
    "shuffle_test",
    "solomon_compose",
    "star",
    "support",
    "symmetric_group",
    "tensor",
    "tensor_composition",
    "tensor_convolution",
    "tensor_from_json",
    "tensor_to_json",
    "truncation_check",
    "type_of",
    "young_decompose",
    "young_subgroup",
]

"""Distributive laws of lax functors between finite strict 2-categories."""

__version__ = "0.1.0"

from .core2 import (
    PosetalTwoCategory,
    ProductTwoCategory,
    TabledTwoCategory,
    TwoCategory,
    dual,
    product,
    tabled,
    terminal_2category,
    validate_2category,
)
from .functors import (
    LaxFunctor,
    Modification,
    OplaxTransformation,
    compose_oplax,
    enumerate_lax_functors,
    enumerate_modifications,
    enumerate_oplax,
    identity_lax_functor,
    identity_modification,
    identity_oplax,
    is_pseudofunctor,
    is_unitary,
    monad,
    validate_lax_functor,
    validate_modification,
    validate_oplax,
)
from .distlaw import (
    Dist2Morphism,
    DistMorphism,
    DistributiveLaw,
    enumerate_dist_2morphisms,
    enumerate_dist_morphisms,
    enumerate_laws,
    monad_law,
    trivial_law,
    validate_dist_2morphism,
    validate_dist_morphism,
    validate_law,
    validate_law_assuming_invertible,
)
from .collation import (
    check_K_is_2functor,
    collate,
    collate_2morphism,
    collate_morphism,
    composite_monad,
    kappa_B,
    kappa_C,
)
from .currying import (
    curry,
    curry_2morphism,
    curry_law,
    curry_morphism,
    uncurry_J,
    uncurry_modification,
    uncurry_nested,
    uncurry_transformation,
    validate_nested,
)
from .converse import (
    braiding_to_law,
    check_braiding,
    extract_law_pseudo,
    extract_law_T,
    is_decomposable,
    law_to_braiding,
    T_on_2morphisms,
    T_on_morphisms,
    witness_kappa,
    witness_lambda,
)
from .instances import (
    discrete_monoid_delooping,
    labelled,
    monads_of,
    ordered_monoid,
    ordered_monoid_delooping,
    rel_2category,
)
from .report import Budget, BudgetExceeded, StructuralError, ValidationReport

"""Weighted group algebras with the weight-dependent convolution on finite groups."""
from .algebra import (
    AlgElement,
    ContextMismatchError,
    UnsupportedGroupError,
    conv_classical,
    conv_w_fast,
    conv_w_naive,
    delta,
    element,
    involution,
    norm_script_p,
    norm_triple_p,
    norm_w1,
    sigma,
    sigma_inv,
)
from .fourier import Character, char_value, characters, fourier_w, fourier_w_fast, mult_functional
from .group import (
    GroupError,
    GroupSpec,
    InvalidElementError,
    cayley_table,
    compose,
    cyclic_product,
    dihedral_group,
    from_permutations,
    inverse,
    is_abelian,
    symmetric_group,
)
from .representations import (
    AlgebraRep,
    ConditioningError,
    NonDegeneracyError,
    RepresentationError,
    UnitaryRep,
    check_intertwining,
    check_star_rep,
    integrate,
    integrated_form,
    reconstruct,
    regular_rep,
)
from .translation import L, R, gamma, theta
from .weight import (
    InvalidWeightError,
    Weight,
    is_symmetric,
    make_length_weight,
    make_weight,
    trivial_weight,
    verify_weight,
)

__version__ = "0.1.0"

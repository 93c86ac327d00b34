"""Exact-arithmetic verification workbench for Hom-algebra identities.

Finite-dimensional algebras are given by structure constants over Q; every
identity is decided exactly (polarization turns non-multilinear identities
into multilinear ones, which basis enumeration then settles). Constructions
(twists, T*-extensions, derived triple systems) come with their preconditions
checked.
"""

from .algebra import (
    HomAlgebra,
    HomJMPAlgebra,
    PowerTable,
    cyclic_associator,
    hom_associator,
    hom_jacobiator,
    hom_power,
    jmp_pair,
    jmp_to_admissible,
    left_mult,
    minus_algebra,
    plus_algebra,
    power_table,
    right_mult,
)
from .constructions import (
    DualExtensionMap,
    TStarExtension,
    an_family,
    beta_from_automorphism,
    center_jordan,
    center_malcev,
    t_star_extension,
    twisted_pseudo_euclidean,
    yau_twist,
)
from .forms import (
    BilinearForm,
    FormFlags,
    check_form_properties,
    check_pseudo_euclidean_homjmp,
    check_triple_invariance,
    pseudo_euclidean_jmp_suite,
)
from .identities import (
    CheckReport,
    HomogeneityError,
    MapFlags,
    MultilinearIdentity,
    check_admissible_jmp,
    check_condition_rl,
    check_flexible_characterization,
    check_hom_alternative,
    check_hom_flexible,
    check_hom_jmp,
    check_hom_jordan,
    check_hom_leibniz,
    check_hom_malcev,
    check_map_properties,
    check_multilinear,
    check_power_hom_associative,
    evaluate,
    polarize,
)
from .linalg import (
    DimensionMismatch,
    Matrix,
    Scalar,
    Tensor3,
    Tensor4,
    apply_product,
    apply_triple,
    basis_vector,
    dual_transpose,
    kernel_basis,
    mat_apply,
    rank,
    rat,
)
from .triples import (
    HLJPSystem,
    HomTripleSystem,
    check_hljp,
    check_hlts_axioms,
    hljp_from_homjmp,
    triple_from_malcev,
)

__version__ = "0.1.0"

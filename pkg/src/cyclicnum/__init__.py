"""Which group orders force every group to be cyclic, and proof by construction.

The test itself is one gcd: every group of order n is cyclic exactly when
gcd(n, phi(n)) = 1.  Everything else here backs that up computationally:
explicit non-cyclic witness groups for the failing orders, a permutation
group engine to re-verify them from scratch, and an exhaustive
Cayley-table enumerator as an independent ground truth for small orders.
"""

from .cayley import (
    CayleyTable,
    TheoremRow,
    canonical_form,
    element_orders,
    enumerate_groups,
    regular_representation,
    table_is_cyclic,
    validate_table,
    verify_theorem_small,
)
from .errors import CapacityError
from .groups import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    center,
    closure,
    conjugacy_class,
    conjugate_element,
    conjugate_only_to_powers,
    conjugate_subgroup,
    count_conjugate_subgroups,
    element_order,
    generated_subgroup,
    is_abelian,
    is_cyclic,
    left_cosets,
    maximal_subgroups,
    minimal_power_in_subgroup,
    noncentral_union_size,
    normalizer,
    subset_product,
)
from .numtheory import (
    ConditionReport,
    Factorization,
    check_conditions,
    cyclic_numbers,
    element_of_order,
    euler_phi,
    ext_gcd,
    factorize,
    gcd,
    is_cyclic_number,
    is_prime,
    mod_pow,
    multiplicative_order,
)
from .perm import (
    Permutation,
    compose,
    cycle,
    cycle_lengths,
    identity,
    inverse,
    perm_order,
)
from .witness import (
    DEGREE_CAP,
    VerificationReport,
    WitnessCertificate,
    affine_map,
    build_witness,
    verify_certificate,
    witness_arrow_case,
    witness_square_case,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CayleyTable",
    "ConditionReport",
    "DEGREE_CAP",
    "Factorization",
    "FiniteGroup",
    "Permutation",
    "Subgroup",
    "TheoremRow",
    "VerificationReport",
    "WitnessCertificate",
    "affine_map",
    "all_subgroups",
    "build_witness",
    "canonical_form",
    "center",
    "check_conditions",
    "closure",
    "compose",
    "conjugacy_class",
    "conjugate_element",
    "conjugate_only_to_powers",
    "conjugate_subgroup",
    "count_conjugate_subgroups",
    "cycle",
    "cycle_lengths",
    "cyclic_numbers",
    "element_of_order",
    "element_order",
    "element_orders",
    "enumerate_groups",
    "euler_phi",
    "ext_gcd",
    "factorize",
    "gcd",
    "generated_subgroup",
    "identity",
    "inverse",
    "is_abelian",
    "is_cyclic",
    "is_cyclic_number",
    "is_prime",
    "left_cosets",
    "maximal_subgroups",
    "minimal_power_in_subgroup",
    "mod_pow",
    "multiplicative_order",
    "noncentral_union_size",
    "normalizer",
    "perm_order",
    "regular_representation",
    "subset_product",
    "table_is_cyclic",
    "validate_table",
    "verify_certificate",
    "verify_theorem_small",
    "witness_arrow_case",
    "witness_square_case",
    "__version__",
]

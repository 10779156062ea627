"""
Elementary arithmetic.

Submodules:
    - discriminants: Fundamental discriminants, Kronecker symbols, class number oracle
    - modular: SL2(Z) matrices, S/T words, Gamma_0(N) cosets, fundamental domain
"""

from thetalift.arith.discriminants import (
    DiscriminantLike,
    FundamentalDiscriminant,
    as_discriminant,
    chi_D,
    class_number_oracle,
    genus_prime_discriminants,
    is_fundamental,
    kronecker,
)
from thetalift.arith.modular import (
    IDENTITY,
    S,
    T,
    ModularMatrix,
    STWord,
    T_power,
    coset_index,
    coset_reps_gamma0,
    gamma0_index,
    igcdex,
    in_fundamental_domain,
    random_modular_matrix,
    reduce_to_fundamental_domain,
    st_decompose,
)

__all__ = [
    # Discriminants
    "DiscriminantLike",
    "FundamentalDiscriminant",
    "as_discriminant",
    "chi_D",
    "class_number_oracle",
    "genus_prime_discriminants",
    "is_fundamental",
    "kronecker",
    # Modular group
    "IDENTITY",
    "S",
    "T",
    "ModularMatrix",
    "STWord",
    "T_power",
    "coset_index",
    "coset_reps_gamma0",
    "gamma0_index",
    "igcdex",
    "in_fundamental_domain",
    "random_modular_matrix",
    "reduce_to_fundamental_domain",
    "st_decompose",
]

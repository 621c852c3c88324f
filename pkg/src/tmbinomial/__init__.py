"""Binomial complexities of the generalized Thue-Morse words t_m."""
from __future__ import annotations

from .binomial import BinomialSignature, binom, equivalent_k, signature
from .factorization import (
    DTDecomposition,
    MalformedPair,
    NotAFactor,
    PSPair,
    SigmaFactorization,
    TooShort,
    count_pair_classes,
    enumerate_factorizations,
    equiv_k_pairs,
    image_prefix,
    image_suffix,
    ps_pair,
    unique_factorization,
)
from .factors import (
    ClassPartition,
    FactorSet,
    InternalInvariantViolation,
    abelian_complexity,
    class_partition,
    factor_complexity,
    factor_set,
    kbinomial_complexity,
    shortest_equivalent_pair,
)
from .formulas import (
    FormulaDomainError,
    abelian_b1,
    edge_count_E,
    lcw_b2,
    llr_b2k,
    main_bk,
    main_equiv_count,
    prop55_bk,
    starosta_p,
    y_count_Y,
)
from .limits import Limits, ResourceCapExceeded
from .rauzy import (
    AbelianRauzyGraph,
    YSets,
    build_graph,
    edge_count,
    eulerian_check,
    export_graph,
    shift_isomorphism_check,
    y_sets,
)
from .words import (
    AlphabetMismatch,
    Word,
    parikh,
    sigma_image,
    sigma_power,
    tau_apply,
    tm_letter,
    tm_prefix,
)

__version__ = "0.1.0"

"""Good subsemigroups of N^d, their good ideals, and the level partition
of Apery sets."""

from .exceptions import (
    AxiomViolation,
    ConductorNotMinimal,
    G1Violation,
    G2Violation,
    GenerationExhausted,
    GoodSemigroupError,
    GridTooLarge,
    IndexNotInU,
    InternalInconsistency,
    InvalidNumericalSemigroup,
    MissingZero,
    MixedU,
    NoUniqueMaximum,
    NotAMonoid,
    NotGoodIdeal,
    NotInComplement,
    NotInSemigroup,
    NotProper,
    PreconditionViolated,
    UsageError,
    ZeroGenerator,
)
from .ideal import (
    ComplementSet,
    GoodIdeal,
    complement,
    ideal_from_generators,
    principal_ideal,
)
from .lattice import (
    INF,
    delta,
    delta_union,
    dominates,
    format_point,
    leq,
    meet,
    meet_all,
    parse_point,
)
from .levels import (
    CompleteInfimumWitness,
    LevelPartition,
    apery,
    complete_infimum_witness,
    compute_levels,
    level_of,
    propG2_decomposition,
)
from .oracle import (
    CorpusSpec,
    brute_force_partition,
    generate_corpus,
    product_semigroup,
    random_good_semigroup,
)
from .semigroup import (
    GoodSemigroup,
    ValidationReport,
    check_small_elements,
    contains,
    from_small_elements,
    load_semigroup,
    minimal_nonzero,
    parse_semigroup,
    save_semigroup,
    validate,
)
from .subspace import (
    Subspace,
    canonical_representative,
    h_k_set,
    subspace_meet,
    subspace_sum,
    subspaces_of_level,
    theorem_main_check,
)

__all__ = [
    "AxiomViolation",
    "ComplementSet",
    "CompleteInfimumWitness",
    "ConductorNotMinimal",
    "CorpusSpec",
    "G1Violation",
    "G2Violation",
    "GenerationExhausted",
    "GoodIdeal",
    "GoodSemigroup",
    "GoodSemigroupError",
    "GridTooLarge",
    "INF",
    "IndexNotInU",
    "InternalInconsistency",
    "InvalidNumericalSemigroup",
    "LevelPartition",
    "MissingZero",
    "MixedU",
    "NoUniqueMaximum",
    "NotAMonoid",
    "NotGoodIdeal",
    "NotInComplement",
    "NotInSemigroup",
    "NotProper",
    "PreconditionViolated",
    "Subspace",
    "UsageError",
    "ValidationReport",
    "ZeroGenerator",
    "apery",
    "brute_force_partition",
    "canonical_representative",
    "check_small_elements",
    "complement",
    "complete_infimum_witness",
    "compute_levels",
    "contains",
    "delta",
    "delta_union",
    "dominates",
    "format_point",
    "from_small_elements",
    "generate_corpus",
    "h_k_set",
    "ideal_from_generators",
    "leq",
    "level_of",
    "load_semigroup",
    "meet",
    "meet_all",
    "minimal_nonzero",
    "parse_point",
    "parse_semigroup",
    "principal_ideal",
    "product_semigroup",
    "propG2_decomposition",
    "random_good_semigroup",
    "save_semigroup",
    "subspace_meet",
    "subspace_sum",
    "subspaces_of_level",
    "theorem_main_check",
    "validate",
    "AperyLevels",
]

__version__ = "0.1.0"


def __getattr__(name):
    # the estimator pulls in scikit-learn; load it on first use
    if name == "AperyLevels":
        from .estimator import AperyLevels

        return AperyLevels
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")

"""Exhaustive verification toolkit for the exponential reduced Sombor index
over chemical trees: enumeration, certified index evaluation, extremal
characterizations, and conjecture refutation."""

from .trees import (
    ChemTree,
    DegreeCounts,
    EdgeTypeCounts,
    canonical_code,
    degree_counts,
    edge_type_counts,
    parse,
    serialize,
    tree_from_edge_list,
)
from .enumeration import (
    EnumerationConfig,
    count_chemical_trees,
    enumerate_chemical_trees,
    enumerate_oracle,
)
from .scalars import DEFAULT_PRECISION, Scalar
from .indices import (
    CoefficientTable,
    check_structural_identities,
    coefficient_table,
    exp_reduced_sombor,
    exp_reduced_sombor_decomposed,
    f,
    reduced_sombor,
)
from .extremal import (
    conjecture_bound,
    construct_extremal,
    equality_conditions,
    extremal_certificate,
    theorem_bound,
)
from .verify import (
    VerificationReport,
    bruteforce_max,
    refute_conjecture,
    verify_class_lemmas,
    verify_lemma0,
    verify_theorem,
)

__version__ = "0.1.0"

"""Exceptional objects, mutations and non-commutative curve counts for
derived categories of acyclic quivers, in exact rational arithmetic."""

from .curves import (CountResult, NcCurve, StrongPair, Verdict, cluster_into_curves, count_Cl,
                     decide_embedding, find_strong_pairs, gram_witness_search)
from .derived import (DerivedObject, ExcCollection, derived_hom, enumerate_exceptional,
                      left_mutation, right_mutation)
from .quiver import Kind, Quiver, QuiverError, builtin, classify, euler_form, tits_form
from .reps import IntegrityError, Representation, ext_dim, hom_dim, is_exceptional
from .weights import WeightError, WeightSequence, canonical_gram, is_dynkin_type, preceq, to_quiver

__version__ = "0.1.0"

__all__ = [
    "CountResult", "DerivedObject", "ExcCollection", "IntegrityError", "Kind", "NcCurve",
    "Quiver", "QuiverError", "Representation", "StrongPair", "Verdict", "WeightError",
    "WeightSequence", "builtin", "canonical_gram", "classify", "cluster_into_curves",
    "count_Cl", "decide_embedding", "derived_hom", "enumerate_exceptional", "euler_form",
    "ext_dim", "find_strong_pairs", "gram_witness_search", "hom_dim", "is_dynkin_type",
    "is_exceptional", "left_mutation", "preceq", "right_mutation", "tits_form", "to_quiver",
]

"""Sylvester, #-sylvester and Baxter monoids: insertion trees, canonical
forms, identity checking, rank-2 embeddings and equational deduction."""

from .bst import LeftStrictBST, RightStrictBST, TwinPair, canopy, is_twin, p_baxt, p_sylv, p_sylvh
from .congruence import (
    Element,
    MonoidTag,
    canonicalize,
    equal,
    equal_via_precedences,
    least_word,
    left_precedences,
    multiply,
    right_precedences,
)
from .deduce import Derivation, RewriteStep, apply_instance, derive, verify_derivation
from .embed import phi, phi_vector, verify_embedding
from .evalsearch import enumerate_identities, evaluate, refute, shortest_identities
from .idcheck import CheckVerdict, check_id
from .words import Identity, ParseError, format_word, parse_word

__version__ = "0.1.0"

__all__ = [
    "CheckVerdict",
    "Derivation",
    "Element",
    "Identity",
    "LeftStrictBST",
    "MonoidTag",
    "ParseError",
    "RewriteStep",
    "RightStrictBST",
    "TwinPair",
    "apply_instance",
    "canonicalize",
    "canopy",
    "check_id",
    "derive",
    "enumerate_identities",
    "equal",
    "equal_via_precedences",
    "evaluate",
    "format_word",
    "is_twin",
    "least_word",
    "left_precedences",
    "multiply",
    "p_baxt",
    "p_sylv",
    "p_sylvh",
    "parse_word",
    "phi",
    "phi_vector",
    "refute",
    "right_precedences",
    "shortest_identities",
    "verify_derivation",
    "verify_embedding",
]

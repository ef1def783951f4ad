"""Certified extraction: restricted sets, sparse pairs, blockades, witnesses."""
from .driver import eh_extract, unordered_extract, viral_extract
from .leaf import end_leaf, grow_blockade, sparse_pair
from .outcomes import (
    Blockade,
    BlockadeFound,
    CliqueOrStable,
    CopyWitness,
    LowDensitySet,
    RestrictedCandidate,
    RestrictedSet,
    SparsePair,
)
from .params import Params
from .restricted import degree_prune, restricted_subset_search
from .transfer import Layout, blockade_to_sparse_set, restricted_to_blockade
from .verify import certify, recount

__all__ = [
    "Blockade", "BlockadeFound", "CliqueOrStable", "CopyWitness", "Layout", "LowDensitySet",
    "Params", "RestrictedCandidate", "RestrictedSet", "SparsePair", "blockade_to_sparse_set",
    "certify", "degree_prune", "eh_extract", "end_leaf", "grow_blockade", "recount",
    "restricted_subset_search", "restricted_to_blockade", "sparse_pair", "unordered_extract",
    "viral_extract",
]

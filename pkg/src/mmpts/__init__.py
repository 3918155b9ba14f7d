"""Maximum partial triple systems: search, canonical forms, censuses and transforms."""

from __future__ import annotations

from .canonical import (
    CanonicalForm,
    GroupInfo,
    InsertResult,
    IsoStore,
    automorphism_group,
    canonical_form,
    canonical_key,
    merge,
    point_invariant,
    store_insert,
)
from .codec import Corpus, decode, encode, read_file, write_file
from .configurations import ConfigCensus, census, count_fano, count_mitre, count_pasch
from .design import (
    Claim,
    Design,
    LeaveKind,
    LeaveShape,
    Pbd35,
    SystemType,
    block_count,
    classify_type,
    expected_leave_and_blocks,
    validate,
)
from .pipeline import EnumerationResult, enumerate_designs
from .search import CoverProblem, Engine, Seed, build_problem, enumerate_completions, split_work
from .seeds import canonical_leave, check_seed_redundancy, paper_seeds, small_order_seeds
from .transforms import delete_point, derive_all, extend_point, from_pbd, to_pbd

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "Claim",
    "ConfigCensus",
    "Corpus",
    "CoverProblem",
    "Design",
    "Engine",
    "EnumerationResult",
    "GroupInfo",
    "InsertResult",
    "IsoStore",
    "LeaveKind",
    "LeaveShape",
    "Pbd35",
    "Seed",
    "SystemType",
    "automorphism_group",
    "block_count",
    "build_problem",
    "canonical_form",
    "canonical_key",
    "canonical_leave",
    "census",
    "check_seed_redundancy",
    "classify_type",
    "count_fano",
    "count_mitre",
    "count_pasch",
    "decode",
    "delete_point",
    "derive_all",
    "encode",
    "enumerate_completions",
    "enumerate_designs",
    "expected_leave_and_blocks",
    "extend_point",
    "from_pbd",
    "merge",
    "paper_seeds",
    "point_invariant",
    "read_file",
    "small_order_seeds",
    "split_work",
    "store_insert",
    "to_pbd",
    "validate",
    "write_file",
]

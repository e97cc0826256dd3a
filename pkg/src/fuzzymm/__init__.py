"""Autoassociative fuzzy morphological memories.

Distributed memories trained by fuzzy learning by adjunction, projection
memories (including the comparison-only Zadeh model), noise masking and a
per-class memory-bank classifier.
"""

from .afmm import DistributedMemory, NegatedMemory, negation_of, train_fla
from .classifier import (
    MODEL_KINDS,
    EvalReport,
    MemoryBank,
    ModelConfig,
    build_bank,
    build_model,
    classify,
    evaluate,
)
from .connectives import (
    FAMILY_NAMES,
    AdjunctionReport,
    ConnectiveFamily,
    builtin_family,
    check_adjunction,
    check_negation_duality,
    residual_coimplication,
    residual_implication,
)
from .errors import (
    ConfigError,
    DimensionError,
    DomainError,
    FileError,
    FormatError,
    FuzzyMemoryError,
    NotFoundError,
)
from .lattice import (
    OpCounter,
    counting,
    max_c_combination,
    max_c_product,
    min_d_combination,
    min_d_product,
)
from .masking import MaskedMemory, hamming_similarity, masked_recall, select_mask_index
from .metrics import nmse
from .pafmm import NegatedProjection, ProjectionMemory, RecallTrace, negation_dual

__version__ = "0.1.0"

__all__ = [
    "AdjunctionReport",
    "ConfigError",
    "ConnectiveFamily",
    "DimensionError",
    "DistributedMemory",
    "DomainError",
    "EvalReport",
    "FAMILY_NAMES",
    "FileError",
    "FormatError",
    "FuzzyMemoryError",
    "MODEL_KINDS",
    "MaskedMemory",
    "MemoryBank",
    "ModelConfig",
    "NegatedMemory",
    "NegatedProjection",
    "NotFoundError",
    "OpCounter",
    "ProjectionMemory",
    "RecallTrace",
    "build_bank",
    "build_model",
    "builtin_family",
    "check_adjunction",
    "check_negation_duality",
    "classify",
    "counting",
    "evaluate",
    "hamming_similarity",
    "masked_recall",
    "max_c_combination",
    "max_c_product",
    "min_d_combination",
    "min_d_product",
    "negation_dual",
    "negation_of",
    "nmse",
    "residual_coimplication",
    "residual_implication",
    "select_mask_index",
    "train_fla",
]

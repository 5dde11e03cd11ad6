"""Batch pipeline for multilingual abusive-comment classification.

Reproduces the post-model portion of a leaderboard system: transliteration
based augmentation, probability fusion and ensembling, metadata feature
engineering, gradient-boosted stacking, per-language threshold calibration
and mean-F1 evaluation.
"""

__version__ = "0.1.0"

FORMAT_VERSIONS = {
    "corpus": 1,
    "probability": 1,
    "features": 1,
    "nglm": 1,
    "gbdt": 1,
    "kv": 1,
}

from .languages import Language, parse_language
from .corpus import (
    AlignmentError,
    CommentRecord,
    Corpus,
    CorpusFormatError,
    ProbabilityColumn,
    read_corpus,
    read_probability_column,
    write_corpus,
    write_probability_column,
)
from .translit import augment_corpus, romanize, strip_emoji, transliterate_corpus

__all__ = [
    "Language",
    "parse_language",
    "AlignmentError",
    "CommentRecord",
    "Corpus",
    "CorpusFormatError",
    "ProbabilityColumn",
    "read_corpus",
    "read_probability_column",
    "write_corpus",
    "write_probability_column",
    "augment_corpus",
    "romanize",
    "strip_emoji",
    "transliterate_corpus",
    "FORMAT_VERSIONS",
    "__version__",
]

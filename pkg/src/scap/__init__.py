"""Byte-level n-gram source code author profiling for Java corpora.

The package implements Simplified Profile construction and intersection
(SCAP), a lossless Java lexer with identifier classification, per-file
identifier neutralization, manifest-driven corpora, the (n, L) accuracy
grid, and the paired tests used to compare grids.
"""

from .errors import (
    CorpusError,
    DegenerateSampleError,
    LexError,
    ManifestError,
    ParameterError,
    ScapError,
)
from .ngram import (
    FrequencyTable,
    SimplifiedProfile,
    extract_ngrams,
    rank_and_truncate,
    spi,
)
from .classifier import (
    Attribution,
    AuthorProfile,
    attribute,
    build_author_profile,
    build_test_profile,
)

__version__ = "0.1.0"

__all__ = [
    "Attribution",
    "AuthorProfile",
    "CorpusError",
    "DegenerateSampleError",
    "FrequencyTable",
    "LexError",
    "ManifestError",
    "ParameterError",
    "ScapError",
    "SimplifiedProfile",
    "attribute",
    "build_author_profile",
    "build_test_profile",
    "extract_ngrams",
    "rank_and_truncate",
    "spi",
]

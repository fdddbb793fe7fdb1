"""polaris: a domain-aware, lexicon-driven opinion polarity engine.

Adjective polarity is resolved jointly with the feature noun it predicates:
absolute adjectives keep a fixed value, relative adjectives are looked up in a
per-domain opinion-feature dictionary, and amplifier adjectives mirror the
valence of the noun they intensify.
"""

from .analysis import (
    DEFAULT_WINDOW,
    NEGATION_WINDOW,
    AdjectiveMention,
    FeatureMention,
    OpinionPair,
    SentenceAnalysis,
    Token,
    analyze_sentence,
    detect_mentions,
    lemmatize,
    pair_mentions,
    segment_sentences,
    tokenize,
)
from .engine import (
    DocumentLabel,
    DocumentReport,
    OPINION_LABELS,
    PairResolution,
    Resolution,
    ResolutionSource,
    SentenceLabel,
    SentenceResult,
    classify_document,
    classify_sentence,
    classify_text,
    flip_resolution,
    label_sentence,
    resolve_pair,
)
from .lexicon import (
    AdjectiveEntry,
    Cell,
    DanglingMatrixKey,
    DuplicateLemma,
    FeatureCatalog,
    FeatureNoun,
    InvalidLexicon,
    LexiconBundle,
    LexiconError,
    MalformedLine,
    MissingLexiconFile,
    Polarity,
    RelativeMatrix,
    UnknownDomain,
    Violation,
    WordClass,
    bundled_corpora_dir,
    canonicalize_feature,
    load_bundle,
    lookup_absolute,
    lookup_relative,
    save_bundle,
    seed_lexicon_dir,
    validate_bundle,
)
from .reporting import (
    ConcordanceReport,
    DomainCounts,
    FrequencyReport,
    MatrixSlice,
    aggregate_frequency,
    concordance_report,
    count_adjectives,
    export_matrix_slice,
    frequency_report,
    merge_concordance,
    merge_domain_counts,
)

__version__ = "0.1.0"

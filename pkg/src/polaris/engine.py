"""Resolve opinion pairs to polarities and classify sentences and documents.

Pair resolution order:

1. an ABS adjective keeps its fixed polarity, whatever the feature;
2. an AMP adjective paired with a feature noun that carries an inherent
   valence mirrors that valence;
3. otherwise the relative matrix decides: + / - map to polar results, a z
   cell is neutral (factual), and a missing cell is undetermined;
4. a REL or AMP adjective with no paired feature is undetermined.

Negation then flips positive and negative; neutral and undetermined results
are unchanged (a negated factual statement is still factual).

Pure functions over immutable inputs; safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .analysis import (
    DEFAULT_WINDOW,
    OpinionPair,
    SentenceAnalysis,
    Tokenizer,
    analyze_sentence,
    segment_sentences,
)
from .lexicon import Cell, LexiconBundle, Polarity, UnknownDomain, WordClass


class Resolution(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    UNDETERMINED = "undetermined"


class ResolutionSource(Enum):
    ABSOLUTE_LEXICON = "absolute_lexicon"
    RELATIVE_MATRIX = "relative_matrix"
    AMPLIFIER_RULE = "amplifier_rule"
    NO_FEATURE = "no_feature"
    NO_CELL = "no_cell"


@dataclass(frozen=True)
class PairResolution:
    value: Resolution
    source: ResolutionSource


class SentenceLabel(Enum):
    OPINION_POSITIVE = "opinion_positive"
    OPINION_NEGATIVE = "opinion_negative"
    OPINION_MIXED = "opinion_mixed"
    FACT = "fact"
    NO_OPINION = "no_opinion"
    UNDETERMINED = "undetermined"


OPINION_LABELS = frozenset(
    {SentenceLabel.OPINION_POSITIVE, SentenceLabel.OPINION_NEGATIVE, SentenceLabel.OPINION_MIXED}
)


class DocumentLabel(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    MIXED = "mixed"
    NON_OPINION = "non_opinion"


@dataclass(frozen=True)
class DocumentReport:
    sentence_labels: tuple[SentenceLabel, ...]
    counts: dict[SentenceLabel, int]
    document_label: DocumentLabel


@dataclass(frozen=True)
class SentenceResult:
    """One classified sentence: its analysis, pair resolutions and label."""

    analysis: SentenceAnalysis
    resolutions: tuple[PairResolution, ...]
    label: SentenceLabel


_FROM_POLARITY = {
    Polarity.POSITIVE: Resolution.POSITIVE,
    Polarity.NEGATIVE: Resolution.NEGATIVE,
}

_FROM_CELL = {
    Cell.PLUS: Resolution.POSITIVE,
    Cell.MINUS: Resolution.NEGATIVE,
    Cell.Z: Resolution.NEUTRAL,
}

_FLIP = {
    Resolution.POSITIVE: Resolution.NEGATIVE,
    Resolution.NEGATIVE: Resolution.POSITIVE,
}


def flip_resolution(resolution: PairResolution) -> PairResolution:
    """Negation flip: positive <-> negative, neutral/undetermined unchanged."""
    flipped = _FLIP.get(resolution.value)
    if flipped is None:
        return resolution
    return PairResolution(flipped, resolution.source)


def resolve_pair(pair: OpinionPair, domain: str, bundle: LexiconBundle) -> PairResolution:
    """Resolve one opinion pair for a domain; see the module docstring for the
    rule order. Raises UnknownDomain for unregistered domains and KeyError for
    an adjective lemma missing from the lexicon."""
    if domain not in bundle.catalog.domains:
        raise UnknownDomain(domain)
    lemma = pair.adjective.lemma
    entry = bundle.adjectives.get(lemma)
    if entry is None:
        raise KeyError(f"adjective {lemma!r} is not in the lexicon")

    if entry.word_class is WordClass.ABSOLUTE:
        if entry.polarity is None:
            raise ValueError(f"absolute entry {lemma!r} has no polarity")
        resolution = PairResolution(_FROM_POLARITY[entry.polarity],
                                    ResolutionSource.ABSOLUTE_LEXICON)
    elif pair.feature is None:
        resolution = PairResolution(Resolution.UNDETERMINED, ResolutionSource.NO_FEATURE)
    else:
        resolution = None
        if entry.word_class is WordClass.AMPLIFIER:
            noun = bundle.catalog.noun(domain, pair.feature.canonical)
            if noun is not None and noun.inherent_polarity is not None:
                resolution = PairResolution(_FROM_POLARITY[noun.inherent_polarity],
                                            ResolutionSource.AMPLIFIER_RULE)
        if resolution is None:
            cell = bundle.matrix.lookup(domain, pair.feature.canonical, lemma)
            if cell is None:
                resolution = PairResolution(Resolution.UNDETERMINED, ResolutionSource.NO_CELL)
            else:
                resolution = PairResolution(_FROM_CELL[cell], ResolutionSource.RELATIVE_MATRIX)

    if pair.adjective.negated:
        resolution = flip_resolution(resolution)
    return resolution


def classify_sentence(resolutions: Iterable[PairResolution]) -> SentenceLabel:
    """Label a sentence from its pair resolutions.

    No pairs: no_opinion. Both polarities present: mixed. One polarity:
    that opinion. Only neutrals: fact. Neutrals with at least one
    undetermined, or only undetermined: undetermined.
    """
    values = [r.value for r in resolutions]
    if not values:
        return SentenceLabel.NO_OPINION
    has_positive = Resolution.POSITIVE in values
    has_negative = Resolution.NEGATIVE in values
    if has_positive and has_negative:
        return SentenceLabel.OPINION_MIXED
    if has_positive:
        return SentenceLabel.OPINION_POSITIVE
    if has_negative:
        return SentenceLabel.OPINION_NEGATIVE
    if Resolution.UNDETERMINED in values:
        return SentenceLabel.UNDETERMINED
    return SentenceLabel.FACT


def classify_document(sentence_labels: Sequence[SentenceLabel]) -> DocumentReport:
    """Aggregate sentence labels: majority of polar sentences wins, a tie or
    mixed-only document is mixed, and no opinion sentences at all is
    non_opinion."""
    counts = {label: 0 for label in SentenceLabel}
    for label in sentence_labels:
        counts[label] += 1
    positive = counts[SentenceLabel.OPINION_POSITIVE]
    negative = counts[SentenceLabel.OPINION_NEGATIVE]
    mixed = counts[SentenceLabel.OPINION_MIXED]
    if positive > negative:
        document_label = DocumentLabel.POSITIVE
    elif negative > positive:
        document_label = DocumentLabel.NEGATIVE
    elif positive or mixed:
        document_label = DocumentLabel.MIXED
    else:
        document_label = DocumentLabel.NON_OPINION
    return DocumentReport(tuple(sentence_labels), counts, document_label)


def label_sentence(
    analysis: SentenceAnalysis, domain: str, bundle: LexiconBundle
) -> SentenceResult:
    resolutions = tuple(resolve_pair(pair, domain, bundle) for pair in analysis.pairs)
    return SentenceResult(analysis, resolutions, classify_sentence(resolutions))


def classify_text(
    text: str,
    domain: str,
    bundle: LexiconBundle,
    window: int = DEFAULT_WINDOW,
    tokenizer: Tokenizer | None = None,
) -> list[SentenceResult]:
    """Segment, analyze and label every sentence of a document."""
    return [
        label_sentence(analyze_sentence(sentence, bundle, domain, window, tokenizer),
                       domain, bundle)
        for sentence in segment_sentences(text)
    ]

"""Sentence segmentation, tokenization, mention detection and pairing.

The default tokenizer is deliberately simple: whitespace tokens, edge
punctuation stripped, and a longest-suffix rewrite table for lemmatization
(shipped as endings.tsv). Any callable returning Token objects can be plugged
in instead. ASCII is case-folded before rule matching so capitalized romanized
words still hit the lexicon; Korean script is unaffected.

All functions here are pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .lexicon import LexiconBundle, UnknownDomain, canonicalize_feature

SENTENCE_DELIMITERS = ".!?。"
DEFAULT_WINDOW = 8
NEGATION_WINDOW = 2
COMPARATIVE_CUES = ("보다", "pota")

_EDGE_PUNCT = "-–—―…~·!?.,;:'\"`()[]{}<>«»“”‘’「」『』、。"


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    index: int


@dataclass(frozen=True)
class AdjectiveMention:
    token_index: int
    lemma: str
    negated: bool = False


@dataclass(frozen=True)
class FeatureMention:
    token_index: int
    canonical: str
    category: str


@dataclass(frozen=True)
class OpinionPair:
    """An adjective and the feature it predicates; feature is None when nothing
    canonicalizes within the pairing window."""

    adjective: AdjectiveMention
    feature: FeatureMention | None = None
    distance: int | None = None


@dataclass(frozen=True)
class SentenceAnalysis:
    sentence: str
    tokens: tuple[Token, ...]
    adjectives: tuple[AdjectiveMention, ...]
    features: tuple[FeatureMention, ...]
    pairs: tuple[OpinionPair, ...]
    comparative: bool = False


Tokenizer = Callable[[str], Sequence[Token]]


def segment_sentences(text: str) -> list[str]:
    """Split text on terminal punctuation (. ! ? 。) and newlines.

    Each sentence is the stripped substring between delimiters; empty pieces
    are dropped.
    """
    sentences: list[str] = []
    buf: list[str] = []
    for ch in text:
        if ch in SENTENCE_DELIMITERS or ch == "\n":
            piece = "".join(buf).strip()
            if piece:
                sentences.append(piece)
            buf.clear()
        else:
            buf.append(ch)
    piece = "".join(buf).strip()
    if piece:
        sentences.append(piece)
    return sentences


def lemmatize(surface: str, rules: Iterable[tuple[str, str]]) -> str:
    """Rewrite a surface form with the first matching suffix rule.

    Rules are tried in the given order (the loader pre-sorts longest suffix
    first). A rule only applies when the rewritten form is non-empty; with no
    match the case-folded surface is returned unchanged.
    """
    folded = surface.lower()
    for suffix, replacement in rules:
        if folded.endswith(suffix):
            lemma = folded[: len(folded) - len(suffix)] + replacement
            if lemma:
                return lemma
    return folded


def tokenize(sentence: str, rules: Iterable[tuple[str, str]]) -> list[Token]:
    """Whitespace tokenization with edge punctuation stripped; deterministic."""
    rules = tuple(rules)
    tokens: list[Token] = []
    for raw in sentence.split():
        surface = raw.strip(_EDGE_PUNCT)
        if not surface:
            continue
        tokens.append(Token(surface=surface, lemma=lemmatize(surface, rules), index=len(tokens)))
    return tokens


def detect_mentions(
    tokens: Sequence[Token], bundle: LexiconBundle, domain: str
) -> tuple[list[AdjectiveMention], list[FeatureMention]]:
    """Find adjective and feature mentions among the tokens of one sentence.

    An adjective is negated when a negation cue sits within NEGATION_WINDOW
    tokens of it; repeated cues keep the flag True (it does not toggle).
    """
    if domain not in bundle.catalog.domains:
        raise UnknownDomain(domain)
    cue_positions = [
        t.index
        for t in tokens
        if t.lemma in bundle.negation_cues or t.surface in bundle.negation_cues
    ]
    adjectives: list[AdjectiveMention] = []
    features: list[FeatureMention] = []
    for token in tokens:
        if token.lemma in bundle.adjectives:
            negated = any(abs(c - token.index) <= NEGATION_WINDOW for c in cue_positions)
            adjectives.append(AdjectiveMention(token.index, token.lemma, negated))
        resolved = canonicalize_feature(bundle, domain, token.lemma)
        if resolved is not None:
            features.append(FeatureMention(token.index, resolved[0], resolved[1]))
    return adjectives, features


def pair_mentions(
    adjectives: Sequence[AdjectiveMention],
    features: Sequence[FeatureMention],
    window: int = DEFAULT_WINDOW,
) -> list[OpinionPair]:
    """Pair each adjective with its nearest feature within the token window.

    Candidate order: smallest distance, then a feature preceding the adjective
    (head-final order), then lowest token index. Every adjective yields exactly
    one pair; a feature may serve several adjectives; with no candidate the
    pair carries no feature.
    """
    pairs: list[OpinionPair] = []
    for adjective in adjectives:
        best: FeatureMention | None = None
        best_key: tuple[int, int, int] | None = None
        for feature in features:
            distance = abs(feature.token_index - adjective.token_index)
            if distance > window:
                continue
            key = (
                distance,
                0 if feature.token_index < adjective.token_index else 1,
                feature.token_index,
            )
            if best_key is None or key < best_key:
                best, best_key = feature, key
        if best is None:
            pairs.append(OpinionPair(adjective))
        else:
            pairs.append(OpinionPair(adjective, best, best_key[0]))
    return pairs


def _has_comparative_cue(tokens: Sequence[Token]) -> bool:
    return any(
        token.surface.lower().endswith(cue) for token in tokens for cue in COMPARATIVE_CUES
    )


def analyze_sentence(
    sentence: str,
    bundle: LexiconBundle,
    domain: str,
    window: int = DEFAULT_WINDOW,
    tokenizer: Tokenizer | None = None,
) -> SentenceAnalysis:
    """Run the full per-sentence pipeline: tokens, mentions, pairs.

    The comparative flag only records that a comparative cue (e.g. -pota / 보다)
    occurs; it does not change any downstream label.
    """
    if tokenizer is None:
        tokens: Sequence[Token] = tokenize(sentence, bundle.lemmatizer_rules)
    else:
        tokens = tokenizer(sentence)
    adjectives, features = detect_mentions(tokens, bundle, domain)
    pairs = pair_mentions(adjectives, features, window)
    return SentenceAnalysis(
        sentence=sentence,
        tokens=tuple(tokens),
        adjectives=tuple(adjectives),
        features=tuple(features),
        pairs=tuple(pairs),
        comparative=_has_comparative_cue(tokens),
    )

"""Corpus statistics: adjective-class frequencies, keyword concordance with
opinion/noise partition, and dictionary slicing.

Counting helpers are exposed separately from aggregation so per-document counts
can be merged (deterministically and associatively) before averaging.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .analysis import segment_sentences, tokenize
from .engine import OPINION_LABELS, classify_text
from .lexicon import Cell, LexiconBundle, UnknownDomain, WordClass


def _round_half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


def _round1_half_up(value: float) -> float:
    return math.floor(value * 10 + 0.5) / 10


@dataclass(frozen=True)
class DomainCounts:
    """Adjective occurrences in one domain; amplifiers count as relative."""

    total: int = 0
    absolute: int = 0
    relative: int = 0

    def __add__(self, other: "DomainCounts") -> "DomainCounts":
        return DomainCounts(
            self.total + other.total,
            self.absolute + other.absolute,
            self.relative + other.relative,
        )


@dataclass(frozen=True)
class FrequencyReport:
    per_domain: dict[str, DomainCounts]
    averages: DomainCounts
    absolute_pct: float
    relative_pct: float


@dataclass(frozen=True)
class ConcordanceReport:
    """Sentences containing one adjective, split into opinions and noise.

    Noise is every concordance sentence whose label is not an opinion label
    (facts and undetermined sentences alike). precision = opinion / total.
    """

    adjective: str
    domain: str
    total: int
    opinion: int
    noise: int
    precision: float


def count_adjectives(text: str, domain: str, bundle: LexiconBundle) -> DomainCounts:
    """Count adjective-lexicon token occurrences in one document."""
    if domain not in bundle.catalog.domains:
        raise UnknownDomain(domain)
    total = absolute = relative = 0
    for sentence in segment_sentences(text):
        for token in tokenize(sentence, bundle.lemmatizer_rules):
            entry = bundle.adjectives.get(token.lemma)
            if entry is None:
                continue
            total += 1
            if entry.word_class is WordClass.ABSOLUTE:
                absolute += 1
            else:
                relative += 1
    return DomainCounts(total, absolute, relative)


def merge_domain_counts(
    *counts: Mapping[str, DomainCounts],
) -> dict[str, DomainCounts]:
    """Merge per-domain count maps; associative and order-insensitive."""
    merged: dict[str, DomainCounts] = {}
    for mapping in counts:
        for domain, c in mapping.items():
            merged[domain] = merged.get(domain, DomainCounts()) + c
    return merged


def aggregate_frequency(per_domain: Mapping[str, DomainCounts]) -> FrequencyReport:
    """Average counts over the domains present.

    Averages are rounded half-up to integers; percentages are computed over the
    rounded total and reported to one decimal.
    """
    per_domain = dict(per_domain)
    n = len(per_domain)
    if n == 0:
        return FrequencyReport({}, DomainCounts(), 0.0, 0.0)
    averages = DomainCounts(
        _round_half_up(sum(c.total for c in per_domain.values()) / n),
        _round_half_up(sum(c.absolute for c in per_domain.values()) / n),
        _round_half_up(sum(c.relative for c in per_domain.values()) / n),
    )
    if averages.total == 0:
        return FrequencyReport(per_domain, averages, 0.0, 0.0)
    return FrequencyReport(
        per_domain,
        averages,
        _round1_half_up(100.0 * averages.absolute / averages.total),
        _round1_half_up(100.0 * averages.relative / averages.total),
    )


def frequency_report(
    corpus: Iterable[tuple[str, str]], bundle: LexiconBundle
) -> FrequencyReport:
    """Frequency of absolute vs relative adjective occurrences per domain.

    corpus is an iterable of (domain, document text) pairs; several documents
    may share a domain.
    """
    per_domain: dict[str, DomainCounts] = {}
    for domain, text in corpus:
        counts = count_adjectives(text, domain, bundle)
        per_domain[domain] = per_domain.get(domain, DomainCounts()) + counts
    return aggregate_frequency(per_domain)


def concordance_report(
    corpus: Iterable[str], domain: str, adjective: str, bundle: LexiconBundle
) -> ConcordanceReport:
    """Scan one domain's documents for sentences whose token lemmas include the
    adjective, and classify each into opinion or noise."""
    if not adjective:
        raise ValueError("adjective lemma must be non-empty")
    total = opinion = 0
    for text in corpus:
        for result in classify_text(text, domain, bundle):
            if not any(t.lemma == adjective for t in result.analysis.tokens):
                continue
            total += 1
            if result.label in OPINION_LABELS:
                opinion += 1
    noise = total - opinion
    precision = opinion / total if total else 0.0
    return ConcordanceReport(adjective, domain, total, opinion, noise, precision)


def merge_concordance(a: ConcordanceReport, b: ConcordanceReport) -> ConcordanceReport:
    """Combine two concordance reports for the same adjective and domain."""
    if (a.adjective, a.domain) != (b.adjective, b.domain):
        raise ValueError("cannot merge reports for different adjectives or domains")
    total = a.total + b.total
    opinion = a.opinion + b.opinion
    return ConcordanceReport(
        a.adjective, a.domain, total, opinion, total - opinion,
        opinion / total if total else 0.0,
    )


@dataclass(frozen=True)
class MatrixSlice:
    """A dictionary slice: matrix cells for chosen adjectives, grouped by topic
    category in catalog order. Features with no cell for any requested
    adjective are omitted."""

    domain: str
    adjectives: tuple[str, ...]
    blocks: tuple[tuple[str, tuple[tuple[str, tuple[Cell | None, ...]], ...]], ...]

    def to_tsv(self) -> str:
        """Rows in relative.tsv format; loading them back re-exports identically."""
        lines = ["# domain\tcanonical\tlemma\tcell"]
        for _, rows in self.blocks:
            for feature, cells in rows:
                for lemma, cell in zip(self.adjectives, cells):
                    if cell is not None:
                        lines.append(f"{self.domain}\t{feature}\t{lemma}\t{cell.value}")
        return "\n".join(lines) + "\n"

    def to_grid(self) -> str:
        """Human-readable per-category grid with features as columns."""
        chunks = []
        for category, rows in self.blocks:
            lines = [
                f"DOMAIN\t{self.domain}",
                f"CATEGORY\t{category}",
                "\t" + "\t".join(feature for feature, _ in rows),
            ]
            for i, lemma in enumerate(self.adjectives):
                cells = [rows_cells[i] for _, rows_cells in rows]
                lines.append(
                    lemma + "\t" + "\t".join(c.value if c is not None else "" for c in cells)
                )
            chunks.append("\n".join(lines))
        if not chunks:
            return f"DOMAIN\t{self.domain}\n"
        return "\n\n".join(chunks) + "\n"


def export_matrix_slice(
    bundle: LexiconBundle, domain: str, adjectives: Iterable[str]
) -> MatrixSlice:
    """Slice the relative matrix for a domain and a list of adjective lemmas."""
    if domain not in bundle.catalog.domains:
        raise UnknownDomain(domain)
    adjectives = tuple(adjectives)
    blocks = []
    for (entry_domain, category), nouns in bundle.catalog.entries.items():
        if entry_domain != domain:
            continue
        rows = []
        for noun in nouns:
            cells = tuple(
                bundle.matrix.lookup(domain, noun.canonical, lemma) for lemma in adjectives
            )
            if any(cell is not None for cell in cells):
                rows.append((noun.canonical, cells))
        if rows:
            blocks.append((category, tuple(rows)))
    return MatrixSlice(domain, adjectives, tuple(blocks))

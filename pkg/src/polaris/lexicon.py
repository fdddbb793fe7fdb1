"""Lexical resources: adjective lexicon, feature catalogs, relative-polarity matrix.

A lexicon directory holds up to five TSV files (UTF-8, LF line endings, no BOM;
blank lines and lines starting with "#" are ignored):

    adjectives.tsv   lemma <TAB> class <TAB> polarity
                     class: ABS | REL | AMP; polarity: + | - for ABS, literal NA otherwise
    features.tsv     domain <TAB> category <TAB> canonical <TAB> synonyms <TAB> inherent
                     synonyms are ";"-separated (may be empty); inherent: + | - | 0
    relative.tsv     domain <TAB> canonical <TAB> lemma <TAB> cell     cell: + | - | z
    endings.tsv      suffix <TAB> replacement   (optional; longest suffix wins)
    negation.tsv     one negation cue per line  (optional)

Adjectives come in three classes: ABS entries carry a fixed polarity that holds in
every domain; REL entries take their polarity from the relative matrix, jointly
keyed by domain and feature noun; AMP entries are intensity markers that inherit
the valence of the noun they modify, falling back to the matrix otherwise.

Everything returned by :func:`load_bundle` is immutable after loading and safe to
share across threads without coordination.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path


class Polarity(Enum):
    POSITIVE = "+"
    NEGATIVE = "-"


class Cell(Enum):
    """One cell of the relative matrix; Z marks a non-evaluative pairing."""

    PLUS = "+"
    MINUS = "-"
    Z = "z"


class WordClass(Enum):
    ABSOLUTE = "ABS"
    RELATIVE = "REL"
    AMPLIFIER = "AMP"


_DOMAIN_NAME = re.compile(r"[A-Z][A-Z0-9_]*\Z")

ADJECTIVES_FILE = "adjectives.tsv"
FEATURES_FILE = "features.tsv"
RELATIVE_FILE = "relative.tsv"
ENDINGS_FILE = "endings.tsv"
NEGATION_FILE = "negation.tsv"


# ---------------------------------------------------------------------------
# errors

class LexiconError(Exception):
    """Base class for lexicon loading and lookup failures."""

    def __init__(self, message: str, file: str | None = None, line: int | None = None):
        self.file = file
        self.line = line
        if file is not None:
            where = f"{file}:{line}" if line is not None else file
            message = f"{where}: {message}"
        super().__init__(message)


class MissingLexiconFile(LexiconError):
    pass


class MalformedLine(LexiconError):
    pass


class DuplicateLemma(LexiconError):
    pass


class DanglingMatrixKey(LexiconError):
    pass


class InvalidLexicon(LexiconError):
    """Raised on strict loads for violations without a dedicated error class."""

    def __init__(self, violations: list["Violation"]):
        self.violations = list(violations)
        first = violations[0]
        super().__init__(f"{first.code}: {first.message}", first.file, first.line)


class UnknownDomain(LexiconError):
    def __init__(self, domain: str):
        self.domain = domain
        super().__init__(f"domain {domain!r} is not in the loaded catalog")


# ---------------------------------------------------------------------------
# domain types

@dataclass(frozen=True)
class AdjectiveEntry:
    """One adjective lemma with its class; polarity present iff class is ABS."""

    lemma: str
    word_class: WordClass
    polarity: Polarity | None = None


@dataclass(frozen=True)
class FeatureNoun:
    """A canonical feature noun, its surface synonyms, and an optional valence.

    inherent_polarity is set only for nouns whose own meaning carries a value
    (e.g. attraction vs. violence); amplifier adjectives mirror it.
    """

    canonical: str
    synonyms: frozenset[str] = frozenset()
    inherent_polarity: Polarity | None = None


class FeatureCatalog:
    """Feature nouns grouped by (domain, topic category), with surface lookup.

    Iteration order of :attr:`entries` follows the source file, so exports are
    reproducible. Equality is order-insensitive.
    """

    def __init__(self, entries: dict[tuple[str, str], tuple[FeatureNoun, ...]]):
        self.entries: dict[tuple[str, str], tuple[FeatureNoun, ...]] = {
            key: tuple(nouns) for key, nouns in entries.items()
        }
        self._domains: tuple[str, ...] = tuple(
            dict.fromkeys(domain for domain, _ in self.entries)
        )
        self._nouns: dict[tuple[str, str], FeatureNoun] = {}
        self._surface: dict[tuple[str, str], tuple[str, str]] = {}
        for (domain, category), nouns in self.entries.items():
            for noun in nouns:
                self._nouns.setdefault((domain, noun.canonical), noun)
                for form in (noun.canonical, *sorted(noun.synonyms)):
                    self._surface.setdefault((domain, form), (noun.canonical, category))

    @property
    def domains(self) -> tuple[str, ...]:
        return self._domains

    def categories(self, domain: str) -> tuple[str, ...]:
        return tuple(c for d, c in self.entries if d == domain)

    def features(self, domain: str, category: str) -> tuple[FeatureNoun, ...]:
        return self.entries.get((domain, category), ())

    def noun(self, domain: str, canonical: str) -> FeatureNoun | None:
        return self._nouns.get((domain, canonical))

    def resolve(self, domain: str, surface: str) -> tuple[str, str] | None:
        """Map a surface noun to (canonical, category) within a domain."""
        return self._surface.get((domain, surface))

    def _normalized(self) -> dict[tuple[str, str], frozenset[FeatureNoun]]:
        return {key: frozenset(nouns) for key, nouns in self.entries.items()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FeatureCatalog):
            return NotImplemented
        return self._normalized() == other._normalized()

    def __repr__(self) -> str:
        return f"FeatureCatalog(domains={list(self._domains)}, nouns={len(self._nouns)})"


@dataclass(frozen=True, eq=False)
class RelativeMatrix:
    """(domain, canonical feature, adjective lemma) -> Cell."""

    cells: dict[tuple[str, str, str], Cell]

    def lookup(self, domain: str, canonical: str, lemma: str) -> Cell | None:
        return self.cells.get((domain, canonical, lemma))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RelativeMatrix):
            return NotImplemented
        return self.cells == other.cells


@dataclass(frozen=True, eq=False)
class LexiconBundle:
    """All lexical resources for one engine instance. Treat as read-only.

    adjective_rows preserves every parsed adjective row, including duplicates
    that the lookup map cannot represent; validate_bundle reads it.
    """

    adjectives: dict[str, AdjectiveEntry]
    catalog: FeatureCatalog
    matrix: RelativeMatrix
    lemmatizer_rules: tuple[tuple[str, str], ...]
    negation_cues: frozenset[str]
    adjective_rows: tuple[AdjectiveEntry, ...] = field(default=())

    def __eq__(self, other: object) -> bool:
        # Order-normalized: files that differ only in record order load equal.
        if not isinstance(other, LexiconBundle):
            return NotImplemented
        return (
            self.adjectives == other.adjectives
            and self.catalog == other.catalog
            and self.matrix == other.matrix
            and frozenset(self.lemmatizer_rules) == frozenset(other.lemmatizer_rules)
            and self.negation_cues == other.negation_cues
        )


@dataclass(frozen=True)
class Violation:
    """One data-integrity problem found by validation."""

    code: str
    message: str
    file: str | None = None
    line: int | None = None


# Violation codes.
DUPLICATE_CLASS = "DuplicateClass"
DUPLICATE_LEMMA = "DuplicateLemma"
MISSING_POLARITY = "MissingPolarity"
UNEXPECTED_POLARITY = "UnexpectedPolarity"
DUPLICATE_FEATURE = "DuplicateFeature"
CANONICAL_IN_SYNONYMS = "CanonicalInSynonyms"
SYNONYM_OVERLAP = "SynonymOverlap"
INVALID_DOMAIN_NAME = "InvalidDomainName"
DANGLING_MATRIX_KEY = "DanglingMatrixKey"
NON_RELATIVE_IN_MATRIX = "NonRelativeInMatrix"


# ---------------------------------------------------------------------------
# parsing

def _read_rows(
    path: Path, n_fields: int, required: bool, min_fields: int | None = None
) -> list[tuple[int, list[str]]]:
    if not path.is_file():
        if required:
            raise MissingLexiconFile(f"required lexicon file not found", file=str(path))
        return []
    name = path.name
    text = path.read_text(encoding="utf-8")
    if text.startswith("﻿"):
        raise MalformedLine("byte order mark not allowed", file=name, line=1)
    minimum = n_fields if min_fields is None else min_fields
    rows = []
    for line_no, line in enumerate(text.split("\n"), start=1):
        if line.endswith("\r"):
            raise MalformedLine("CRLF line ending; files must use LF", file=name, line=line_no)
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if not minimum <= len(fields) <= n_fields:
            raise MalformedLine(
                f"expected {n_fields} tab-separated fields, got {len(fields)}",
                file=name,
                line=line_no,
            )
        fields.extend([""] * (n_fields - len(fields)))
        rows.append((line_no, fields))
    return rows


def _parse_adjectives(path: Path) -> list[tuple[int, AdjectiveEntry]]:
    entries = []
    for line_no, (lemma, cls, polarity) in ((n, f) for n, f in _read_rows(path, 3, True)):
        if not lemma:
            raise MalformedLine("empty lemma", file=path.name, line=line_no)
        try:
            word_class = WordClass(cls)
        except ValueError:
            raise MalformedLine(f"unknown class {cls!r}", file=path.name, line=line_no) from None
        if polarity == "NA":
            pol = None
        else:
            try:
                pol = Polarity(polarity)
            except ValueError:
                raise MalformedLine(
                    f"polarity must be +, - or NA, got {polarity!r}", file=path.name, line=line_no
                ) from None
        entries.append((line_no, AdjectiveEntry(lemma, word_class, pol)))
    return entries


def _parse_features(path: Path) -> list[tuple[int, str, str, FeatureNoun]]:
    rows = []
    for line_no, (domain, category, canonical, synonyms, inherent) in (
        (n, f) for n, f in _read_rows(path, 5, True)
    ):
        if not domain or not category or not canonical:
            raise MalformedLine("domain, category and canonical must be non-empty",
                                file=path.name, line=line_no)
        if inherent == "0":
            pol = None
        else:
            try:
                pol = Polarity(inherent)
            except ValueError:
                raise MalformedLine(
                    f"inherent polarity must be +, - or 0, got {inherent!r}",
                    file=path.name, line=line_no,
                ) from None
        syn = frozenset(s for s in synonyms.split(";") if s)
        rows.append((line_no, domain, category, FeatureNoun(canonical, syn, pol)))
    return rows


def _parse_relative(path: Path) -> list[tuple[int, str, str, str, Cell]]:
    rows = []
    for line_no, (domain, canonical, lemma, cell) in ((n, f) for n, f in _read_rows(path, 4, True)):
        try:
            value = Cell(cell.lower())
        except ValueError:
            raise MalformedLine(f"cell must be +, - or z, got {cell!r}",
                                file=path.name, line=line_no) from None
        rows.append((line_no, domain, canonical, lemma, value))
    return rows


def _parse_endings(path: Path) -> list[tuple[str, str]]:
    # A line with only a suffix is a strip rule (empty replacement).
    rules = []
    for line_no, (suffix, replacement) in ((n, f) for n, f in _read_rows(path, 2, False, 1)):
        if not suffix:
            raise MalformedLine("empty suffix", file=path.name, line=line_no)
        rules.append((suffix, replacement))
    # Longest suffix first so the most specific rewrite wins; stable for ties.
    rules.sort(key=lambda rule: -len(rule[0]))
    return rules


def _parse_negation(path: Path) -> frozenset[str]:
    return frozenset(fields[0] for _, fields in _read_rows(path, 1, False))


# ---------------------------------------------------------------------------
# validation

def _validate(
    adjective_rows: list[tuple[int | None, AdjectiveEntry]],
    feature_rows: list[tuple[int | None, str, str, FeatureNoun]],
    matrix_rows: list[tuple[int | None, str, str, str]],
    adjectives: dict[str, AdjectiveEntry],
    catalog: FeatureCatalog,
) -> list[Violation]:
    violations: list[Violation] = []

    classes_seen: dict[str, set[WordClass]] = {}
    lemmas_flagged: set[str] = set()
    for line, entry in adjective_rows:
        seen = classes_seen.setdefault(entry.lemma, set())
        if seen and entry.lemma not in lemmas_flagged:
            code = DUPLICATE_CLASS if entry.word_class not in seen else DUPLICATE_LEMMA
            violations.append(Violation(
                code, f"lemma {entry.lemma!r} appears more than once", ADJECTIVES_FILE, line))
            lemmas_flagged.add(entry.lemma)
        seen.add(entry.word_class)
        if entry.word_class is WordClass.ABSOLUTE and entry.polarity is None:
            violations.append(Violation(
                MISSING_POLARITY, f"absolute entry {entry.lemma!r} has no polarity",
                ADJECTIVES_FILE, line))
        if entry.word_class is not WordClass.ABSOLUTE and entry.polarity is not None:
            violations.append(Violation(
                UNEXPECTED_POLARITY,
                f"{entry.word_class.value} entry {entry.lemma!r} must not carry a polarity",
                ADJECTIVES_FILE, line))

    seen_features: set[tuple[str, str]] = set()
    forms: dict[tuple[str, str], str] = {}
    for line, domain, category, noun in feature_rows:
        if not _DOMAIN_NAME.match(domain):
            violations.append(Violation(
                INVALID_DOMAIN_NAME,
                f"domain {domain!r} is not an uppercase ASCII identifier",
                FEATURES_FILE, line))
        key = (domain, noun.canonical)
        if key in seen_features:
            violations.append(Violation(
                DUPLICATE_FEATURE,
                f"feature {noun.canonical!r} defined twice in domain {domain}",
                FEATURES_FILE, line))
        seen_features.add(key)
        if noun.canonical in noun.synonyms:
            violations.append(Violation(
                CANONICAL_IN_SYNONYMS,
                f"{noun.canonical!r} lists itself as a synonym", FEATURES_FILE, line))
        for form in sorted(noun.synonyms):
            owner = forms.get((domain, form))
            if owner is not None and owner != noun.canonical:
                violations.append(Violation(
                    SYNONYM_OVERLAP,
                    f"form {form!r} belongs to both {owner!r} and {noun.canonical!r} in {domain}",
                    FEATURES_FILE, line))
            forms.setdefault((domain, form), noun.canonical)
        # A synonym must not shadow another feature's canonical form.
        owner = forms.get((domain, noun.canonical))
        if owner is not None and owner != noun.canonical:
            violations.append(Violation(
                SYNONYM_OVERLAP,
                f"canonical {noun.canonical!r} already used as a synonym of {owner!r} in {domain}",
                FEATURES_FILE, line))
        forms.setdefault((domain, noun.canonical), noun.canonical)

    for line, domain, canonical, lemma in matrix_rows:
        if catalog.noun(domain, canonical) is None:
            violations.append(Violation(
                DANGLING_MATRIX_KEY,
                f"({domain}, {canonical!r}) is not in the feature catalog",
                RELATIVE_FILE, line))
        entry = adjectives.get(lemma)
        if entry is None:
            violations.append(Violation(
                DANGLING_MATRIX_KEY,
                f"lemma {lemma!r} is not in the adjective lexicon", RELATIVE_FILE, line))
        elif entry.word_class is WordClass.ABSOLUTE:
            violations.append(Violation(
                NON_RELATIVE_IN_MATRIX,
                f"lemma {lemma!r} has class ABS and cannot appear in the matrix",
                RELATIVE_FILE, line))

    return violations


def validate_bundle(bundle: LexiconBundle) -> list[Violation]:
    """Check all cross-resource invariants; an empty list means the bundle is valid."""
    adjective_rows = [(None, e) for e in (bundle.adjective_rows or tuple(bundle.adjectives.values()))]
    feature_rows = [
        (None, domain, category, noun)
        for (domain, category), nouns in bundle.catalog.entries.items()
        for noun in nouns
    ]
    matrix_rows = [(None, d, c, l) for (d, c, l) in bundle.matrix.cells]
    return _validate(adjective_rows, feature_rows, matrix_rows, bundle.adjectives, bundle.catalog)


# ---------------------------------------------------------------------------
# loading / saving

def load_bundle(directory: str | Path, *, strict: bool = True) -> LexiconBundle:
    """Load and validate a lexicon directory.

    With strict=True (the default) any integrity violation raises the matching
    LexiconError subclass; with strict=False the bundle is returned as parsed so
    callers can inspect validate_bundle's report themselves.
    """
    directory = Path(directory)
    adjective_rows = _parse_adjectives(directory / ADJECTIVES_FILE)
    feature_rows = _parse_features(directory / FEATURES_FILE)
    relative_rows = _parse_relative(directory / RELATIVE_FILE)
    rules = _parse_endings(directory / ENDINGS_FILE)
    cues = _parse_negation(directory / NEGATION_FILE)

    adjectives: dict[str, AdjectiveEntry] = {}
    for _, entry in adjective_rows:
        adjectives.setdefault(entry.lemma, entry)

    grouped: dict[tuple[str, str], list[FeatureNoun]] = {}
    for _, domain, category, noun in feature_rows:
        grouped.setdefault((domain, category), []).append(noun)
    catalog = FeatureCatalog({key: tuple(nouns) for key, nouns in grouped.items()})

    cells = {(domain, canonical, lemma): cell
             for _, domain, canonical, lemma, cell in relative_rows}

    bundle = LexiconBundle(
        adjectives=adjectives,
        catalog=catalog,
        matrix=RelativeMatrix(cells),
        lemmatizer_rules=tuple(rules),
        negation_cues=cues,
        adjective_rows=tuple(entry for _, entry in adjective_rows),
    )

    if strict:
        violations = _validate(
            adjective_rows,
            feature_rows,
            [(line, d, c, l) for line, d, c, l, _ in relative_rows],
            adjectives,
            catalog,
        )
        if violations:
            first = violations[0]
            if first.code in (DUPLICATE_CLASS, DUPLICATE_LEMMA):
                raise DuplicateLemma(first.message, first.file, first.line)
            if first.code == DANGLING_MATRIX_KEY:
                raise DanglingMatrixKey(first.message, first.file, first.line)
            raise InvalidLexicon(violations)
    return bundle


def save_bundle(bundle: LexiconBundle, directory: str | Path) -> None:
    """Write a bundle back to the five TSV files; load_bundle inverts this."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    lines = ["# lemma\tclass\tpolarity"]
    for entry in bundle.adjective_rows or tuple(bundle.adjectives.values()):
        polarity = entry.polarity.value if entry.polarity is not None else "NA"
        lines.append(f"{entry.lemma}\t{entry.word_class.value}\t{polarity}")
    (directory / ADJECTIVES_FILE).write_text("\n".join(lines) + "\n", encoding="utf-8")

    lines = ["# domain\tcategory\tcanonical\tsynonyms\tinherent"]
    for (domain, category), nouns in bundle.catalog.entries.items():
        for noun in nouns:
            inherent = noun.inherent_polarity.value if noun.inherent_polarity else "0"
            synonyms = ";".join(sorted(noun.synonyms))
            lines.append(f"{domain}\t{category}\t{noun.canonical}\t{synonyms}\t{inherent}")
    (directory / FEATURES_FILE).write_text("\n".join(lines) + "\n", encoding="utf-8")

    lines = ["# domain\tcanonical\tlemma\tcell"]
    for (domain, canonical, lemma), cell in bundle.matrix.cells.items():
        lines.append(f"{domain}\t{canonical}\t{lemma}\t{cell.value}")
    (directory / RELATIVE_FILE).write_text("\n".join(lines) + "\n", encoding="utf-8")

    lines = ["# suffix\treplacement"]
    for suffix, replacement in bundle.lemmatizer_rules:
        lines.append(f"{suffix}\t{replacement}")
    (directory / ENDINGS_FILE).write_text("\n".join(lines) + "\n", encoding="utf-8")

    lines = ["# one negation cue per line"]
    lines.extend(sorted(bundle.negation_cues))
    (directory / NEGATION_FILE).write_text("\n".join(lines) + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------
# lookups

def lookup_absolute(bundle: LexiconBundle, lemma: str) -> Polarity | None:
    """Fixed polarity of an ABS lemma; None for unknown, REL and AMP lemmas.

    The result never depends on domain or feature, which is why the operation
    takes neither.
    """
    entry = bundle.adjectives.get(lemma)
    if entry is not None and entry.word_class is WordClass.ABSOLUTE:
        return entry.polarity
    return None


def lookup_relative(
    bundle: LexiconBundle, domain: str, canonical_feature: str, lemma: str
) -> Cell | None:
    """Matrix cell for (domain, canonical feature, lemma); None when absent.

    Unknown keys are a legal query and simply return None.
    """
    return bundle.matrix.lookup(domain, canonical_feature, lemma)


def canonicalize_feature(
    bundle: LexiconBundle, domain: str, surface_noun: str
) -> tuple[str, str] | None:
    """Resolve a surface noun to (canonical, category) within a domain.

    Matching is exact string equality against the canonical form or any synonym;
    None when the noun is unknown in that domain.
    """
    return bundle.catalog.resolve(domain, surface_noun)


# ---------------------------------------------------------------------------
# packaged data

def seed_lexicon_dir() -> Path:
    """Directory holding the packaged seed lexicon."""
    return Path(str(resources.files("polaris").joinpath("data/lexicon")))


def bundled_corpora_dir() -> Path:
    """Directory holding the bundled sample corpora and their manifest."""
    return Path(str(resources.files("polaris").joinpath("data/corpora")))

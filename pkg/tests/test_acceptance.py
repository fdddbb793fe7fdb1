"""Acceptance suite: every release criterion at its stated tolerance.

Each test prints one PASS/FAIL line (visible with pytest -s or in captured
output) and then asserts, so a red run still reports every criterion's status.
"""

import itertools
import time
from pathlib import Path

from corpus_labels import DEMO_FILES, DEMO_LABELS, HOTEL_LABELS, MOBILE_LABELS
from reference_data import (
    ABSOLUTE_SEED,
    CONCORDANCE_TARGETS,
    DOMAIN_FREQUENCIES,
    FREQUENCY_AVERAGES,
    MOBILE_DICT_CELLS,
    RELATIVE_AVERAGE_TARGET,
    RELATIVE_PCT_TARGET,
)

from polaris import (
    AdjectiveMention,
    Cell,
    DomainCounts,
    FeatureMention,
    OpinionPair,
    PairResolution,
    Polarity,
    Resolution,
    ResolutionSource,
    SentenceLabel,
    aggregate_frequency,
    canonicalize_feature,
    classify_sentence,
    classify_text,
    concordance_report,
    count_adjectives,
    flip_resolution,
    load_bundle,
    lookup_absolute,
    lookup_relative,
    merge_domain_counts,
    pair_mentions,
    resolve_pair,
    save_bundle,
    segment_sentences,
    seed_lexicon_dir,
    tokenize,
    validate_bundle,
)

FIXTURES = Path(__file__).parent / "data"


def report(number, name, ok):
    print(f"[acceptance {number}] {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"acceptance criterion {number} ({name}) failed"


def make_pair(lemma, feature=None, negated=False):
    adjective = AdjectiveMention(1, lemma, negated)
    if feature is None:
        return OpinionPair(adjective)
    return OpinionPair(adjective, FeatureMention(0, feature, "c"), 1)


def test_01_matrix_fidelity(bundle):
    started = time.perf_counter()
    ok = True
    for feature, (big, many) in MOBILE_DICT_CELLS.items():
        ok &= lookup_relative(bundle, "MOBILE", feature, "크다") == Cell(big)
        ok &= lookup_relative(bundle, "MOBILE", feature, "많다") == Cell(many)
    elapsed = time.perf_counter() - started
    ok &= len(MOBILE_DICT_CELLS) == 20
    ok &= elapsed < 1.0
    report(1, "seed dictionary cells exact (40 lookups < 1 s)", ok)


def test_02_absolute_fidelity(bundle):
    ok = len(ABSOLUTE_SEED) == 30
    for lemma, polarity in ABSOLUTE_SEED.items():
        ok &= lookup_absolute(bundle, lemma) == Polarity(polarity)
    cases = 0
    for lemma, polarity in ABSOLUTE_SEED.items():
        expected = PairResolution(
            Resolution.POSITIVE if polarity == "+" else Resolution.NEGATIVE,
            ResolutionSource.ABSOLUTE_LEXICON,
        )
        for domain in bundle.catalog.domains:
            category = bundle.catalog.categories(domain)[0]
            nouns = [n.canonical for n in bundle.catalog.features(domain, category)][:3]
            for canonical in nouns:
                ok &= resolve_pair(make_pair(lemma, canonical), domain, bundle) == expected
                cases += 1
    ok &= cases >= 450
    report(2, f"absolute polarity stable across domains ({cases} cases)", ok)


def test_03_reference_sentence_labels(bundle):
    cases = [
        ("HOTEL", "Lostey hotheyl cupyen-ey khun kenmul-i manh-supnita.",
         SentenceLabel.FACT),
        ("HOTEL", "Hotheyl kyumo-ka khu-ko kunsaha-neyyo.",
         SentenceLabel.OPINION_POSITIVE),
        ("HOTEL", "Lostey hotyel-un khu-ko wungcang-haysseyo.",
         SentenceLabel.OPINION_POSITIVE),
        ("MOBILE", "Aiphon-uy khuki-ka sayngkak-pota khu-n kes kath-ayo.",
         SentenceLabel.OPINION_NEGATIVE),
        ("MOBILE", "Hayntuphon pethun-i khe-se cal nullye-yo.",
         SentenceLabel.OPINION_POSITIVE),
    ]
    ok = True
    for domain, sentence, expected in cases:
        results = classify_text(sentence, domain, bundle)
        ok &= len(results) == 1 and results[0].label is expected
    report(3, "romanized reference sentences label exactly", ok)


def test_04_amplifier_rule(bundle):
    positive = classify_text(
        "I yenghwa-nun kwankayk-ul ppalatuli-nun hupilyek-I kang-haysseyo.",
        "MOVIE", bundle)[0]
    negative = classify_text(
        "Phoklyekseng-I kang-han yenghwa-tukunyo.", "MOVIE", bundle)[0]
    ok = positive.resolutions == (
        PairResolution(Resolution.POSITIVE, ResolutionSource.AMPLIFIER_RULE),
    )
    ok &= negative.resolutions == (
        PairResolution(Resolution.NEGATIVE, ResolutionSource.AMPLIFIER_RULE),
    )
    ok &= positive.label is SentenceLabel.OPINION_POSITIVE
    ok &= negative.label is SentenceLabel.OPINION_NEGATIVE
    report(4, "amplifier mirrors noun valence (positive/negative)", ok)


def test_05_concordance_precision(bundle, corpora_dir):
    ok = True
    for domain, filename, lines in (
        ("HOTEL", "hotel_khuta.txt", HOTEL_LABELS),
        ("MOBILE", "mobile_khuta.txt", MOBILE_LABELS),
    ):
        target = CONCORDANCE_TARGETS[domain]
        text = (corpora_dir / filename).read_text(encoding="utf-8")
        rep = concordance_report([text], domain, "크다", bundle)
        ok &= (rep.total, rep.noise, rep.opinion) == (
            target["total"], target["noise"], target["opinion"])
        ok &= rep.precision == target["opinion"] / target["total"]
        ok &= abs(rep.precision - target["precision"]) <= 0.001
        ok &= len(lines) == target["total"]
    report(5, "bundled-corpus concordance precision 0.795 / 0.774 (±0.001)", ok)


def test_06_frequency_arithmetic(bundle, corpora_dir):
    per_domain = {d: DomainCounts(*c) for d, c in DOMAIN_FREQUENCIES.items()}
    rep = aggregate_frequency(per_domain)
    ok = rep.averages.total == FREQUENCY_AVERAGES["total"]
    ok &= rep.averages.absolute == FREQUENCY_AVERAGES["absolute"]
    ok &= rep.absolute_pct == FREQUENCY_AVERAGES["absolute_pct"]
    # The printed relative average (1251) rounds 1250.4 inconsistently; the
    # half-up path lands within the documented ±1 / ±0.1pp envelope.
    ok &= abs(rep.averages.relative - RELATIVE_AVERAGE_TARGET) <= 1
    ok &= abs(rep.relative_pct - RELATIVE_PCT_TARGET) <= 0.1 + 1e-9
    # Corpus-scale reproduction is impossible; the recount oracle must agree
    # exactly on the bundled corpora instead.
    for domain, filename in (("HOTEL", "hotel_khuta.txt"), ("MOBILE", "mobile_khuta.txt")):
        text = (corpora_dir / filename).read_text(encoding="utf-8")
        counts = count_adjectives(text, domain, bundle)
        total = absolute = 0
        for sentence in segment_sentences(text):
            for token in tokenize(sentence, bundle.lemmatizer_rules):
                entry = bundle.adjectives.get(token.lemma)
                if entry is not None:
                    total += 1
                    absolute += entry.word_class.value == "ABS"
        ok &= counts == DomainCounts(total, absolute, total - absolute)
    report(6, "frequency averaging (2135 / 884 / 41.4%; relative ±1, ±0.1pp)", ok)


def test_07_property_suites(bundle, tmp_path):
    ok = True

    # Negation involution over every value/source combination.
    for value in Resolution:
        for source in ResolutionSource:
            r = PairResolution(value, source)
            ok &= flip_resolution(flip_resolution(r)) == r

    # Synonym invariance: every synonym resolves and looks up like its
    # canonical form.
    for (domain, _category), nouns in bundle.catalog.entries.items():
        for noun in nouns:
            target = canonicalize_feature(bundle, domain, noun.canonical)
            for synonym in noun.synonyms:
                ok &= canonicalize_feature(bundle, domain, synonym) == target
            for (d, canonical, lemma), cell in bundle.matrix.cells.items():
                if d == domain and canonical == noun.canonical:
                    ok &= lookup_relative(bundle, domain, noun.canonical, lemma) == cell

    # Pairing window bound over a deterministic sweep of configurations.
    for window in range(0, 9):
        for adj_index in range(0, 12):
            features = [FeatureMention(i, "화면", "c") for i in range(0, 12, 3)]
            pairs = pair_mentions([AdjectiveMention(adj_index, "크다")], features, window)
            ok &= len(pairs) == 1
            if pairs[0].feature is not None:
                ok &= pairs[0].distance <= window

    # Z-neutrality: neutral resolutions alone never produce an opinion label.
    neutral = PairResolution(Resolution.NEUTRAL, ResolutionSource.RELATIVE_MATRIX)
    for n in range(1, 6):
        ok &= classify_sentence([neutral] * n) is SentenceLabel.FACT

    # Merge associativity of report counts.
    a = {"HOTEL": DomainCounts(3, 1, 2)}
    b = {"HOTEL": DomainCounts(5, 2, 3), "MOBILE": DomainCounts(1, 0, 1)}
    c = {"MOBILE": DomainCounts(4, 4, 0)}
    ok &= merge_domain_counts(merge_domain_counts(a, b), c) == merge_domain_counts(
        a, merge_domain_counts(b, c))

    # Bundle round-trip.
    save_bundle(bundle, tmp_path / "roundtrip")
    ok &= load_bundle(tmp_path / "roundtrip") == bundle

    # classify_sentence equals the brute-force truth table for every multiset
    # of up to four resolutions (5^4 slot combinations).
    slots = [
        None,
        PairResolution(Resolution.POSITIVE, ResolutionSource.RELATIVE_MATRIX),
        PairResolution(Resolution.NEGATIVE, ResolutionSource.RELATIVE_MATRIX),
        neutral,
        PairResolution(Resolution.UNDETERMINED, ResolutionSource.NO_FEATURE),
    ]
    table = {
        (False, False, False, False): SentenceLabel.NO_OPINION,
        (False, False, False, True): SentenceLabel.UNDETERMINED,
        (False, False, True, False): SentenceLabel.FACT,
        (False, False, True, True): SentenceLabel.UNDETERMINED,
        (False, True, False, False): SentenceLabel.OPINION_NEGATIVE,
        (False, True, False, True): SentenceLabel.OPINION_NEGATIVE,
        (False, True, True, False): SentenceLabel.OPINION_NEGATIVE,
        (False, True, True, True): SentenceLabel.OPINION_NEGATIVE,
        (True, False, False, False): SentenceLabel.OPINION_POSITIVE,
        (True, False, False, True): SentenceLabel.OPINION_POSITIVE,
        (True, False, True, False): SentenceLabel.OPINION_POSITIVE,
        (True, False, True, True): SentenceLabel.OPINION_POSITIVE,
        (True, True, False, False): SentenceLabel.OPINION_MIXED,
        (True, True, False, True): SentenceLabel.OPINION_MIXED,
        (True, True, True, False): SentenceLabel.OPINION_MIXED,
        (True, True, True, True): SentenceLabel.OPINION_MIXED,
    }
    cases = 0
    for combo in itertools.product(slots, repeat=4):
        rs = [r for r in combo if r is not None]
        values = [r.value for r in rs]
        key = (
            Resolution.POSITIVE in values,
            Resolution.NEGATIVE in values,
            Resolution.NEUTRAL in values,
            Resolution.UNDETERMINED in values,
        )
        ok &= classify_sentence(rs) is table[key]
        cases += 1
    ok &= cases == 625

    report(7, "property suites (involution, synonyms, window, z, merge, "
              "round-trip, truth table)", ok)


def test_08_validation(bundle):
    ok = validate_bundle(bundle) == []
    expected = {
        "corrupt_duplicate_class": "DuplicateClass",
        "corrupt_dangling_key": "DanglingMatrixKey",
        "corrupt_absolute_in_matrix": "NonRelativeInMatrix",
    }
    for directory, code in expected.items():
        broken = load_bundle(FIXTURES / directory, strict=False)
        violations = validate_bundle(broken)
        ok &= [v.code for v in violations] == [code]
    report(8, "seed validates clean; each corruption yields one violation", ok)


def test_bundled_demo_corpora_label_as_authored(bundle, corpora_dir):
    # Not a numbered criterion: freezes the per-line labels of every bundled
    # demo document so seed edits cannot silently change behavior.
    ok = True
    for domain, filename in DEMO_FILES.items():
        text = (corpora_dir / filename).read_text(encoding="utf-8")
        results = classify_text(text, domain, bundle)
        expected = [label for _, label in DEMO_LABELS[domain]]
        ok &= [r.label.value for r in results] == expected
    report("demo", "bundled demo corpora label as authored", ok)

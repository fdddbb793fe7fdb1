"""Command-line interface.

    polaris classify    --domain D file... | --manifest FILE   [--format tsv|json]
    polaris concordance --domain D --adjective LEMMA file...   [--format tsv|json]
    polaris stats       --manifest FILE                        [--format tsv|json]
    polaris lexicon validate
    polaris lexicon export --domain D --adjective LEMMA [--adjective ...] [--format grid|tsv]

Every subcommand takes --lexicon DIR; when omitted, the POLARIS_LEXICON_DIR
environment variable is used, then the packaged seed lexicon. Exit codes:
0 success, 1 validation findings, 2 lexicon error, 3 input error. Data goes to
stdout and is byte-identical across runs; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .engine import SentenceResult, classify_text
from .lexicon import (
    LexiconBundle,
    LexiconError,
    UnknownDomain,
    load_bundle,
    seed_lexicon_dir,
    validate_bundle,
)
from .reporting import concordance_report, export_matrix_slice, frequency_report

ENV_LEXICON_DIR = "POLARIS_LEXICON_DIR"

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_LEXICON = 2
EXIT_INPUT = 3


class InputError(Exception):
    """Bad corpus input: unreadable file, malformed manifest, unknown domain."""


def _lexicon_dir(args: argparse.Namespace) -> Path:
    if args.lexicon:
        return Path(args.lexicon)
    env = os.environ.get(ENV_LEXICON_DIR)
    if env:
        return Path(env)
    return seed_lexicon_dir()


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _read_manifest(path: Path, bundle: LexiconBundle) -> list[tuple[str, str, str]]:
    """Manifest rows: doc_id <TAB> domain <TAB> path, paths relative to the
    manifest file. Fully validated before any document is processed."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read manifest {path}: {exc.strerror or exc}") from exc
    rows: list[tuple[str, str, str]] = []
    seen: set[str] = set()
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise InputError(f"{path}:{line_no}: expected 3 tab-separated fields")
        doc_id, domain, doc_path = fields
        if doc_id in seen:
            raise InputError(f"{path}:{line_no}: duplicate doc_id {doc_id!r}")
        seen.add(doc_id)
        if domain not in bundle.catalog.domains:
            raise InputError(f"{path}:{line_no}: unknown domain {domain!r}")
        resolved = path.parent / doc_path
        if not resolved.is_file():
            raise InputError(f"{path}:{line_no}: document not found: {resolved}")
        rows.append((doc_id, domain, str(resolved)))
    return rows


def _gather_documents(args: argparse.Namespace, bundle: LexiconBundle) -> list[tuple[str, str, str]]:
    """Return (doc_id, domain, text) triples, fully validated."""
    if args.manifest:
        if args.domain or args.inputs:
            raise InputError("--manifest cannot be combined with --domain or input files")
        rows = _read_manifest(Path(args.manifest), bundle)
        return [(doc_id, domain, _read_text(Path(p))) for doc_id, domain, p in rows]
    if not args.domain:
        raise InputError("either --manifest or --domain with input files is required")
    if args.domain not in bundle.catalog.domains:
        raise InputError(f"unknown domain {args.domain!r}")
    docs = []
    for name in args.inputs:
        docs.append((name, args.domain, _read_text(Path(name))))
    return docs


def _format_pair(result: SentenceResult, i: int) -> str:
    pair = result.analysis.pairs[i]
    res = result.resolutions[i]
    adjective = ("~" if pair.adjective.negated else "") + pair.adjective.lemma
    if pair.feature is None:
        target = "->∅"
    else:
        target = f"->{pair.feature.canonical}@{pair.feature.token_index}:{pair.distance}"
    return f"{adjective}@{pair.adjective.token_index}{target}={res.value.value}/{res.source.value}"


def _pair_json(result: SentenceResult, i: int) -> dict:
    pair = result.analysis.pairs[i]
    res = result.resolutions[i]
    record = {
        "adjective": pair.adjective.lemma,
        "token_index": pair.adjective.token_index,
        "negated": pair.adjective.negated,
        "feature": pair.feature.canonical if pair.feature else None,
        "feature_index": pair.feature.token_index if pair.feature else None,
        "category": pair.feature.category if pair.feature else None,
        "distance": pair.distance,
        "value": res.value.value,
        "source": res.source.value,
    }
    return record


def cmd_classify(args: argparse.Namespace, bundle: LexiconBundle) -> int:
    documents = _gather_documents(args, bundle)
    records = []
    for doc_id, domain, text in documents:
        for index, result in enumerate(classify_text(text, domain, bundle)):
            records.append((doc_id, index, result))
    records.sort(key=lambda r: (r[0], r[1]))
    lines = []
    for doc_id, index, result in records:
        if args.format == "json":
            lines.append(json.dumps({
                "schema": 1,
                "doc_id": doc_id,
                "sentence_index": index,
                "label": result.label.value,
                "comparative": result.analysis.comparative,
                "pairs": [_pair_json(result, i) for i in range(len(result.resolutions))],
            }, ensure_ascii=False))
        else:
            pairs = ";".join(_format_pair(result, i) for i in range(len(result.resolutions)))
            comparative = "1" if result.analysis.comparative else "0"
            lines.append(
                f"{doc_id}\t{index}\t{result.label.value}\t{comparative}\t{pairs or '-'}"
            )
    for line in lines:
        print(line)
    return EXIT_OK


def cmd_concordance(args: argparse.Namespace, bundle: LexiconBundle) -> int:
    if args.domain not in bundle.catalog.domains:
        raise InputError(f"unknown domain {args.domain!r}")
    texts = [_read_text(Path(name)) for name in args.inputs]
    report = concordance_report(texts, args.domain, args.adjective, bundle)
    if args.format == "json":
        print(json.dumps({
            "schema": 1,
            "adjective": report.adjective,
            "domain": report.domain,
            "total": report.total,
            "opinion": report.opinion,
            "noise": report.noise,
            "precision": report.precision,
        }, ensure_ascii=False))
    else:
        print("# adjective\tdomain\ttotal\topinion\tnoise\tprecision")
        print(f"{report.adjective}\t{report.domain}\t{report.total}"
              f"\t{report.opinion}\t{report.noise}\t{report.precision:.6f}")
    return EXIT_OK


def cmd_stats(args: argparse.Namespace, bundle: LexiconBundle) -> int:
    rows = _read_manifest(Path(args.manifest), bundle)
    corpus = [(domain, _read_text(Path(p))) for _, domain, p in rows]
    report = frequency_report(corpus, bundle)
    domains = sorted(report.per_domain)
    if args.format == "json":
        print(json.dumps({
            "schema": 1,
            "per_domain": {
                d: {"total": c.total, "absolute": c.absolute, "relative": c.relative}
                for d, c in ((d, report.per_domain[d]) for d in domains)
            },
            "averages": {
                "total": report.averages.total,
                "absolute": report.averages.absolute,
                "relative": report.averages.relative,
            },
            "percentages": {"absolute": report.absolute_pct, "relative": report.relative_pct},
        }, ensure_ascii=False))
    else:
        print("# domain\ttotal\tabsolute\trelative")
        for domain in domains:
            c = report.per_domain[domain]
            print(f"{domain}\t{c.total}\t{c.absolute}\t{c.relative}")
        a = report.averages
        print(f"average\t{a.total}\t{a.absolute}\t{a.relative}")
        print(f"percent\t\t{report.absolute_pct}\t{report.relative_pct}")
    return EXIT_OK


def cmd_lexicon(args: argparse.Namespace, lexicon_dir: Path) -> int:
    if args.action == "validate":
        bundle = load_bundle(lexicon_dir, strict=False)
        violations = validate_bundle(bundle)
        for v in violations:
            where = f"{v.file or '-'}:{v.line if v.line is not None else '-'}"
            print(f"{v.code}\t{where}\t{v.message}")
        if violations:
            return EXIT_FINDINGS
        print("ok")
        return EXIT_OK
    bundle = load_bundle(lexicon_dir)
    if args.domain not in bundle.catalog.domains:
        raise InputError(f"unknown domain {args.domain!r}")
    matrix_slice = export_matrix_slice(bundle, args.domain, args.adjective or [])
    if args.format == "tsv":
        sys.stdout.write(matrix_slice.to_tsv())
    else:
        sys.stdout.write(matrix_slice.to_grid())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polaris",
                                     description="Lexicon-driven opinion polarity engine")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_lexicon_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--lexicon", metavar="DIR",
                       help=f"lexicon directory (default: ${ENV_LEXICON_DIR} or packaged seed)")

    p = sub.add_parser("classify", help="label every sentence of the input documents")
    add_lexicon_flag(p)
    p.add_argument("--domain", metavar="D", help="domain for the positional input files")
    p.add_argument("--manifest", metavar="FILE", help="TSV manifest: doc_id, domain, path")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("inputs", nargs="*", metavar="FILE")
    p.set_defaults(handler="classify")

    p = sub.add_parser("concordance", help="opinion/noise statistics for one adjective")
    add_lexicon_flag(p)
    p.add_argument("--domain", metavar="D", required=True)
    p.add_argument("--adjective", metavar="LEMMA", required=True)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("inputs", nargs="+", metavar="FILE")
    p.set_defaults(handler="concordance")

    p = sub.add_parser("stats", help="absolute/relative frequency over a manifest corpus")
    add_lexicon_flag(p)
    p.add_argument("--manifest", metavar="FILE", required=True)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(handler="stats")

    p = sub.add_parser("lexicon", help="validate the lexicon or export a dictionary slice")
    lexicon_sub = p.add_subparsers(dest="action", required=True)
    pv = lexicon_sub.add_parser("validate", help="report every data-integrity violation")
    add_lexicon_flag(pv)
    pv.set_defaults(handler="lexicon")
    pe = lexicon_sub.add_parser("export", help="slice the relative matrix for one domain")
    add_lexicon_flag(pe)
    pe.add_argument("--domain", metavar="D", required=True)
    pe.add_argument("--adjective", metavar="LEMMA", action="append", default=[])
    pe.add_argument("--format", choices=("grid", "tsv"), default="grid")
    pe.set_defaults(handler="lexicon")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    print(f"polaris {__version__}", file=sys.stderr)
    lexicon_dir = _lexicon_dir(args)
    try:
        if args.handler == "lexicon":
            return cmd_lexicon(args, lexicon_dir)
        bundle = load_bundle(lexicon_dir)
        if args.handler == "classify":
            return cmd_classify(args, bundle)
        if args.handler == "concordance":
            return cmd_concordance(args, bundle)
        return cmd_stats(args, bundle)
    except LexiconError as exc:
        if isinstance(exc, UnknownDomain):
            print(f"polaris: {exc}", file=sys.stderr)
            return EXIT_INPUT
        print(f"polaris: lexicon error: {exc}", file=sys.stderr)
        return EXIT_LEXICON
    except InputError as exc:
        print(f"polaris: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())

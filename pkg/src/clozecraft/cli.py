"""Batch command line: generate grammar items from text files and report.

Input handling: a directory is read as one document per ``*.txt`` file
(sorted by name); a regular file is read as one document per non-blank line.
Item records go to ``--output`` (or stdout) as line-delimited JSON; the
report prints to stderr so records stay pipeable.

Exit codes: 0 success, 1 I/O error, 2 configuration error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .analytics import report_from_records, report_from_results
from .catalog import CatalogError
from .generator import GrammarItemGenerator, RejectionRecord
from .records import RecordError, summary_record, write_records
from .scoring import DEFAULT_MODEL, ScorerError

EXIT_OK = 0
EXIT_IO = 1
EXIT_CONFIG = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clozecraft",
        description="Generate multiple-choice grammar items from passages.",
    )
    parser.add_argument("--input", help="text file (one document per line) "
                        "or directory of *.txt documents")
    parser.add_argument("--output", help="item record file (default: stdout)")
    parser.add_argument("--constructs",
                        help="comma-separated construct codes, priority order "
                        "(default: all enabled)")
    parser.add_argument("--num-distractors", type=int, default=2)
    parser.add_argument("--model", default=DEFAULT_MODEL,
                        help=f"scorer id (default: {DEFAULT_MODEL})")
    parser.add_argument("--seed", type=int, default=0,
                        help="choice shuffle seed")
    parser.add_argument("--report-only", metavar="PATH",
                        help="recompute the report from an existing record "
                        "file; no generation")
    parser.add_argument("--workers", type=int, default=4,
                        help="document worker threads")
    return parser


def load_documents(input_path: str) -> list[str]:
    path = Path(input_path)
    if path.is_dir():
        files = sorted(path.glob("*.txt"))
        if not files:
            raise OSError(f"no *.txt documents under {path}")
        return [f.read_text(encoding="utf-8") for f in files]
    text = path.read_text(encoding="utf-8")
    docs = [line.strip() for line in text.splitlines() if line.strip()]
    if not docs:
        raise OSError(f"{path} contains no documents")
    return docs


def run_batch(args: argparse.Namespace) -> int:
    try:
        constructs = ([c.strip() for c in args.constructs.split(",")]
                      if args.constructs else None)
        generator = GrammarItemGenerator(
            model=args.model,
            constructs=constructs,
            num_distractors=args.num_distractors,
            shuffle_seed=args.seed,
        ).fit()
    except (ValueError, CatalogError, ScorerError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        documents = load_documents(args.input)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_IO

    annotator = generator.annotator_
    pipeline = generator.pipeline_
    config = generator.config_

    def process(text: str):
        passage = annotator.annotate(text)
        items, rejections = pipeline.generate_passage_items(passage, config)
        return len(passage.sentences), items, rejections

    with ThreadPoolExecutor(max_workers=max(1, args.workers)) as pool:
        results = list(pool.map(process, documents))

    total_sentences = sum(n for n, _, _ in results)
    all_items = [(i, item) for i, (_, items, _) in enumerate(results)
                 for item in items]
    all_rejections: list[RejectionRecord] = [
        rej for _, _, rejections in results for rej in rejections]

    summary = summary_record(len(documents), total_sentences, all_rejections)
    try:
        if args.output:
            with open(args.output, "w", encoding="utf-8") as out:
                write_records(out, all_items, summary)
        else:
            write_records(sys.stdout, all_items, summary)
    except OSError as exc:
        print(f"output error: {exc}", file=sys.stderr)
        return EXIT_IO

    report = report_from_results(
        len(documents), total_sentences,
        [item for _, item in all_items], all_rejections)
    print(report.format_text(), file=sys.stderr)
    return EXIT_OK


def run_report(path: str) -> int:
    try:
        with open(path, encoding="utf-8") as handle:
            report = report_from_records(handle)
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_IO
    except RecordError as exc:
        print(f"record error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(report.format_text())
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.report_only:
        return run_report(args.report_only)
    if not args.input:
        parser.print_usage(sys.stderr)
        print("error: --input is required unless --report-only is given",
              file=sys.stderr)
        return EXIT_CONFIG
    if args.num_distractors < 1:
        print("configuration error: --num-distractors must be >= 1",
              file=sys.stderr)
        return EXIT_CONFIG
    return run_batch(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front door: segment, clean, grs, bench, serve.

Designed for shell pipelines: input comes from a file argument or stdin,
output is UTF-8 regardless of locale, and exit codes are stable (0 success,
1 runtime/IO error, 2 usage or configuration error).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .cleaner import clean
from .config import DocType, SegmenterError, make_config
from .harness import bench, load_grs, naive_segment, run_grs
from .processor import segment, segment_spans

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2


def _default_lang() -> str:
    return os.environ.get("SEGTEXT_LANG", "en")


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _print_err(message: str) -> None:
    print(f"segtext: {message}", file=sys.stderr)


def _add_lang(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--lang",
        default=_default_lang(),
        help="two-letter language code (falls back to $SEGTEXT_LANG, then en)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="segtext", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_seg = sub.add_parser("segment", help="split text into sentences")
    _add_lang(p_seg)
    p_seg.add_argument("--char-span", action="store_true", help="emit character spans")
    p_seg.add_argument("--clean", action="store_true", help="clean noisy text first")
    p_seg.add_argument("--doc-type", default="plain", choices=["plain", "pdf"])
    p_seg.add_argument("--format", default="lines", choices=["lines", "jsonl"])
    p_seg.add_argument(
        "--batch",
        action="store_true",
        help="treat each input line as one JSON-encoded document and emit one JSON record per line",
    )
    p_seg.add_argument("file", nargs="?", help="input file (default: stdin)")

    p_clean = sub.add_parser("clean", help="run the destructive text cleaner")
    p_clean.add_argument("--doc-type", default="plain", choices=["plain", "pdf"])
    p_clean.add_argument("--report", action="store_true", help="print rule counts to stderr")
    p_clean.add_argument("file", nargs="?", help="input file (default: stdin)")

    p_grs = sub.add_parser("grs", help="score a golden-rule fixture")
    _add_lang(p_grs)
    p_grs.add_argument("--fixture", required=True, help="path to a JSONL fixture")
    p_grs.add_argument("--min-accuracy", type=float, default=0.9)
    p_grs.add_argument("--baseline", action="store_true", help="also score the naive splitter")
    p_grs.add_argument("--format", default="table", choices=["table", "json"])

    p_bench = sub.add_parser("bench", help="time segmentation over a corpus")
    _add_lang(p_bench)
    p_bench.add_argument("--file", required=True, help="UTF-8 text file to segment")
    p_bench.add_argument("--reps", type=int, default=3)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    return parser


def _cmd_segment(args: argparse.Namespace) -> int:
    config = make_config(
        args.lang, clean=args.clean, char_span=args.char_span, doc_type=args.doc_type
    )

    def one_document(text: str):
        if config.char_span:
            return segment_spans(config, text)
        return segment(config, text)

    if args.batch:
        for lineno, raw in enumerate(_read_input(args.file).splitlines(), start=1):
            if not raw.strip():
                continue
            try:
                record = json.loads(raw)
            except json.JSONDecodeError:
                _print_err(f"error[MalformedFixture]: batch line {lineno} is not valid JSON")
                return EXIT_USAGE
            text = record["text"] if isinstance(record, dict) else record
            if config.char_span:
                spans = one_document(text)
                out = {"spans": [{"text": s.sentence, "start": s.start, "end": s.end} for s in spans]}
            else:
                out = {"sentences": one_document(text)}
            print(json.dumps(out, ensure_ascii=False))
        return EXIT_OK

    text = _read_input(args.file)
    if config.char_span:
        for span in one_document(text):
            if args.format == "jsonl":
                print(
                    json.dumps(
                        {"text": span.sentence, "start": span.start, "end": span.end},
                        ensure_ascii=False,
                    )
                )
            else:
                print(f"{span.start}\t{span.end}\t{span.sentence}")
    else:
        for sentence in one_document(text):
            if args.format == "jsonl":
                print(json.dumps({"text": sentence}, ensure_ascii=False))
            else:
                print(sentence)
    return EXIT_OK


def _cmd_clean(args: argparse.Namespace) -> int:
    report = clean(_read_input(args.file), DocType(args.doc_type))
    sys.stdout.write(report.output)
    if not report.output.endswith("\n"):
        sys.stdout.write("\n")
    if args.report:
        for rule_id, count in report.actions:
            print(f"{rule_id}\t{count}", file=sys.stderr)
    return EXIT_OK


def _cmd_grs(args: argparse.Namespace) -> int:
    config = make_config(args.lang)
    rules = load_grs(args.fixture)
    report = run_grs(config, rules)
    failed_ids = {rid for rid, _, _ in report.failures}
    if args.format == "json":
        print(
            json.dumps(
                {
                    "language": args.lang,
                    "total": report.total,
                    "passed": report.passed,
                    "accuracy": round(report.accuracy, 4),
                    "failures": [
                        {"id": rid, "got": list(got), "expected": list(expected)}
                        for rid, got, expected in report.failures
                    ],
                },
                ensure_ascii=False,
            )
        )
    else:
        for rule in rules:
            status = "FAIL" if rule.id in failed_ids else "pass"
            print(f"{status}  {rule.id:>4}  {rule.description}")
        print(f"accuracy {report.passed}/{report.total} = {report.accuracy * 100:.2f}%")
    if args.baseline:
        base = run_grs(config, rules, segmenter=naive_segment)
        print(f"baseline accuracy {base.passed}/{base.total} = {base.accuracy * 100:.2f}%")
    return EXIT_OK if report.accuracy >= args.min_accuracy else EXIT_RUNTIME


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.reps < 1:
        _print_err("error[IncompatibleOptions]: --reps must be >= 1")
        return EXIT_USAGE
    config = make_config(args.lang)
    text = Path(args.file).read_text(encoding="utf-8")
    report = bench(config, text, repetitions=args.reps)
    print(f"wall_time_ms\t{report.wall_time_ms:.2f}")
    print(f"sentences\t{report.sentences}")
    print(f"chars\t{report.chars}")
    print(f"throughput_chars_per_s\t{report.throughput:.0f}")
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "segment": _cmd_segment,
        "clean": _cmd_clean,
        "grs": _cmd_grs,
        "bench": _cmd_bench,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except SegmenterError as exc:
        _print_err(f"error[{exc.kind.value}]: {exc.detail}")
        return EXIT_USAGE
    except OSError as exc:
        _print_err(f"error[io]: {exc}")
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

    roman-urdu transliterate --lexicon L --rules R [--trace] [FILE]
    roman-urdu eval --lexicon L --rules R GOLD
    roman-urdu lexicon-stats --lexicon L

Exit codes: 0 ok, 1 usage error, 2 data or parse error, 3 evaluation
alignment error. All I/O is UTF-8; stdout carries only the payload.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from typing import BinaryIO, Sequence

from .char_mapper import read_rules
from .disambiguator import DisambiguationResult, read_ngram_corpus, train_ngram
from .errors import AlignmentError, DataError, UsageError
from .evaluation import evaluate_engine, format_report, loads_gold, read_gold
from .lexicon import read_lexicon
from .pipeline import Engine, EngineConfig, TokenTrace

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_ALIGNMENT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _engine_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rules", metavar="PATH", help="grapheme rule table (TSV)")
    p.add_argument("--backend", choices=("context", "ngram"), default="context")
    p.add_argument("--ngram-corpus", metavar="PATH", help="Urdu training text for --backend ngram")
    p.add_argument("--ngram-order", type=int, default=2, metavar="N")
    p.add_argument("--zero-score-policy", choices=("frequency", "first"), default="frequency")
    p.add_argument("--no-punct-map", action="store_true")
    p.add_argument("--no-segmentation", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="roman-urdu", description="Context-aware Roman-Urdu to Urdu script transliteration.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    tr = sub.add_parser("transliterate", help="transliterate a file or standard input")
    tr.add_argument("--lexicon", metavar="PATH")
    _engine_flags(tr)
    tr.add_argument("--trace", action="store_true", help="write per-word JSON traces to stderr")
    tr.add_argument("--format", choices=("text", "json-lines"), default="text")
    tr.add_argument("input", nargs="?", help="input file (default: stdin)")

    ev = sub.add_parser("eval", help="word accuracy against a gold corpus")
    ev.add_argument("--lexicon", metavar="PATH")
    _engine_flags(ev)
    ev.add_argument("input", nargs="?", help="gold corpus file (default: stdin)")

    st = sub.add_parser("lexicon-stats", help="print lexicon diagnostics")
    st.add_argument("--lexicon", metavar="PATH")
    return parser


def _make_engine(args) -> Engine:
    if not args.lexicon:
        raise UsageError(f"{args.command}: --lexicon is required")
    if not args.rules:
        raise UsageError(f"{args.command}: --rules is required")
    model = None
    if args.backend == "ngram":
        if not args.ngram_corpus:
            raise UsageError("--backend ngram requires --ngram-corpus")
        model = train_ngram(read_ngram_corpus(args.ngram_corpus), args.ngram_order)
    config = EngineConfig(
        zero_score_policy=args.zero_score_policy,
        disambiguation_backend=args.backend,
        map_punctuation=not args.no_punct_map,
        segmentation_enabled=not args.no_segmentation,
    )
    return Engine(read_lexicon(args.lexicon), read_rules(args.rules), config, model)


def trace_record(trace: TokenTrace) -> dict:
    """JSON-ready form of one per-word trace."""
    rec = {"input": trace.input, "output": trace.output, "route": trace.route.value, "scores": []}
    detail = trace.detail
    if isinstance(detail, DisambiguationResult):
        rec["method"] = detail.method.value
        rec["scores"] = [_score_record(s) for s in detail.scores]
    elif isinstance(detail, tuple):
        rec["segments"] = [trace_record(t) for t in detail]
    elif isinstance(detail, bool):
        rec["fully_mapped"] = detail
    return rec


def _score_record(s) -> dict:
    out = {"urdu": s.entry.urdu_form, "frequency": s.entry.frequency, "matches": s.match_count}
    if s.nearest_cue is not None:
        out["nearest_cue"] = s.nearest_cue
    if s.probability is not None:
        out["probability"] = s.probability
    return out


def _read_input(path, stdin: BinaryIO) -> str:
    data = open(path, "rb").read() if path else stdin.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DataError(f"input is not valid UTF-8 at byte {exc.start}", path or "<stdin>") from exc


def _jsonl(traces) -> str:
    return "".join(json.dumps(trace_record(t), ensure_ascii=False) + "\n" for t in traces)


def _cmd_transliterate(args, stdin, stdout, stderr) -> int:
    engine = _make_engine(args)
    result = engine.transliterate(_read_input(args.input, stdin))
    if args.format == "json-lines":
        stdout.write(_jsonl(result.traces))
    else:
        stdout.write(result.text)
        if args.trace:
            stderr.write(_jsonl(result.traces))
    return EXIT_OK


def _cmd_eval(args, stdin, stdout, stderr) -> int:
    engine = _make_engine(args)
    if args.input:
        gold = read_gold(args.input)
    else:
        gold = loads_gold(_read_input(None, stdin), name="<stdin>")
    report = evaluate_engine(engine, gold)
    if report.empty:
        stderr.write("warning: no gold words; accuracy reported as 1.0 by convention\n")
    format_report(report, stdout)
    return EXIT_OK


def _cmd_stats(args, stdin, stdout, stderr) -> int:
    if not args.lexicon:
        raise UsageError("lexicon-stats: --lexicon is required")
    lex = read_lexicon(args.lexicon)
    senses = [len(v) for v in lex.entries.values()]
    stdout.write(f"entries={len(lex)}\n")
    stdout.write(f"keys={len(senses)}\n")
    stdout.write(f"ambiguous_keys={sum(1 for n in senses if n >= 2)}\n")
    stdout.write(f"max_senses={max(senses, default=0)}\n")
    return EXIT_OK


_COMMANDS = {"transliterate": _cmd_transliterate, "eval": _cmd_eval, "lexicon-stats": _cmd_stats}


def _utf8(stream):
    buf = getattr(stream, "buffer", None)
    if buf is None:
        return stream
    return io.TextIOWrapper(buf, encoding="utf-8", newline="", write_through=True)


def main(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin.buffer
    stdout = stdout if stdout is not None else _utf8(sys.stdout)
    stderr = stderr if stderr is not None else _utf8(sys.stderr)
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required: transliterate, eval or lexicon-stats")
        return _COMMANDS[args.command](args, stdin, stdout, stderr)
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except AlignmentError as exc:
        stderr.write(f"alignment error: {exc}\n")
        return EXIT_ALIGNMENT
    except DataError as exc:
        stderr.write(f"data error: {exc}\n")
        return EXIT_DATA
    except OSError as exc:
        stderr.write(f"data error: {exc.filename or ''}: {exc.strerror}\n")
        return EXIT_DATA
    finally:
        stdout.flush()


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``translit transliterate | train | evaluate``.

Exit codes are stable so scripts can branch on them: 0 success, 2 bad
usage or configuration, 3 I/O failure, 4 malformed data file, 5
pipeline failure on the input text, 6 ambiguous input with no model.
"""

from __future__ import annotations

import argparse
import sys

from .errors import (
    ConfigError,
    DataFormatError,
    MissingModelError,
    PipelineError,
    TransliterationError,
)
from .evaluation import evaluate, format_report
from .mapping import MappedUnit, Resolution
from .pipeline import EngineConfig, Transliterator
from .script import CharClass, Grapheme, load_inventory
from .training import WORD_GAP, load_aligned, save_model, train_model

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_DATA = 4
EXIT_PIPELINE = 5
EXIT_MISSING_MODEL = 6

_KIND_CODES = {
    "R": Resolution.RULE,
    "S": Resolution.STATISTICAL,
    "F": Resolution.FALLBACK,
    "P": Resolution.PASS_THROUGH,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="translit",
        description="Transliterate Sindhi text from Devanagari to Perso-Arabic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tr = sub.add_parser("transliterate", help="convert text line by line")
    p_tr.add_argument("--config", help="key=value config file")
    p_tr.add_argument("--inventory", help="inventory file (overrides config)")
    p_tr.add_argument("--mapping", help="mapping table (overrides config)")
    p_tr.add_argument("--model", help="trained model file (overrides config)")
    p_tr.add_argument("--mode", choices=["bigram", "trigram"],
                      help="context model for disambiguation")
    p_tr.add_argument("--orphan-matra", choices=["reject", "pass"], dest="orphan_matra")
    p_tr.add_argument("--unmapped", choices=["error", "pass"])
    p_tr.add_argument("--trace", action="store_true",
                      help="write one resolution record per grapheme to stderr")
    p_tr.add_argument("-i", "--input", help="input file (default stdin)")
    p_tr.add_argument("-o", "--output", help="output file (default stdout)")
    p_tr.set_defaults(func=cmd_transliterate)

    p_train = sub.add_parser("train", help="count corpora into a model file")
    p_train.add_argument("--inventory", required=True)
    p_train.add_argument("--corpus", required=True, help="raw text, one sentence per line")
    p_train.add_argument("--aligned", required=True,
                         help="aligned rows: source graphemes TAB target units")
    p_train.add_argument("-o", "--out", required=True, help="model file to write")
    p_train.set_defaults(func=cmd_train)

    p_eval = sub.add_parser("evaluate", help="score output against aligned gold rows")
    p_eval.add_argument("--gold", required=True)
    source = p_eval.add_mutually_exclusive_group(required=True)
    source.add_argument("--system", help="system output in aligned-row format")
    source.add_argument("--end-to-end", action="store_true",
                        help="run the engine on the gold source side")
    p_eval.add_argument("--config", help="engine config (used with --end-to-end)")
    p_eval.add_argument("--model", help="model file (overrides config)")
    p_eval.add_argument("--include-passthrough", action="store_true",
                        help="count pass-through positions in the totals")
    p_eval.add_argument("--report", help="also write the report to this file")
    p_eval.set_defaults(func=cmd_evaluate)
    return parser


def _engine_from_args(args) -> Transliterator:
    config = EngineConfig.from_file(args.config) if args.config else EngineConfig()
    config = config.override(
        inventory=getattr(args, "inventory", None),
        mapping=getattr(args, "mapping", None),
        model=getattr(args, "model", None),
        mode=getattr(args, "mode", None),
        orphan_matra=getattr(args, "orphan_matra", None),
        unmapped=getattr(args, "unmapped", None),
    )
    return Transliterator(config)


def _trace_line(record) -> str:
    scores = (
        "|".join(repr(v) for v in record.scores) if record.scores is not None else "-"
    )
    candidates = "|".join(record.candidates) if record.candidates else "-"
    return "\t".join(
        (
            str(record.index),
            record.source,
            candidates,
            scores,
            record.chosen,
            record.resolution.value,
        )
    )


def cmd_transliterate(args) -> int:
    engine = _engine_from_args(args)
    fin = open(args.input, encoding="utf-8") if args.input else sys.stdin
    fout = (
        open(args.output, "w", encoding="utf-8", newline="\n")
        if args.output
        else sys.stdout
    )
    try:
        for line_no, raw in enumerate(fin, 1):
            result = engine.transliterate_line(
                raw.rstrip("\r\n"), collect_trace=args.trace
            )
            fout.write(result.output + "\n")
            for record in result.trace:
                sys.stderr.write(f"{line_no}\t{_trace_line(record)}\n")
    finally:
        if args.input:
            fin.close()
        if args.output:
            fout.close()
    return EXIT_OK


def cmd_train(args) -> int:
    inventory = load_inventory(args.inventory)
    with open(args.corpus, encoding="utf-8") as fh:
        corpus_lines = [line.rstrip("\r\n") for line in fh]
    pairs = load_aligned(args.aligned)
    model = train_model(inventory, corpus_lines, pairs)
    save_model(model, args.out)
    print(f"corpus lines      {len(corpus_lines)}")
    print(f"aligned rows      {len(pairs)}")
    print(f"unigram entries   {len(model.unigram)}")
    print(f"bigram entries    {len(model.bigram)}")
    print(f"trigram entries   {len(model.trigram)}")
    print(f"emission entries  {len(model.emission)}")
    print(f"model written to  {args.out}")
    return EXIT_OK


def _load_system_rows(path):
    """System output in aligned-row format, with an optional third column
    of per-unit resolution codes (R, S, F or P); absent codes default to
    Rule.  The unit class is irrelevant to scoring, so placeholder
    graphemes are used."""
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, 1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) < 2:
                raise DataFormatError(
                    "expected <source units>TAB<target units>", path=path, line=line_no
                )
            sources = parts[0].split()
            targets = parts[1].split()
            kinds = parts[2].split() if len(parts) > 2 else []
            if kinds and len(kinds) != len(sources):
                raise DataFormatError(
                    "resolution column length differs from unit count",
                    path=path,
                    line=line_no,
                )
            units = []
            for pos, (src, tgt) in enumerate(zip(sources, targets)):
                if src == WORD_GAP:
                    units.append(
                        MappedUnit(
                            Grapheme(" ", CharClass.OTHER),
                            (),
                            resolved=" ",
                            resolution=Resolution.PASS_THROUGH,
                        )
                    )
                    continue
                if kinds:
                    kind = _KIND_CODES.get(kinds[pos])
                    if kind is None:
                        raise DataFormatError(
                            f"unknown resolution code {kinds[pos]!r}",
                            path=path,
                            line=line_no,
                        )
                else:
                    kind = Resolution.RULE
                units.append(
                    MappedUnit(
                        Grapheme(src, CharClass.CONSONANT),
                        (tgt,),
                        resolved=tgt,
                        resolution=kind,
                    )
                )
            rows.append(units)
    return rows


def cmd_evaluate(args) -> int:
    gold = load_aligned(args.gold)
    if args.system:
        system_rows = _load_system_rows(args.system)
        if len(system_rows) != len(gold):
            raise DataFormatError(
                f"system has {len(system_rows)} rows, gold has {len(gold)}"
            )
    else:
        engine = _engine_from_args(args)
        system_rows = []
        for pair in gold:
            text = "".join(
                " " if unit == WORD_GAP else unit for unit in pair.source_units
            )
            system_rows.append(engine.transliterate_line(text).units)
    report = evaluate(
        system_rows, gold, include_passthrough=args.include_passthrough
    )
    text = format_report(report)
    print(text)
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text + "\n")
    return EXIT_OK


def main(argv=None) -> int:
    for stream in (sys.stdin, sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            try:
                stream.reconfigure(encoding="utf-8")
            except (ValueError, OSError):
                pass  # already closed or not a real stream; use as-is
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as err:
        print(f"translit: config error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except MissingModelError as err:
        print(f"translit: {err}", file=sys.stderr)
        return EXIT_MISSING_MODEL
    except DataFormatError as err:
        print(f"translit: data error: {err}", file=sys.stderr)
        return EXIT_DATA
    except PipelineError as err:
        print(f"translit: {err}", file=sys.stderr)
        return EXIT_PIPELINE
    except TransliterationError as err:
        print(f"translit: {err}", file=sys.stderr)
        return EXIT_PIPELINE
    except OSError as err:
        print(f"translit: i/o error: {err}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

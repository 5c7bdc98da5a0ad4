"""Command-line interface.

Exit codes: 0 on success, 1 on usage errors, 2 on data errors (bad corpus,
unknown phrases, unusable ground truth).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bundle import AnalysisBundle
from .config import FEATURE_MODES, normalize_mode
from .corpus import load_corpus
from .errors import DataError
from .synth import (
    SynthParams,
    benchmark_to_csv,
    degraded_corpus,
    generate_synthetic_course,
    run_matching_benchmark,
    write_course,
)

_MODE_CHOICES = list(FEATURE_MODES) + ["combined"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_corpus_arg(parser):
    parser.add_argument("--corpus", required=True, help="corpus directory")


def _emit(payload, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text, "utf-8")
    else:
        sys.stdout.write(text)


def _parse_range(spec: str) -> list[int]:
    if ":" in spec:
        lo, _, hi = spec.partition(":")
        return list(range(int(lo), int(hi) + 1))
    return [int(spec)]


def _bundle(args) -> AnalysisBundle:
    corpus = load_corpus(args.corpus)
    if getattr(args, "window", None):
        corpus.config.pair_window = args.window
    return AnalysisBundle(corpus)


def build_parser() -> _Parser:
    parser = _Parser(prog="lecturemap", description="Course transcript analytics and visualization service")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("analyze", help="build and export the phrase occurrence table")
    _add_corpus_arg(p)
    p.add_argument("--out", required=True, help="output JSON file")

    p = sub.add_parser("pairs", help="extract word pairs and rank collocations")
    _add_corpus_arg(p)
    p.add_argument("--window", type=int, default=None, help="pair window in tokens (default 10)")
    p.add_argument("--top", type=int, default=50, help="keep the top K collocations")
    p.add_argument("--min-g2", type=float, default=None, help="drop pairs under this G2 score")
    p.add_argument("--out", default=None)

    p = sub.add_parser("chaptermatch", help="score lectures against textbook chapters")
    _add_corpus_arg(p)
    p.add_argument("--mode", choices=_MODE_CHOICES, default="phrases_and_pairs")
    p.add_argument("--zoom", type=int, default=None)
    p.add_argument("--zoom-sweep", default=None, metavar="LO:HI", help="evaluate an accuracy curve over a zoom range")
    p.add_argument("--out", default=None)

    p = sub.add_parser("indexmap", help="compute the transcript index map layout")
    _add_corpus_arg(p)
    p.add_argument("--zoom", type=int, default=None)
    p.add_argument("--focus", type=int, default=1)
    p.add_argument("--contrast", type=int, default=1)
    p.add_argument("--out", default=None)

    p = sub.add_parser("similarity", help="Dice distances + 2D embedding over selected phrases")
    _add_corpus_arg(p)
    p.add_argument("--phrases", required=True, help="comma-separated phrase ids or exact phrase text")
    p.add_argument("--out", default=None)

    p = sub.add_parser("stats", help="per-lecture phrase statistics and dispersion")
    _add_corpus_arg(p)
    p.add_argument("--out", default=None)

    p = sub.add_parser("synth", help="generate a synthetic course directory")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--wer", type=float, default=0.75)
    p.add_argument("--out", required=True, help="corpus directory to create")
    p.add_argument("--chapters", type=int, default=10)
    p.add_argument("--vocab", type=int, default=60)
    p.add_argument("--length", type=int, default=6000)
    p.add_argument("--shared", type=float, default=0.2)
    p.add_argument("--noise-vocab", type=int, default=5000)
    p.add_argument("--confusable", action="store_true", help="reuse content words as noise")

    p = sub.add_parser("bench", help="synthetic accuracy benchmark over modes and zooms")
    p.add_argument("--modes", default="phrases,pairs,g2pairs,combined")
    p.add_argument("--zoom", default=None, metavar="LO:HI")
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--wer", type=float, default=0.75)
    p.add_argument("--chapters", type=int, default=10)
    p.add_argument("--csv", default=None, help="write the accuracy table as CSV")

    p = sub.add_parser("serve", help="run the JSON service (and static UI, if built)")
    _add_corpus_arg(p)
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui-dir", default=None, help="directory of static UI files to serve")

    return parser


def _cmd_analyze(args) -> None:
    bundle = _bundle(args)
    bundle.table.dump_json(args.out)
    print(f"wrote {bundle.table.n_phrases} phrases over {bundle.table.n_transcripts} transcripts to {args.out}")


def _cmd_pairs(args) -> None:
    bundle = _bundle(args)
    _emit(bundle.collocations_payload(top_k=args.top, min_g2=args.min_g2), args.out)


def _cmd_chaptermatch(args) -> None:
    bundle = _bundle(args)
    if args.zoom_sweep:
        payload = bundle.zoom_sweep_payload(args.mode, _parse_range(args.zoom_sweep))
    else:
        payload = bundle.chaptermatch_payload(args.mode, args.zoom)
    _emit(payload, args.out)


def _cmd_indexmap(args) -> None:
    bundle = _bundle(args)
    zoom = args.zoom if args.zoom is not None else bundle.corpus.n_transcripts
    try:
        payload = bundle.indexmap_payload(zoom, args.focus, args.contrast)
    except ValueError as exc:
        raise DataError(str(exc)) from exc
    _emit(payload, args.out)


def _cmd_similarity(args) -> None:
    bundle = _bundle(args)
    selection = bundle.resolve_selection(args.phrases.split(","))
    _emit(bundle.similarity_payload(selection), args.out)


def _cmd_stats(args) -> None:
    _emit(_bundle(args).stats_payload(), args.out)


def _synth_params(args, seed: int | None = None) -> SynthParams:
    return SynthParams(
        n_chapters=args.chapters,
        chapter_vocab_size=getattr(args, "vocab", 60),
        shared_vocab_fraction=getattr(args, "shared", 0.2),
        lecture_length_tokens=getattr(args, "length", 6000),
        wer=args.wer,
        noise_vocab_size=getattr(args, "noise_vocab", 5000),
        seed=args.seed if seed is None else seed,
        confusable_noise=getattr(args, "confusable", False),
    )


def _cmd_synth(args) -> None:
    try:
        params = _synth_params(args)
        course = generate_synthetic_course(params)
    except ValueError as exc:
        raise DataError(str(exc)) from exc
    corpus = degraded_corpus(course)
    root = write_course(corpus, course.truth, args.out)
    print(f"wrote synthetic course ({params.n_chapters} lectures, wer={params.wer}) to {root}")


def _cmd_bench(args) -> None:
    try:
        modes = [normalize_mode(m) for m in args.modes.split(",") if m.strip()]
    except ValueError as exc:
        raise DataError(str(exc)) from exc
    zooms = _parse_range(args.zoom) if args.zoom else None
    totals: dict[tuple[str, int], float] = {}
    for seed in range(args.seeds):
        args_seed = argparse.Namespace(**{**vars(args), "seed": seed})
        try:
            params = _synth_params(args_seed, seed=seed).validate()
        except ValueError as exc:
            raise DataError(str(exc)) from exc
        for key, acc in run_matching_benchmark(params, modes, zooms).items():
            totals[key] = totals.get(key, 0.0) + acc
    averaged = {key: total / args.seeds for key, total in totals.items()}
    csv_text = benchmark_to_csv(averaged)
    if args.csv:
        Path(args.csv).write_text(csv_text, "utf-8")
        print(f"wrote {len(averaged)} rows to {args.csv}")
    else:
        sys.stdout.write(csv_text)


def _cmd_serve(args) -> None:
    from .server import serve

    bundle = _bundle(args)
    port = args.port
    if port is None:
        try:
            port = int(os.environ.get("LECTUREMAP_PORT", bundle.config.port))
        except ValueError as exc:
            raise DataError(f"LECTUREMAP_PORT must be an integer: {exc}") from exc
    server = serve(bundle, port, args.ui_dir, host=args.host)
    print(f"serving {bundle.corpus.root or 'corpus'} on http://{args.host}:{port}", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()


_HANDLERS = {
    "analyze": _cmd_analyze,
    "pairs": _cmd_pairs,
    "chaptermatch": _cmd_chaptermatch,
    "indexmap": _cmd_indexmap,
    "similarity": _cmd_similarity,
    "stats": _cmd_stats,
    "synth": _cmd_synth,
    "bench": _cmd_bench,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not args.command:
        parser.print_usage(sys.stderr)
        return 1
    try:
        _HANDLERS[args.command](args)
    except DataError as exc:
        print(f"lecturemap: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

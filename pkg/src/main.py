"""Command-line entry point for the narrative trajectory extractor.

Exit codes: 0 success, 1 partial failure, 2 configuration or input error.
"""

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Optional

from .config import Settings, get_logger, load_config, merge_overrides, setup_logging
from .errors import TrajextError
from .evaluation import load_ground_truths, render_report, render_text, run_suite
from .gazetteer import Gazetteer, build_gazetteer, open_gazetteer, save_gazetteer
from .methods import ALL_METHODS, Fallback, Method
from .pipeline import DisambiguationOptions, run_method
from .textprep import Lexicon, Narrative, load_lexicon, load_narratives
from .trajectory import from_geojson, to_geojson, to_map_html

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_PARTIAL = 1
EXIT_INPUT = 2


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


def _settings(args: argparse.Namespace, overrides: dict[str, Any]) -> Settings:
    """Load the config file, apply flags and set up logging."""
    settings = merge_overrides(load_config(args.config), overrides)
    setup_logging(
        level="DEBUG" if args.verbose else settings.logging.level,
        log_format=settings.logging.format,
    )
    return settings


def _run_overrides(args: argparse.Namespace) -> dict[str, Any]:
    return {
        "gazetteer_path": args.gazetteer,
        "lexicon_path": args.lexicon,
        "input_dir": args.input,
        "output_dir": args.output,
        "window_k": args.window_k,
        "min_population": args.min_population,
        "countries": [c.upper() for c in args.country] if args.country else None,
        "paper_strict": True if args.paper_strict else None,
        "fallback": args.fallback,
        "capitalized_only": True if args.capitalized_only else None,
        "workers": args.workers,
    }


def _options(settings: Settings) -> DisambiguationOptions:
    run = settings.run
    return DisambiguationOptions(
        window_k=run.window_k,
        paper_strict=run.paper_strict,
        fallback=run.fallback_enum,
        capitalized_only=run.capitalized_only,
    )


def _resources(settings: Settings) -> tuple[Gazetteer, Lexicon]:
    run = settings.run
    g = open_gazetteer(run.gazetteer_path, run.min_population, run.countries)
    lex = load_lexicon(run.lexicon_path) if run.lexicon_path else Lexicon()
    return g, lex


def cmd_build_gazetteer(args: argparse.Namespace) -> int:
    """Build a gazetteer index from GeoNames files and save it."""
    try:
        _settings(args, {})
        g = build_gazetteer(
            args.sources,
            min_population=args.min_population or 0,
            country_filter=[c.upper() for c in args.country or ()],
        )
        save_gazetteer(g, args.output)
    except (TrajextError, OSError) as e:
        return _fail(str(e))

    print(f"records: {g.metadata.canonical_count}")
    print(f"aliases: {g.metadata.alias_count}")
    print(f"skipped: {g.metadata.skipped_rows}")
    return EXIT_OK


def _parse_one(
    path: Path,
    method: Method,
    g: Gazetteer,
    lex: Lexicon,
    options: DisambiguationOptions,
    output_dir: Path,
) -> int:
    narrative = Narrative.from_file(path)
    result = run_method(narrative, method, g, lex, options)
    (output_dir / f"{narrative.id}.trajectory.json").write_text(
        to_geojson(result.trajectory), encoding="utf-8"
    )
    (output_dir / f"{narrative.id}.map.html").write_text(
        to_map_html(result.trajectory), encoding="utf-8"
    )
    return len(result.trajectory.stops)


def cmd_parse(args: argparse.Namespace) -> int:
    """Extract a trajectory from every narrative of the input directory."""
    try:
        settings = _settings(args, {**_run_overrides(args), "method": args.method})
        run = settings.run
        run.validate(require=("gazetteer_path", "input_dir"))
        g, lex = _resources(settings)
        output_dir = Path(run.output_dir)
        output_dir.mkdir(parents=True, exist_ok=True)
    except (TrajextError, OSError) as e:
        return _fail(str(e))

    paths = sorted(Path(run.input_dir).glob("*.txt"))
    if not paths:
        print("0 narratives found in " + run.input_dir)
        return EXIT_OK

    method, options = run.method_enum, _options(settings)
    failed = 0
    with ThreadPoolExecutor(max_workers=run.workers) as executor:
        futures = {
            path: executor.submit(_parse_one, path, method, g, lex, options, output_dir)
            for path in paths
        }
        for path, future in futures.items():
            try:
                stops = future.result()
            except (TrajextError, OSError, UnicodeDecodeError) as e:
                failed += 1
                logger.error("Narrative failed", path=str(path), error=str(e))
                print(f"{path.stem}: failed")
                continue
            print(f"{path.stem}: {stops} stops")

    logger.info(
        "Parse finished", method=str(method), narratives=len(paths), failed=failed
    )
    return EXIT_PARTIAL if failed else EXIT_OK


def cmd_evaluate(args: argparse.Namespace) -> int:
    """Score the four methods against ground truth and write the report."""
    try:
        settings = _settings(
            args, {**_run_overrides(args), "ground_truth_dir": args.ground_truth}
        )
        run = settings.run
        if args.method:
            run.method = args.method
        run.validate(require=("gazetteer_path", "input_dir"))
        g, lex = _resources(settings)
        narratives = load_narratives(run.input_dir)
        gts = load_ground_truths(run.ground_truth_dir or run.input_dir)
        reports = run_suite(
            narratives,
            gts,
            g,
            lex,
            options=_options(settings),
            methods=[run.method_enum] if args.method else ALL_METHODS,
            workers=run.workers,
        )
        render_report(reports, Path(run.output_dir) / "results.tsv")
    except (TrajextError, OSError, UnicodeDecodeError) as e:
        return _fail(str(e))

    print(render_text(reports), end="")
    return EXIT_OK


def cmd_plot(args: argparse.Namespace) -> int:
    """Re-emit the HTML map of a saved trajectory."""
    try:
        _settings(args, {})
        source = Path(args.trajectory)
        trajectory = from_geojson(source.read_text(encoding="utf-8"))
        output_dir = Path(args.output) if args.output else source.parent
        output_dir.mkdir(parents=True, exist_ok=True)
        name = trajectory.narrative_id or source.name.split(".")[0]
        target = output_dir / f"{name}.map.html"
        target.write_text(to_map_html(trajectory), encoding="utf-8")
    except (TrajextError, OSError, ValueError) as e:
        return _fail(str(e))

    print(str(target))
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "-c",
        "--config",
        default=None,
        help="Path to a YAML configuration file (default: trajext.yaml)",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Enable verbose logging"
    )


def _add_run_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "-g", "--gazetteer", help="Gazetteer index or raw GeoNames TSV file"
    )
    parser.add_argument("-l", "--lexicon", help="Multi-word lexicon file")
    parser.add_argument("-i", "--input", help="Directory of *.txt narratives")
    parser.add_argument("-o", "--output", help="Output directory")
    parser.add_argument(
        "--method",
        choices=[m.value for m in ALL_METHODS],
        help="Extraction method",
    )
    parser.add_argument("--window-k", type=int, help="Locality window radius")
    parser.add_argument(
        "--paper-strict",
        action="store_true",
        help="Single disambiguation sweep, no fallback",
    )
    parser.add_argument(
        "--fallback",
        choices=[f.value for f in Fallback],
        help="Policy for tokens the window leaves unresolved",
    )
    parser.add_argument(
        "--min-population",
        type=int,
        help="Population cutoff when building from a raw GeoNames file",
    )
    parser.add_argument(
        "--country",
        action="append",
        help="Keep only this ISO country code (repeatable)",
    )
    parser.add_argument(
        "--capitalized-only",
        action="store_true",
        help="Probe only capitalized tokens",
    )
    parser.add_argument("--workers", type=int, help="Worker threads")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with its four subcommands."""
    parser = argparse.ArgumentParser(
        prog="trajext",
        description="Extract ordered geographic trajectories from narrative text",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    build = subparsers.add_parser(
        "build-gazetteer", help="Build a gazetteer index from GeoNames files"
    )
    _add_common(build)
    build.add_argument("sources", nargs="+", help="GeoNames TSV file(s)")
    build.add_argument("-o", "--output", required=True, help="Index file to write")
    build.add_argument("--min-population", type=int, help="Population cutoff")
    build.add_argument(
        "--country", action="append", help="Keep only this ISO country code"
    )
    build.set_defaults(handler=cmd_build_gazetteer)

    parse = subparsers.add_parser("parse", help="Extract trajectories")
    _add_common(parse)
    _add_run_options(parse)
    parse.set_defaults(handler=cmd_parse)

    evaluate = subparsers.add_parser(
        "evaluate", help="Score the methods against ground truth"
    )
    _add_common(evaluate)
    _add_run_options(evaluate)
    evaluate.add_argument(
        "--ground-truth", help="Directory of *.gt.tsv files (default: input dir)"
    )
    evaluate.set_defaults(handler=cmd_evaluate)

    plot = subparsers.add_parser(
        "plot", help="Re-emit the HTML map of a trajectory JSON file"
    )
    _add_common(plot)
    plot.add_argument("trajectory", help="A <id>.trajectory.json file")
    plot.add_argument("-o", "--output", help="Output directory (default: alongside)")
    plot.set_defaults(handler=cmd_plot)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""
Parse Benchmark

Times one end-to-end parse of a long synthetic narrative against a large
synthetic gazetteer and compares it with a time limit.

Usage:
    python tools/benchmark_parse.py [--records N] [--words N] [--limit SECONDS]

Example:
    python tools/benchmark_parse.py
    python tools/benchmark_parse.py --records 200000 --method ST+Aug+DisAmbig
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.gazetteer import Gazetteer, LocationRecord  # noqa: E402
from src.methods import ALL_METHODS, Method  # noqa: E402
from src.pipeline import run_method  # noqa: E402
from src.textprep import Lexicon, Narrative  # noqa: E402

COUNTRIES = ("GR", "LB", "LY", "SY", "IN", "BR", "US", "FR", "EG", "TR")
FILLER = (
    "we walked for days and the road was long and dusty but the people "
    "we met along the way were kind and generous with their bread"
).split()


def synthetic_name(rng: random.Random) -> str:
    """A pronounceable capitalized name."""
    syllables = rng.randint(2, 4)
    name = "".join(
        rng.choice("bcdfghklmnprstvz") + rng.choice("aeiou") for _ in range(syllables)
    )
    return name.capitalize()


def synthetic_gazetteer(records: int, rng: random.Random) -> Gazetteer:
    """Random canonical records; about one name in ten is a homonym."""
    names = [synthetic_name(rng) for _ in range(records * 9 // 10)]
    rows = []
    for i in range(records):
        name = names[i % len(names)]
        rows.append(
            LocationRecord(
                name=name,
                ascii_name=name,
                country=rng.choice(COUNTRIES),
                longitude=round(rng.uniform(-180, 180), 4),
                latitude=round(rng.uniform(-90, 90), 4),
                population=rng.randint(0, 1_000_000),
            )
        )
    return Gazetteer.from_records(rows)


def synthetic_narrative(words: int, g: Gazetteer, rng: random.Random) -> Narrative:
    """Filler prose with a place mention every dozen words."""
    keys = g.keys()
    out: list[str] = []
    while len(out) < words:
        out.extend(rng.choice(FILLER) for _ in range(10))
        out.extend(["to", rng.choice(keys).title()])
        if rng.random() < 0.3:
            out[-1] += "."
    text = " ".join(out[:words]).rstrip(".") + "."
    return Narrative(id="benchmark", raw_text=text)


def main():
    parser = argparse.ArgumentParser(description="Time one parse of a long narrative")
    parser.add_argument(
        "--records", type=int, default=100_000, help="Gazetteer size (default: 100000)"
    )
    parser.add_argument(
        "--words", type=int, default=4212, help="Narrative length (default: 4212)"
    )
    parser.add_argument(
        "--limit", type=float, default=2.0, help="Time limit in seconds (default: 2)"
    )
    parser.add_argument(
        "--method",
        choices=[m.value for m in ALL_METHODS],
        default=Method.MWT_AUG.value,
        help="Method to time",
    )
    parser.add_argument("--seed", type=int, default=7, help="Random seed")

    args = parser.parse_args()
    rng = random.Random(args.seed)

    print("=" * 60)
    print("Parse Benchmark")
    print("=" * 60)

    start = time.perf_counter()
    g = synthetic_gazetteer(args.records, rng)
    print(f"Gazetteer: {len(g)} records built in {time.perf_counter() - start:.2f}s")

    narrative = synthetic_narrative(args.words, g, rng)
    print(f"Narrative: {narrative.word_count} words")

    start = time.perf_counter()
    result = run_method(narrative, Method(args.method), g, Lexicon())
    elapsed = time.perf_counter() - start

    print(f"Method:    {args.method}")
    print(f"Stops:     {len(result.trajectory.stops)}")
    print(f"Elapsed:   {elapsed:.3f}s (limit {args.limit:.1f}s)")

    passed = elapsed < args.limit
    print("PASS" if passed else "FAIL")
    sys.exit(0 if passed else 1)


if __name__ == "__main__":
    main()

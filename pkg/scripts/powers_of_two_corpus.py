#!/usr/bin/env python3
"""
Write the powers-of-two corpus 2^0 .. 2^(count-1), one integer per line.

The leading digits of 2^k follow log10(1 + 1/d) because k·log10(2) is
equidistributed mod 1, which makes the corpus a brute-force oracle for the
benford subcommand:

    python scripts/powers_of_two_corpus.py --count 10000 --out powers.txt
    entropy-modes benford --file powers.txt
"""

import argparse
import sys
from typing import Iterator


def powers_of_two(count: int) -> Iterator[int]:
    value = 1
    for _ in range(count):
        yield value
        value <<= 1


def parse_args():
    """Parse command line arguments"""
    parser = argparse.ArgumentParser(description="Generate the powers-of-two Benford corpus")
    parser.add_argument("--count", type=int, default=10000,
                        help="Number of powers, starting at 2^0 (default: 10000)")
    parser.add_argument("--out", default="-", help="Output file (default: stdout)")
    return parser.parse_args()


def main():
    args = parse_args()
    if args.count < 1:
        print("--count must be at least 1", file=sys.stderr)
        sys.exit(2)
    lines = "".join(f"{value}\n" for value in powers_of_two(args.count))
    if args.out == "-":
        sys.stdout.write(lines)
    else:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(lines)
        print(f"Wrote {args.count} powers of two to {args.out}", file=sys.stderr)


if __name__ == "__main__":
    main()

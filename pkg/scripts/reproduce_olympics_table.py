#!/usr/bin/env python3
"""Rank the bundled 2014 Winter Olympics medal counts and print the table.

Usage:
  python scripts/reproduce_olympics_table.py [--digits 7] [--format text|csv|json]
"""

import argparse
from importlib import resources

from lexirank.lexrank import build_table, format_table, read_medal_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--digits", type=int, default=7)
    ap.add_argument("--format", default="text", choices=["text", "csv", "json"])
    args = ap.parse_args()

    with resources.files("lexirank").joinpath("data", "olympics2014.csv").open() as f:
        classes, records = read_medal_csv(f)
    rows = build_table(records, args.digits)
    print(format_table(rows, classes, args.format), end="")


if __name__ == "__main__":
    main()

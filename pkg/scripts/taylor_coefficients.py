#!/usr/bin/env python3
"""Derivatives of an expression in x, read off a single Levi-Civita evaluation.

Evaluates f(a + d) once and prints f^(n)(a) = n! * [d^n] for n < depth,
next to a central finite difference for the first derivative.

Usage:
  python scripts/taylor_coefficients.py "sin(x)*exp(x)" --at 0.5 --depth 8
"""

import argparse
import math
from fractions import Fraction

from lexirank.parser import evaluate, parse
from lexirank.levicivita import LCNumber


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("expr")
    ap.add_argument("--at", type=Fraction, default=Fraction(0))
    ap.add_argument("--depth", type=int, default=10)
    args = ap.parse_args()

    tree = parse(args.expr, "lc")
    f = lambda v: evaluate(tree, "lc", depth=args.depth, x=v)
    a = float(args.at)
    series = f(LCNumber({0: a, 1: 1.0}, args.depth))
    print(f"f(a + d) = {series}")
    for n in range(args.depth):
        print(f"f^({n})({args.at}) = {math.factorial(n) * series.coefficient(n):.15g}")

    h = 1e-6
    fd = (f(LCNumber.constant(a + h, args.depth)).coefficient(0) - f(LCNumber.constant(a - h, args.depth)).coefficient(0)) / (2 * h)
    print(f"central difference f'({args.at}) ~ {fd:.15g}")


if __name__ == "__main__":
    main()

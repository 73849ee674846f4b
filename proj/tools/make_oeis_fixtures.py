#!/usr/bin/env python3
"""Writes tests/fixtures/oeis/<id>.txt in the "<index> <integer>" format.

The terms come from the standard closed forms and recurrences of each
sequence, computed with plain Python integers; nothing here shares code with
the C++ library. The fixtures are committed, so tests never run this script.
"""

from fractions import Fraction
from math import comb
from pathlib import Path
import sys

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "oeis"


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def a000108(count):
    return 0, [catalan(n) for n in range(count)]


def a006318(count):
    # (n+1) S(n) = 3(2n-1) S(n-1) - (n-2) S(n-2)
    s = [1, 2]
    for n in range(2, count):
        s.append((3 * (2 * n - 1) * s[n - 1] - (n - 2) * s[n - 2]) // (n + 1))
    return 0, s[:count]


def a060693(rows):
    terms = [comb(2 * n - k, k) * catalan(n - k) for n in range(rows) for k in range(n + 1)]
    return 0, terms


def a103210(count):
    # Compositional inverse of f(x) = x(1-2x)/(1+x) by fixed-point iteration
    # g = x (1 + g) / (1 - 2g), truncated at x^count.
    n = count + 1

    def mul(a, b):
        r = [Fraction(0)] * n
        for i, ai in enumerate(a):
            if ai:
                for j in range(n - i):
                    r[i + j] += ai * b[j]
        return r

    def inv(a):
        r = [Fraction(0)] * n
        r[0] = 1 / a[0]
        for i in range(1, n):
            r[i] = -sum(a[k] * r[i - k] for k in range(1, i + 1)) / a[0]
        return r

    g = [Fraction(0)] * n
    for _ in range(n):
        one_plus_g = [Fraction(1) + g[0]] + g[1:]
        one_minus_2g = [Fraction(1) - 2 * g[0]] + [-2 * v for v in g[1:]]
        h = mul(one_plus_g, inv(one_minus_2g))
        g = [Fraction(0)] + h[: n - 1]
    assert all(v.denominator == 1 for v in g)
    return 1, [int(v) for v in g[1 : count + 1]]


def a155867(count):
    _, s = a006318(count)
    return 0, [sum(comb(n + k, 2 * k) * s[k] for k in range(n + 1)) for n in range(count)]


SEQUENCES = {
    "A000108": lambda: a000108(25),
    "A006318": lambda: a006318(25),
    "A060693": lambda: a060693(10),
    "A103210": lambda: a103210(20),
    "A155867": lambda: a155867(20),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for sid, make in SEQUENCES.items():
        offset, terms = make()
        lines = [f"{offset + i} {t}" for i, t in enumerate(terms)]
        (OUT / f"{sid}.txt").write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
        print(f"{sid}: {len(terms)} terms from index {offset}", file=sys.stderr)


if __name__ == "__main__":
    main()

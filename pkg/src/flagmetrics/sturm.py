"""Real root isolation for rational polynomials via Sturm sequences.

Polynomials are coefficient lists, lowest degree first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list[Fraction]


def trim(p: Sequence) -> Poly:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def evaluate(p: Sequence, x):
    acc = 0 * x
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Sequence) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def remainder(a: Sequence, b: Sequence) -> Poly:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a = trim(a)
        if not a:
            break
    return a


def sturm_sequence(p: Sequence) -> list[Poly]:
    seq = [trim(p), derivative(p)]
    while seq[-1]:
        r = remainder(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def _sign_changes(seq: Sequence[Poly], x: Fraction) -> int:
    signs = [s for s in (evaluate(q, x) for q in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_roots(seq: Sequence[Poly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in (a, b]."""
    return _sign_changes(seq, Fraction(a)) - _sign_changes(seq, Fraction(b))


def isolate_roots(p: Sequence, a, b) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (lo, hi], each containing exactly one root in (a, b]."""
    seq = sturm_sequence(p)
    out = []
    stack = [(Fraction(a), Fraction(b))]
    while stack:
        lo, hi = stack.pop()
        n = count_roots(seq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack += [(mid, hi), (lo, mid)]
    return sorted(out)


def refine_root(p: Sequence, lo: Fraction, hi: Fraction, width: Fraction = Fraction(1, 2**64)) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval (lo, hi] down to ``width`` exactly."""
    seq = sturm_sequence(p)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if count_roots(seq, lo, mid):
            hi = mid
        else:
            lo = mid
    return lo, hi

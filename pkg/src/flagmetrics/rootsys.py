"""Root systems of the compact simple Lie algebras in exact arithmetic.

Roots are integer tuples over the simple roots.  Simple roots are numbered
along the Dynkin diagrams used throughout this package; for the E-series this
differs from Bourbaki, see ``BOURBAKI_ORDER``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence, Union

Root = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")
EXCEPTIONAL_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}

# Node i of our diagrams (1-based) is node BOURBAKI_ORDER[family][i-1] in Bourbaki.
BOURBAKI_ORDER = {
    "E6": (1, 3, 4, 5, 6, 2),
    "E7": (7, 6, 5, 4, 3, 1, 2),
    "E8": (8, 7, 6, 5, 4, 3, 1, 2),
}


def dual_coxeter(family: str, rank: int) -> int:
    table = {
        "A": rank + 1,
        "B": 2 * rank - 1,
        "C": rank + 1,
        "D": 2 * rank - 2,
        "E6": 12,
        "E7": 18,
        "E8": 30,
        "F4": 9,
        "G2": 4,
    }
    return table[family]


@dataclass(frozen=True)
class LieFamily:
    family: str
    rank: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in EXCEPTIONAL_RANK:
            fixed = EXCEPTIONAL_RANK[self.family]
            if self.rank not in (0, fixed):
                raise ValueError(f"{self.family} has rank {fixed}, got {self.rank}")
            object.__setattr__(self, "rank", fixed)
        elif self.rank < MIN_RANK[self.family]:
            raise ValueError(
                f"{self.family} requires rank >= {MIN_RANK[self.family]}, got {self.rank}"
            )

    @property
    def name(self) -> str:
        if self.family in EXCEPTIONAL_RANK:
            return self.family
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """Rational coordinates over the fundamental weights."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))


def _edges(family: str, n: int) -> list[tuple[int, int, int, int]]:
    """Edges (i, j, A_ij, A_ji) of the Dynkin diagram, 1-based nodes."""
    chain = lambda k: [(i, i + 1, -1, -1) for i in range(1, k)]  # noqa: E731
    if family == "A":
        return chain(n)
    if family == "B":
        return chain(n - 1) + [(n - 1, n, -2, -1)]
    if family == "C":
        return chain(n - 1) + [(n - 1, n, -1, -2)]
    if family == "D":
        return chain(n - 1) + [(n - 2, n, -1, -1)]
    if family == "E6":
        return chain(5) + [(3, 6, -1, -1)]
    if family == "E7":
        return chain(6) + [(4, 7, -1, -1)]
    if family == "E8":
        return chain(7) + [(5, 8, -1, -1)]
    if family == "F4":
        return [(1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)]
    if family == "G2":
        return [(1, 2, -1, -3)]
    raise ValueError(family)


def cartan_matrix(lf: LieFamily) -> tuple[tuple[int, ...], ...]:
    n = lf.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, aij, aji in _edges(lf.family, n):
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji
    return tuple(tuple(row) for row in a)


def _gram(a: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(a)
    # propagate squared lengths along the (connected) diagram
    length: list[Fraction | None] = [None] * n
    length[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and a[i][j] != 0 and length[j] is None:
                # a_ij / a_ji = (a_i, a_i) / (a_j, a_j)
                length[j] = length[i] * Fraction(a[j][i], a[i][j])
                stack.append(j)
    top = max(length)
    length = [2 * v / top for v in length]
    return tuple(
        tuple(Fraction(a[i][j]) * length[j] / 2 for j in range(n)) for i in range(n)
    )


def _invert(m: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class RootSystem:
    family: LieFamily
    cartan_matrix: tuple[tuple[int, ...], ...]
    roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    gram: tuple[tuple[Fraction, ...], ...]
    killing_scale: Fraction
    _root_set: frozenset = field(repr=False, compare=False, default=frozenset())

    @property
    def rank(self) -> int:
        return self.family.rank

    @property
    def heights(self) -> Root:
        return self.highest_root

    def simple_root(self, i: int) -> Root:
        """Simple root alpha_i, 1-based."""
        return tuple(int(k == i - 1) for k in range(self.rank))

    def is_root(self, v: Root) -> bool:
        return tuple(v) in self._root_set

    @cached_property
    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return _invert([[Fraction(x) for x in row] for row in self.cartan_matrix])

    def to_root_coords(self, w: Weight) -> tuple[Fraction, ...]:
        """Fundamental-weight coordinates to simple-root coordinates."""
        inv = self.cartan_inverse
        n = self.rank
        return tuple(sum((w.coeffs[i] * inv[i][j] for i in range(n)), Fraction(0)) for j in range(n))

    def to_weight(self, coeffs: Sequence) -> Weight:
        """Simple-root coordinates to fundamental-weight coordinates (alpha_i = sum_j A_ij Lambda_j)."""
        a = self.cartan_matrix
        n = self.rank
        return Weight(tuple(sum((Fraction(coeffs[i]) * a[i][j] for i in range(n)), Fraction(0)) for j in range(n)))

    def to_dict(self) -> dict:
        return {
            "family": self.family.family,
            "rank": self.rank,
            "cartan_matrix": [list(r) for r in self.cartan_matrix],
            "highest_root": list(self.highest_root),
            "roots": [list(r) for r in self.roots],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _enumerate_positive(a: Sequence[Sequence[int]]) -> list[Root]:
    n = len(a)
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # p: how far the alpha_i string through beta goes down
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * a[j][i] for j in range(n))  # <beta, alpha_i^vee>
                q = p - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found, key=lambda r: (sum(r), tuple(-c for c in r)))


def build_root_system(family: LieFamily | str, rank: int = 0) -> RootSystem:
    lf = family if isinstance(family, LieFamily) else LieFamily(family, rank)
    a = cartan_matrix(lf)
    pos = _enumerate_positive(a)
    neg = [tuple(-c for c in r) for r in pos]
    roots = tuple(pos + neg)
    return RootSystem(
        family=lf,
        cartan_matrix=a,
        roots=roots,
        positive_roots=tuple(pos),
        highest_root=pos[-1],
        gram=_gram(a),
        killing_scale=Fraction(1, 2 * dual_coxeter(lf.family, lf.rank)),
        _root_set=frozenset(roots),
    )


Vector = Union[Root, Weight, Sequence]


def inner_product(rs: RootSystem, u: Vector, v: Vector) -> Fraction:
    """Normalized inner product (long roots have squared length 2).

    Tuples are read as simple-root coordinates, ``Weight`` as
    fundamental-weight coordinates.
    """
    cu = rs.to_root_coords(u) if isinstance(u, Weight) else tuple(u)
    cv = rs.to_root_coords(v) if isinstance(v, Weight) else tuple(v)
    n = rs.rank
    if len(cu) != n or len(cv) != n:
        raise ValueError(f"expected vectors of length {n}")
    g = rs.gram
    return sum(
        (Fraction(cu[i]) * g[i][j] * cv[j] for i in range(n) if cu[i] for j in range(n) if cv[j]),
        Fraction(0),
    )


def root_string(rs: RootSystem, a: Root, b: Root) -> tuple[int, int]:
    """(p, q): the a-string through b is b - p*a, ..., b + q*a."""
    a = tuple(a)
    b = tuple(b)
    if not rs.is_root(a):
        raise ValueError(f"{a} is not a root")
    p = 0
    while rs.is_root(tuple(y - (p + 1) * x for x, y in zip(a, b))):
        p += 1
    q = 0
    while rs.is_root(tuple(y + (q + 1) * x for x, y in zip(a, b))):
        q += 1
    return p, q

"""Isotropy decomposition of generalized flag manifolds from painted diagrams."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import networkx as nx

from .rootsys import EXCEPTIONAL_RANK, LieFamily, Root, RootSystem, build_root_system, inner_product

TRoot = tuple[int, ...]


@dataclass(frozen=True)
class PaintedDiagram:
    """A root system with painted (black) simple roots, 1-based indices.

    ``restriction`` optionally replaces the painted coordinate projection by
    arbitrary integer functionals on root coordinates.  It is only used for
    the degenerate SO(6) member of the SO(2l)/U(1)xU(1)xSO(2l-4) family,
    where the torus is not the centre of a Levi factor.
    """

    root_system: RootSystem
    painted: tuple[int, ...]
    restriction: tuple[tuple[int, ...], ...] | None = None
    degenerate: bool = False

    def __post_init__(self):
        painted = tuple(sorted(set(self.painted)))
        n = self.root_system.rank
        if not painted:
            raise ValueError("painted set must be nonempty")
        if painted[0] < 1 or painted[-1] > n:
            raise ValueError(f"painted nodes must lie in 1..{n}")
        object.__setattr__(self, "painted", painted)
        if self.restriction is None:
            funcs = tuple(tuple(int(k == i - 1) for k in range(n)) for i in painted)
            object.__setattr__(self, "restriction", funcs)

    @property
    def white(self) -> tuple[int, ...]:
        if self.degenerate:
            return ()
        return tuple(i for i in range(1, self.root_system.rank + 1) if i not in self.painted)

    def kappa(self, root: Root) -> TRoot:
        return tuple(sum(f * c for f, c in zip(func, root)) for func in self.restriction)


def painted_diagram(family: str, rank: int, painted: Sequence[int]) -> PaintedDiagram:
    return PaintedDiagram(build_root_system(family, rank), tuple(painted))


@dataclass(frozen=True)
class IsotropySummand:
    troot: TRoot
    members: tuple[Root, ...]
    dim: int
    lowest_weight: Root
    highest_weight: Root


@dataclass(frozen=True)
class Decomposition:
    diagram: PaintedDiagram
    r_k_plus: tuple[Root, ...]
    r_m_plus: tuple[Root, ...]
    summands: tuple[IsotropySummand, ...]
    type_tag: str
    _index: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def root_system(self) -> RootSystem:
        return self.diagram.root_system

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.summands)

    @property
    def troots(self) -> tuple[TRoot, ...]:
        return tuple(s.troot for s in self.summands)

    @property
    def degenerate(self) -> bool:
        return self.diagram.degenerate

    def summand_of(self, troot: TRoot) -> tuple[int, int]:
        """(0-based summand index, sign) with troot = sign * xi_index, or (-1, 0)."""
        return self._index.get(tuple(troot), (-1, 0))

    def to_dict(self) -> dict:
        rs = self.root_system
        return {
            "group": rs.family.name,
            "painted": list(self.diagram.painted),
            "type": self.type_tag,
            "degenerate": self.degenerate,
            "troots": [list(t) for t in self.troots],
            "dims": list(self.dims),
            "lowest_weights": [list(s.lowest_weight) for s in self.summands],
        }


def count_troots(pd: PaintedDiagram) -> int:
    rs = pd.root_system
    return len({pd.kappa(a) for a in rs.positive_roots} - {(0,) * len(pd.restriction)})


def _type_tag(troots: list[TRoot]) -> tuple[str, list[TRoot]]:
    s = len(troots)
    if s == 4 and len(troots[0]) == 1:
        return "I", sorted(troots)
    if s == 4 and len(troots[0]) == 2 and {(1, 0), (0, 1), (1, 1)} <= set(troots):
        rest = (set(troots) - {(1, 0), (0, 1), (1, 1)}).pop()
        if rest == (1, 2):
            return "IIa", [(1, 0), (0, 1), (1, 1), (1, 2)]
        if rest == (2, 1):
            return "IIb", [(1, 0), (0, 1), (1, 1), (2, 1)]
    return f"Other({s})", sorted(troots, key=lambda t: (sum(t), t))


def _extremal_member(rs: RootSystem, members: Sequence[Root], k_plus: Sequence[Root], sign: int) -> list[Root]:
    """Members a with a - sign*phi not a root for every phi in R_K^+."""
    out = []
    for a in members:
        if all(not rs.is_root(tuple(x - sign * y for x, y in zip(a, phi))) for phi in k_plus):
            out.append(a)
    return out


def decompose(pd: PaintedDiagram) -> Decomposition:
    rs = pd.root_system
    zero = (0,) * len(pd.restriction)
    k_plus, m_plus = [], []
    groups: dict[TRoot, list[Root]] = {}
    for a in rs.positive_roots:
        t = pd.kappa(a)
        if t == zero:
            k_plus.append(a)
        else:
            m_plus.append(a)
            groups.setdefault(t, []).append(a)
    tag, order = _type_tag(list(groups))
    summands = []
    for t in order:
        members = tuple(groups[t])
        lows = _extremal_member(rs, members, k_plus, +1)
        highs = _extremal_member(rs, members, k_plus, -1)
        if not pd.degenerate and (len(lows) != 1 or len(highs) != 1):
            raise AssertionError(f"t-root {t}: K-simple member not unique ({lows})")
        summands.append(
            IsotropySummand(
                troot=t,
                members=members,
                dim=2 * len(members),
                lowest_weight=min(lows, key=sum),
                highest_weight=max(highs, key=sum),
            )
        )
    index = {}
    for i, s in enumerate(summands):
        index[s.troot] = (i, 1)
        index[tuple(-c for c in s.troot)] = (i, -1)
    return Decomposition(pd, tuple(k_plus), tuple(m_plus), tuple(summands), tag, index)


def weyl_dim(dec: Decomposition, k: int) -> int:
    """Complex dimension of summand k (0-based) from the Weyl dimension formula."""
    rs = dec.root_system
    n = rs.rank
    delta_k = tuple(Fraction(sum(a[i] for a in dec.r_k_plus), 2) for i in range(n))
    lam = dec.summands[k].highest_weight
    value = Fraction(1)
    for a in dec.r_k_plus:
        value *= 1 + inner_product(rs, lam, a) / inner_product(rs, delta_k, a)
    assert value.denominator == 1
    return int(value)


# --- orderings -------------------------------------------------------------


@dataclass(frozen=True)
class Ordering:
    """A t-chamber, given by a sample point and the signs of the summand t-roots on it."""

    id: int
    point: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def natural(self) -> bool:
        return all(s > 0 for s in self.signs)

    @property
    def label(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)


def _chamber_points(troots: Sequence[TRoot]) -> list[tuple[int, ...]]:
    dim = len(troots[0])
    if dim == 1:
        return [(1,), (-1,)]
    if dim != 2:
        raise ValueError("orderings are supported for one or two painted roots only")
    import math

    rays = set()
    for a, b in troots:
        g = math.gcd(a, b)
        rays.add((-b // g, a // g))
        rays.add((b // g, -a // g))
    rays = sorted(rays, key=lambda v: math.atan2(v[1], v[0]))
    pts = []
    for i, u in enumerate(rays):
        v = rays[(i + 1) % len(rays)]
        pts.append((u[0] + v[0], u[1] + v[1]))
    return pts


def _signs(troots: Sequence[TRoot], point: Sequence[int]) -> tuple[int, ...]:
    out = []
    for t in troots:
        v = sum(a * b for a, b in zip(t, point))
        out.append(1 if v > 0 else -1)
    return tuple(out)


def all_chambers(dec: Decomposition) -> list[Ordering]:
    """Every full-dimensional sign cell of the t-root hyperplane arrangement."""
    pts = _chamber_points(dec.troots)
    cells = [(_signs(dec.troots, p), p) for p in pts]
    cells.sort(key=lambda c: tuple(-s for s in c[0]))
    return [Ordering(i, p, s) for i, (s, p) in enumerate(cells)]


def enumerate_invariant_orderings(dec: Decomposition) -> list[Ordering]:
    """Chambers up to negation; the representative has xi_1 > 0, natural first."""
    reps = [c for c in all_chambers(dec) if c.signs[0] > 0]
    return [Ordering(i, c.point, c.signs) for i, c in enumerate(reps)]


# --- classification --------------------------------------------------------


@dataclass(frozen=True)
class ClassifiedSpace:
    family: str
    rank: int
    painted: tuple[int, ...]
    type_tag: str
    dims: tuple[int, ...]
    degenerate: bool = False

    @property
    def group(self) -> str:
        return self.family if self.family in EXCEPTIONAL_RANK else f"{self.family}{self.rank}"


@dataclass
class Classification:
    accepted: list[ClassifiedSpace]
    rejected: list[tuple[str, int, tuple[int, ...], int]]  # (family, rank, painted, #t-roots)


def _white_graph(rs: RootSystem, painted: Sequence[int]) -> nx.DiGraph:
    g = nx.DiGraph()
    white = [i for i in range(rs.rank) if i + 1 not in painted]
    g.add_nodes_from(white)
    a = rs.cartan_matrix
    for i in white:
        for j in white:
            if i != j and a[i][j]:
                g.add_edge(i, j, w=a[i][j])
    return g


def _same_white(rs: RootSystem, p1: Sequence[int], p2: Sequence[int]) -> bool:
    return nx.is_isomorphic(
        _white_graph(rs, p1), _white_graph(rs, p2), edge_match=lambda e1, e2: e1["w"] == e2["w"]
    )


def _automorphism_image(family: str, rank: int, painted: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical image under the diagram symmetries kept for classical groups."""
    if family == "D":
        # the two spin nodes l-1 and l are interchangeable; prefer alpha_l
        s = set(painted)
        if rank - 1 in s and rank not in s:
            s = (s - {rank - 1}) | {rank}
        return tuple(sorted(s))
    if family == "A":
        rev = tuple(sorted(rank + 1 - i for i in painted))
        return min(painted, rev)
    return painted


def classify_four_summands(max_classical_rank: int) -> Classification:
    if max_classical_rank < 4:
        raise ValueError("max_classical_rank must be at least 4")
    families: list[tuple[str, int]] = []
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 4)):
        families += [(fam, n) for n in range(lo, max_classical_rank + 1)]
    families += [(f, r) for f, r in EXCEPTIONAL_RANK.items()]
    accepted: list[ClassifiedSpace] = []
    rejected = []
    for fam, n in families:
        rs = build_root_system(fam, n)
        kept: list[tuple[int, ...]] = []
        for size in (1, 2):
            for painted in combinations(range(1, n + 1), size):
                s = count_troots(PaintedDiagram(rs, painted))
                if s != 4:
                    rejected.append((fam, n, painted, s))
                    continue
                canon = _automorphism_image(fam, n, painted)
                if canon != painted:
                    continue
                if fam in EXCEPTIONAL_RANK and any(
                    len(k) == size and _same_white(rs, k, painted) for k in kept
                ):
                    continue
                kept.append(painted)
        for painted in kept:
            dec = decompose(PaintedDiagram(rs, painted))
            accepted.append(ClassifiedSpace(fam, n, painted, dec.type_tag, dec.dims))
    dec = degenerate_so6()
    accepted.append(ClassifiedSpace("D", 3, (1, 2), dec.type_tag, dec.dims, degenerate=True))
    return Classification(accepted, rejected)


def degenerate_so6() -> Decomposition:
    """SO(6)/U(1)xU(1)xSO(2): the l = 3 member of the SO(2l) family with fiber SO(2l-4).

    Here SO(2l-4) = SO(2) is abelian, so K is a maximal torus and the four
    modules are not irreducible.  The torus is cut out by the functionals
    c1 and c2 + c3 on root coordinates of D3 (nodes 2 and 3 are the fork).
    """
    rs = build_root_system("D", 3)
    pd = PaintedDiagram(rs, (1, 2), restriction=((1, 0, 0), (0, 1, 1)), degenerate=True)
    return decompose(pd)

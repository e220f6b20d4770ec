"""Structure-constant triples [ijk] of four-summand flag manifolds."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .einstein import ricci_generic
from .exact import solve_linear
from .flagdecomp import Decomposition, decompose, painted_diagram
from .kahler import ke_metric
from .rootsys import Root, dual_coxeter, inner_product, root_string

Key = tuple[int, int, int]


@dataclass(frozen=True)
class TripleTable:
    """Nonzero triples keyed by sorted 1-based index triples."""

    entries: dict

    def __post_init__(self):
        clean = {}
        for key, v in self.entries.items():
            v = Fraction(v)
            if v < 0:
                raise ValueError(f"negative triple {key}: {v}")
            if v:
                clean[tuple(sorted(key))] = v
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __getitem__(self, key) -> Fraction:
        return self.entries.get(tuple(sorted(key)), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, TripleTable) and self.entries == other.entries

    @property
    def support(self) -> tuple[Key, ...]:
        return tuple(self.entries)

    def to_dict(self) -> dict:
        return {"".join(map(str, k)): f"{v.numerator}/{v.denominator}" for k, v in self.entries.items()}


@dataclass(frozen=True)
class TripleFamily:
    """Triples affine in the free parameter t = [224]: key -> (constant, slope)."""

    entries: dict
    parameter: Key = (2, 2, 4)

    def at(self, t) -> TripleTable:
        t = Fraction(t)
        return TripleTable({k: c + s * t for k, (c, s) in self.entries.items()})


def bracket_support(dec: Decomposition) -> tuple[Key, ...]:
    """Sorted index triples i<=j<=k with +-xi_i +- xi_j +- xi_k = 0."""
    tr = dec.troots
    s = len(tr)
    out = []
    for i in range(s):
        for j in range(i, s):
            for k in range(j, s):
                for a, b in product((1, -1), repeat=2):
                    if all(a * x + b * y == z for x, y, z in zip(tr[i], tr[j], tr[k])):
                        out.append((i + 1, j + 1, k + 1))
                        break
                else:
                    continue
    return tuple(sorted(set(out)))


def _einstein_system(dec: Decomposition, unknowns, metric):
    """Linear equations r_i - r_{i+1} = 0 in the unknown triples at a fixed metric."""
    dims = dec.dims

    def diffs(values):
        table = dict(zip(unknowns, values))
        r = ricci_generic(dims, _Lookup(table), metric)
        return [r[i] - r[i + 1] for i in range(len(r) - 1)]

    base = diffs([Fraction(0)] * len(unknowns))
    rows = []
    for m in range(len(unknowns)):
        e = [Fraction(int(m == n)) for n in range(len(unknowns))]
        col = diffs(e)
        rows.append([c - b for c, b in zip(col, base)])
    matrix = [[rows[m][eq] for m in range(len(unknowns))] for eq in range(len(base))]
    rhs = [-b for b in base]
    return matrix, rhs


class _Lookup(dict):
    def __missing__(self, key):
        return Fraction(0)


def triples_from_ke(dec: Decomposition):
    """Triples forced by the Einstein property of the natural Kähler-Einstein metric.

    Type II: a TripleTable.  Type I: a TripleFamily in the parameter [224].
    """
    if dec.type_tag not in ("I", "IIa", "IIb"):
        raise ValueError(f"unsupported type {dec.type_tag}")
    support = bracket_support(dec)
    metric = ke_metric(dec).normalized
    if dec.type_tag == "I":
        param = (2, 2, 4)
        unknowns = [k for k in support if k != param]
        matrix, rhs = _einstein_system(dec, unknowns + [param], metric)
        # move the parameter column to the right-hand side: solve twice
        const = solve_linear([row[:-1] for row in matrix], rhs)
        shifted = solve_linear([row[:-1] for row in matrix], [b - row[-1] for row, b in zip(matrix, rhs)])
        return TripleFamily({k: (c, s - c) for k, c, s in zip(unknowns, const, shifted)} | {param: (Fraction(0), Fraction(1))})
    matrix, rhs = _einstein_system(dec, list(support), metric)
    values = solve_linear(matrix, rhs)
    return TripleTable(dict(zip(support, values)))


# --- twistor fibration ------------------------------------------------------

# Type I space (family, painted node) -> (fiber flag as family, rank, painted node; Killing ratio B_U'/B_G)
TWISTOR_DATA = {
    ("F4", 3): (("B", 4, 3), Fraction(14, 18)),
    ("E7", 4): (("D", 6, 3), Fraction(20, 36)),
    ("E8", 3): (("D", 8, 3), Fraction(28, 60)),
    ("E8", 6): (("E7", 7, 7), Fraction(36, 60)),
}


@dataclass(frozen=True)
class TwistorData:
    fiber: tuple[str, int, int]
    fiber_dims: tuple[int, int]
    fiber_triple_prime: Fraction
    killing_ratio: Fraction


def twistor_data(dec: Decomposition) -> TwistorData:
    if dec.type_tag != "I":
        raise ValueError("twistor data is defined for Type I spaces only")
    key = (dec.root_system.family.family, dec.diagram.painted[0])
    (fam, rank, node), ratio = TWISTOR_DATA[key]
    fiber = decompose(painted_diagram(fam, rank, (node,)))
    d2, d4 = fiber.dims
    return TwistorData((fam, rank, node), (d2, d4), Fraction(d2 * d4, d2 + 4 * d4), ratio)


def triples_twistor(dec: Decomposition) -> Fraction:
    """[224] of a Type I space from the fiber of its twistor fibration."""
    td = twistor_data(dec)
    if td.fiber_dims != (dec.dims[1], dec.dims[3]):
        raise AssertionError(f"fiber dims {td.fiber_dims} do not match {dec.dims}")
    return td.killing_ratio * td.fiber_triple_prime


def triples_einstein_route(dec: Decomposition) -> TripleTable:
    """Kähler-Einstein solve, completed by the twistor value for Type I."""
    res = triples_from_ke(dec)
    if isinstance(res, TripleFamily):
        return res.at(triples_twistor(dec))
    return res


# --- direct root-string summation --------------------------------------------

# Ratio between [ijk] and the raw complexified sum; fixed once against F4.
MULTIPLICITY = Fraction(1)


def _signed_members(dec: Decomposition, i: int) -> list[Root]:
    members = dec.summands[i - 1].members
    return list(members) + [tuple(-c for c in a) for a in members]


def raw_triple_sums(dec: Decomposition) -> dict:
    rs = dec.root_system
    pd = dec.diagram
    s = len(dec.summands)
    out = {}
    for i in range(1, s + 1):
        for j in range(i, s + 1):
            for k in range(j, s + 1):
                total = Fraction(0)
                for a in _signed_members(dec, i):
                    norm_b = rs.killing_scale * inner_product(rs, a, a)
                    for b in _signed_members(dec, j):
                        g = tuple(x + y for x, y in zip(a, b))
                        if not rs.is_root(g):
                            continue
                        if dec.summand_of(pd.kappa(g))[0] != k - 1:
                            continue
                        p, q = root_string(rs, a, b)
                        total += q * (1 + p) * norm_b / 2
                if total:
                    out[(i, j, k)] = total
    return out


def triples_direct(dec: Decomposition, multiplicity: Fraction = MULTIPLICITY) -> TripleTable:
    return TripleTable({k: multiplicity * v for k, v in raw_triple_sums(dec).items()})


def calibrate_multiplicity(reference: dict | None = None) -> Fraction:
    """Ratio published/raw on F4, required to be the same for every entry."""
    from .reference import TYPE1_TRIPLES

    reference = reference or TYPE1_TRIPLES["F4"]
    raw = raw_triple_sums(decompose(painted_diagram("F4", 0, (3,))))
    ratios = {Fraction(reference[k]) / raw[k] for k in reference}
    if len(ratios) != 1 or set(raw) != set(reference):
        raise AssertionError(f"calibration failed: ratios {ratios}")
    return ratios.pop()


def killing_ratio_from_coxeter(sub: tuple[str, int], whole: tuple[str, int]) -> Fraction:
    """B_U'/B_G for a simple subalgebra of embedding index one."""
    return Fraction(dual_coxeter(*sub), dual_coxeter(*whole))

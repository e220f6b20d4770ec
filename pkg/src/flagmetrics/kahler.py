"""Koszul forms and Kähler-Einstein metrics of four-summand flag manifolds."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .flagdecomp import Decomposition, Ordering, _extremal_member, enumerate_invariant_orderings
from .rootsys import Root, Weight, inner_product


@dataclass(frozen=True)
class KoszulForm:
    root_coeffs: tuple[int, ...]  # 2*delta_m over the simple roots
    weight_coeffs: tuple[Fraction, ...]  # delta_m over the fundamental weights

    def painted_coeffs(self, painted) -> tuple[Fraction, ...]:
        return tuple(self.weight_coeffs[i - 1] for i in painted)


@dataclass(frozen=True)
class KEMetric:
    ordering: Ordering
    values: tuple[Fraction, ...]
    normalized: tuple[Fraction, ...]


def _positive_complementary(dec: Decomposition, ordering: Ordering) -> list[Root]:
    """Complementary roots that are positive for the invariant ordering."""
    pd = dec.diagram
    out = []
    for a in dec.r_m_plus:
        v = sum(x * y for x, y in zip(pd.kappa(a), ordering.point))
        out.append(a if v > 0 else tuple(-c for c in a))
    return out


def koszul_form(dec: Decomposition, ordering: Ordering | None = None) -> KoszulForm:
    ordering = ordering or enumerate_invariant_orderings(dec)[0]
    rs = dec.root_system
    roots = _positive_complementary(dec, ordering)
    two_delta = tuple(sum(a[i] for a in roots) for i in range(rs.rank))
    w = rs.to_weight(two_delta)
    return KoszulForm(two_delta, tuple(c / 2 for c in w.coeffs))


def leading_entry(dec: Decomposition) -> Fraction:
    """First entry of the Kähler-Einstein metric in its customary presentation."""
    if dec.type_tag == "IIb":
        return Fraction(dec.root_system.rank, 2)
    return Fraction(1)


def ke_metric(dec: Decomposition, ordering: Ordering | None = None) -> KEMetric:
    """Kähler-Einstein metric (delta_m, lowest weight) for one invariant ordering.

    Raw values use the inner product in which long roots have squared length 1.
    """
    ordering = ordering or enumerate_invariant_orderings(dec)[0]
    rs = dec.root_system
    kf = koszul_form(dec, ordering)
    delta = Weight(kf.weight_coeffs)
    values = []
    for s, sign in zip(dec.summands, ordering.signs):
        members = [tuple(sign * c for c in a) for a in s.members]
        lows = _extremal_member(rs, members, dec.r_k_plus, +1)
        low = min(lows, key=lambda a: inner_product(rs, delta, a))
        values.append(inner_product(rs, delta, low) / 2)
    scale = leading_entry(dec) / values[0]
    return KEMetric(ordering, tuple(values), tuple(v * scale for v in values))


def all_ke_metrics(dec: Decomposition) -> list[KEMetric]:
    return [ke_metric(dec, o) for o in enumerate_invariant_orderings(dec)]

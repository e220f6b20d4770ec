import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagmetrics import reference as ref
from flagmetrics.isometry import (
    isometry_report,
    same_invariant,
    scalar_curvature,
    scalar_curvature_expanded,
    scale_invariant,
)

from conftest import solutions, space, triples

positive = st.floats(0.05, 20.0)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["F4", "E8(i)", "E6"]), st.tuples(positive, positive, positive, positive))
def test_two_scalar_curvature_routes(name, x):
    dec, tr = space(name), triples(name)
    a = scalar_curvature(dec, tr, x)
    b = scalar_curvature_expanded(dec, tr, x)
    assert abs(a - b) <= 1e-13 * max(1.0, abs(a))


@pytest.mark.parametrize("t", [0.1, 3.0, 100.0])
@pytest.mark.parametrize("name", ["F4", "E7", "E6"])
def test_degree_zero_homogeneity(name, t):
    dec, tr = space(name), triples(name)
    x = (1.0, 1.3, 0.7, 2.1)
    h = scale_invariant(dec, tr, x)
    assert abs(scale_invariant(dec, tr, tuple(t * v for v in x)) - h) <= 1e-12 * abs(h)


def test_ke_scalar_curvature_is_dimension_times_constant():
    for name in ("F4", "E6", "E8(i)"):
        dec, tr = space(name), triples(name)
        for s in solutions(name):
            if s.kind == "KE":
                assert scalar_curvature(dec, tr, s.metric) == pytest.approx(
                    sum(dec.dims) * s.einstein_constant, rel=1e-10
                )


def test_e6_values_and_groups():
    dec, tr = space("E6"), triples("E6")
    for label, m in ref.TYPE2A_EINSTEIN["E6"].items():
        assert scale_invariant(dec, tr, m) == pytest.approx(ref.E6_SCALE_INVARIANTS[label], abs=1e-2)
    report = isometry_report(dec, tr, solutions("E6"))
    ke = [i for i, r in enumerate(report.records) if r.kind == "KE"]
    ke_groups = [g for g in report.groups if set(g) <= set(ke)]
    assert sorted(len(g) for g in ke_groups) == [2, 2]
    assert all(v in ("non-isometric", "indistinguishable by H") for _, _, v in report.verdicts)


def test_f4_groups_are_singletons():
    report = isometry_report(space("F4"), triples("F4"), solutions("F4"))
    assert len(report.groups) == 3 and all(len(g) == 1 for g in report.groups)


def test_sp_non_kaehler_pair_indistinguishable():
    report = isometry_report(space("C", 6, 3), triples("C", 6, 3), solutions("C", 6, 3))
    pair = [i for i, r in enumerate(report.records) if r.kind == "non-Kaehler"]
    assert len(pair) == 2
    assert (pair[0], pair[1], "indistinguishable by H") in report.verdicts
    assert "isometric" not in {v for _, _, v in report.verdicts}


def test_tolerance_helper_and_errors():
    assert same_invariant(20.0, 20.0 + 1e-6)
    assert not same_invariant(20.0, 20.001)
    with pytest.raises(ValueError):
        scale_invariant(space("F4"), triples("F4"), (1, 0, 1, 1))


def _type_one_explicit(d, t, x):
    x1, x2, x3, x4 = x
    s = sum(di / xi for di, xi in zip(d, x)) / 2
    s -= t[(1, 2, 3)] / 2 * (x1 / (x2 * x3) + x2 / (x1 * x3) + x3 / (x1 * x2))
    s -= t[(1, 3, 4)] / 2 * (x1 / (x3 * x4) + x3 / (x1 * x4) + x4 / (x1 * x3))
    s -= t[(1, 1, 2)] / 4 * (x2 / x1**2 + 2 / x2)
    s -= t[(2, 2, 4)] / 4 * (x4 / x2**2 + 2 / x4)
    return s


@pytest.mark.parametrize("name", list(ref.TYPE1_SPACES))
def test_type_one_closed_expression(name):
    dec, tr = space(name), triples(name)
    table = {k: float(v) for k, v in ref.TYPE1_TRIPLES[name].items()}
    for x in [(1, 2, 3, 4)] + ref.TYPE1_EINSTEIN[name]:
        assert scalar_curvature(dec, tr, x) == pytest.approx(_type_one_explicit(dec.dims, table, x), rel=1e-13)


def test_type_one_invariants_frozen():
    # values of H at the solver's own KE metrics, four decimals
    frozen = {"F4": 14.5996, "E7": 38.0563, "E8(ii)": 70.2625, "E8(i)": 70.1781}
    for name, want in frozen.items():
        assert scale_invariant(space(name), triples(name), (1, 2, 3, 4)) == pytest.approx(want, abs=1e-4)

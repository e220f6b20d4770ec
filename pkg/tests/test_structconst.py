from fractions import Fraction as Q
from itertools import permutations

import pytest

from flagmetrics import reference as ref
from flagmetrics.structconst import (
    MULTIPLICITY,
    TripleTable,
    bracket_support,
    calibrate_multiplicity,
    killing_ratio_from_coxeter,
    triples_direct,
    triples_from_ke,
    triples_einstein_route,
    triples_twistor,
    twistor_data,
)

from conftest import space

SUPPORT = {"I": ((1, 1, 2), (1, 2, 3), (1, 3, 4), (2, 2, 4)), "IIa": ((1, 2, 3), (2, 3, 4)), "IIb": ((1, 2, 3), (1, 3, 4))}


@pytest.mark.parametrize("name", list(ref.TYPE1_TRIPLES))
def test_type_one_tables(name):
    dec = space(name)
    want = {k: Q(v) for k, v in ref.TYPE1_TRIPLES[name].items()}
    assert triples_einstein_route(dec).entries == want
    assert triples_direct(dec).entries == want


def test_type_one_family_f4():
    fam = triples_from_ke(space("F4"))
    for t in (Q(0), Q(1), Q(2), Q(7, 3)):
        table = fam.at(t)
        assert table[(1, 1, 2)] == t
        assert table[(1, 2, 3)] == (4 - t) / 2
        assert table[(1, 3, 4)] == (10 - 3 * t) / 6


@pytest.mark.parametrize(
    "name,fiber,prime,value",
    [("F4", ("B", 4, 3), Q(18, 7), Q(2)), ("E8(i)", ("D", 8, 3), Q(30, 7), Q(2)), ("E8(ii)", ("E7", 7, 7), Q(70, 9), Q(14, 3))],
)
def test_twistor(name, fiber, prime, value):
    td = twistor_data(space(name))
    assert td.fiber == fiber and td.fiber_triple_prime == prime
    assert 0 < td.killing_ratio < 1
    assert triples_twistor(space(name)) == value


def test_twistor_rejects_type_two():
    with pytest.raises(ValueError):
        twistor_data(space("E6"))


def test_killing_ratios_agree_with_coxeter_numbers():
    assert killing_ratio_from_coxeter(("B", 4), ("F4", 0)) == ref.KILLING_RATIO["F4"]
    assert killing_ratio_from_coxeter(("E7", 0), ("E8", 0)) == ref.KILLING_RATIO["E8(ii)"]


def test_multiplicity_calibration():
    assert calibrate_multiplicity() == MULTIPLICITY == 1


CASES = [("B", l, 0) for l in range(3, 11)] + [("D(i)", l, 0) for l in range(3, 11)]
CASES += [("C", l, p) for l in range(2, 9) for p in range(1, l)]
CASES += [("D(ii)", l, p) for l in range(4, 10) for p in range(2, l - 1)]
CASES += [("E6", 0, 0), ("E7-IIa", 0, 0)]


@pytest.mark.parametrize("kind,l,p", CASES)
def test_type_two_formulas_and_cross_method(kind, l, p):
    dec = space(kind, l, p)
    a, b = triples_einstein_route(dec), triples_direct(dec)
    assert a == b
    assert a.entries == ref.type2_triples(kind.removesuffix("-IIa"), l, p)
    assert a.support == SUPPORT[dec.type_tag]
    assert bracket_support(dec) == a.support


def test_triple_table_symmetry():
    table = triples_einstein_route(space("E8(ii)"))
    for key in table.support:
        assert {table[perm] for perm in permutations(key)} == {table[key]}
    assert table[(1, 1, 1)] == 0
    assert table.to_dict()["224"] == "14/3"
    with pytest.raises(ValueError):
        TripleTable({(1, 2, 3): -1})

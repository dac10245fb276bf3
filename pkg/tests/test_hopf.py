"""Hopf algebra construction and axiom checks."""

import pytest

from greenring.errors import OutOfRange
from greenring.hopf import (build_dk1, build_km, check_hopf_axioms,
                            get_algebra, jacobson_radical)


def test_dimensions():
    for m in range(1, 7):
        assert build_km(m).dim == 2 ** (m + 1)
    assert build_dk1().dim == 16


def test_km_out_of_range():
    with pytest.raises(OutOfRange):
        build_km(0)
    with pytest.raises(OutOfRange):
        build_km(7)


def test_axioms_km():
    for m in (1, 2, 3):
        report = check_hopf_axioms(build_km(m))
        assert report.ok, report.lines()


def test_axioms_dk1():
    report = check_hopf_axioms(build_dk1())
    assert report.ok, report.lines()


def test_defining_relations_k2():
    a = build_km(2)
    k = a.index[(0,)]
    x1 = a.index[(1,)]
    x2 = a.index[(2,)]
    unit = a.unit
    assert a.mult[(k, k)] == unit
    assert a.mult[(x1, x1)] == {}
    # anticommutation: x2 x1 = -x1 x2
    x1x2 = a.index[(1, 2)]
    assert a.mult[(x2, x1)] == {x1x2: -list(a.mult[(x1, x2)].values())[0]}


def test_dk1_cross_relation():
    a = build_dk1()
    ai = a.index[(0,)]
    di = a.index[(3,)]
    # da + ad = 1 - bc
    da = dict(a.mult[(di, ai)])
    for k, v in a.mult[(ai, di)].items():
        da[k] = da.get(k, 0) + v
        if not da[k]:
            del da[k]
    bc = a.index[(1, 2)]
    assert da == {a.index[()]: 1, bc: -1}


def test_radical_dimensions():
    # K_m: radical spanned by all words containing an odd generator
    assert len(jacobson_radical(build_km(1))) == 2
    assert len(jacobson_radical(build_km(2))) == 6
    assert len(jacobson_radical(build_dk1())) == 6


def test_get_algebra():
    assert get_algebra("K2").name == "K2"
    assert get_algebra("DK1").name == "DK1"
    with pytest.raises(Exception):
        get_algebra("bogus")


def test_antipode_squared_is_conjugation_by_k():
    # S^2(xi) = K xi K^{-1} = -xi, so S^2 != id but S^4 = id
    a = build_km(2)
    s = a.antipode_matrix()
    assert s * s != s.__class__.identity(a.dim)
    assert (s * s) * (s * s) == s.__class__.identity(a.dim)

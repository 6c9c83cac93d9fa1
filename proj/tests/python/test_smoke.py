"""Smoke tests for the python bindings: the worked F_8 example end to end."""

import json

import pytest

import gabidulin as gb


@pytest.fixture()
def f8():
    return gb.Field(2, 3, [1, 1, 0, 1])


@pytest.fixture()
def code(f8):
    return gb.Code(f8, 3, 2)


def a(f8, e):
    return f8.alpha_pow(e)


def test_field_arithmetic(f8):
    assert f8.size == 8
    assert f8.alpha_pow(3) == f8.add(f8.alpha(), f8.one())
    assert f8.mul(a(f8, 5), a(f8, 4)) == a(f8, 2)
    assert f8.inv(f8.one()) == f8.one()
    assert f8.frobenius(f8.alpha(), 1) == a(f8, 2)
    with pytest.raises(ValueError):
        f8.inv(f8.zero())
    with pytest.raises(ValueError):
        gb.Field(4, 2)


def test_linpoly_ops(f8):
    lam = gb.LinPoly(f8, [a(f8, 5), f8.zero(), a(f8, 2)])  # a^2 x^4 + a^5 x
    assert lam.evaluate(f8.one()) == a(f8, 3)
    pi = gb.annihilator(f8, [f8.one(), f8.alpha(), a(f8, 2)])
    assert str(pi) == "x^8 + x"
    quot, rem = gb.left_divide(pi, lam)
    assert str(quot) == "a^3*x^2"
    assert str(rem) == "a^6*x^2 + x"
    assert gb.q_lagrange(
        f8, [f8.one(), f8.alpha(), a(f8, 2)], [a(f8, 3), f8.zero(), f8.alpha()]
    ) == lam


def test_encode_decode_matches_oracle(f8, code):
    msg = gb.LinPoly(f8, [f8.one(), f8.alpha()])  # a x^2 + x
    cw = code.encode(msg)
    assert cw == [a(f8, 3), f8.one(), a(f8, 3)]

    r = [a(f8, 3), f8.zero(), f8.alpha()]
    dec = gb.list_decode(code, r)
    orc = gb.oracle_closest(code, r)
    assert dec.distance == orc.min_distance == 1
    assert len(dec.entries) == len(orc.closest) == 7
    assert [e.message for e in dec.entries] == [e.message for e in orc.closest]
    assert any(e.message == msg for e in dec.entries)
    assert sum(orc.histogram.values()) == 64


def test_random_error_and_unique_decode():
    F = gb.Field(2, 4)
    code = gb.Code(F, 4, 2)
    msg = gb.LinPoly(F, [F.alpha(), F.one()])
    e = gb.random_error(code, 1, seed=7)
    r = [F.add(c, ei) for c, ei in zip(code.encode(msg), e)]
    assert gb.rank_distance(F, code.encode(msg), r) == 1
    entry = gb.decode_unique(code, r)
    assert entry.message == msg

    # Beyond the unique radius the wrapper reports ambiguity.
    F8 = gb.Field(2, 3)
    ex = gb.Code(F8, 3, 2)
    bad = [F8.alpha_pow(3), F8.zero(), F8.alpha()]
    with pytest.raises(gb.Ambiguous):
        gb.decode_unique(ex, bad)


def test_minimal_basis_and_json(f8, code):
    r = [a(f8, 3), f8.zero(), f8.alpha()]
    mb = gb.minimal_basis(gb.interpolation_module(code, r), code.k)
    assert (mb.l1, mb.l2) == (2, 2)
    assert str(mb.g2.f1) == "a^6*x^2 + x"

    blob = json.loads(gb.code_to_json(code))
    assert blob["field"] == {"q": 2, "m": 3, "modulus": [1, 1, 0, 1]}
    code2 = gb.code_from_json(gb.code_to_json(code))
    assert code2.g == code.g

    ok, report = gb.run_selftest()
    assert ok, report

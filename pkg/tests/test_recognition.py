import random

import pytest

from dickson_dyn.dickson import dickson_reduced
from dickson_dyn.errors import DeskBoundExceeded
from dickson_dyn.gf import field_of_order, parse_element
from dickson_dyn.polyring import Poly, RPoly, rp_monomial, rp_x
from dickson_dyn.recognition import (
    DICKSON,
    MONOMIAL,
    NOT_DICKSON,
    _allowed_parities,
    _profile,
    dickson_table,
    recognize,
    recognize_brute,
    recognize_guess,
)

DESK_Q = [3, 4, 5, 7, 8, 9]
RECOGNIZERS = [recognize_brute, recognize_guess]


def test_published_example():
    F = field_of_order(5)
    g = RPoly(F, (2, 0, 1, 0, 1))
    for rec in RECOGNIZERS:
        r = rec(g, F)
        assert (r.kind, r.n, r.alpha) == (DICKSON, 4, 1)
        assert r.to_json(F) == {"dickson": True, "n": 4, "alpha": "1"}


def test_x_is_dickson_with_smallest_alpha():
    for q in DESK_Q:
        F = field_of_order(q)
        r = recognize_brute(rp_x(F), F)
        assert (r.kind, r.n, r.alpha) == (DICKSON, 1, 1)
        assert recognize_guess(rp_x(F), F).kind == DICKSON


def test_constant_two_and_zero():
    F = field_of_order(7)
    two = RPoly(F, (2,) + (0,) * 6)
    assert recognize_brute(two, F).n == 0
    F4 = field_of_order(4)
    zero = RPoly(F4, (0,) * 4)
    for rec in RECOGNIZERS:
        assert rec(zero, F4).kind == DICKSON


def test_monomial_fallback():
    F = field_of_order(5)
    # x^2 over F_5 is not D_n(x, alpha) for any unit alpha, while x^3 = D_13(x, alpha) is
    g = rp_monomial(F, 2)
    for rec in RECOGNIZERS:
        r = rec(g, F)
        assert (r.kind, r.n) == (MONOMIAL, 2)
        assert r.to_json(F) == {"dickson": True, "n": 2, "alpha": "0"}
        assert rec(rp_monomial(F, 3), F).kind == DICKSON


def test_not_dickson():
    F = field_of_order(5)
    g = RPoly(F, (1, 1, 0, 0, 0))
    for rec in RECOGNIZERS:
        r = rec(g, F)
        assert r.kind == NOT_DICKSON and not r.is_dickson
        assert r.to_json(F) == {"dickson": False}


def test_accepts_unreduced_and_raw_inputs():
    F = field_of_order(5)
    # x^8 + x^6 + 2 reduces to x^4 + x^2 + 2
    f = Poly(F, (2, 0, 0, 0, 0, 0, 1, 0, 1))
    assert recognize_brute(f, F).n == 4
    assert recognize_guess([2, 0, 1, 0, 1], F).n == 4
    with pytest.raises(ValueError):
        recognize(f, F, method="other")


def test_dickson_table_examples():
    F = field_of_order(5)
    table = dickson_table(F)
    x = rp_x(F)
    assert {(1, a) for a in F.elements()} <= table[x]
    assert (5, 1) in table[x] and (7, 1) in table[x]
    two = RPoly(F, (2, 0, 0, 0, 0))
    for a in F.units():
        assert (0, a) in table[two] and (24, a) in table[two]
    with pytest.raises(DeskBoundExceeded):
        dickson_table(field_of_order(17))


@pytest.mark.parametrize("q", DESK_Q)
def test_round_trip_all_dickson(q):
    F = field_of_order(q)
    for alpha in F.units():
        for n in range(q * q):
            g = dickson_reduced(n, alpha, F)
            for rec in RECOGNIZERS:
                r = rec(g, F)
                assert r.kind == DICKSON
                assert dickson_reduced(r.n, r.alpha, F) == g


@pytest.mark.parametrize("q", DESK_Q)
def test_brute_witness_is_canonical(q):
    F = field_of_order(q)
    table = dickson_table(F)
    for g, pairs in table.items():
        units = sorted((a, n) for n, a in pairs if a != 0)
        if units:
            r = recognize_brute(g, F)
            assert (r.alpha, r.n) == units[0]


@pytest.mark.parametrize("q", DESK_Q)
def test_random_polynomials_against_table(q):
    F = field_of_order(q)
    table = dickson_table(F)
    rng = random.Random(q)
    for _ in range(1000):
        g = RPoly(F, tuple(rng.randrange(q) for _ in range(q)))
        member = g in table
        for rec in RECOGNIZERS:
            assert rec(g, F).is_dickson == member


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11])
def test_parity_screen_is_conservative(q):
    F = field_of_order(q)
    for alpha in F.units():
        for n in range(q * q):
            g = dickson_reduced(n, alpha, F)
            assert n % 2 in _allowed_parities(g)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 11, 13])
def test_profiles_predict_every_coefficient(q):
    F = field_of_order(q)
    step = q - 1 if q % 2 == 0 else (q - 1) // 2
    for alpha in F.units():
        l = F.pow(F.neg(alpha), step)
        l_int = 1 if l == 1 else -1
        for n in range(q * q):
            prof = _profile(F, n, l_int)
            g = dickson_reduced(n, alpha, F).coeffs
            predicted = [0] * q
            for e, c, pw in prof.entries:
                predicted[e] = F.mul(c, F.pow(F.neg(alpha), pw))
            assert tuple(predicted) == g, (q, alpha, n)


@pytest.mark.parametrize("q", [11, 13, 16])
def test_larger_fields_sampled(q):
    F = field_of_order(q)
    rng = random.Random(q)
    for _ in range(100):
        alpha = rng.randrange(1, q)
        n = rng.randrange(q * q)
        g = dickson_reduced(n, alpha, F)
        b, u = recognize_brute(g, F), recognize_guess(g, F)
        assert b.kind == u.kind == DICKSON


def test_extension_field_witness_formatting():
    F = field_of_order(4)
    z = parse_element(F, "z")
    g = dickson_reduced(3, z, F)
    r = recognize_brute(g, F)
    assert r.to_json(F)["alpha"] in {"z", "z+1", "1"}
    assert dickson_reduced(r.n, r.alpha, F) == g

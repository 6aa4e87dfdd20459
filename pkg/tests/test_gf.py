import itertools
import random

import pytest

from dickson_dyn.errors import DeskBoundExceeded, NotPrimeError, ParseError, ZeroInputError
from dickson_dyn.gf import (
    field_of_order,
    format_element,
    is_square,
    make_ext,
    make_field,
    mult_order,
    parse_element,
    phi_alpha,
    phi_preimages,
    prime_power,
    s_gamma,
    smallest_irreducible,
    sqrt_in_ext,
)

SMALL_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def test_prime_field_elements():
    F = make_field(2, 1)
    assert list(F.elements()) == [0, 1]
    assert F.q == 2


def test_f4_modulus_and_cube_roots():
    F = make_field(2, 2)
    assert F.modulus == (1, 1, 1)  # z^2 + z + 1
    for a in F.units():
        assert F.pow(a, 3) == 1
    z = parse_element(F, "z")
    assert F.mul(z, z) == parse_element(F, "z+1")


def test_f9_generator_order():
    F = make_field(3, 2)
    assert mult_order(F, F.generator) == 8


def test_lexicographically_smallest_moduli():
    assert smallest_irreducible(2, 3) == (1, 0, 1, 1)  # z^3 + z^2 + 1
    assert smallest_irreducible(2, 4) == (1, 0, 0, 1, 1)
    assert smallest_irreducible(3, 2) == (1, 0, 1)


def test_prime_field_arithmetic():
    F = field_of_order(11)
    assert F.mul(6, 2) == 1
    assert F.inv(4) == 3
    assert F.neg(1) == 10
    assert F.sub(3, 5) == 9
    assert F.div(1, 4) == 3


@pytest.mark.parametrize("q", SMALL_Q)
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    els = list(F.elements())
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(F.sub(a, b), b) == a
    for a, b, c in itertools.product(els, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a in F.units():
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, q - 1) == 1
        assert (q - 1) % mult_order(F, a) == 0
    assert mult_order(F, F.generator) == q - 1


@pytest.mark.parametrize("q", [25, 27, 49, 64, 81, 125, 243, 256])
def test_field_axioms_random(q):
    F = field_of_order(q)
    rng = random.Random(q)
    for _ in range(500):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        if a:
            assert F.mul(a, F.inv(a)) == 1
    assert mult_order(F, F.generator) == q - 1


def test_table_arithmetic_matches_methods():
    F = field_of_order(9)
    for a, b in itertools.product(F.elements(), repeat=2):
        assert F.add_table[a * 9 + b] == F.add(a, b)
        assert F.mul_table[a * 9 + b] == F.mul(a, b)
    assert [F.neg_table[a] for a in F.elements()] == [F.neg(a) for a in F.elements()]


def test_tables_refused_above_bound():
    F = field_of_order(257)
    with pytest.raises(DeskBoundExceeded):
        F.mul_table


def test_not_prime_power_rejected():
    for q in (0, 1, 6, 12, 100):
        with pytest.raises(NotPrimeError):
            prime_power(q)
    with pytest.raises(NotPrimeError):
        make_field(4, 1)


def test_is_square_examples():
    F5 = field_of_order(5)
    assert is_square(F5, 4)
    assert not is_square(F5, 2)
    F4 = field_of_order(4)
    assert all(is_square(F4, a) for a in F4.units())
    with pytest.raises(ZeroInputError):
        is_square(F5, 0)


def test_mult_order_examples():
    F5 = field_of_order(5)
    assert mult_order(F5, 1) == 1
    assert mult_order(F5, 4) == 2
    F4 = field_of_order(4)
    assert mult_order(F4, parse_element(F4, "z")) == 3


@pytest.mark.parametrize("q", SMALL_Q + [27])
def test_format_parse_round_trip(q):
    F = field_of_order(q)
    for a in F.elements():
        assert parse_element(F, format_element(F, a)) == a


def test_parse_element_grammar():
    F11 = field_of_order(11)
    assert parse_element(F11, "-1") == 10
    assert parse_element(F11, "12") == 1
    F4 = field_of_order(4)
    assert parse_element(F4, "z_2 + 1") == parse_element(F4, "z+1") == 3
    assert parse_element(F4, "z^2") == 3
    assert parse_element(F4, "(z_2 + 1)") == 3
    F9 = field_of_order(9)
    assert format_element(F9, parse_element(F9, "2z+1")) == "2z+1"
    for bad in ("", "q", "1+", "z"):
        with pytest.raises(ParseError):
            parse_element(F11, bad)


def test_ext_moduli():
    assert make_ext(field_of_order(3)).u == 2
    assert make_ext(field_of_order(5)).u == 2
    E2 = make_ext(field_of_order(2))
    assert (E2.t, E2.u) == (1, 1)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 9])
def test_ext_is_a_field(q):
    E = make_ext(field_of_order(q))
    units = list(E.units())
    assert len(units) == q * q - 1
    for v in units:
        assert E.mul(v, E.inv(v)) == (1, 0)
        assert (q * q - 1) % E.mult_order(v) == 0
    assert max(E.mult_order(v) for v in units) == q * q - 1
    rng = random.Random(q)
    for _ in range(200):
        a, b = rng.choice(units), rng.choice(units)
        assert E.norm(E.mul(a, b)) == E.base.mul(E.norm(a), E.norm(b))
        assert E.conj(a) == E.pow(a, q)


def test_phi_alpha_examples():
    E = make_ext(field_of_order(5))
    assert phi_alpha(E, 1, (1, 0)) == (2, 0)
    assert phi_alpha(E, 1, (2, 0)) == (0, 0)
    for beta in range(1, 5):
        assert E.is_embedded(phi_alpha(E, 3, (beta, 0)))
    with pytest.raises(ZeroInputError):
        phi_alpha(E, 1, (0, 0))


def test_phi_preimages_examples():
    E = make_ext(field_of_order(5))
    assert phi_preimages(E, 1, 2) == {(1, 0)}
    assert phi_preimages(E, 1, 0) == {(2, 0), (3, 0)}
    for alpha in range(1, 5):
        for beta in range(5):
            roots = phi_preimages(E, alpha, beta)
            assert 1 <= len(roots) <= 2
            for r in roots:
                assert phi_alpha(E, alpha, r) == (beta, 0)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13])
def test_phi_lands_in_base_field_exactly_on_norm_set(q):
    F = field_of_order(q)
    E = make_ext(F)
    for alpha in F.units():
        a = E.embed(alpha)
        for u in E.units():
            in_base = E.is_embedded(phi_alpha(E, alpha, u))
            on_norm = E.pow(u, q + 1) == a
            assert in_base == (on_norm or E.is_embedded(u))


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
def test_square_alpha_solvability(q):
    F = field_of_order(q)
    E = make_ext(F)
    for alpha in F.units():
        if not is_square(F, alpha):
            continue
        a = E.embed(alpha)
        reached = set()
        for u in E.units():
            u2 = E.mul(u, u)
            v = E.add(u2, E.mul(a, E.inv(u2)))
            if E.is_embedded(v):
                reached.add(v[0])
        assert set(F.units()) <= reached


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_s_gamma_orders(q):
    F = field_of_order(q)
    E = make_ext(F)
    assert len(s_gamma(E, 1)) == q + 1
    assert any(E.mult_order(u) == q + 1 for u in s_gamma(E, 1))
    for gamma in F.units():
        members = s_gamma(E, gamma)
        assert len(members) == q + 1
        assert any(E.mult_order(u) % (q + 1) == 0 for u in members)


def test_s_gamma_q3():
    E = make_ext(field_of_order(3))
    members = s_gamma(E, 2)
    assert len(members) == 4
    assert all(E.mult_order(u) % 4 == 0 for u in members)


def test_sqrt_in_ext():
    E = make_ext(field_of_order(3))
    assert sqrt_in_ext(E, 1) in {(1, 0), (2, 0)}
    assert sqrt_in_ext(E, 0) == (0, 0)
    v = sqrt_in_ext(E, 2)
    assert E.mul(v, v) == (2, 0) and not E.is_embedded(v)

import math
import random

import pytest

from dickson_dyn.dickson import (
    check_compose_identity,
    check_functional_eq,
    closed_degree_bound,
    dickson_closed,
    dickson_reduced,
    dickson_stride2,
    is_permutation,
    permutation_criterion,
)
from dickson_dyn.errors import DegreeTooLargeError, ZeroInputError
from dickson_dyn.gf import field_of_order, make_ext, parse_element
from dickson_dyn.polyring import Poly, reduce, rp_x

DESK_Q = [2, 3, 4, 5, 7, 8, 9]


def test_small_closed_forms():
    F = field_of_order(7)
    for alpha in F.elements():
        assert dickson_closed(0, alpha, F).coeffs == (2,)
        assert dickson_closed(1, alpha, F).coeffs == (0, 1)
        assert dickson_closed(2, alpha, F).coeffs == (F.neg(F.mul(2, alpha)), 0, 1)
        assert dickson_closed(3, alpha, F).coeffs == (0, F.neg(F.mul(3, alpha)), 0, 1)


def test_closed_form_matches_published_grid_start():
    F = field_of_order(11)
    d = dickson_closed(120, F.neg(1), F)
    assert (d.coeff(120), d.coeff(118), d.coeff(116)) == (1, 10, 2)


def test_closed_form_degree_bound():
    F = field_of_order(3)
    with pytest.raises(DegreeTooLargeError):
        dickson_closed(closed_degree_bound(F) + 1, 1, F)


def test_reduced_examples():
    F3 = field_of_order(3)
    assert dickson_reduced(2, 1, F3).coeffs == (1, 0, 1)
    assert dickson_reduced(4, 1, F3).coeffs == (2, 0, 0)
    F5 = field_of_order(5)
    assert dickson_stride2(4, 1, F5).coeffs == (2, 0, 1, 0, 1)


def test_worked_example_over_f8():
    F = field_of_order(8)
    for a in F.units():
        expected = [0] * 8
        expected[7] = F.pow(a, 4)
        expected[6] = a
        expected[4] = F.pow(a, 2)
        expected[1] = 1
        assert dickson_reduced(36, a, F).coeffs == tuple(expected)


@pytest.mark.parametrize("q", DESK_Q)
def test_three_constructions_agree(q):
    F = field_of_order(q)
    for alpha in F.units():
        for n in range(q * q):
            r = dickson_reduced(n, alpha, F)
            assert reduce(dickson_closed(n, alpha, F)) == r
            assert dickson_stride2(n, alpha, F) == r


@pytest.mark.parametrize("q", [3, 4, 5])
def test_folding_past_q_squared(q):
    F = field_of_order(q)
    for alpha in F.units():
        for n in range(q * q + 1, 3 * q * q):
            assert dickson_reduced(n, alpha, F) == reduce(dickson_closed(n, alpha, F))


def test_alpha_zero_is_monomial():
    F = field_of_order(5)
    assert dickson_reduced(0, 0, F).coeffs == (2, 0, 0, 0, 0)
    assert dickson_reduced(3, 0, F).coeffs == (0, 0, 0, 1, 0)
    assert dickson_reduced(6, 0, F).coeffs == (0, 0, 1, 0, 0)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11])
def test_parity_and_monicity(q):
    F = field_of_order(q)
    rng = random.Random(q)
    for _ in range(30):
        n = rng.randrange(1, 200)
        alpha = rng.randrange(1, q)
        d = dickson_closed(n, alpha, F)
        assert d.degree == n and d.coeff(n) == 1
        assert all(d.coeff(e) == 0 for e in range(n + 1) if (n - e) % 2)


def test_functional_equation_examples():
    E = make_ext(field_of_order(5))
    assert check_functional_eq(1, 3, E)
    assert check_functional_eq(7, 2, E)
    with pytest.raises(ZeroInputError):
        check_functional_eq(3, 0, E)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_functional_equation_scan(q):
    F = field_of_order(q)
    E = make_ext(F)
    step = 1 if q <= 4 else 5
    for alpha in F.units():
        for n in range(0, 2 * (q * q - 1) + 1, step):
            assert check_functional_eq(n, alpha, E), (q, alpha, n)


def test_composition_identity_examples():
    F5 = field_of_order(5)
    assert check_compose_identity(1, 7, 2, F5)
    assert check_compose_identity(5, 5, 1, F5)
    assert dickson_reduced(25, 1, F5) == rp_x(F5)


def test_composition_identity_random():
    rng = random.Random(2024)
    for _ in range(500):
        q = rng.choice(DESK_Q)
        F = field_of_order(q)
        assert check_compose_identity(rng.randrange(0, 60), rng.randrange(0, 60), rng.randrange(1, q), F)


def test_permutation_examples():
    F5 = field_of_order(5)
    assert is_permutation(1, 3, F5)
    assert is_permutation(7, 1, F5)
    assert all(not is_permutation(2, a, F5) for a in F5.units())


@pytest.mark.parametrize("q", DESK_Q)
def test_permutation_criterion_exhaustive(q):
    F = field_of_order(q)
    for alpha in F.units():
        for n in range(1, q * q):
            assert is_permutation(n, alpha, F) == permutation_criterion(n, q)


@pytest.mark.parametrize("q", DESK_Q)
def test_scalar_multiple_of_x_is_x(q):
    F = field_of_order(q)
    for n in range(q * q):
        c = dickson_reduced(n, 1, F).coeffs
        if any(c) and all(v == 0 for e, v in enumerate(c) if e != 1):
            assert c[1] == 1


def test_f4_generator_in_published_notation():
    F = field_of_order(4)
    z = parse_element(F, "z_2")
    assert dickson_reduced(3, z, F) == reduce(Poly(F, (0, z, 0, 1)))

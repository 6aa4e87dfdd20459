import math

import pytest

from dickson_dyn.dickson import dickson_reduced
from dickson_dyn.dynamics import (
    OQ_CSV_HEADER,
    composition_period,
    construct_and_check_max_period,
    delta_rule_period,
    group_elements,
    iteration_structure,
    kernel,
    kernel_prediction,
    open_question_scan,
    quotient_period,
    record_alpha_text,
    valid_units,
)
from dickson_dyn.errors import AlphaNotFixedError, NotCoprimeError, ZeroInputError
from dickson_dyn.gf import field_of_order, parse_element
from dickson_dyn.numtheory import mult_order_mod
from dickson_dyn.periodicity import theoretical_period
from dickson_dyn.polyring import rp_compose, rp_x

GROUP_Q = [2, 3, 4, 5, 7, 8, 9]


def test_q5_fixture():
    F = field_of_order(5)
    x = rp_x(F)
    assert dickson_reduced(5, 1, F) == x
    assert dickson_reduced(7, 1, F) == x
    assert composition_period(F, 1, 5) == 1
    assert composition_period(F, 1, 7) == 1


def test_kernel_examples():
    F = field_of_order(5)
    assert kernel(F, 1) == {1, 5, 7, 11}
    assert kernel(F, 2) == {1, 5}
    with pytest.raises(ZeroInputError):
        kernel(F, 0)


@pytest.mark.parametrize("q", GROUP_Q)
def test_group_structure(q):
    F = field_of_order(q)
    for alpha in F.units():
        rep = group_elements(F, alpha)
        assert rep.kernel == kernel_prediction(F, alpha)
        assert rep.has_identity and rep.closed and rep.has_inverses
        assert len(rep.elements) == rep.valid_unit_count // len(rep.kernel)
        assert rep.ok


@pytest.mark.parametrize("q", GROUP_Q)
def test_composition_period_is_quotient_order(q):
    F = field_of_order(q)
    for alpha in F.units():
        for n in valid_units(F, alpha):
            assert composition_period(F, alpha, n) == quotient_period(F, alpha, n)


def test_composition_period_direct():
    F = field_of_order(7)
    x = rp_x(F)
    for alpha in F.units():
        for n in valid_units(F, alpha):
            step = dickson_reduced(n, alpha, F)
            t = composition_period(F, alpha, n)
            cur = step
            for _ in range(t - 1):
                assert cur != x
                cur = rp_compose(step, cur)
            assert cur == x


def test_composition_period_preconditions():
    F = field_of_order(5)
    with pytest.raises(NotCoprimeError):
        composition_period(F, 1, 2)
    with pytest.raises(AlphaNotFixedError):
        composition_period(F, 2, 7)
    with pytest.raises(ZeroInputError):
        composition_period(F, 0, 7)


def test_delta_rule_is_reported():
    F = field_of_order(5)
    for n in valid_units(F, 2):
        value = delta_rule_period(F, 2, n)
        assert value > 0
        assert value.denominator in (1, 2)


def test_iteration_structure_example():
    F = field_of_order(5)
    rec = iteration_structure(F, 1, 2)
    assert (rec.l, rec.k, rec.poly_l, rec.poly_k) == (1, 2, 1, 1)
    assert rec.tail_lemma_holds and rec.ratio_ok
    assert rec.ratio == 2.0


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_iteration_structure_matches_integer_side_for_units(q):
    F = field_of_order(q)
    for alpha in F.units():
        pi = theoretical_period(F, alpha)
        for n in valid_units(F, alpha):
            rec = iteration_structure(F, alpha, n)
            assert rec.l == rec.poly_l == 0
            assert rec.k == mult_order_mod(n, pi)
            assert rec.poly_k == composition_period(F, alpha, n)
            assert rec.k % rec.poly_k == 0


def test_open_question_scan_small():
    scan = open_question_scan(9)
    assert scan.rows
    assert all(r.k % 2 == 0 for r in scan.rows)
    assert not scan.violations
    lines = scan.csv_lines(record_alpha_text)
    assert lines[0] == OQ_CSV_HEADER
    assert len(lines) == len(scan.rows) + 1
    assert scan.json_lines(record_alpha_text)[0].startswith('{"q":')


def test_open_question_scan_parallel_is_deterministic():
    a = open_question_scan(8)
    b = open_question_scan(8, jobs=2)
    assert a.csv_lines(record_alpha_text) == b.csv_lines(record_alpha_text)
    assert a.odd_k_count == b.odd_k_count


def test_max_period_records():
    F = field_of_order(7)
    for alpha in F.units():
        rec = construct_and_check_max_period(F, alpha)
        assert F.pow(alpha, rec.n) == alpha
        assert math.gcd(rec.n, 48) == 1
        assert 1 <= rec.period <= rec.exhaustive_max
        assert composition_period(F, alpha, rec.exhaustive_argmax) == rec.exhaustive_max


def test_max_period_formula_mismatch_is_reported_not_hidden():
    F = field_of_order(4)
    rec = construct_and_check_max_period(F, parse_element(F, "z"))
    assert rec.formula_lcm == 4
    assert rec.exhaustive_max == 2
    assert not rec.matches_formula

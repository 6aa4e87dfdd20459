"""The period of n -> D_n(x, alpha) mod (x^q - x): formula, measurement and consequences."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .dickson import stride1_terms
from .errors import EvenQError, NoPeriodWithinBound, ZeroInputError
from .gf import FieldCtx, Felt, field_of_order, format_element, is_square
from .numtheory import binom_mod_p, dickson_coeff_int, factorize
from .polyring import rp_monomial


def prime_powers_upto(q_max: int) -> list[int]:
    return [q for q in range(2, q_max + 1) if len(factorize(q)) == 1]


def _need_unit(alpha: Felt) -> None:
    if alpha == 0:
        raise ZeroInputError("alpha must be nonzero")


def theoretical_period(ctx: FieldCtx, alpha: Felt) -> int:
    """(q^2-1)/2 for odd q and square alpha, q^2-1 otherwise."""
    _need_unit(alpha)
    q2m1 = ctx.q * ctx.q - 1
    if ctx.p != 2 and is_square(ctx, alpha):
        return q2m1 // 2
    return q2m1


def empirical_period(ctx: FieldCtx, alpha: Felt) -> int:
    """Smallest t >= 1 with (D_t, D_{t+1}) == (2, x) modulo x^q - x."""
    _need_unit(alpha)
    bound = ctx.q * ctx.q - 1
    seq = stride1_terms(ctx, alpha, bound + 2)
    d0, d1 = seq[0], seq[1]
    for t in range(1, bound + 1):
        if seq[t] == d0 and seq[t + 1] == d1:
            return t
    raise NoPeriodWithinBound(f"no period <= {bound} for q={ctx.q}, alpha={alpha}")


@dataclass(frozen=True)
class PeriodReport:
    q: int
    alpha: Felt
    alpha_text: str
    square: bool
    theoretical: int
    empirical: int

    @property
    def agrees(self) -> bool:
        return self.theoretical == self.empirical

    def csv_row(self) -> str:
        return (
            f"{self.q},{self.alpha_text},{str(self.square).lower()},"
            f"{self.theoretical},{self.empirical},{str(self.agrees).lower()}"
        )


PERIOD_CSV_HEADER = "q,alpha,square_flag,theoretical,empirical,agrees"


def period_report(ctx: FieldCtx, alpha: Felt) -> PeriodReport:
    return PeriodReport(
        q=ctx.q,
        alpha=alpha,
        alpha_text=format_element(ctx, alpha),
        square=is_square(ctx, alpha),
        theoretical=theoretical_period(ctx, alpha),
        empirical=empirical_period(ctx, alpha),
    )


def _scan_one(q: int) -> list[PeriodReport]:
    ctx = field_of_order(q)
    return [period_report(ctx, a) for a in ctx.units()]


def scan_periods(q_max: int, jobs: int = 1) -> list[PeriodReport]:
    """Period reports for every prime power q <= q_max and every unit alpha, in canonical order."""
    qs = prime_powers_upto(q_max)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_scan_one, qs))
    else:
        chunks = [_scan_one(q) for q in qs]
    return [r for chunk in chunks for r in chunk]


def check_anchor_props(ctx: FieldCtx, alpha: Felt) -> bool:
    """D_{q^2-1} = 2 and D_{q^2} = x; for odd q and square alpha also at (q^2-1)/2."""
    _need_unit(alpha)
    q2 = ctx.q * ctx.q
    seq = stride1_terms(ctx, alpha, q2 + 1)
    two, x = seq[0], rp_monomial(ctx, 1).coeffs
    ok = seq[q2 - 1] == two and seq[q2] == x
    if ctx.p != 2 and is_square(ctx, alpha):
        h = (q2 - 1) // 2
        ok = ok and seq[h] == two and seq[h + 1] == x
    return ok


def check_symmetry(ctx: FieldCtx, alpha: Felt) -> bool:
    """D_{P-i} = alpha^(-i) D_i for 0 <= i <= P, with P = q^2-1 and, when it applies, (q^2-1)/2."""
    _need_unit(alpha)
    F = ctx
    q2m1 = F.q * F.q - 1
    seq = stride1_terms(F, alpha, q2m1 + 1)
    periods = [q2m1]
    if F.p != 2 and is_square(F, alpha):
        periods.append(q2m1 // 2)
    ainv = F.inv(alpha)
    for P in periods:
        scale = 1
        for i in range(P + 1):
            lhs = seq[P - i]
            rhs = tuple(F.mul(scale, c) for c in seq[i])
            if lhs != rhs:
                return False
            scale = F.mul(scale, ainv)
    return True


@dataclass(frozen=True)
class ColumnSumReport:
    """Column sums over j of the coefficient arrays a_{j,k} and b_{j,k}, reduced mod p.

    ``b_signed_sums`` weights row j by l0^j with l0 = (-1)^((q-1)/2), which is the
    combination that equals a coefficient of D_{(q^2-1)/2}(x, alpha) for square alpha.
    """

    q: int
    a_sums: tuple[int, ...]
    b_sums: tuple[int, ...]
    b_signed_sums: tuple[int, ...]

    @property
    def a_vanish(self) -> bool:
        return not any(self.a_sums)

    @property
    def b_vanish(self) -> bool:
        return not any(self.b_sums)

    @property
    def b_signed_vanish(self) -> bool:
        return not any(self.b_signed_sums)

    @property
    def holds(self) -> bool:
        return self.a_vanish and self.b_vanish


def _coeff_mod_p(n: int, i: int, p: int, s: int) -> int:
    exact = dickson_coeff_int(n, i) % p
    if 0 < i and 2 * i <= n:
        via_lucas = (binom_mod_p(n - i, i, p, s) + binom_mod_p(n - i - 1, i - 1, p, s)) % p
        assert exact == via_lucas, (n, i)
    return exact


def column_sum_report(ctx: FieldCtx) -> ColumnSumReport:
    if ctx.p == 2:
        raise EvenQError("column sums are defined for odd q")
    p, s, q = ctx.p, ctx.s, ctx.q
    qh = (q - 1) // 2
    n_full = q * q - 1
    a_sums = []
    for k in range(q - 1):
        a_sums.append(sum(_coeff_mod_p(n_full, j * (q - 1) + k, p, s) for j in range(qh + 1)) % p)
    n_half = n_full // 2
    l0 = -1 if qh % 2 else 1
    b_sums, b_signed = [], []
    for k in range(qh):
        terms = [_coeff_mod_p(n_half, j * qh + k, p, s) for j in range(qh + 1)]
        b_sums.append(sum(terms) % p)
        b_signed.append(sum(t * l0**j for j, t in enumerate(terms)) % p)
    return ColumnSumReport(q, tuple(a_sums), tuple(b_sums), tuple(b_signed))


def check_column_sums(ctx: FieldCtx) -> bool:
    """True iff every column sum of a_{j,k} and of b_{j,k} is 0 mod p."""
    return column_sum_report(ctx).holds

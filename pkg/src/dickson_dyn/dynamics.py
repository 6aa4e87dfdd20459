"""Iterated Dickson maps: the composition group, its kernel, composition periods,
tail/period structure for non-invertible n, and the even-k data scanner."""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .dickson import dickson_reduced
from .errors import AlphaNotFixedError, NotCoprimeError, ZeroInputError
from .gf import FieldCtx, Felt, field_of_order, format_element, mult_order
from .numtheory import (
    MaxPeriodPlan,
    construct_max_period_n,
    coset_order,
    dyn_structure_int,
    max_period_lcm,
    mult_order_mod,
    predicted_kernel,
)
from .periodicity import prime_powers_upto, theoretical_period
from .polyring import RPoly, interpolate, rp_x


def _need_unit(alpha: Felt) -> None:
    if alpha == 0:
        raise ZeroInputError("alpha must be nonzero")


def _fixes_alpha(ctx: FieldCtx, alpha: Felt, n: int) -> bool:
    return ctx.pow(alpha, n) == alpha


def kernel(ctx: FieldCtx, alpha: Felt) -> frozenset[int]:
    """{n in 1..pi(alpha) : alpha^n = alpha and D_n(x, alpha) = x}, found by scanning."""
    _need_unit(alpha)
    pi = theoretical_period(ctx, alpha)
    x = rp_x(ctx)
    return frozenset(
        n for n in range(1, pi + 1) if _fixes_alpha(ctx, alpha, n) and dickson_reduced(n, alpha, ctx) == x
    )


def kernel_prediction(ctx: FieldCtx, alpha: Felt) -> frozenset[int]:
    """{1, q} mod pi(alpha) for alpha != 1 and {1, -1, q, -q} mod pi(1)."""
    _need_unit(alpha)
    return predicted_kernel(ctx.q, theoretical_period(ctx, alpha), alpha == 1)


def valid_units(ctx: FieldCtx, alpha: Felt) -> list[int]:
    """n in 1..pi(alpha) with alpha^n = alpha and gcd(n, q^2 - 1) = 1."""
    pi = theoretical_period(ctx, alpha)
    q2m1 = ctx.q * ctx.q - 1
    return [n for n in range(1, pi + 1) if math.gcd(n, q2m1) == 1 and _fixes_alpha(ctx, alpha, n)]


@dataclass(frozen=True)
class GroupReport:
    q: int
    alpha: Felt
    period: int
    elements: frozenset[RPoly]
    order: int
    kernel: frozenset[int]
    predicted_kernel: frozenset[int]
    valid_unit_count: int
    has_identity: bool
    closed: bool
    has_inverses: bool

    @property
    def kernel_matches(self) -> bool:
        return self.kernel == self.predicted_kernel

    @property
    def order_matches(self) -> bool:
        return len(self.elements) == self.order

    @property
    def ok(self) -> bool:
        return (
            self.kernel_matches
            and self.order_matches
            and self.has_identity
            and self.closed
            and self.has_inverses
        )


def group_elements(ctx: FieldCtx, alpha: Felt) -> GroupReport:
    """The reduced D_n(x, alpha) over valid units n, with the group axioms checked under composition."""
    _need_unit(alpha)
    pi = theoretical_period(ctx, alpha)
    units = valid_units(ctx, alpha)
    polys = {dickson_reduced(n, alpha, ctx) for n in units}
    tables = {p.values for p in polys}
    identity = tuple(range(ctx.q))
    closed = True
    inverses = True
    for a in tables:
        found_inverse = False
        for b in tables:
            c = tuple(a[v] for v in b)
            if c not in tables:
                closed = False
            if c == identity:
                found_inverse = True
        inverses = inverses and found_inverse
    ker = kernel(ctx, alpha)
    return GroupReport(
        q=ctx.q,
        alpha=alpha,
        period=pi,
        elements=frozenset(polys),
        order=len(units) // len(ker) if ker else 0,
        kernel=ker,
        predicted_kernel=kernel_prediction(ctx, alpha),
        valid_unit_count=len(units),
        has_identity=identity in tables,
        closed=closed,
        has_inverses=inverses,
    )


def _check_composable(ctx: FieldCtx, alpha: Felt, n: int, coprime: bool) -> None:
    _need_unit(alpha)
    if coprime and math.gcd(n, ctx.q * ctx.q - 1) != 1:
        raise NotCoprimeError(f"gcd({n}, q^2-1) != 1")
    if not _fixes_alpha(ctx, alpha, n):
        raise AlphaNotFixedError(f"alpha^{n} != alpha")


def composition_period(ctx: FieldCtx, alpha: Felt, n: int) -> int:
    """Smallest t >= 1 such that the t-fold composite of D_n(x, alpha) is x."""
    _check_composable(ctx, alpha, n, coprime=True)
    step = dickson_reduced(n, alpha, ctx).values
    identity = tuple(range(ctx.q))
    cur = step
    t = 1
    while cur != identity:
        cur = tuple(step[v] for v in cur)
        t += 1
    return t


def quotient_period(ctx: FieldCtx, alpha: Felt, n: int) -> int:
    """Order of n modulo the empirical kernel in (Z / pi(alpha))^x."""
    return coset_order(n, theoretical_period(ctx, alpha), kernel(ctx, alpha))


def delta_rule_period(ctx: FieldCtx, alpha: Felt, n: int) -> Fraction:
    """delta * ord(n mod pi) where delta = 1/2 exactly when the stated powers of n avoid
    -1, +-q (alpha = 1, modulo q^2-1) or q (alpha != 1, modulo pi).  Reported, never enforced."""
    pi = theoretical_period(ctx, alpha)
    k = mult_order_mod(n, pi)
    q = ctx.q
    if alpha == 1:
        M = q * q - 1
        powers = {pow(n, i, M) for i in range(1, mult_order_mod(n, M) + 1)}
        half = not ({(-1) % M, q % M, (-q) % M} & powers)
    else:
        powers = {pow(n, i, pi) for i in range(1, k + 1)}
        half = (q % pi) not in powers
    return Fraction(k, 2) if half else Fraction(k)


@dataclass(frozen=True)
class IterationRecord:
    q: int
    alpha: Felt
    n: int
    l: int
    k: int
    poly_l: int
    poly_k: int

    @property
    def tail_lemma_holds(self) -> bool:
        return self.poly_l == self.l

    @property
    def odd_k_holds(self) -> bool:
        return self.k % 2 == 0 or (self.poly_l, self.poly_k) == (self.l, self.k)

    @property
    def ratio(self) -> float:
        return self.k / self.poly_k

    @property
    def ratio_ok(self) -> bool:
        return self.k % self.poly_k == 0 and self.k // self.poly_k in (1, 2)


def iteration_structure(ctx: FieldCtx, alpha: Felt, n: int) -> IterationRecord:
    """Integer structure of m -> n^m mod pi(alpha) next to the structure of m -> D_n^m."""
    _check_composable(ctx, alpha, n, coprime=False)
    pi = theoretical_period(ctx, alpha)
    ds = dyn_structure_int(n, pi)
    step = dickson_reduced(n, alpha, ctx).values
    seen: dict[tuple[int, ...], int] = {}
    cur = step
    m = 1
    while cur not in seen:
        seen[cur] = m
        cur = tuple(step[v] for v in cur)
        m += 1
    first = seen[cur]
    return IterationRecord(ctx.q, alpha, n, ds.tail, ds.period, first - 1, m - first)


@dataclass(frozen=True)
class MaxPeriodRecord:
    q: int
    alpha: Felt
    n: int
    method: str
    period: int
    formula_lcm: int
    exhaustive_max: int
    exhaustive_argmax: int

    @property
    def matches_formula(self) -> bool:
        return self.period == self.formula_lcm

    @property
    def achieves_max(self) -> bool:
        return self.period == self.exhaustive_max


def construct_and_check_max_period(ctx: FieldCtx, alpha: Felt) -> MaxPeriodRecord:
    """Build n by the maximal-period recipe, measure its composition period, and compare
    with the lcm formula and with the true maximum over all valid n."""
    _need_unit(alpha)
    pi = theoretical_period(ctx, alpha)
    m = mult_order(ctx, alpha)
    plan: MaxPeriodPlan = construct_max_period_n(ctx.q, m, pi)
    period = composition_period(ctx, alpha, plan.n)
    best_n, best = 1, 0
    for n in valid_units(ctx, alpha):
        t = composition_period(ctx, alpha, n)
        if t > best:
            best_n, best = n, t
    return MaxPeriodRecord(
        q=ctx.q,
        alpha=alpha,
        n=plan.n,
        method=plan.method,
        period=period,
        formula_lcm=max_period_lcm(ctx.q, m, pi),
        exhaustive_max=best,
        exhaustive_argmax=best_n,
    )


OQ_CSV_HEADER = "q,alpha,n,l,k,poly_k,ratio"


@dataclass
class OpenQuestionScan:
    """Rows with even k, plus every instance (any k) that breaks a stated property."""

    rows: list[IterationRecord] = field(default_factory=list)
    odd_k_count: int = 0
    violations: list[IterationRecord] = field(default_factory=list)

    def csv_lines(self, alpha_text) -> list[str]:
        out = [OQ_CSV_HEADER]
        for r in self.rows:
            out.append(f"{r.q},{alpha_text(r)},{r.n},{r.l},{r.k},{r.poly_k},{_ratio_text(r)}")
        return out

    def json_lines(self, alpha_text) -> list[str]:
        return [
            json.dumps(
                {"q": r.q, "alpha": alpha_text(r), "n": r.n, "l": r.l, "k": r.k,
                 "poly_k": r.poly_k, "ratio": _ratio_text(r)},
                separators=(",", ":"),
            )
            for r in self.rows
        ]


def _ratio_text(r: IterationRecord) -> str:
    return str(r.k // r.poly_k) if r.k % r.poly_k == 0 else f"{r.k}/{r.poly_k}"


def _scan_field(q: int) -> list[IterationRecord]:
    ctx = field_of_order(q)
    q2m1 = q * q - 1
    out = []
    for alpha in ctx.units():
        pi = theoretical_period(ctx, alpha)
        for n in range(1, pi + 1):
            if math.gcd(n, q2m1) > 1 and _fixes_alpha(ctx, alpha, n):
                out.append(iteration_structure(ctx, alpha, n))
    return out


def open_question_scan(q_max: int, jobs: int = 1) -> OpenQuestionScan:
    """Structure records for all prime powers q <= q_max, units alpha, and non-coprime n
    with alpha^n = alpha; even-k records become rows, and every record is checked."""
    qs = prime_powers_upto(q_max)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_scan_field, qs))
    else:
        chunks = [_scan_field(q) for q in qs]
    scan = OpenQuestionScan()
    for chunk in chunks:
        for rec in chunk:
            if rec.k % 2 == 0:
                scan.rows.append(rec)
            else:
                scan.odd_k_count += 1
            if not (rec.tail_lemma_holds and rec.odd_k_holds and rec.ratio_ok):
                scan.violations.append(rec)
    return scan


def record_alpha_text(rec) -> str:
    return format_element(field_of_order(rec.q), rec.alpha)


def record_dict(rec: IterationRecord) -> dict:
    d = asdict(rec)
    d["alpha"] = record_alpha_text(rec)
    return d

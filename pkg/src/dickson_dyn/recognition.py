"""Decide whether a polynomial is congruent to some D_n(x, alpha) modulo x^q - x.

Two decision procedures are provided:

* ``recognize_brute`` enumerates the reduced Dickson sequences (stride 1 for even
  q, stride 2 within the input's parity class for odd q) and returns the first
  hit in the order (alpha ascending by encoding, then n ascending).
* ``recognize_guess`` walks n upward and, for each n, predicts every reduced
  coefficient up to a power of -alpha from a precomputed coefficient profile.
  A zero-pattern screen discards most n, the x^(n-2) cell solves for alpha
  directly, and a scan over the matching square class covers the rest.

Both fall back to the monomial family D_m(x, 0) = x^m when no unit alpha works,
and every positive answer is re-generated and compared before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .dickson import dickson_reduced, stride1_terms, stride2_terms
from .errors import DeskBoundExceeded
from .gf import FieldCtx, Felt, format_element, is_square
from .numtheory import dickson_coeff_int
from .periodicity import theoretical_period
from .polyring import Poly, RPoly, reduce, rp_monomial

DICKSON = "dickson"
MONOMIAL = "monomial"
NOT_DICKSON = "not_dickson"


@dataclass(frozen=True)
class RecognitionResult:
    kind: str
    n: int | None = None
    alpha: Felt | None = None

    @property
    def is_dickson(self) -> bool:
        """Monomials count: x^m = D_m(x, 0)."""
        return self.kind != NOT_DICKSON

    def to_json(self, ctx: FieldCtx) -> dict:
        if self.kind == NOT_DICKSON:
            return {"dickson": False}
        alpha = 0 if self.kind == MONOMIAL else self.alpha
        return {"dickson": True, "n": self.n, "alpha": format_element(ctx, alpha)}


def _as_rpoly(f: Poly | RPoly | Sequence[Felt], ctx: FieldCtx) -> RPoly:
    if isinstance(f, RPoly):
        return f
    return reduce(f, ctx)


def _monomial_or_not(g: RPoly) -> RecognitionResult:
    c = g.coeffs
    nonzero = [e for e, a in enumerate(c) if a]
    if len(nonzero) == 1 and nonzero[0] >= 1 and c[nonzero[0]] == 1:
        return RecognitionResult(MONOMIAL, n=nonzero[0], alpha=0)
    return RecognitionResult(NOT_DICKSON)


def _certify(result: RecognitionResult, g: RPoly) -> RecognitionResult:
    ctx = g.ctx
    if result.kind == DICKSON:
        assert dickson_reduced(result.n, result.alpha, ctx) == g, "unsound Dickson witness"
    elif result.kind == MONOMIAL:
        assert rp_monomial(ctx, result.n) == g, "unsound monomial witness"
    return result


def _allowed_parities(g: RPoly) -> tuple[int, ...]:
    """Odd-q parity screen: odd n needs every even-exponent coefficient zero, and vice versa."""
    c = g.coeffs
    odd_ok = all(c[e] == 0 for e in range(0, len(c), 2))
    even_ok = all(c[e] == 0 for e in range(1, len(c), 2))
    return tuple(p for p, ok in ((0, even_ok), (1, odd_ok)) if ok)


# -- brute force --


@lru_cache(maxsize=None)
def _brute_index(ctx: FieldCtx, alpha: Felt, parity: int) -> dict[tuple[Felt, ...], int]:
    """First index n (of the given parity, or any n when parity is -1) of each reduced D_n."""
    pi = theoretical_period(ctx, alpha)
    index: dict[tuple[Felt, ...], int] = {}
    if parity < 0:
        for n, c in enumerate(stride1_terms(ctx, alpha, pi)[:pi]):
            index.setdefault(c, n)
    else:
        count = (pi - parity + 1) // 2
        for j, c in enumerate(stride2_terms(ctx, alpha, parity, count)[:count]):
            index.setdefault(c, parity + 2 * j)
    return index


def recognize_brute(f: Poly | RPoly | Sequence[Felt], ctx: FieldCtx) -> RecognitionResult:
    g = _as_rpoly(f, ctx)
    key = g.coeffs
    if ctx.p == 2:
        for alpha in ctx.units():
            n = _brute_index(ctx, alpha, -1).get(key)
            if n is not None:
                return _certify(RecognitionResult(DICKSON, n, alpha), g)
    else:
        parities = _allowed_parities(g)
        for alpha in ctx.units():
            hits = [_brute_index(ctx, alpha, par).get(key) for par in parities]
            hits = [n for n in hits if n is not None]
            if hits:
                return _certify(RecognitionResult(DICKSON, min(hits), alpha), g)
    return _certify(_monomial_or_not(g), g)


# -- coefficient profiles --


@dataclass(frozen=True)
class Profile:
    """Predicted reduced coefficients of D_n(x, alpha) for a class of alpha.

    ``entries`` lists (exponent, c, power): the coefficient of x^exponent equals
    c * (-alpha)^power.  Exponents not listed are zero.  ``anchor`` is the entry
    index whose power is 1 (used to solve for alpha), or -1.
    """

    n: int
    entries: tuple[tuple[int, Felt, int], ...]
    covered: frozenset[int]
    anchor: int


@lru_cache(maxsize=None)
def _profile(ctx: FieldCtx, n: int, l: int) -> Profile:
    """Profile of D_n for alphas with (-alpha)^step = l, where step = (q-1)/2 for odd q
    and q-1 for even q (then l = 1 always)."""
    q, p = ctx.q, ctx.p
    step = q - 1 if p == 2 else (q - 1) // 2
    entries = []
    for k in range(step):
        total = 0
        i, j = k, 0
        while 2 * i < n:
            total += dickson_coeff_int(n, i) * l**j
            i += step
            j += 1
        e = (n - 2 * k - 1) % (q - 1) + 1
        entries.append((e, ctx.from_int(total), k))
    if n % 2 == 0:
        entries.append((0, ctx.from_int(2), n // 2))
    anchor = next((idx for idx, (_, c, pw) in enumerate(entries) if pw == 1 and c != 0), -1)
    return Profile(n, tuple(entries), frozenset(e for e, _, _ in entries), anchor)


def _matches(ctx: FieldCtx, prof: Profile, B: tuple[Felt, ...], alpha: Felt) -> bool:
    neg_a = ctx.neg(alpha)
    for e, c, pw in prof.entries:
        if ctx.mul(c, ctx.pow(neg_a, pw)) != B[e]:
            return False
    return True


def _zero_pattern_ok(prof: Profile, B: tuple[Felt, ...]) -> bool:
    for e, c, _ in prof.entries:
        if (B[e] == 0) != (c == 0):
            return False
    return all(B[e] == 0 for e in range(len(B)) if e not in prof.covered)


@lru_cache(maxsize=None)
def _classes(ctx: FieldCtx) -> list[tuple[int, tuple[Felt, ...], bool]]:
    """(l, alphas in the class, whether the class has period (q^2-1)/2), nonsquare class first."""
    if ctx.p == 2:
        return [(1, tuple(ctx.units()), False)]
    qh = (ctx.q - 1) // 2
    l0 = -1 if qh % 2 else 1
    squares = tuple(a for a in ctx.units() if is_square(ctx, a))
    nonsquares = tuple(a for a in ctx.units() if not is_square(ctx, a))
    return [(-l0, nonsquares, False), (l0, squares, True)]


def _guess_for_n(ctx: FieldCtx, n: int, B: tuple[Felt, ...]) -> Felt | None:
    q2m1 = ctx.q * ctx.q - 1
    for l, members, half in _classes(ctx):
        if half and n > q2m1 // 2:
            continue
        prof = _profile(ctx, n, l)
        if not _zero_pattern_ok(prof, B):
            continue
        if prof.anchor >= 0:
            e, c, _ = prof.entries[prof.anchor]
            alpha = ctx.neg(ctx.div(B[e], c))
            in_class = alpha != 0 and (ctx.p == 2 or ctx.pow(ctx.neg(alpha), (ctx.q - 1) // 2) == ctx.from_int(l))
            if in_class and _matches(ctx, prof, B, alpha):
                return alpha
        for alpha in members:
            if _matches(ctx, prof, B, alpha):
                return alpha
    return None


def recognize_guess(f: Poly | RPoly | Sequence[Felt], ctx: FieldCtx) -> RecognitionResult:
    g = _as_rpoly(f, ctx)
    B = g.coeffs
    q2m1 = ctx.q * ctx.q - 1
    if ctx.p == 2:
        candidates = range(0, q2m1 + 1)
    else:
        parities = _allowed_parities(g)
        candidates = (n for n in range(0, q2m1 + 1) if n % 2 in parities)
    for n in candidates:
        alpha = _guess_for_n(ctx, n, B)
        if alpha is not None:
            return _certify(RecognitionResult(DICKSON, n, alpha), g)
    return _certify(_monomial_or_not(g), g)


def recognize(f, ctx: FieldCtx, method: str = "brute") -> RecognitionResult:
    if method == "brute":
        return recognize_brute(f, ctx)
    if method == "guess":
        return recognize_guess(f, ctx)
    raise ValueError(f"unknown method {method!r}")


# -- ground truth --

DICKSON_TABLE_BOUND = 16


def dickson_table(ctx: FieldCtx) -> dict[RPoly, set[tuple[int, Felt]]]:
    """Every reduced D_n(x, alpha) for 0 <= n <= q^2-1, alpha in F_q (alpha = 0 gives x^n)."""
    if ctx.q > DICKSON_TABLE_BOUND:
        raise DeskBoundExceeded(f"dickson_table is limited to q <= {DICKSON_TABLE_BOUND}")
    q2m1 = ctx.q * ctx.q - 1
    table: dict[RPoly, set[tuple[int, Felt]]] = {}
    for alpha in ctx.elements():
        for n in range(q2m1 + 1):
            table.setdefault(dickson_reduced(n, alpha, ctx), set()).add((n, alpha))
    return table

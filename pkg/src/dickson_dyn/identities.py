"""Coefficient symmetries of D_{q^2-1} and D_{(q^2-1)/2}: exact identities, termwise lemmas,
and the rotated coefficient grids."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from .dickson import dickson_closed
from .errors import BadRangeError, DenominatorDivisibleByP, EvenQError, NotSquareError, ZeroInputError
from .gf import FieldCtx, Felt, format_element, is_square
from .numtheory import dickson_coeff_int
from .polyring import Poly, poly_const, reverse_scale

Cell = Optional[Felt]


@dataclass(frozen=True)
class CoeffGrid:
    """Cells packed row-major; ``None`` marks an empty cell (leading offset or ragged tail)."""

    rows: tuple[tuple[Cell, ...], ...]
    cols: int
    source: str

    def flat(self) -> list[Cell]:
        return [c for row in self.rows for c in row]

    def values(self) -> list[Felt]:
        return [c for c in self.flat() if c is not None]


def _pack(cells: Sequence[Cell], cols: int, source: str) -> CoeffGrid:
    cells = list(cells)
    if len(cells) % cols:
        cells += [None] * (cols - len(cells) % cols)
    rows = tuple(tuple(cells[i : i + cols]) for i in range(0, len(cells), cols))
    return CoeffGrid(rows, cols, source)


def grid_from_poly(
    f: Poly,
    parity: str,
    hi: int,
    lo: int,
    cols: int,
    direction: str = "descending",
    offset: int = 0,
    label: str = "",
) -> CoeffGrid:
    """Coefficients of x^e for e of the given parity in [lo, hi], packed into rows of ``cols``."""
    if hi < lo or cols < 1 or offset < 0:
        raise BadRangeError(f"bad grid range hi={hi}, lo={lo}, cols={cols}, offset={offset}")
    if parity not in ("even", "odd"):
        raise BadRangeError(f"parity must be 'even' or 'odd', got {parity!r}")
    want = 0 if parity == "even" else 1
    exps = [e for e in range(lo, hi + 1) if e % 2 == want]
    if direction == "descending":
        exps.reverse()
    elif direction != "ascending":
        raise BadRangeError(f"direction must be 'ascending' or 'descending', got {direction!r}")
    cells: list[Cell] = [None] * offset + [f.coeff(e) for e in exps]
    source = label or f"{parity} exponents {hi}..{lo} {direction}"
    return _pack(cells, cols, source)


def rotate180(g: CoeffGrid) -> CoeffGrid:
    """Rotate by 180 degrees: reverse the flattened (padded) cell sequence."""
    return _pack(list(reversed(g.flat())), g.cols, f"rotate180({g.source})")


def render_grid(ctx: FieldCtx, g: CoeffGrid) -> str:
    text = [["" if c is None else format_element(ctx, c) for c in row] for row in g.rows]
    width = max((len(t) for row in text for t in row), default=1)
    return "\n".join(" ".join(t.rjust(width) for t in row).rstrip() for row in text)


def grid_csv(ctx: FieldCtx, g: CoeffGrid) -> str:
    return "\n".join(",".join("" if c is None else format_element(ctx, c) for c in row) for row in g.rows)


def _odd_q(ctx: FieldCtx) -> None:
    if ctx.p == 2:
        raise EvenQError("this identity is stated for odd q")


def _dual_params(ctx: FieldCtx, alpha: Felt) -> tuple[Felt, Felt]:
    """(alpha', scale) = ((16 alpha)^-1, (-4 alpha)^-1)."""
    F = ctx
    alpha_dual = F.inv(F.mul(F.from_int(16), alpha))
    scale = F.inv(F.mul(F.from_int(-4), alpha))
    return alpha_dual, scale


def full_identity_sides(ctx: FieldCtx, alpha: Felt) -> tuple[Poly, Poly]:
    """Both sides of x^(q^2+1) (D_{q^2-1}(1/x, alpha) - 2) = (-4alpha)^-1 (D_{q^2-1}(x, (16alpha)^-1) - 2)."""
    _odd_q(ctx)
    if alpha == 0:
        raise ZeroInputError("alpha must be nonzero")
    q2 = ctx.q * ctx.q
    two = poly_const(ctx, ctx.from_int(2))
    alpha_dual, scale = _dual_params(ctx, alpha)
    lhs = reverse_scale(dickson_closed(q2 - 1, alpha, ctx) - two, q2 + 1)
    rhs = (dickson_closed(q2 - 1, alpha_dual, ctx) - two).scale(scale)
    return lhs, rhs


def verify_full_identity(ctx: FieldCtx, alpha: Felt) -> bool:
    lhs, rhs = full_identity_sides(ctx, alpha)
    return lhs.coeffs == rhs.coeffs


def half_identity_sides(ctx: FieldCtx, alpha: Felt) -> tuple[Poly, Poly]:
    """Both sides of x^((q^2+1)/2) D_{(q^2-1)/2}(1/x, alpha) = 2 D_{(q^2+1)/2}(x, (16alpha)^-1)."""
    _odd_q(ctx)
    if alpha == 0:
        raise ZeroInputError("alpha must be nonzero")
    if not is_square(ctx, alpha):
        raise NotSquareError("the half identity needs a square alpha")
    q2 = ctx.q * ctx.q
    alpha_dual, _ = _dual_params(ctx, alpha)
    lhs = reverse_scale(dickson_closed((q2 - 1) // 2, alpha, ctx), (q2 + 1) // 2)
    rhs = dickson_closed((q2 + 1) // 2, alpha_dual, ctx).scale(ctx.from_int(2))
    return lhs, rhs


def verify_half_identity(ctx: FieldCtx, alpha: Felt) -> bool:
    lhs, rhs = half_identity_sides(ctx, alpha)
    return lhs.coeffs == rhs.coeffs


@dataclass(frozen=True)
class RotationCheck:
    """A pair of coefficient grids and whether rotating the first gives the second."""

    left: CoeffGrid
    right: CoeffGrid

    @property
    def ok(self) -> bool:
        return rotate180(self.left).rows == self.right.rows


def full_rotation(ctx: FieldCtx, alpha: Felt) -> RotationCheck:
    """Even-exponent grids (q^2-1 down to 2, q-1 columns) of D_{q^2-1}(x, alpha) and its dual."""
    _odd_q(ctx)
    q2 = ctx.q * ctx.q
    alpha_dual, scale = _dual_params(ctx, alpha)
    a_txt, d_txt, s_txt = (format_element(ctx, v) for v in (alpha, alpha_dual, scale))
    left = grid_from_poly(
        dickson_closed(q2 - 1, alpha, ctx), "even", q2 - 1, 2, ctx.q - 1,
        label=f"D_{q2 - 1}(x,{a_txt})",
    )
    right = grid_from_poly(
        dickson_closed(q2 - 1, alpha_dual, ctx).scale(scale), "even", q2 - 1, 2, ctx.q - 1,
        label=f"{s_txt}*D_{q2 - 1}(x,{d_txt})",
    )
    return RotationCheck(left, right)


def half_rotation(ctx: FieldCtx, alpha: Felt) -> RotationCheck:
    """Even grid of D_{(q^2-1)/2}(x, alpha) against the odd grid of 2 D_{(q^2+1)/2}(x, alpha')."""
    _odd_q(ctx)
    if not is_square(ctx, alpha):
        raise NotSquareError("the half identity needs a square alpha")
    q2 = ctx.q * ctx.q
    h = (q2 - 1) // 2
    alpha_dual, _ = _dual_params(ctx, alpha)
    cols = (ctx.q - 1) // 2
    a_txt, d_txt = format_element(ctx, alpha), format_element(ctx, alpha_dual)
    left = grid_from_poly(dickson_closed(h, alpha, ctx), "even", h, 2, cols, label=f"D_{h}(x,{a_txt})")
    right = grid_from_poly(
        dickson_closed(h + 1, alpha_dual, ctx).scale(ctx.from_int(2)), "odd", h - 1, 1, cols,
        label=f"2*D_{h + 1}(x,{d_txt})",
    )
    return RotationCheck(left, right)


def ascending_offset_grid(ctx: FieldCtx, alpha: Felt) -> CoeffGrid:
    """Even coefficients of D_{q^2-1}(x, alpha) from x^2 upward, q columns, one leading empty cell."""
    q2 = ctx.q * ctx.q
    return grid_from_poly(
        dickson_closed(q2 - 1, alpha, ctx), "even", q2 - 1, 2, ctx.q,
        direction="ascending", offset=1, label=f"D_{q2 - 1}(x,{format_element(ctx, alpha)}) ascending",
    )


# -- termwise congruences --


def _mod_p_fraction(value: Fraction, p: int) -> int:
    if value.denominator % p == 0:
        raise DenominatorDivisibleByP(f"denominator {value.denominator} is divisible by {p}")
    return value.numerator * pow(value.denominator, -1, p) % p


def _term(ratio: Fraction, top: int, bottom: int, p: int, scale: Fraction = Fraction(1)) -> int:
    """(ratio * C(top, bottom) * scale) mod p.

    Every ratio used here has the shape c * n / (n - i) with n = top + bottom and
    i = bottom, so when the reduced fraction has a denominator divisible by p the
    term is recomputed as c * (C(n-i, i) + C(n-i-1, i-1)) * scale instead.
    """
    value = ratio * comb(top, bottom) * scale
    try:
        return _mod_p_fraction(value, p)
    except DenominatorDivisibleByP:
        n = top + bottom
        c = ratio * top / n
        return _mod_p_fraction(c * dickson_coeff_int(n, bottom) * scale, p)


def lemma_terms_first(q: int, p: int) -> list[tuple[int, int, int]]:
    """(i, u_i, v_i) mod p for 1 <= i <= (q^2-1)/2.

    u_i = (q^2-1)/((q^2-1)/2 + i) * C((q^2-1)/2 + i, (q^2-1)/2 - i)
    v_i = (q^2-1)/(4(q^2-i)) * C(q^2-i, i-1) * 16^-(i-1)
    """
    n = q * q - 1
    h = n // 2
    out = []
    for i in range(1, h + 1):
        u = _term(Fraction(n, h + i), h + i, h - i, p)
        v = _term(Fraction(n, 4 * (q * q - i)), q * q - i, i - 1, p, Fraction(1, 16 ** (i - 1)))
        out.append((i, u, v))
    return out


def lemma_terms_second(q: int, p: int) -> list[tuple[int, int, int]]:
    """(i, u_i, v_i) mod p for 0 <= i <= (q^2-1)/4.

    u_i = ((q^2-1)/2)/((q^2-1)/4 + i) * C((q^2-1)/4 + i, (q^2-1)/4 - i)
    v_i = (q^2+1)/((q^2+1)/2 - i) * C((q^2+1)/2 - i, i) * 16^-i
    """
    n = q * q - 1
    h = n // 2
    f = n // 4
    g = (q * q + 1) // 2
    out = []
    for i in range(0, f + 1):
        u = _term(Fraction(h, f + i), f + i, f - i, p)
        v = _term(Fraction(q * q + 1, g - i), g - i, i, p, Fraction(1, 16**i))
        out.append((i, u, v))
    return out


def verify_lemma_terms(ctx: FieldCtx) -> bool:
    """Every termwise congruence of both coefficient lemmas holds mod p."""
    _odd_q(ctx)
    rows = lemma_terms_first(ctx.q, ctx.p) + lemma_terms_second(ctx.q, ctx.p)
    return all(u == v for _, u, v in rows)

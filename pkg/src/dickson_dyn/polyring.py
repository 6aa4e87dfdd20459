"""Dense polynomials over F_q and the quotient ring F_q[x] / (x^q - x).

``Poly`` holds an exact polynomial (used for identity checks on degrees up to
q^2 + 1).  ``RPoly`` holds a reduced representative: exactly q coefficients
indexed by exponent, plus a lazily computed table of values at every element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from ._core import kernels
from .errors import ContextMismatchError, MTooSmallError, ParseError
from .gf import FieldCtx, Felt, _balanced, _split_signed, format_element, parse_element


def _trim(coeffs: Sequence[Felt]) -> tuple[Felt, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    """An unreduced polynomial; coeffs[e] is the coefficient of x^e, no trailing zeros."""

    ctx: FieldCtx
    coeffs: tuple[Felt, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, e: int) -> Felt:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def __add__(self, other: "Poly") -> "Poly":
        _same(self.ctx, other.ctx)
        F = self.ctx
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, tuple(F.add(self.coeff(i), other.coeff(i)) for i in range(n)))

    def __sub__(self, other: "Poly") -> "Poly":
        _same(self.ctx, other.ctx)
        F = self.ctx
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, tuple(F.sub(self.coeff(i), other.coeff(i)) for i in range(n)))

    def __mul__(self, other: "Poly") -> "Poly":
        _same(self.ctx, other.ctx)
        F = self.ctx
        if not self.coeffs or not other.coeffs:
            return Poly(F, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, tuple(out))

    def scale(self, c: Felt) -> "Poly":
        F = self.ctx
        return Poly(F, tuple(F.mul(c, a) for a in self.coeffs))

    def eval(self, beta: Felt) -> Felt:
        F = self.ctx
        v = 0
        for a in reversed(self.coeffs):
            v = F.add(F.mul(v, beta), a)
        return v

    def __str__(self) -> str:
        return format_poly(self.ctx, self.coeffs)


def poly_const(ctx: FieldCtx, c: Felt) -> Poly:
    return Poly(ctx, (c,))


def poly_x(ctx: FieldCtx) -> Poly:
    return Poly(ctx, (0, 1))


def reverse_scale(f: Poly, m: int) -> Poly:
    """x^m * f(1/x): the coefficient of x^e moves to x^(m-e)."""
    if m < f.degree:
        raise MTooSmallError(f"m={m} is below deg f = {f.degree}")
    if f.degree < 0:
        return f
    out = [0] * (m + 1)
    for e, a in enumerate(f.coeffs):
        out[m - e] = a
    return Poly(f.ctx, tuple(out))


def _same(a: FieldCtx, b: FieldCtx) -> None:
    if a is not b:
        raise ContextMismatchError(f"{a!r} vs {b!r}")


@dataclass(frozen=True, eq=False)
class RPoly:
    """A polynomial reduced modulo x^q - x: exactly q coefficients, index = exponent."""

    ctx: FieldCtx
    coeffs: tuple[Felt, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.ctx.q:
            raise ValueError(f"RPoly needs exactly q={self.ctx.q} coefficients, got {len(self.coeffs)}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RPoly):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    @cached_property
    def values(self) -> tuple[Felt, ...]:
        F = self.ctx
        return kernels.eval_table(self.coeffs, F.q, F.add_table, F.mul_table)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return format_poly(self.ctx, self.coeffs)

    def __repr__(self) -> str:
        return f"RPoly(q={self.ctx.q}, {self})"

    def csv(self) -> str:
        return ",".join(format_element(self.ctx, c) for c in self.coeffs)


def reduce_exponent(e: int, q: int) -> int:
    """Exponent of x^e modulo x^q - x: 0 stays 0, e >= 1 maps into 1..q-1."""
    return 0 if e == 0 else (e - 1) % (q - 1) + 1


def reduce(f: Poly | Sequence[Felt], ctx: FieldCtx | None = None) -> RPoly:
    """Reduce an exact polynomial (or an ascending coefficient list) modulo x^q - x."""
    if isinstance(f, Poly):
        if ctx is not None:
            _same(ctx, f.ctx)
        ctx = f.ctx
        coeffs: Iterable[Felt] = f.coeffs
    else:
        if ctx is None:
            raise ValueError("a context is required for raw coefficient lists")
        coeffs = f
    q = ctx.q
    out = [0] * q
    for e, a in enumerate(coeffs):
        if a:
            t = reduce_exponent(e, q)
            out[t] = ctx.add(out[t], a)
    return RPoly(ctx, tuple(out))


def rp_from_values(ctx: FieldCtx, values: Sequence[Felt]) -> RPoly:
    return interpolate(values, ctx)


def interpolate(values: Sequence[Felt], ctx: FieldCtx) -> RPoly:
    """The unique reduced polynomial whose value at element b is values[b]."""
    if len(values) != ctx.q:
        raise ValueError(f"value table must have exactly q={ctx.q} entries")
    vals = tuple(values)
    coeffs = kernels.interpolate(vals, ctx.q, ctx.add_table, ctx.mul_table, ctx.neg_table)
    r = RPoly(ctx, coeffs)
    r.__dict__["values"] = vals
    return r


def rp_zero(ctx: FieldCtx) -> RPoly:
    return RPoly(ctx, (0,) * ctx.q)


def rp_const(ctx: FieldCtx, c: Felt) -> RPoly:
    return RPoly(ctx, (c,) + (0,) * (ctx.q - 1))


def rp_monomial(ctx: FieldCtx, e: int, c: Felt = 1) -> RPoly:
    out = [0] * ctx.q
    out[reduce_exponent(e, ctx.q)] = c
    return RPoly(ctx, tuple(out))


def rp_x(ctx: FieldCtx) -> RPoly:
    return rp_monomial(ctx, 1)


def rp_add(a: RPoly, b: RPoly) -> RPoly:
    _same(a.ctx, b.ctx)
    F = a.ctx
    return RPoly(F, tuple(F.add(x, y) for x, y in zip(a.coeffs, b.coeffs)))


def rp_sub(a: RPoly, b: RPoly) -> RPoly:
    _same(a.ctx, b.ctx)
    F = a.ctx
    return RPoly(F, tuple(F.sub(x, y) for x, y in zip(a.coeffs, b.coeffs)))


def rp_scale(a: RPoly, c: Felt) -> RPoly:
    F = a.ctx
    return RPoly(F, tuple(F.mul(c, x) for x in a.coeffs))


def rp_mul(a: RPoly, b: RPoly) -> RPoly:
    _same(a.ctx, b.ctx)
    F = a.ctx
    return RPoly(F, kernels.polymul_reduced(a.coeffs, b.coeffs, F.q, F.add_table, F.mul_table))


def rp_eval(a: RPoly, beta: Felt) -> Felt:
    F = a.ctx
    if "values" in a.__dict__:
        return a.values[beta]
    v = 0
    for c in reversed(a.coeffs):
        v = F.add(F.mul(v, beta), c)
    return v


def rp_compose(outer: RPoly, inner: RPoly) -> RPoly:
    """outer(inner(x)) reduced, computed by composing value tables and interpolating."""
    _same(outer.ctx, inner.ctx)
    ov = outer.values
    return interpolate([ov[v] for v in inner.values], outer.ctx)


# -- text formats --


def format_poly(ctx: FieldCtx, coeffs: Sequence[Felt]) -> str:
    """Render ascending coefficients as "c_k*x^k + ... + c_0" (descending terms)."""
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        cs = format_element(ctx, c)
        multi = "+" in cs
        if e == 0:
            terms.append(f"({cs})" if multi else cs)
            continue
        mono = "x" if e == 1 else f"x^{e}"
        if c == 1:
            terms.append(mono)
        else:
            terms.append(f"({cs})*{mono}" if multi else f"{cs}*{mono}")
    return " + ".join(terms) if terms else "0"


def _top_level_x(term: str) -> int:
    depth = 0
    for i, ch in enumerate(term):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "x" and depth == 0:
            return i
    return -1


def parse_poly(ctx: FieldCtx, text: str) -> Poly:
    """Parse a polynomial in x, e.g. "2*x^2 + 1", "z_2x^3 + (z_2 + 1)x" or "4x^4+3"."""
    t = text.replace(" ", "").replace("z_2", "z")
    if not t:
        raise ParseError("empty polynomial")
    acc: dict[int, Felt] = {}
    for sign, term in _split_signed(t):
        pos = _top_level_x(term)
        if pos < 0:
            coef_text, e = term, 0
        else:
            coef_text = term[:pos].rstrip("*")
            rest = term[pos + 1 :]
            if rest == "":
                e = 1
            elif rest.startswith("^") and rest[1:].isdigit():
                e = int(rest[1:])
            else:
                raise ParseError(f"cannot parse exponent in {term!r}")
        if coef_text == "":
            c = 1
        else:
            if coef_text.startswith("(") and coef_text.endswith(")") and _balanced(coef_text[1:-1]):
                coef_text = coef_text[1:-1]
            c = parse_element(ctx, coef_text)
        if sign < 0:
            c = ctx.neg(c)
        acc[e] = ctx.add(acc.get(e, 0), c)
    deg = max(acc) if acc else 0
    return Poly(ctx, tuple(acc.get(e, 0) for e in range(deg + 1)))


def parse_csv_coeffs(ctx: FieldCtx, text: str) -> Poly:
    """Parse the CSV form "c0,c1,..." (ascending exponents; any length)."""
    parts = [p for p in text.split(",")]
    if not parts or any(p.strip() == "" for p in parts):
        raise ParseError(f"bad coefficient list {text!r}")
    return Poly(ctx, tuple(parse_element(ctx, p.strip()) for p in parts))

"""Finite fields F_q (q = p^s), their quadratic extensions, and the maps u -> u + alpha/u.

Elements of F_q are plain ints: the base-p evaluation of the coefficient vector
(c_0, ..., c_{s-1}) of a polynomial in z, so encoding order is the canonical
iteration order everywhere in the package.  For prime fields the encoding is the
residue itself.
"""

from __future__ import annotations

import itertools
import re
from array import array
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator

from .errors import (
    DegreeTooLargeError,
    DeskBoundExceeded,
    NotPrimeError,
    ParseError,
    ZeroInputError,
)
from .numtheory import factorize, is_prime

MAX_FIELD_ORDER = 1 << 16
TABLE_BOUND = 256

Felt = int


@dataclass(frozen=True)
class PrimePower:
    p: int
    s: int
    q: int = field(init=False)

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise NotPrimeError(f"{self.p} is not prime")
        if self.s < 1:
            raise ValueError("exponent s must be >= 1")
        object.__setattr__(self, "q", self.p**self.s)


def prime_power(q: int) -> PrimePower:
    """Split q into p^s, raising NotPrimeError when q is not a prime power."""
    if q < 2:
        raise NotPrimeError(f"{q} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise NotPrimeError(f"{q} is not a prime power")
    ((p, s),) = fac.items()
    return PrimePower(p, s)


# -- polynomials over F_p as low-to-high coefficient lists (modulus search only) --


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _fp_trim(a[:dm])


def _fp_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_mod(out, m, p)


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _is_irreducible(m: list[int], p: int) -> bool:
    """Degree-s monic m is irreducible iff gcd(m, x^(p^i) - x) = 1 for 1 <= i <= s/2."""
    s = len(m) - 1
    if s == 1:
        return True
    if m[0] == 0:
        return False
    xp = [0, 1]
    for _ in range(1, s // 2 + 1):
        # raise to the p-th power
        acc = [1]
        base = xp
        e = p
        while e:
            if e & 1:
                acc = _fp_mulmod(acc, base, m, p)
            base = _fp_mulmod(base, base, m, p)
            e >>= 1
        xp = acc
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_fp_gcd(m, _fp_trim(diff), p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, s: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree s, comparing c_0 first."""
    if s == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=s):
        cand = list(low) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldCtx:
    """The finite field F_q with a fixed modulus and a fixed multiplicative generator."""

    def __init__(self, p: int, s: int, modulus: tuple[int, ...]):
        self.pp = PrimePower(p, s)
        self.p = p
        self.s = s
        self.q = self.pp.q
        self.modulus = modulus
        self._build_exp_log()

    # -- construction helpers --

    def _digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.s):
            out.append(a % p)
            a //= p
        return out

    def _undigits(self, d) -> int:
        a = 0
        for c in reversed(d):
            a = a * self.p + c
        return a

    def _slow_add(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        out, place = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * place
            a //= p
            b //= p
            place *= p
        return out

    def _slow_mul(self, a: int, b: int) -> int:
        if self.s == 1:
            return a * b % self.p
        prod = _fp_mulmod(_fp_trim(self._digits(a)), _fp_trim(self._digits(b)), list(self.modulus), self.p)
        return self._undigits(prod + [0] * (self.s - len(prod)))

    def _times_z(self, a: int) -> int:
        p, s = self.p, self.s
        top_place = p ** (s - 1)
        top = a // top_place
        shifted = (a % top_place) * p
        if top == 0:
            return shifted
        d = self._digits(shifted)
        for i in range(s):
            d[i] = (d[i] - top * self.modulus[i]) % p
        return self._undigits(d)

    def _build_exp_log(self) -> None:
        q = self.q
        order = q - 1
        primes = list(factorize(order)) if order > 1 else []
        mul = self._slow_mul
        gen = None
        for g in range(1, q):
            if all(self._slow_pow(g, order // r) != 1 for r in primes):
                gen = g
                break
        assert gen is not None
        self.generator: Felt = gen
        exp = [0] * order
        log = [0] * q
        x = 1
        step = self._times_z if (self.s > 1 and gen == self.p) else (lambda v: mul(v, gen))
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = step(x)
        self._exp = exp
        self._log = log

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return result

    # -- element arithmetic --

    @property
    def zero(self) -> Felt:
        return 0

    @property
    def one(self) -> Felt:
        return 1

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def add(self, a: Felt, b: Felt) -> Felt:
        if self.s == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self.q <= TABLE_BOUND:
            return self._add_list[a * self.q + b]
        return self._slow_add(a, b)

    def neg(self, a: Felt) -> Felt:
        if self.s == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self._undigits([(-c) % self.p for c in self._digits(a)])

    def sub(self, a: Felt, b: Felt) -> Felt:
        return self.add(a, self.neg(b))

    def mul(self, a: Felt, b: Felt) -> Felt:
        if self.s == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def pow(self, a: Felt, e: int) -> Felt:
        if e < 0:
            raise ValueError("negative exponents are not supported; use inv")
        if e == 0:
            return 1
        if a == 0:
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def inv(self, a: Felt) -> Felt:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.q - 2)

    def div(self, a: Felt, b: Felt) -> Felt:
        return self.mul(a, self.inv(b))

    def from_int(self, n: int) -> Felt:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def is_square(self, a: Felt) -> bool:
        return is_square(self, a)

    def log(self, a: Felt) -> int:
        if a == 0:
            raise ZeroInputError("log of zero")
        return self._log[a]

    # -- lookup tables shared with the compiled kernels --

    @cached_property
    def _add_list(self) -> list[int]:
        q = self.q
        return [self._slow_add(a, b) for a in range(q) for b in range(q)]

    def _require_tables(self) -> None:
        if self.q > TABLE_BOUND:
            raise DeskBoundExceeded(f"polynomial work is limited to q <= {TABLE_BOUND}")

    @cached_property
    def add_table(self) -> array:
        self._require_tables()
        q = self.q
        return array("i", (self.add(a, b) for a in range(q) for b in range(q)))

    @cached_property
    def mul_table(self) -> array:
        self._require_tables()
        q = self.q
        return array("i", (self.mul(a, b) for a in range(q) for b in range(q)))

    @cached_property
    def neg_table(self) -> array:
        self._require_tables()
        return array("i", (self.neg(a) for a in range(self.q)))

    # -- text --

    def format(self, a: Felt) -> str:
        return format_element(self, a)

    def parse(self, text: str) -> Felt:
        return parse_element(self, text)

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, s={self.s})"


@lru_cache(maxsize=None)
def make_field(p: int, s: int = 1) -> FieldCtx:
    """The deterministic F_{p^s}; repeated calls return the same context object."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if s < 1:
        raise ValueError("s must be >= 1")
    if p**s > MAX_FIELD_ORDER:
        raise DegreeTooLargeError(f"{p}^{s} exceeds the supported bound {MAX_FIELD_ORDER}")
    return FieldCtx(p, s, smallest_irreducible(p, s))


def field_of_order(q: int) -> FieldCtx:
    pp = prime_power(q)
    return make_field(pp.p, pp.s)


def is_square(ctx: FieldCtx, a: Felt) -> bool:
    if a == 0:
        raise ZeroInputError("is_square needs a nonzero element")
    if ctx.p == 2:
        return True
    return ctx.pow(a, (ctx.q - 1) // 2) == 1


def mult_order(ctx: FieldCtx, a: Felt) -> int:
    if a == 0:
        raise ZeroInputError("mult_order needs a nonzero element")
    order = ctx.q - 1
    for r, e in factorize(order).items() if order > 1 else ():
        for _ in range(e):
            if ctx.pow(a, order // r) == 1:
                order //= r
            else:
                break
    return order


# -- element text format --


def format_element(ctx: FieldCtx, a: Felt) -> str:
    """Decimal residues for prime fields, polynomials in z such as "2z^2+z+1" otherwise."""
    if ctx.s == 1:
        return str(a)
    if a == 0:
        return "0"
    terms = []
    for i, c in reversed(list(enumerate(ctx._digits(a)))):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = "z" if i == 1 else f"z^{i}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms)


_ELEMENT_TERM = re.compile(r"^(\d*)\*?(z(?:\^(\d+))?)?$")


def _split_signed(text: str) -> list[tuple[int, str]]:
    """Split on top-level + and - signs, returning (sign, term) pairs."""
    out: list[tuple[int, str]] = []
    depth, start, sign = 0, 0, 1
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0:
            piece = text[start:i]
            if piece:
                out.append((sign, piece))
            elif i != 0 and ch == "+":
                raise ParseError(f"empty term in {text!r}")
            sign = 1 if ch == "+" else -1
            start = i + 1
    piece = text[start:]
    if not piece:
        raise ParseError(f"trailing sign or empty input in {text!r}")
    out.append((sign, piece))
    return out


def parse_element(ctx: FieldCtx, text: str) -> Felt:
    """Parse "3", "-1", "z", "z_2 + 1", "2z^2+1"; powers of z are reduced by the modulus."""
    t = text.replace(" ", "").replace("z_2", "z")
    if not t:
        raise ParseError("empty element")
    if t.startswith("(") and t.endswith(")") and _balanced(t[1:-1]):
        t = t[1:-1]
    total = 0
    for sign, term in _split_signed(t):
        m = _ELEMENT_TERM.match(term)
        if not m or (not m.group(1) and not m.group(2)):
            raise ParseError(f"cannot parse element term {term!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        value = ctx.from_int(sign * coef)
        if m.group(2):
            if ctx.s == 1:
                raise ParseError("z is only meaningful in extension fields")
            k = int(m.group(3)) if m.group(3) else 1
            value = ctx.mul(value, ctx.pow(ctx.p, k))
        total = ctx.add(total, value)
    return total


def _balanced(t: str) -> bool:
    depth = 0
    for ch in t:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


# -- quadratic extension F_{q^2} = F_q[y] / (y^2 - t*y - u) --

ExtElt = tuple[int, int]


class ExtCtx:
    """F_{q^2} as pairs (a, b) meaning a + b*y with y^2 = t*y + u."""

    def __init__(self, base: FieldCtx):
        self.base = base
        F = base
        if F.p == 2:
            self.t = 1
            self.u = next(c for c in F.elements() if all(F.add(F.add(F.mul(r, r), r), c) != 0 for r in F.elements()))
        else:
            self.t = 0
            self.u = next(c for c in F.units() if not is_square(F, c))
        self.q = F.q

    @property
    def order(self) -> int:
        return self.q * self.q

    def embed(self, a: Felt) -> ExtElt:
        return (a, 0)

    def is_embedded(self, v: ExtElt) -> bool:
        return v[1] == 0

    def elements(self) -> Iterator[ExtElt]:
        for code in range(self.q * self.q):
            yield (code % self.q, code // self.q)

    def units(self) -> Iterator[ExtElt]:
        for v in self.elements():
            if v != (0, 0):
                yield v

    def encode(self, v: ExtElt) -> int:
        return v[0] + v[1] * self.q

    def add(self, v: ExtElt, w: ExtElt) -> ExtElt:
        F = self.base
        return (F.add(v[0], w[0]), F.add(v[1], w[1]))

    def sub(self, v: ExtElt, w: ExtElt) -> ExtElt:
        F = self.base
        return (F.sub(v[0], w[0]), F.sub(v[1], w[1]))

    def mul(self, v: ExtElt, w: ExtElt) -> ExtElt:
        F = self.base
        a1, b1 = v
        a2, b2 = w
        bb = F.mul(b1, b2)
        a = F.add(F.mul(a1, a2), F.mul(self.u, bb))
        b = F.add(F.add(F.mul(a1, b2), F.mul(a2, b1)), F.mul(self.t, bb))
        return (a, b)

    def conj(self, v: ExtElt) -> ExtElt:
        F = self.base
        a, b = v
        return (F.add(a, F.mul(b, self.t)), F.neg(b))

    def norm(self, v: ExtElt) -> Felt:
        n = self.mul(v, self.conj(v))
        assert n[1] == 0
        return n[0]

    def inv(self, v: ExtElt) -> ExtElt:
        if v == (0, 0):
            raise ZeroDivisionError("inverse of zero")
        ninv = self.base.inv(self.norm(v))
        c = self.conj(v)
        return (self.base.mul(c[0], ninv), self.base.mul(c[1], ninv))

    def pow(self, v: ExtElt, e: int) -> ExtElt:
        result: ExtElt = (1, 0)
        while e:
            if e & 1:
                result = self.mul(result, v)
            v = self.mul(v, v)
            e >>= 1
        return result

    def mult_order(self, v: ExtElt) -> int:
        if v == (0, 0):
            raise ZeroInputError("mult_order needs a nonzero element")
        order = self.order - 1
        for r, e in factorize(order).items():
            for _ in range(e):
                if self.pow(v, order // r) == (1, 0):
                    order //= r
                else:
                    break
        return order

    def format(self, v: ExtElt) -> str:
        F = self.base
        a, b = v
        if b == 0:
            return F.format(a)
        bpart = "y" if b == 1 else f"({F.format(b)})*y"
        return bpart if a == 0 else f"{F.format(a)} + {bpart}"

    def __repr__(self) -> str:
        return f"ExtCtx(q={self.q}, y^2 = {self.t}*y + {self.u})"


@lru_cache(maxsize=None)
def make_ext(ctx: FieldCtx) -> ExtCtx:
    return ExtCtx(ctx)


def phi_alpha(ext: ExtCtx, alpha: Felt, u: ExtElt) -> ExtElt:
    """u + alpha/u."""
    if u == (0, 0):
        raise ZeroInputError("phi_alpha is undefined at 0")
    if alpha == 0:
        raise ZeroInputError("alpha must be nonzero")
    return ext.add(u, ext.mul(ext.embed(alpha), ext.inv(u)))


def phi_preimages(ext: ExtCtx, alpha: Felt, beta: Felt) -> set[ExtElt]:
    """Roots of x^2 - beta*x + alpha in F_{q^2}, found by enumeration."""
    if alpha == 0:
        raise ZeroInputError("alpha must be nonzero")
    a, b = ext.embed(alpha), ext.embed(beta)
    out = set()
    for r in ext.units():
        if ext.add(ext.sub(ext.mul(r, r), ext.mul(b, r)), a) == (0, 0):
            out.add(r)
    return out


def s_gamma(ext: ExtCtx, gamma: Felt) -> set[ExtElt]:
    """Elements of F_{q^2} whose norm u^(q+1) equals gamma."""
    if gamma == 0:
        raise ZeroInputError("gamma must be nonzero")
    target = ext.embed(gamma)
    return {u for u in ext.units() if ext.pow(u, ext.q + 1) == target}


def sqrt_in_ext(ext: ExtCtx, a: Felt) -> ExtElt:
    """A square root of a in F_{q^2} (smallest encoding), found by exhaustive search."""
    if ext.base.p == 2:
        raise ValueError("sqrt_in_ext is defined for odd q")
    target = ext.embed(a)
    for v in ext.elements():
        if ext.mul(v, v) == target:
            return v
    raise AssertionError("every element of F_q is a square in F_{q^2}")  # unreachable

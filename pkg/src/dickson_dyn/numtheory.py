"""Integer-side helpers: primes, binomials mod p, CRT, orders, and power-map dynamics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    InconsistentCongruenceError,
    NoGeneratorFound,
    NotCoprimeError,
    OutOfRangeError,
)

BINOM_EXACT_BOUND = 1 << 20


def is_prime(n: int) -> bool:
    """Trial-division primality test (inputs here are at most a few million)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=4096)
def _factor_tuple(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    return dict(_factor_tuple(n))


def euler_phi(M: int) -> int:
    result = M
    for p in factorize(M):
        result = result // p * (p - 1)
    return result


def lcm_list(xs) -> int:
    out = 1
    for x in xs:
        out = math.lcm(out, x)
    return out


def mult_order_mod(n: int, M: int) -> int:
    """Multiplicative order of n modulo M (M = 1 gives 1)."""
    if math.gcd(n, M) != 1:
        raise NotCoprimeError(f"gcd({n}, {M}) != 1")
    if M == 1:
        return 1
    order = euler_phi(M)
    for p, e in factorize(order).items():
        for _ in range(e):
            if pow(n, order // p, M) == 1:
                order //= p
            else:
                break
    return order


def crt2(r1: int, m1: int, r2: int, m2: int) -> int:
    """Solve x = r1 (mod m1), x = r2 (mod m2); returns the residue in [0, lcm)."""
    g = math.gcd(m1, m2)
    if (r2 - r1) % g:
        raise InconsistentCongruenceError(f"{r1} mod {m1} and {r2} mod {m2} disagree mod {g}")
    l = m1 // g * m2
    if l == 1:
        return 0
    t = ((r2 - r1) // g) * pow(m1 // g, -1, m2 // g) % (m2 // g) if m2 // g > 1 else 0
    return (r1 + m1 * t) % l


@dataclass(frozen=True)
class DynStruct:
    """Tail length and cycle length of an eventually periodic sequence a_1, a_2, ..."""

    tail: int
    period: int


def dyn_structure_int(n: int, M: int) -> DynStruct:
    """Minimal (l, k) with n^(l+1+k) = n^(l+1) mod M, by direct iteration."""
    if M < 1 or n < 0:
        raise ValueError("need M >= 1 and n >= 0")
    seen: dict[int, int] = {}
    value = n % M
    m = 1
    while value not in seen:
        seen[value] = m
        value = value * n % M
        m += 1
    first = seen[value]
    return DynStruct(tail=first - 1, period=m - first)


def binom_exact(m: int, n: int) -> int:
    if m > BINOM_EXACT_BOUND:
        raise OverflowError(f"binom_exact bound is m <= {BINOM_EXACT_BOUND}")
    if n < 0 or n > m:
        return 0
    return math.comb(m, n)


def _lucas_prime(m: int, n: int, p: int) -> int:
    result = 1
    while n:
        a, b = m % p, n % p
        if b > a:
            return 0
        result = result * math.comb(a, b) % p
        m //= p
        n //= p
    return result


def binom_mod_p(m: int, n: int, p: int, s: int = 1) -> int:
    """C(m, n) mod p via base-q digits (q = p^s); each digit binomial uses Lucas in base p."""
    if n < 0 or n > m:
        return 0
    q = p**s
    result = 1
    while n:
        a, b = m % q, n % q
        if b > a:
            return 0
        result = result * _lucas_prime(a, b, p) % p
        if result == 0:
            return 0
        m //= q
        n //= q
    return result % p


def dickson_coeff_int(n: int, i: int) -> int:
    """The integer n/(n-i) * C(n-i, i), written as C(n-i, i) + C(n-i-1, i-1); n = 0 gives 2."""
    if n == 0:
        return 2 if i == 0 else 0
    if i == 0:
        return 1
    if 2 * i > n:
        return 0
    return math.comb(n - i, i) + math.comb(n - i - 1, i - 1)


def two_adic_valuation(n: int) -> int:
    return (n & -n).bit_length() - 1


def find_k(M: int, N: int) -> int:
    """Constructive k with gcd(M + k(N-1), N^2-1) dividing N-1, chosen case by case."""
    if N < 2 or not 1 <= M <= N - 1:
        raise OutOfRangeError(f"need 1 <= M <= N-1 and N >= 2, got M={M}, N={N}")
    if N % 2 == 0:
        return (M - 1) // 2
    if M % 2 == 1:
        return (M - 1) // 2
    if N % 4 == 3:
        return (M - 2) // 2
    s1 = two_adic_valuation(M)
    s2 = two_adic_valuation(N - 1)
    if s1 != s2:
        return M // 2 - 1
    return M // 2 - 2


def smallest_generator_mod(modulus: int) -> int:
    """Smallest generator of (Z/modulus)^x; raises if the group is not cyclic."""
    if modulus <= 2:
        return 1 if modulus == 2 else 0
    target = euler_phi(modulus)
    for g in range(2, modulus):
        if math.gcd(g, modulus) == 1 and mult_order_mod(g, modulus) == target:
            return g
    raise NoGeneratorFound(f"(Z/{modulus})^x is not cyclic")


def predicted_kernel(q: int, pi: int, alpha_is_one: bool) -> frozenset[int]:
    """Residues n mod pi (in 1..pi) with D_n = x: {1, q}, plus {-1, -q} when alpha = 1."""
    reps = [1, q, -1, -q] if alpha_is_one else [1, q]
    return frozenset((r - 1) % pi + 1 for r in reps)


def coset_order(n: int, pi: int, kernel) -> int:
    """Order of the coset of n in (Z/pi)^x / kernel, kernel given as residues in 1..pi."""
    if math.gcd(n, pi) != 1:
        raise NotCoprimeError(f"gcd({n}, {pi}) != 1")
    ker = {(h - 1) % pi + 1 for h in kernel}
    value = n % pi
    t = 1
    while (value - 1) % pi + 1 not in ker:
        value = value * n % pi
        t += 1
    return t


@dataclass(frozen=True)
class MaxPeriodPlan:
    """The integer n built for the maximal-period corollary and how it was obtained."""

    n: int
    formula_lcm: int
    method: str  # "crt" or "exhaustive"


def max_period_lcm(q: int, m: int, pi: int) -> int:
    """The corollary's lcm expression for the maximal composition period."""
    fac_pi = factorize(pi)
    fac_m = factorize(m)
    k = fac_pi.get(2, 0)
    kp = fac_m.get(2, 0)
    parts = []
    if kp > 1:
        parts.append(2 ** max(k - kp, 0))
    elif kp == 1:
        parts.append(2 ** max(k - 2, 0))
    for r, e in fac_pi.items():
        if r == 2:
            continue
        if r in fac_m:
            parts.append(r ** (e - fac_m[r]))
        else:
            parts.append(euler_phi(r**e))
    return lcm_list(parts)


def construct_max_period_n(q: int, m: int, pi: int) -> MaxPeriodPlan:
    """Build n by CRT following the maximal-period corollary's recipe.

    The 2-part congruence n = 1 + 2^k' (mod 2^k) produces an even n when k' = 0 and
    k >= 1, so that case falls back to an exhaustive search over units n = 1 (mod m)
    maximizing the coset order modulo the predicted kernel (smallest n on ties).
    """
    if pi % m:
        raise ValueError(f"order {m} must divide the period {pi}")
    fac_pi = factorize(pi)
    fac_m = factorize(m)
    k = fac_pi.get(2, 0)
    kp = fac_m.get(2, 0)
    formula = max_period_lcm(q, m, pi)
    if k >= 1 and kp == 0:
        return MaxPeriodPlan(_exhaustive_max_n(q, m, pi), formula, "exhaustive")

    residue, modulus = 0, 1
    if k >= 1:
        residue, modulus = (1 + 2**kp) % 2**k, 2**k
    first_free_qm1 = True
    first_qp1 = True
    for r, e in sorted(fac_pi.items()):
        if r == 2:
            continue
        pe = r**e
        if r in fac_m:
            target = (1 + r ** fac_m[r]) % pe
        else:
            g = smallest_generator_mod(pe)
            if (q - 1) % r == 0:
                if m == 1 and first_free_qm1:
                    g = g * g % pe
                first_free_qm1 = False
            else:
                if first_qp1:
                    g = g * g % pe
                first_qp1 = False
            target = g
        residue = crt2(residue, modulus, target, pe)
        modulus *= pe
    n = residue % pi
    if n == 0:
        n = pi
    return MaxPeriodPlan(n, formula, "crt")


def _exhaustive_max_n(q: int, m: int, pi: int) -> int:
    kernel = predicted_kernel(q, pi, m == 1)
    best_n, best = 1, 0
    for n in range(1, pi + 1):
        if math.gcd(n, pi) != 1 or (n - 1) % m:
            continue
        t = coset_order(n, pi, kernel)
        if t > best:
            best_n, best = n, t
    return best_n

"""Number-theoretic helpers deciding who wins the strict star game.

Every comparison involving a rational power of n is done in exact integer
arithmetic: ``b <= c * n**(p/q)`` is tested as ``b**q <= c**q * n**p`` after
clearing denominators.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional


def binom2(n: int) -> int:
    return n * (n - 1) // 2


def remainder_r(n: int, b: int) -> int:
    """The r with 1 <= r <= b+1 and C(n,2) = r mod (b+1).

    In a strict game this is the number of free edges Avoider chooses from
    in his last move.
    """
    if n < 2 or b < 1:
        raise ValueError("need n >= 2 and b >= 1")
    r = binom2(n) % (b + 1)
    return r if r else b + 1


def iroot(x: int, k: int) -> int:
    """Floor of the k-th root of a non-negative integer."""
    if x < 0 or k < 1:
        raise ValueError("iroot needs x >= 0, k >= 1")
    if x < 2 or k == 1:
        return x
    y = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        z = ((k - 1) * y + x // y ** (k - 1)) // k
        if z >= y:
            break
        y = z
    while y ** k > x:
        y -= 1
    while (y + 1) ** k <= x:
        y += 1
    return y


def floor_power(coef, n: int, exponent) -> int:
    """floor(coef * n**exponent) for rational coef >= 0 and exponent >= 0."""
    c, e = Fraction(coef), Fraction(exponent)
    if c < 0 or e < 0:
        raise ValueError("floor_power needs non-negative coef and exponent")
    p, q = e.numerator, e.denominator
    num = c.numerator ** q * n ** p
    return iroot(num // c.denominator ** q, q)


def ceil_power(coef, n: int, exponent) -> int:
    """ceil(coef * n**exponent), exactly."""
    f = floor_power(coef, n, exponent)
    c, e = Fraction(coef), Fraction(exponent)
    q = e.denominator
    # exact iff f**q == coef**q * n**p
    if Fraction(f) ** q == c ** q * n ** e.numerator:
        return f
    return f + 1


def below_power(x: int, coef, n: int, exponent) -> bool:
    """x < coef * n**exponent, exactly (x >= 0)."""
    c, e = Fraction(coef), Fraction(exponent)
    return Fraction(x) ** e.denominator < c ** e.denominator * n ** e.numerator


def above_power(x: int, coef, n: int, exponent) -> bool:
    """x > coef * n**exponent, exactly (x >= 0)."""
    c, e = Fraction(coef), Fraction(exponent)
    return Fraction(x) ** e.denominator > c ** e.denominator * n ** e.numerator


def star_condition(n: int, k: int, b: int, r: Optional[int] = None) -> bool:
    """r < n^(k+1) / (2b)^(k-1), by cross-multiplication."""
    if r is None:
        r = remainder_r(n, b)
    return r * (2 * b) ** (k - 1) < n ** (k + 1)


def _check_nk(n, k):
    if n < 3 or k < 3:
        raise ValueError("need n >= 3 and k >= 3")


def eplus_cap(n: int, k: int) -> int:
    """floor(0.4 * n^(k/(k-1)))."""
    return floor_power(Fraction(2, 5), n, Fraction(k, k - 1))


def e_plus(n: int, k: int) -> Optional[int]:
    _check_nk(n, k)
    best = None
    for b in range(1, eplus_cap(n, k) + 1):
        if star_condition(n, k, b):
            best = b
    return best


def e_minus(n: int, k: int) -> Optional[int]:
    _check_nk(n, k)
    best = None
    for b in range(1, eplus_cap(n, k) + 1):
        if not star_condition(n, k, b):
            break
        best = b
    return best


def divisors(N: int) -> list[int]:
    """All positive divisors of N >= 1, ascending."""
    if N < 1:
        raise ValueError("divisors of a non-positive number")
    small, large = [], []
    for d in range(1, math.isqrt(N) + 1):
        if N % d == 0:
            small.append(d)
            if d != N // d:
                large.append(N // d)
    return small + large[::-1]


@dataclass(frozen=True)
class BiasWindow:
    """Open window (lower, upper) around n^exponent holding a witness."""

    n: int
    lower: Fraction
    upper: Fraction
    witness: int


def _window_divisors(N, n, c, exponent, width):
    if N < 1:
        return []
    c = Fraction(c)
    return [q for q in divisors(N)
            if above_power(q, c, n, exponent) and below_power(q, width * c, n, exponent)]


def fact_many_search(c, exponent, variant: str, n_range: Iterable[int],
                     all_witnesses: bool = False):
    """Scan n for divisors of C(n,2) (variant "i") or C(n,2)-1 ("ii").

    Variant i wants c*n^e < q < 2c*n^e, variant ii c*n^e < q < 4c*n^e.
    Returns ``[(n, q), ...]`` with the smallest q per n, or with
    ``all_witnesses`` ``[(n, [q, ...]), ...]``.
    """
    ns = list(n_range)
    if not ns:
        raise ValueError("empty n range")
    exponent = Fraction(exponent)
    if exponent >= 2:
        raise ValueError("exponent must be below 2")
    if variant not in ("i", "ii"):
        raise ValueError("variant is 'i' or 'ii'")
    width, shift = (2, 0) if variant == "i" else (4, 1)
    out = []
    for n in ns:
        if n < 2:
            continue
        qs = _window_divisors(binom2(n) - shift, n, c, exponent, width)
        if qs:
            out.append((n, qs if all_witnesses else qs[0]))
    return out


def fact_all_search(delta, N: int, q: int) -> Optional[int]:
    """Smallest k in [q, 2 q log q / delta] with N mod k >= q."""
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    if N < 1 or q < 1:
        raise ValueError("N and q must be positive")
    top = math.floor(2 * q * math.log(q) / float(delta)) if q > 1 else 1
    for k in range(q, top + 1):
        if N % k >= q:
            return k
    return None


def enforcer_favorable_strict_bias(n: int, k: int, all_witnesses: bool = False):
    """(b, q) with q | C(n,2)-1, n^e < q < 4n^e and b = floor(q/10) - 1.

    e = k/(k-1).  The pair is returned only if 0.09 n^e < b < 0.4 n^e and
    r(n,b) < n^(k+1)/(2b)^(k-1) both hold; the smallest valid q wins.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    e = Fraction(k, k - 1)
    found = fact_many_search(1, e, "ii", [n], all_witnesses=True)
    out = []
    for q in (found[0][1] if found else []):
        b = q // 10 - 1
        if b < 1:
            continue
        if not (above_power(b, Fraction(9, 100), n, e) and below_power(b, Fraction(2, 5), n, e)):
            continue
        if star_condition(n, k, b):
            if not all_witnesses:
                return b, q
            out.append((b, q))
    return out if all_witnesses else None


def avoider_favorable_strict_bias(n: int, k: int) -> Optional[int]:
    """Smallest b with 2n^e < b < 4n^e and (b+1) | C(n,2), e = (k+1)/k."""
    if k < 3:
        raise ValueError("k must be at least 3")
    e = Fraction(k + 1, k)
    for d in divisors(binom2(n)):
        b = d - 1
        if above_power(b, 2, n, e) and below_power(b, 4, n, e):
            return b
    return None


def avoider_general_upper_bias(n: int, k: int) -> Optional[int]:
    """b = k* - 1 where k* = fact_all_search((k+1)/2k, C(n,2), ceil(2n^((k+1)/k))).

    When present, r(n, b) >= 2n^((k+1)/k): Avoider's last move has enough
    non-threat edges to choose from.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    q = ceil_power(2, n, Fraction(k + 1, k))
    found = fact_all_search(Fraction(k + 1, 2 * k), binom2(n), q)
    return None if found is None else found - 1


def doomed(n: int, k: int, b: int) -> bool:
    """Avoider's final edge count in the strict game forces a degree-k vertex."""
    moves = -(-binom2(n) // (b + 1))
    return 2 * moves >= n * (k - 1) + 2

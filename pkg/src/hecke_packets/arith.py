"""Exact integer arithmetic: divisors, Moebius function, q-analogs.

Everything here works on Python ints, so nothing overflows no matter how
large ``q ** n`` gets.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Mapping
from dataclasses import dataclass, field

from .errors import BudgetExceeded

# Upper bound on the number of divisor tuples the literal
# inclusion-exclusion evaluator is willing to walk.
LHS_TUPLE_LIMIT = 1 << 20


def divisors(m: int) -> list[int]:
    """Positive divisors of ``m`` in increasing order."""
    if m < 1:
        raise ValueError(f"divisors of non-positive integer {m}")
    small, large = [], []
    i = 1
    while i * i <= m:
        if m % i == 0:
            small.append(i)
            if i * i != m:
                large.append(m // i)
        i += 1
    return small + large[::-1]


def proper_divisors(m: int) -> list[int]:
    return divisors(m)[:-1]


def factorize(m: int) -> dict[int, int]:
    if m < 1:
        raise ValueError(f"cannot factor {m}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def is_prime(m: int) -> bool:
    return m >= 2 and factorize(m) == {m: 1}


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, f)`` with ``q == p**f`` or None if q is not a prime power."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    ((p, f),) = fac.items()
    return p, f


def mobius(m: int) -> int:
    if m < 1:
        raise ValueError(f"mobius is defined on positive integers, got {m}")
    fac = factorize(m)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(m: int) -> int:
    result = m
    for p in factorize(m):
        result -= result // p
    return result


def q_analog(q: int, a: int) -> int:
    """``[a] = 1 + q + ... + q**(a-1)``, summed term by term."""
    if q < 2 or a < 0:
        raise ValueError(f"q_analog needs q >= 2 and a >= 0, got q={q}, a={a}")
    total, term = 0, 1
    for _ in range(a):
        total += term
        term *= q
    return total


@dataclass(frozen=True)
class QAnalog:
    q: int
    a: int
    value: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", q_analog(self.q, self.a))


def _lookup(f: Mapping[int, int], e: int, m: int) -> int:
    try:
        return f[e]
    except KeyError:
        raise ValueError(f"value table for m={m} has no entry for divisor {e}") from None


def mobius_sum(f: Mapping[int, int], m: int) -> int:
    """``sum over e | m of mobius(m / e) * f(e)``."""
    return sum(mobius(m // e) * _lookup(f, e, m) for e in divisors(m))


def inclusion_exclusion_lhs(
    f: Mapping[int, int], m: int, limit: int = LHS_TUPLE_LIMIT
) -> int:
    """Literal inclusion-exclusion over strictly increasing tuples of proper divisors.

    Computes ``f(m) - sum_j (-1)**(j+1) sum_{e_1 < ... < e_j < m} f(gcd(e_1..e_j))``
    without any Moebius shortcut, so it can serve as an oracle for
    :func:`mobius_sum`. Raises :class:`~hecke_packets.errors.BudgetExceeded`
    when there are more than ``limit`` tuples.
    """
    props = proper_divisors(m)
    n_tuples = (1 << len(props)) - 1
    if n_tuples > limit:
        raise BudgetExceeded(f"{n_tuples} divisor tuples for m={m} exceeds limit {limit}")
    correction = 0
    for j in range(1, len(props) + 1):
        sign = 1 if j % 2 else -1
        for tup in itertools.combinations(props, j):
            correction += sign * _lookup(f, math.gcd(*tup), m)
    return _lookup(f, m, m) - correction

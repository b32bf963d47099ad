"""Closed-form packet counts g(d), h(d) and their brute-force counterparts.

``g(d)`` is the number of regular supersingular characters whose L-packet
size divides ``d``; ``h(d)`` is the number of regular supersingular L-packets
of size exactly ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import characters
from .arith import divisors, mobius, q_analog
from .errors import TheoremViolation


def _check_divisor(n: int, d: int) -> None:
    if d < 1 or n % d:
        raise ValueError(f"d={d} does not divide n={n}")


def g_closed(n: int, q: int, d: int) -> int:
    _check_divisor(n, d)
    total = 0
    for e in divisors(n):
        de = gcd(d, e)
        total += mobius(n // e) * q_analog(q, de) * gcd(e // de, q - 1)
    return total


def exact_period_count(n: int, q: int, d: int) -> int:
    """``sum over e | d of mobius(d / e) g(e)``: characters whose packet has size exactly d."""
    _check_divisor(n, d)
    return sum(mobius(d // e) * g_closed(n, q, e) for e in divisors(d))


def h_closed(n: int, q: int, d: int) -> int:
    s = exact_period_count(n, q, d)
    if s % d:
        raise TheoremViolation(
            f"h({d}) for n={n}, q={q}: Moebius sum {s} is not divisible by {d}"
        )
    return s // d


def g_nonzero_criterion(n: int, q: int, d: int) -> bool:
    _check_divisor(n, d)
    k = n // d
    return gcd(k, q - 1) == k


def g_from_packets(packets: list[characters.LPacket], n: int, d: int) -> int:
    _check_divisor(n, d)
    return sum(P.size for P in packets if P.regular and d % P.size == 0)


def h_from_packets(packets: list[characters.LPacket], n: int, d: int) -> int:
    _check_divisor(n, d)
    return sum(1 for P in packets if P.regular and P.size == d)


def g_brute(n: int, q: int, d: int, budget: int = characters.DEFAULT_BUDGET) -> int:
    return g_from_packets(characters.all_packets(n, q, budget=budget), n, d)


def h_brute(n: int, q: int, d: int, budget: int = characters.DEFAULT_BUDGET) -> int:
    return h_from_packets(characters.all_packets(n, q, budget=budget), n, d)


@dataclass(frozen=True)
class CountRow:
    d: int
    g_closed: int
    h_closed: int
    g_brute: int | None = None
    h_brute: int | None = None

    @property
    def match(self) -> bool:
        if self.g_brute is None:
            return True
        return self.g_closed == self.g_brute and self.h_closed == self.h_brute


@dataclass(frozen=True)
class CountReport:
    n: int
    q: int
    rows: list[CountRow] = field(default_factory=list)
    brute: bool = False

    @property
    def match(self) -> bool:
        return all(row.match for row in self.rows)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "brute": self.brute,
            "match": self.match,
            "rows": [
                {
                    "d": r.d,
                    "g_closed": r.g_closed,
                    "g_brute": r.g_brute,
                    "h_closed": r.h_closed,
                    "h_brute": r.h_brute,
                }
                for r in self.rows
            ],
        }


def count_report(
    n: int,
    q: int,
    brute: bool = False,
    jobs: int = 1,
    budget: int = characters.DEFAULT_BUDGET,
) -> CountReport:
    packets = characters.all_packets(n, q, jobs=jobs, budget=budget) if brute else None
    rows = []
    for d in divisors(n):
        row = CountRow(d, g_closed(n, q, d), h_closed(n, q, d))
        if packets is not None:
            row = CountRow(
                d, row.g_closed, row.h_closed,
                g_from_packets(packets, n, d), h_from_packets(packets, n, d),
            )
        rows.append(row)
    return CountReport(n, q, rows, brute)

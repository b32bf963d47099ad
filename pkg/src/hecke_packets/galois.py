"""Residue arithmetic behind irreducible mod-p Galois representations.

An irreducible n-dimensional representation is ``ind(omega_n^r)`` for a
primitive residue ``r`` mod ``q^n - 1``; two residues give isomorphic
representations iff they differ by multiplication by a power of ``q``
(a *genuine class*). Passing to PGL_n also identifies ``r`` with
``r + [n]`` (twisting by ``omega_1``), and the orbits of the group generated by
``r -> q r`` and ``r -> r + [n]`` are the *projective classes*.

Residues are Python ints throughout. Large scans switch to numpy int64 arrays,
but only after checking that every intermediate product stays below 2**62.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .arith import divisors, mobius, proper_divisors, q_analog
from .errors import BudgetExceeded, TheoremViolation

# Residues mod q^n - 1 an exhaustive orbit partition may visit.
DEFAULT_RESIDUE_BUDGET = 1 << 25
# Above this many residues the orbit partition is labelled with numpy instead of BFS.
VECTOR_THRESHOLD = 1 << 16
_INT64_SAFE = 1 << 62


def modulus(n: int, q: int) -> int:
    return q**n - 1


def is_primitive(n: int, q: int, r: int) -> bool:
    qn = q_analog(q, n)
    return all(r % (qn // q_analog(q, d)) != 0 for d in proper_divisors(n))


def _primitive_moduli(n: int, q: int) -> list[int]:
    qn = q_analog(q, n)
    return [qn // q_analog(q, d) for d in proper_divisors(n)]


def _reduced_scan(n: int, q: int, budget: int) -> np.ndarray | list[int]:
    qn = q_analog(q, n)
    if qn > budget:
        raise BudgetExceeded(f"[n]={qn} reduced residues exceeds budget {budget}")
    mods = _primitive_moduli(n, q)
    if qn * q**n < _INT64_SAFE:
        r = np.arange(qn, dtype=np.int64)
        keep = np.ones(qn, dtype=bool)
        for m in mods:
            keep &= r % m != 0
        return r[keep]
    return [r for r in range(qn) if all(r % m for m in mods)]


def reduced_primitives(n: int, q: int, budget: int = DEFAULT_RESIDUE_BUDGET) -> list[int]:
    """Primitive residues ``r`` with ``0 <= r < [n]``."""
    return [int(r) for r in _reduced_scan(n, q, budget)]


def _fixed_mask(rs, n: int, q: int, d: int):
    qn = q_analog(q, n)
    qd = pow(q, d, qn)
    if isinstance(rs, np.ndarray):
        return (rs * qd - rs) % qn == 0
    return [(qd * r - r) % qn == 0 for r in rs]


def count_frobenius_fixed(n: int, q: int, d: int, budget: int = DEFAULT_RESIDUE_BUDGET) -> int:
    """Reduced primitive residues with ``q^d r = r (mod [n])``, by direct scan."""
    if n % d:
        raise ValueError(f"d={d} does not divide n={n}")
    return int(sum(_fixed_mask(_reduced_scan(n, q, budget), n, q, d)))


def minimal_periods(n: int, q: int, budget: int = DEFAULT_RESIDUE_BUDGET) -> dict[int, int]:
    """Tally of reduced primitive residues by the least ``e >= 1`` with ``q^e r = r (mod [n])``.

    Every ``e`` from 1 to ``n`` is tried, not only divisors of ``n``.
    """
    rs = _reduced_scan(n, q, budget)
    vec = isinstance(rs, np.ndarray)
    remaining = np.ones(len(rs), dtype=bool) if vec else [True] * len(rs)
    tally: dict[int, int] = {}
    for e in range(1, n + 1):
        fixed = _fixed_mask(rs, n, q, e)
        if vec:
            hit = remaining & fixed
            count = int(hit.sum())
            remaining &= ~fixed
        else:
            hit = [a and b for a, b in zip(remaining, fixed)]
            count = sum(hit)
            remaining = [a and not b for a, b in zip(remaining, fixed)]
        if count:
            tally[e] = count
    if (remaining.any() if vec else any(remaining)):
        raise TheoremViolation("some residue is not fixed by q^n modulo [n]")
    return tally


def exact_period_formula(g_values: dict[int, int], d: int) -> int:
    return sum(mobius(d // e) * g_values[e] for e in divisors(d))


def d_sigma_of(n: int, q: int, r: int) -> int:
    if not is_primitive(n, q, r % modulus(n, q)):
        raise ValueError(f"r={r} is not primitive for n={n}, q={q}")
    qn = q_analog(q, n)
    x = r % qn
    y = x
    for e in range(1, n + 1):
        y = y * q % qn
        if y == x:
            return e
    raise TheoremViolation(f"q^n r != r mod [n] for r={r}")


@dataclass(frozen=True)
class GenuineClass:
    n: int
    q: int
    members: tuple[int, ...]

    @property
    def representative(self) -> int:
        return self.members[0]


def genuine_class_of(n: int, q: int, r: int) -> GenuineClass:
    M = modulus(n, q)
    r %= M
    orbit = {r}
    x = r * q % M
    while x != r:
        orbit.add(x)
        x = x * q % M
    return GenuineClass(n, q, tuple(sorted(orbit)))


@dataclass(frozen=True)
class ProjectiveClass:
    n: int
    q: int
    representative: int
    size: int
    d_sigma: int
    lift_count: int

    def members(self) -> list[int]:
        return sorted(_closure(self.n, self.q, self.representative))

    def genuine_classes(self) -> list[GenuineClass]:
        seen: set[int] = set()
        out = []
        for r in self.members():
            if r not in seen:
                g = genuine_class_of(self.n, self.q, r)
                seen.update(g.members)
                out.append(g)
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "representative": self.representative,
            "d_sigma": self.d_sigma,
            "lift_count": self.lift_count,
            "size": self.size,
        }


def _closure(n: int, q: int, r: int) -> set[int]:
    """Orbit of ``r`` under the group generated by ``x -> q x`` and ``x -> x + [n]``."""
    M = modulus(n, q)
    step = q_analog(q, n)
    r %= M
    seen = {r}
    todo = deque([r])
    while todo:
        x = todo.popleft()
        for y in (x * q % M, (x + step) % M):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def _class_from_members(n: int, q: int, members: set[int]) -> ProjectiveClass:
    ds = {d_sigma_of(n, q, r) for r in members}
    if len(ds) != 1:
        raise TheoremViolation(f"d_sigma not constant on projective class of {min(members)}: {ds}")
    lifts, seen = 0, set()
    for r in sorted(members):
        if r not in seen:
            seen.update(genuine_class_of(n, q, r).members)
            lifts += 1
    return ProjectiveClass(n, q, min(members), len(members), ds.pop(), lifts)


def projective_class_of(n: int, q: int, r: int) -> ProjectiveClass:
    return _class_from_members(n, q, _closure(n, q, r))


def _classes_bfs(n: int, q: int) -> list[ProjectiveClass]:
    M = modulus(n, q)
    mods = _primitive_moduli(n, q)
    visited = bytearray(M)
    out = []
    for r in range(M):
        if visited[r] or not all(r % m for m in mods):
            continue
        members = _closure(n, q, r)
        for x in members:
            visited[x] = 1
        out.append(_class_from_members(n, q, members))
    return out


def _classes_vector(n: int, q: int) -> list[ProjectiveClass]:
    M = modulus(n, q)
    qn = q_analog(q, n)
    if M * q >= _INT64_SAFE or qn * qn >= _INT64_SAFE:
        raise BudgetExceeded(f"q^n - 1 = {M} too large for the int64 orbit labelling")
    r = np.arange(M, dtype=np.int64)
    prim = np.ones(M, dtype=bool)
    for m in _primitive_moduli(n, q):
        prim &= r % m != 0
    # genuine label: least element of the x -> q x orbit
    genuine = r.copy()
    cur = r.copy()
    for _ in range(n - 1):
        cur = cur * q % M
        np.minimum(genuine, cur, out=genuine)
    del cur
    # projective label: least genuine label over the translates r + m[n]
    proj = genuine.copy()
    for m in range(1, q - 1):
        np.minimum(proj, genuine[(r + m * qn) % M], out=proj)
    idx = np.flatnonzero(prim)
    del r, prim
    plab = proj[idx]
    glab = genuine[idx]
    del proj, genuine
    red = idx % qn
    dmin = np.zeros(len(idx), dtype=np.int64)
    for e in range(n, 0, -1):
        qe = pow(q, e, qn)
        dmin[(red * qe - red) % qn == 0] = e
    del red
    order = np.lexsort((glab, plab))
    plab, glab, dmin = plab[order], glab[order], dmin[order]
    starts = np.flatnonzero(np.r_[True, plab[1:] != plab[:-1]])
    ends = np.r_[starts[1:], len(plab)]
    new_g = np.r_[True, (plab[1:] != plab[:-1]) | (glab[1:] != glab[:-1])]
    lifts = np.add.reduceat(new_g.astype(np.int64), starts)
    dlo = np.minimum.reduceat(dmin, starts)
    dhi = np.maximum.reduceat(dmin, starts)
    out = []
    for s, e, lc, lo, hi in zip(starts, ends, lifts, dlo, dhi):
        if lo != hi:
            raise TheoremViolation(f"d_sigma not constant on projective class of {plab[s]}")
        out.append(ProjectiveClass(n, q, int(plab[s]), int(e - s), int(lo), int(lc)))
    return out


def projective_classes(
    n: int, q: int, budget: int = DEFAULT_RESIDUE_BUDGET, method: str = "auto"
) -> list[ProjectiveClass]:
    """All projective classes of primitive residues mod ``q^n - 1``, by least member."""
    M = modulus(n, q)
    if M > budget:
        raise BudgetExceeded(f"q^n - 1 = {M} residues exceeds budget {budget}")
    if method == "auto":
        method = "vector" if M > VECTOR_THRESHOLD else "bfs"
    if method == "bfs":
        classes = _classes_bfs(n, q)
    elif method == "vector":
        classes = _classes_vector(n, q)
    else:
        raise ValueError(f"unknown method {method!r}")
    return sorted(classes, key=lambda c: c.representative)


def primitive_residue_count(n: int, q: int, budget: int = DEFAULT_RESIDUE_BUDGET) -> int:
    M = modulus(n, q)
    if M > budget:
        raise BudgetExceeded(f"q^n - 1 = {M} residues exceeds budget {budget}")
    mods = _primitive_moduli(n, q)
    return sum(1 for r in range(M) if all(r % m for m in mods))


def genuine_classes(n: int, q: int, budget: int = DEFAULT_RESIDUE_BUDGET) -> list[GenuineClass]:
    M = modulus(n, q)
    if M > budget:
        raise BudgetExceeded(f"q^n - 1 = {M} residues exceeds budget {budget}")
    mods = _primitive_moduli(n, q)
    seen = bytearray(M)
    out = []
    for r in range(M):
        if seen[r] or not all(r % m for m in mods):
            continue
        g = genuine_class_of(n, q, r)
        for x in g.members:
            seen[x] = 1
        out.append(g)
    return out

"""Supersingular characters of the pro-p Iwahori-Hecke algebra of SL_n and their L-packets.

A character is a pair ``(lam, J)``: ``lam`` is an exponent class of the SL_n
torus (canonical tuple, last entry zero) and ``J`` is a subset of the affine
indices ``{0, ..., n-1}`` on which every coroot pairing of ``lam`` vanishes.
``T_{n_i}`` acts by ``-1`` for ``i`` in ``J`` and by ``0`` otherwise. The
trivial pair ``(1, {})`` and the sign pair ``(1, S)`` are not supersingular.

``omega`` acts by rotating ``lam`` and shifting ``J`` by one; an L-packet is an
orbit of that action. A character is regular when, for every lift of ``lam``
to a GL_n exponent tuple, the affine character ``(lift, J)`` has an orbit of
full size ``n`` (no quotient by the diagonal on the GL side).
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .arith import divisors, prime_power, proper_divisors
from .errors import BudgetExceeded
from .finite_field import FieldSpec, power_sum
from .weyl import canonical_class, coroot_exponents, rotate

# Raw (lambda class, J subset) pairs an exhaustive enumeration may visit.
DEFAULT_BUDGET = 1 << 26


def _check_nq(n: int, q: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if prime_power(q) is None:
        raise ValueError(f"q={q} is not a prime power")


def raw_pair_count(n: int, q: int) -> int:
    return (q - 1) ** (n - 1) * 2**n


def s_lambda(lam: tuple[int, ...], q: int) -> frozenset[int]:
    """Affine indices whose coroot pairing with ``lam`` is trivial."""
    return frozenset(i for i, e in enumerate(coroot_exponents(tuple(lam), q)) if e == 0)


def _mask(J) -> int:
    m = 0
    for i in J:
        m |= 1 << i
    return m


def _rot_mask(mask: int, n: int, k: int = 1) -> int:
    k %= n
    full = (1 << n) - 1
    return ((mask << k) | (mask >> (n - k))) & full


@dataclass(frozen=True, order=True)
class SupersingularCharacter:
    n: int
    q: int
    lam: tuple[int, ...]
    J: tuple[int, ...]

    def __post_init__(self) -> None:
        lam = canonical_class(tuple(self.lam), self.q)
        J = tuple(sorted(set(self.J)))
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "J", J)
        if len(lam) != self.n:
            raise ValueError(f"lambda has length {len(lam)}, expected n={self.n}")
        if any(not 0 <= i < self.n for i in J):
            raise ValueError(f"J={J} contains an index outside 0..{self.n - 1}")
        s = s_lambda(lam, self.q)
        if not set(J) <= s:
            raise ValueError(f"J={J} is not contained in S_lambda={sorted(s)}")
        if not any(lam) and len(J) in (0, self.n):
            kind = "trivial" if not J else "sign"
            raise ValueError(f"the {kind} character is not supersingular")

    @classmethod
    def unchecked(cls, n: int, q: int, lam, J) -> SupersingularCharacter:
        """Build the pair without validation (for negative tests of the Hecke relations)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "q", q)
        object.__setattr__(obj, "lam", tuple(lam))
        object.__setattr__(obj, "J", tuple(sorted(set(J))))
        return obj

    @property
    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.lam, self.J

    def to_dict(self) -> dict:
        return {"n": self.n, "q": self.q, "lambda": list(self.lam), "J": list(self.J)}


@dataclass(frozen=True)
class AffineCharacterGL:
    """Character ``(lam_tilde, J)`` of the affine Hecke algebra of GL_n."""

    n: int
    q: int
    lam_tilde: tuple[int, ...]
    J: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.q - 1
        object.__setattr__(self, "lam_tilde", tuple(a % m for a in self.lam_tilde))
        object.__setattr__(self, "J", tuple(sorted(set(self.J))))
        if len(self.lam_tilde) != self.n:
            raise ValueError("lambda tilde has the wrong length")
        if not set(self.J) <= s_lambda(self.lam_tilde, self.q):
            raise ValueError(f"J={self.J} is not contained in S_lambda")

    def omega_act(self) -> AffineCharacterGL:
        return AffineCharacterGL(
            self.n, self.q, rotate(self.lam_tilde), tuple((i + 1) % self.n for i in self.J)
        )

    def orbit_size(self) -> int:
        cur, size = self.omega_act(), 1
        while cur != self:
            cur, size = cur.omega_act(), size + 1
        return size

    def restrict(self) -> SupersingularCharacter:
        """Restriction to the SL_n torus (may be the trivial or sign pair, so unchecked)."""
        return SupersingularCharacter.unchecked(
            self.n, self.q, canonical_class(self.lam_tilde, self.q), self.J
        )


def omega_act(chi: SupersingularCharacter) -> SupersingularCharacter:
    return SupersingularCharacter(
        chi.n, chi.q, rotate(chi.lam), tuple((i + 1) % chi.n for i in chi.J)
    )


def lifts_of(lam: tuple[int, ...], q: int) -> list[tuple[int, ...]]:
    m = q - 1
    base = canonical_class(tuple(lam), q)
    return [tuple((a + s) % m for a in base) for s in range(m)]


def lift_orbit_sizes(chi: SupersingularCharacter) -> list[int]:
    """Affine orbit size of ``(lift, J)`` for each lift of ``chi.lam``, in lift order."""
    return [
        AffineCharacterGL(chi.n, chi.q, lift, chi.J).orbit_size()
        for lift in lifts_of(chi.lam, chi.q)
    ]


def is_regular(chi: SupersingularCharacter) -> bool:
    return all(size == chi.n for size in lift_orbit_sizes(chi))


@dataclass(frozen=True)
class LPacket:
    representative: SupersingularCharacter
    size: int
    regular: bool

    @property
    def members(self) -> list[SupersingularCharacter]:
        out = [self.representative]
        for _ in range(self.size - 1):
            out.append(omega_act(out[-1]))
        return sorted(out)

    def to_dict(self) -> dict:
        rep = self.representative
        return {
            "n": rep.n,
            "q": rep.q,
            "lambda": list(rep.lam),
            "J": list(rep.J),
            "size": self.size,
            "regular": self.regular,
        }


def packet_of(chi: SupersingularCharacter) -> LPacket:
    orbit = [chi]
    nxt = omega_act(chi)
    while nxt != chi:
        orbit.append(nxt)
        nxt = omega_act(nxt)
    return LPacket(min(orbit), len(orbit), is_regular(chi))


# -- bulk enumeration -------------------------------------------------------------


def _submasks_ascending(smask: int) -> Iterator[int]:
    sub = 0
    while True:
        yield sub
        sub = (sub - smask) & smask
        if sub == 0:
            return


@lru_cache(maxsize=None)
def _mask_tables(n: int):
    """Per J-mask: sorted index tuple, the divisors of n fixing it, its rotations."""
    divs = divisors(n)
    sorted_J = [tuple(i for i in range(n) if m >> i & 1) for m in range(1 << n)]
    fixing = [frozenset(d for d in divs if _rot_mask(m, n, d) == m) for m in range(1 << n)]
    rotations = [tuple(_rot_mask(m, n, k) for k in range(n)) for m in range(1 << n)]
    return sorted_J, fixing, rotations


def _lambda_classes(n: int, q: int, head: int | None = None) -> Iterator[tuple[int, ...]]:
    """Canonical SL classes in lexicographic order; ``head`` pins the first entry."""
    m = q - 1
    if n == 1:
        yield (0,)
        return
    firsts = range(m) if head is None else (head,)
    for a1 in firsts:
        for rest in itertools.product(range(m), repeat=n - 2):
            yield (a1, *rest, 0)


def _lambda_data(lam: tuple[int, ...], n: int, q: int, divs: list[int], proper: list[int]):
    m = q - 1
    orbit = [lam]
    for _ in range(n - 1):
        prev = orbit[-1]
        last = prev[-2]
        # rotate then renormalise so the last entry is zero
        orbit.append(tuple((a - last) % m for a in prev[-1:] + prev[:-1]))
    class_fix = [d for d in divs if orbit[d % n] == lam]
    # proper periods e for which some lift (lam + s*diag) is rotation-invariant by e
    lift_fix = []
    if m > 0:
        for e in proper:
            if e in class_fix:
                for s in range(m):
                    lift = tuple((a + s) % m for a in lam)
                    if lift[-e:] + lift[:-e] == lift:
                        lift_fix.append(e)
                        break
    return orbit, class_fix, lift_fix


def _packets_chunk(args) -> list[tuple[tuple[int, ...], tuple[int, ...], int, bool]]:
    """Packets whose canonical representative has ``lam[0] == head`` (or all, if None)."""
    n, q, head = args
    sorted_J, fixing, rotations = _mask_tables(n)
    divs = divisors(n)
    proper = proper_divisors(n)
    full = (1 << n) - 1
    out = []
    for lam in _lambda_classes(n, q, head):
        smask = 0
        for i, e in enumerate(coroot_exponents(lam, q)):
            if e == 0:
                smask |= 1 << i
        orbit, class_fix, lift_fix = _lambda_data(lam, n, q, divs, proper)
        trivial = not any(lam)
        for jm in _submasks_ascending(smask):
            if trivial and (jm == 0 or jm == full):
                continue
            jfix = fixing[jm]
            size = next(d for d in class_fix if d in jfix)
            key = (lam, sorted_J[jm])
            rots = rotations[jm]
            if any((orbit[k], sorted_J[rots[k]]) < key for k in range(1, size)):
                continue
            regular = not any(e in jfix for e in lift_fix)
            out.append((lam, sorted_J[jm], size, regular))
    return out


def _packet_tuples(n: int, q: int, jobs: int = 1, budget: int = DEFAULT_BUDGET):
    _check_nq(n, q)
    if raw_pair_count(n, q) > budget:
        raise BudgetExceeded(
            f"(n={n}, q={q}) needs {raw_pair_count(n, q)} raw pairs; budget is {budget}"
        )
    if jobs > 1 and q > 2:
        tasks = [(n, q, h) for h in range(q - 1)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_packets_chunk, tasks))
        rows = [row for chunk in chunks for row in chunk]
    else:
        rows = _packets_chunk((n, q, None))
    rows.sort(key=lambda r: (r[0], r[1]))
    return rows


def all_packets(
    n: int, q: int, jobs: int = 1, budget: int = DEFAULT_BUDGET
) -> list[LPacket]:
    """Every supersingular L-packet, ordered by canonical representative."""
    return [
        LPacket(SupersingularCharacter.unchecked(n, q, lam, J), size, regular)
        for lam, J, size, regular in _packet_tuples(n, q, jobs, budget)
    ]


def iter_supersingular(n: int, q: int) -> Iterator[SupersingularCharacter]:
    """Supersingular characters: lambda classes lexicographically, J by binary counter."""
    _check_nq(n, q)
    sorted_J, _, _ = _mask_tables(n)
    full = (1 << n) - 1
    for lam in _lambda_classes(n, q):
        smask = 0
        for i, e in enumerate(coroot_exponents(lam, q)):
            if e == 0:
                smask |= 1 << i
        trivial = not any(lam)
        for jm in _submasks_ascending(smask):
            if trivial and (jm == 0 or jm == full):
                continue
            yield SupersingularCharacter.unchecked(n, q, lam, sorted_J[jm])


def enumerate_supersingular(n: int, q: int) -> list[SupersingularCharacter]:
    return list(iter_supersingular(n, q))


# -- Hecke relation oracle ----------------------------------------------------------


@lru_cache(maxsize=64)
def _relation_table(spec: FieldSpec) -> dict[tuple[int, bool], bool]:
    """Truth of ``c^2 = q T_{n_i^2} + c tau`` for each (pairing exponent, i in J).

    Every entry is evaluated in the field: ``tau`` by literal power summation,
    ``T_{n_i^2}`` as ``(-1)**e`` and the scalar ``q`` as the image of the
    integer ``q`` (zero in characteristic p).
    """
    q_bar = spec.from_integer(spec.q)
    minus_one = spec.minus_one()
    table = {}
    for e in range(spec.order):
        tau = power_sum(spec, e)
        n_sq = minus_one**e
        for in_J in (False, True):
            c = minus_one if in_J else spec.zero()
            table[(e, in_J)] = c * c == q_bar * n_sq + c * tau
    return table


def verify_hecke_relations(
    chi: SupersingularCharacter | AffineCharacterGL, field: FieldSpec
) -> bool:
    if field.q != chi.q:
        raise ValueError(f"field has q={field.q} but the character has q={chi.q}")
    lam = chi.lam_tilde if isinstance(chi, AffineCharacterGL) else chi.lam
    table = _relation_table(field)
    Jset = set(chi.J)
    return all(table[(e, i in Jset)] for i, e in enumerate(coroot_exponents(tuple(lam), chi.q)))


def hecke_relation_literal(
    chi: SupersingularCharacter | AffineCharacterGL, field: FieldSpec
) -> bool:
    """Same check as :func:`verify_hecke_relations` without the lookup table."""
    if field.q != chi.q:
        raise ValueError(f"field has q={field.q} but the character has q={chi.q}")
    lam = chi.lam_tilde if isinstance(chi, AffineCharacterGL) else chi.lam
    q_bar = field.from_integer(field.q)
    for i, e in enumerate(coroot_exponents(tuple(lam), chi.q)):
        c = field.minus_one() if i in chi.J else field.zero()
        rhs = q_bar * field.minus_one() ** e + c * power_sum(field, e)
        if c * c != rhs:
            return False
    return True

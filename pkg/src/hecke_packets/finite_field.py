"""Small finite fields in discrete-log (Zech) representation.

Elements are stored as ``None`` (zero) or an exponent ``k`` of a fixed
generator ``g`` of the multiplicative group, so multiplication is addition of
logs mod ``q - 1`` and addition goes through the Zech table
``zech[k] = log(1 + g**k)``.

The field is built from the lexicographically first monic irreducible
polynomial of degree ``f`` over ``F_p``; the generator is the least element
(in base-``p`` encoding) of multiplicative order ``q - 1``. Both choices are
deterministic, so tables are reproducible run to run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .arith import factorize, is_prime, prime_power

FIELD_SIZE_LIMIT = 1 << 16


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic ``m``; coefficient lists run low -> high."""
    a = [x % p for x in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            shift = i - dm
            for j, mc in enumerate(m):
                a[shift + j] = (a[shift + j] - c * mc) % p
    a = a[:dm]
    while a and a[-1] == 0:
        a.pop()
    return a


def _monic_polys(p: int, degree: int):
    """Monic polynomials of a given degree, lexicographic in (c_{d-1}, ..., c_0)."""
    for tail in itertools.product(range(p), repeat=degree):
        yield list(reversed(tail)) + [1]


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for divisor in _monic_polys(p, d):
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def first_irreducible(p: int, f: int) -> list[int]:
    for poly in _monic_polys(p, f):
        if is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {f} over F_{p}")


def _encode(coeffs: list[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(coeffs))


def _decode(x: int, p: int, f: int) -> list[int]:
    out = []
    for _ in range(f):
        x, c = divmod(x, p)
        out.append(c)
    return out


@dataclass(frozen=True, eq=False)
class FieldSpec:
    p: int
    f: int
    modulus: tuple[int, ...]
    generator: int
    # exp_table[k] = base-p encoding of g**k; log_table is its inverse on nonzero codes
    exp_table: tuple[int, ...] = field(repr=False)
    log_table: dict[int, int] = field(repr=False)
    zech: tuple[int | None, ...] = field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.f

    @property
    def order(self) -> int:
        return self.q - 1

    def zero(self) -> FieldElement:
        return FieldElement(self, None)

    def one(self) -> FieldElement:
        return FieldElement(self, 0)

    def minus_one(self) -> FieldElement:
        return -self.one()

    def from_log(self, k: int) -> FieldElement:
        return FieldElement(self, k % self.order)

    def from_int(self, x: int) -> FieldElement:
        """Element with base-p polynomial code ``x``; for prime fields this is ``x mod p``."""
        if self.f == 1:
            x %= self.p
        if x == 0:
            return self.zero()
        return FieldElement(self, self.log_table[x])

    def from_integer(self, n: int) -> FieldElement:
        """Image of the rational integer ``n`` in the field."""
        return self.from_int(n % self.p)

    def elements(self) -> list[FieldElement]:
        return [self.zero()] + [FieldElement(self, k) for k in range(self.order)]

    def nonzero(self) -> list[FieldElement]:
        return [FieldElement(self, k) for k in range(self.order)]


@dataclass(frozen=True, eq=False)
class FieldElement:
    spec: FieldSpec
    log: int | None

    def is_zero(self) -> bool:
        return self.log is None

    def to_int(self) -> int:
        return 0 if self.log is None else self.spec.exp_table[self.log]

    def _check(self, other: FieldElement) -> None:
        if other.spec is not self.spec:
            raise ValueError("elements belong to different fields")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return other.spec is self.spec and other.log == self.log

    def __hash__(self) -> int:
        return hash((self.spec.p, self.spec.f, self.log))

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        if self.log is None or other.log is None:
            return self.spec.zero()
        return FieldElement(self.spec, (self.log + other.log) % self.spec.order)

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        if self.log is None:
            return other
        if other.log is None:
            return self
        # g^a + g^b = g^a (1 + g^(b-a))
        z = self.spec.zech[(other.log - self.log) % self.spec.order]
        if z is None:
            return self.spec.zero()
        return FieldElement(self.spec, (self.log + z) % self.spec.order)

    def __neg__(self) -> FieldElement:
        if self.log is None or self.spec.p == 2:
            return self
        return FieldElement(self.spec, (self.log + self.spec.order // 2) % self.spec.order)

    def __sub__(self, other: FieldElement) -> FieldElement:
        return self + (-other)

    def __pow__(self, m: int) -> FieldElement:
        if self.log is None:
            if m < 0:
                raise ZeroDivisionError("zero has no inverse")
            return self.spec.one() if m == 0 else self
        return FieldElement(self.spec, (self.log * m) % self.spec.order)

    def inverse(self) -> FieldElement:
        return self ** -1

    def __repr__(self) -> str:
        return f"F{self.spec.q}({self.to_int()})"


def build_field(p: int, f: int = 1, limit: int = FIELD_SIZE_LIMIT) -> FieldSpec:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f < 1:
        raise ValueError(f"degree must be >= 1, got {f}")
    q = p**f
    if q > limit:
        raise ValueError(f"field size {q} exceeds limit {limit}")
    modulus = first_irreducible(p, f)
    order = q - 1

    def mul(a: int, b: int) -> int:
        ca, cb = _decode(a, p, f), _decode(b, p, f)
        prod = [0] * (2 * f)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return _encode(_poly_mod(prod, modulus, p), p)

    prime_factors = list(factorize(order)) if order > 1 else []
    generator = None
    for cand in range(1, q):
        # order of cand is q-1 iff cand^((q-1)/l) != 1 for every prime l | q-1
        ok = True
        for ell in prime_factors:
            x, e, base = 1, order // ell, cand
            while e:
                if e & 1:
                    x = mul(x, base)
                base = mul(base, base)
                e >>= 1
            if x == 1:
                ok = False
                break
        if ok:
            generator = cand
            break
    assert generator is not None

    exp_table = [1] * order
    for k in range(1, order):
        exp_table[k] = mul(exp_table[k - 1], generator)
    log_table = {x: k for k, x in enumerate(exp_table)}
    if len(log_table) != order:
        raise AssertionError("generator does not generate the multiplicative group")

    zech: list[int | None] = []
    for k in range(order):
        c = _decode(exp_table[k], p, f)
        c[0] = (c[0] + 1) % p
        code = _encode(c, p)
        zech.append(None if code == 0 else log_table[code])

    return FieldSpec(p, f, tuple(modulus), generator, tuple(exp_table), log_table, tuple(zech))


def field_of_size(q: int, limit: int = FIELD_SIZE_LIMIT) -> FieldSpec:
    pf = prime_power(q)
    if pf is None:
        raise ValueError(f"{q} is not a prime power")
    return build_field(pf[0], pf[1], limit)


def power_sum(spec: FieldSpec, m: int) -> FieldElement:
    """``sum over a in F_q^x of a**m``, added up one term at a time in the field."""
    total = spec.zero()
    for a in spec.nonzero():
        total = total + a**m
    return total

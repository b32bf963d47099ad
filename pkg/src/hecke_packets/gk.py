"""Supersingular characters versus projective Galois classes when q = p.

Each character ``(lam, J)`` gets a tuple ``(k_1, ..., k_n)`` with
``0 <= k_{i+1} <= p - 1`` and ``lam o alpha_{n_i}^vee (x^{-1}) = x^{k_{i+1}}``.
A nontrivial pairing pins ``k_{i+1}`` in ``[1, p - 2]``; a trivial one gives
``p - 1`` when ``i`` is in ``J`` and ``0`` otherwise. From the tuple,

    r = (1 / (p - 1)) * sum_{j < n} (p - 1 - k_{n-j}) p^j,

and the map W sends the packet of the character to the projective class of
``r`` mod ``p^n - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .arith import divisors, is_prime
from .characters import DEFAULT_BUDGET, LPacket, SupersingularCharacter, all_packets
from .errors import TheoremViolation
from .galois import (
    DEFAULT_RESIDUE_BUDGET,
    ProjectiveClass,
    is_primitive,
    modulus,
    projective_class_of,
    projective_classes,
)
from .weyl import coroot_exponents

# k_{i+1} = -pairing (mod p - 1), from the x^{-1} in the defining identity.
# +1 flips the orientation; only used to show the sign actually matters.
DEFAULT_ORIENTATION = -1


def _require_prime(chi: SupersingularCharacter) -> int:
    if not is_prime(chi.q):
        raise ValueError(f"residue field must be prime (q = p), got q={chi.q}")
    return chi.q


@dataclass(frozen=True)
class KTuple:
    p: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(not 0 <= k <= self.p - 1 for k in self.entries):
            raise ValueError(f"k-tuple entries must lie in [0, {self.p - 1}]: {self.entries}")

    def omega_act(self) -> KTuple:
        return KTuple(self.p, self.entries[-1:] + self.entries[:-1])


def k_tuple_of(chi: SupersingularCharacter, orientation: int = DEFAULT_ORIENTATION) -> KTuple:
    p = _require_prime(chi)
    m = p - 1
    out = []
    for i, e in enumerate(coroot_exponents(chi.lam, p)):
        if e == 0:
            out.append(p - 1 if i in chi.J else 0)
        else:
            out.append((orientation * e) % m)
    return KTuple(p, tuple(out))


def _digit_sum(k: KTuple) -> int:
    n, p = len(k.entries), k.p
    return sum((p - 1 - k.entries[n - 1 - j]) * p**j for j in range(n))


def r_of(chi: SupersingularCharacter, orientation: int = DEFAULT_ORIENTATION) -> int:
    k = k_tuple_of(chi, orientation)
    s = _digit_sum(k)
    if s % (k.p - 1):
        raise TheoremViolation(f"r is not an integer for {chi} (digit sum {s})")
    return s // (k.p - 1)


@dataclass(frozen=True)
class PhiGammaData:
    """Exponents and scalar of the one-dimensional monomial (phi^n, Gamma_0)-module."""

    p: int
    n: int
    phi_exponent: int
    phi_scalar: int
    gamma_exponent: Fraction

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "phi_exponent": self.phi_exponent,
            "phi_scalar": self.phi_scalar,
            "gamma_exponent": f"{self.gamma_exponent.numerator}/{self.gamma_exponent.denominator}",
        }


def phi_gamma_of(chi: SupersingularCharacter, orientation: int = DEFAULT_ORIENTATION) -> PhiGammaData:
    r_of(chi, orientation)  # integrality check
    k = k_tuple_of(chi, orientation)
    p, n = k.p, len(k.entries)
    s = _digit_sum(k)
    prod = 1
    for kj in k.entries:
        prod = prod * (factorial(kj) % p) % p
    scalar = (-1) ** n * pow(prod, -1, p) % p
    return PhiGammaData(p, n, -s, scalar, Fraction(s, p**n - 1))


@dataclass(frozen=True)
class NonIrreducible:
    """W-image of a packet whose ``r`` is not primitive."""

    packet: LPacket
    r: int


def _packet_r_values(packet: LPacket, orientation: int) -> list[int]:
    return sorted(r_of(chi, orientation) for chi in packet.members)


def w_map(
    packet: LPacket, orientation: int = DEFAULT_ORIENTATION
) -> ProjectiveClass | NonIrreducible:
    chi = packet.representative
    p = _require_prime(chi)
    n = chi.n
    r = r_of(chi, orientation)
    if not is_primitive(n, p, r % modulus(n, p)):
        return NonIrreducible(packet, r)
    image = projective_class_of(n, p, r)
    members = set(image.members())
    for other in packet.members:
        r2 = r_of(other, orientation) % modulus(n, p)
        if r2 not in members:
            raise TheoremViolation(
                f"packet of {chi} is not well defined under W: r={r} and r={r2} "
                "lie in different projective classes"
            )
    return image


@dataclass
class PacketMatch:
    packet: LPacket
    r_values: list[int]
    image: ProjectiveClass | None
    matched: bool

    def to_dict(self) -> dict:
        rep = self.packet.representative
        return {
            "character": {"lambda": list(rep.lam), "J": list(rep.J)},
            "size": self.packet.size,
            "regular": self.packet.regular,
            "r_values": self.r_values,
            "projective_class_representative": None if self.image is None else self.image.representative,
            "d_sigma": None if self.image is None else self.image.d_sigma,
            "matched": self.matched,
        }


@dataclass
class BijectionReport:
    n: int
    p: int
    matches: list[PacketMatch] = field(default_factory=list)
    # d -> (regular packets of size d, classes with d_sigma = d)
    tallies: dict[int, tuple[int, int]] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "ok": self.ok,
            "tallies": [
                {"d": d, "packets": a, "classes": b} for d, (a, b) in sorted(self.tallies.items())
            ],
            "failures": list(self.failures),
            "packets": [m.to_dict() for m in self.matches],
        }


def verify_wbij(
    n: int,
    p: int,
    orientation: int = DEFAULT_ORIENTATION,
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
    residue_budget: int = DEFAULT_RESIDUE_BUDGET,
) -> BijectionReport:
    """Check that W is a bijection from regular packets of size d to classes with d_sigma = d."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    packets = all_packets(n, p, jobs=jobs, budget=budget)
    classes = projective_classes(n, p, budget=residue_budget)
    report = BijectionReport(n, p)
    hit: dict[int, LPacket] = {}
    for P in packets:
        rs = _packet_r_values(P, orientation)
        try:
            image = w_map(P, orientation)
        except TheoremViolation as exc:
            report.failures.append(str(exc))
            report.matches.append(PacketMatch(P, rs, None, False))
            continue
        if isinstance(image, NonIrreducible):
            if P.regular:
                report.failures.append(f"regular packet {P.representative} has non-primitive r={image.r}")
            report.matches.append(PacketMatch(P, rs, None, False))
            continue
        if not P.regular:
            report.failures.append(f"non-regular packet {P.representative} has primitive r={rs[0]}")
        matched = P.regular and image.d_sigma == P.size
        if P.regular and image.d_sigma != P.size:
            report.failures.append(
                f"packet {P.representative} of size {P.size} maps to d_sigma={image.d_sigma}"
            )
        if image.representative in hit:
            report.failures.append(
                f"packets {hit[image.representative].representative} and {P.representative} "
                f"both map to class {image.representative}"
            )
            matched = False
        hit[image.representative] = P
        report.matches.append(PacketMatch(P, rs, image, matched))
    for d in divisors(n):
        n_packets = sum(1 for P in packets if P.regular and P.size == d)
        n_classes = sum(1 for c in classes if c.d_sigma == d)
        report.tallies[d] = (n_packets, n_classes)
        missed = [
            c.representative for c in classes if c.d_sigma == d and c.representative not in hit
        ]
        if missed:
            report.failures.append(f"classes with d_sigma={d} not hit: {missed[:10]}")
    return report

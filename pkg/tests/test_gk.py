from fractions import Fraction

import pytest

from hecke_packets import characters, gk
from hecke_packets.arith import divisors
from hecke_packets.characters import SupersingularCharacter, all_packets, enumerate_supersingular, packet_of
from hecke_packets.counting import h_closed
from hecke_packets.errors import TheoremViolation
from hecke_packets.galois import is_primitive, projective_classes
from hecke_packets.gk import (
    KTuple,
    NonIrreducible,
    k_tuple_of,
    phi_gamma_of,
    r_of,
    verify_wbij,
    w_map,
)

S = SupersingularCharacter
PRIME_GRID = [(n, p) for n in (2, 3, 4) for p in (3, 5, 7)] + [(5, 3), (6, 3), (5, 5), (2, 11), (3, 11)]


def r_by_digits(k, p):
    # integer whose base-p digits, most significant first, are p-1-k_1, ..., p-1-k_n, divided by p-1
    digits = "".join(str(p - 1 - x) if p <= 10 else "" for x in k)
    if p <= 10:
        value = int(digits, p)
    else:
        value = 0
        for x in k:
            value = value * p + (p - 1 - x)
    assert value % (p - 1) == 0
    return value // (p - 1)


def test_k_tuple_examples():
    assert k_tuple_of(S(2, 3, (0, 0), (1,))).entries == (0, 2)
    assert k_tuple_of(S(2, 3, (0, 0), (0,))).entries == (2, 0)
    assert k_tuple_of(S(2, 3, (0, 1), ())).entries == (1, 1)


def test_k_tuple_requires_prime():
    with pytest.raises(ValueError):
        k_tuple_of(S(2, 4, (1, 0), ()))
    with pytest.raises(ValueError):
        KTuple(3, (0, 3))


def test_k_tuple_boundary_rule():
    # pairing 2 mod 4 at both indices; k = -2 mod 4 = 2 in [1, p-2]
    assert k_tuple_of(S(2, 5, (2, 0), ())).entries == (2, 2)
    # pairings (a_2 - a_1, a_1 - a_2) = (1, 3) mod 4 -> k = (3, 1)
    assert k_tuple_of(S(2, 5, (3, 0), ())).entries == (3, 1)
    assert k_tuple_of(S(2, 5, (3, 0), ()), orientation=+1).entries == (1, 3)


def test_r_examples():
    assert r_of(S(2, 3, (0, 0), (1,))) == 3
    assert r_of(S(2, 3, (0, 0), (0,))) == 1
    assert r_of(S(2, 3, (0, 1), ())) == 2


def test_phi_gamma_examples():
    d = phi_gamma_of(S(2, 3, (0, 0), (1,)))
    assert (d.phi_exponent, d.phi_scalar, d.gamma_exponent) == (-6, 2, Fraction(3, 4))
    d = phi_gamma_of(S(2, 3, (0, 1), ()))
    assert (d.phi_exponent, d.phi_scalar, d.gamma_exponent) == (-4, 1, Fraction(1, 2))
    assert d.to_dict()["gamma_exponent"] == "1/2"


@pytest.mark.parametrize("n, p", PRIME_GRID)
def test_integrality_and_regularity_iff_primitive(n, p):
    for P in all_packets(n, p):
        for chi in P.members:
            r = r_of(chi)
            assert r == r_by_digits(k_tuple_of(chi).entries, p)
            assert 0 < r < (p**n - 1) // (p - 1)
            assert is_primitive(n, p, r) == P.regular


@pytest.mark.parametrize("n, p", PRIME_GRID)
def test_orbit_size_matches_frobenius_period(n, p):
    qn = (p**n - 1) // (p - 1)
    for P in all_packets(n, p):
        if not P.regular:
            continue
        r = r_of(P.representative)
        minimal = next(e for e in range(1, n + 1) if (p**e * r - r) % qn == 0)
        assert minimal == P.size


@pytest.mark.parametrize("n, p", PRIME_GRID)
def test_k_tuple_is_omega_equivariant(n, p):
    for chi in enumerate_supersingular(n, p):
        assert k_tuple_of(characters.omega_act(chi)) == k_tuple_of(chi).omega_act()


@pytest.mark.parametrize("n, p", PRIME_GRID)
def test_phi_data_injective_and_consistent(n, p):
    seen = {}
    for chi in enumerate_supersingular(n, p):
        d = phi_gamma_of(chi)
        key = (d.phi_exponent, d.phi_scalar)
        assert key not in seen, (chi, seen.get(key))
        seen[key] = chi
        assert d.phi_scalar != 0
        assert d.gamma_exponent * (p**n - 1) + d.phi_exponent == 0
        assert d.gamma_exponent == Fraction(r_of(chi) * (p - 1), p**n - 1)


def test_w_map_examples():
    P = packet_of(S(2, 3, (0, 0), (0,)))
    image = w_map(P)
    assert image.members() == [1, 3, 5, 7] and image.d_sigma == 2 == P.size
    assert sorted(r_of(c) for c in P.members) == [1, 3]
    P = packet_of(S(2, 3, (0, 1), ()))
    image = w_map(P)
    assert image.members() == [2, 6] and image.d_sigma == 1 == P.size


def test_w_map_non_regular_is_flagged():
    P = packet_of(S(4, 3, (0, 0, 0, 0), (0, 2)))
    assert not P.regular
    image = w_map(P)
    assert isinstance(image, NonIrreducible)
    assert not is_primitive(4, 3, image.r)


def test_w_map_requires_prime():
    with pytest.raises(ValueError):
        w_map(packet_of(S(2, 4, (1, 0), ())))


@pytest.mark.parametrize("n, p, sizes", [(2, 3, {1: 1, 2: 1}), (2, 5, {1: 1, 2: 2})])
def test_verify_wbij_examples(n, p, sizes):
    rep = verify_wbij(n, p)
    assert rep.ok, rep.failures
    assert {d: a for d, (a, b) in rep.tallies.items()} == sizes
    assert all(a == b for a, b in rep.tallies.values())


def test_verify_wbij_n3_p7():
    rep = verify_wbij(3, 7)
    assert rep.ok, rep.failures
    assert {d: a for d, (a, _) in rep.tallies.items()} == {d: h_closed(3, 7, d) for d in divisors(3)}
    hit = [m.image.representative for m in rep.matches if m.matched]
    assert sorted(hit) == sorted(c.representative for c in projective_classes(3, 7))


@pytest.mark.parametrize("n, p", [(2, 5), (3, 5), (4, 5), (3, 7)])
def test_both_k_orientations_pass(n, p):
    assert verify_wbij(n, p, orientation=+1).ok
    assert verify_wbij(n, p, orientation=-1).ok


@pytest.mark.parametrize("n, p", [(2, 5), (3, 5), (3, 7)])
def test_wrong_coroot_sign_at_n0_breaks_integrality(n, p, monkeypatch):
    # pairing a_1 - a_n at n_0 instead of a_n - a_1
    def flipped(entries, q):
        m = q - 1
        return tuple(
            ((entries[i - 1] - entries[i]) if i else (entries[0] - entries[-1])) % m
            for i in range(len(entries))
        )

    monkeypatch.setattr(characters, "coroot_exponents", flipped)
    monkeypatch.setattr(gk, "coroot_exponents", flipped)
    characters._mask_tables.cache_clear()
    with pytest.raises(TheoremViolation):
        verify_wbij(n, p)

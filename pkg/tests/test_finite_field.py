import itertools

import pytest

from hecke_packets.finite_field import build_field, field_of_size, is_irreducible, power_sum

PRIME_POWERS_64 = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64]


def test_two_element_field():
    F = build_field(2, 1)
    assert F.q == 2
    assert len(F.elements()) == 2


def test_nine_element_field_group_order():
    F = build_field(3, 2)
    assert F.q == 9 and F.order == 8
    assert all(x**8 == F.one() for x in F.nonzero())
    assert sorted(x.to_int() for x in F.elements()) == list(range(9))


def test_rejects_non_prime():
    with pytest.raises(ValueError):
        build_field(4, 1)


def test_rejects_oversized_field():
    with pytest.raises(ValueError):
        build_field(2, 17)


def test_modulus_is_first_irreducible():
    # x^2 + 1 is the first monic irreducible quadratic over F_3 in (c1, c0) order
    assert build_field(3, 2).modulus == (1, 0, 1)
    assert build_field(2, 2).modulus == (1, 1, 1)
    assert build_field(2, 4).modulus == (1, 1, 0, 0, 1)


def test_irreducibility_by_root_count_for_small_degree():
    # degree 2 and 3 polynomials are irreducible iff rootless
    for p in (2, 3, 5):
        for deg in (2, 3):
            for tail in itertools.product(range(p), repeat=deg):
                poly = list(reversed(tail)) + [1]
                rootless = all(sum(c * x**i for i, c in enumerate(poly)) % p for x in range(p))
                assert is_irreducible(poly, p) == rootless


def test_tables_reproducible():
    a, b = build_field(2, 6), build_field(2, 6)
    assert a.exp_table == b.exp_table and a.zech == b.zech


@pytest.mark.parametrize("q", [q for q in PRIME_POWERS_64 if q <= 16])
def test_field_axioms_exhaustive(q):
    F = field_of_size(q)
    els = F.elements()
    zero, one = F.zero(), F.one()
    for x in els:
        assert x**q == x
        assert x + zero == x and x * one == x
        assert x + (-x) == zero
        for y in els:
            assert x + y == y + x
            assert x * y == y * x
            for z in els:
                assert (x * y) * z == x * (y * z)
                assert (x + y) + z == x + (y + z)
                assert x * (y + z) == x * y + x * z


@pytest.mark.parametrize("q", [3, 5, 7, 11, 13])
def test_prime_field_matches_integers_mod_p(q):
    F = field_of_size(q)
    for a in range(q):
        for b in range(q):
            assert (F.from_int(a) + F.from_int(b)).to_int() == (a + b) % q
            assert (F.from_int(a) * F.from_int(b)).to_int() == (a * b) % q


def test_power_sum_examples():
    F3, F5, F4 = field_of_size(3), field_of_size(5), field_of_size(4)
    assert power_sum(F3, 0) == F3.from_int(2)
    assert power_sum(F5, 2).is_zero()
    assert power_sum(F4, 3) == F4.minus_one() == F4.one()


@pytest.mark.parametrize("q", PRIME_POWERS_64)
def test_power_sum_is_minus_one_exactly_on_multiples(q):
    F = field_of_size(q)
    for m in range(3 * (q - 1)):
        expected = F.minus_one() if m % (q - 1) == 0 else F.zero()
        assert power_sum(F, m) == expected, (q, m)

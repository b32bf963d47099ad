import pytest

from hecke_packets import galois
from hecke_packets.arith import divisors
from hecke_packets.counting import g_closed, h_closed
from hecke_packets.errors import BudgetExceeded
from hecke_packets.galois import (
    count_frobenius_fixed,
    d_sigma_of,
    exact_period_formula,
    genuine_class_of,
    genuine_classes,
    is_primitive,
    minimal_periods,
    primitive_residue_count,
    projective_class_of,
    projective_classes,
    reduced_primitives,
)

GRID = [(n, q) for n in (2, 3, 4) for q in (3, 4, 5, 7, 8, 9)] + [(5, 3), (6, 3), (5, 4), (6, 4)]


def frobenius_orbit_size(n, q, r):
    M = q**n - 1
    x, k = r * q % M, 1
    while x != r:
        x, k = x * q % M, k + 1
    return k


@pytest.mark.parametrize("n, q, r, expected", [(2, 3, 0, False), (2, 3, 2, True), (2, 3, 4, False)])
def test_is_primitive_examples(n, q, r, expected):
    assert is_primitive(n, q, r) == expected


@pytest.mark.parametrize("n, q", [(2, 3), (2, 5), (3, 4), (4, 3), (6, 2), (6, 3), (4, 5)])
def test_primitive_iff_frobenius_orbit_has_size_n(n, q):
    for r in range(q**n - 1):
        assert is_primitive(n, q, r) == (frobenius_orbit_size(n, q, r) == n)


def test_reduced_primitives_examples():
    assert reduced_primitives(2, 3) == [1, 2, 3]
    assert reduced_primitives(2, 5) == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("n, q", GRID)
def test_reduced_primitive_count_is_g_of_n(n, q):
    assert len(reduced_primitives(n, q)) == g_closed(n, q, n)


def test_count_frobenius_fixed_examples():
    assert count_frobenius_fixed(2, 3, 1) == 1
    assert count_frobenius_fixed(2, 3, 2) == 3


@pytest.mark.parametrize("n, q", GRID)
def test_fixed_counts_and_exact_periods(n, q):
    g = {d: g_closed(n, q, d) for d in divisors(n)}
    tally = minimal_periods(n, q)
    assert set(tally) <= set(divisors(n))
    for d in divisors(n):
        assert count_frobenius_fixed(n, q, d) == g[d]
        assert tally.get(d, 0) == exact_period_formula(g, d)


def test_d_sigma_examples():
    assert d_sigma_of(2, 3, 1) == 2
    assert d_sigma_of(2, 3, 2) == 1
    with pytest.raises(ValueError):
        d_sigma_of(2, 3, 4)


def test_projective_classes_n2_q3():
    classes = projective_classes(2, 3)
    assert [(c.representative, c.members(), c.d_sigma, c.lift_count) for c in classes] == [
        (1, [1, 3, 5, 7], 2, 2),
        (2, [2, 6], 1, 1),
    ]


@pytest.mark.parametrize("n, q", GRID)
def test_bfs_and_vector_labelling_agree(n, q):
    assert projective_classes(n, q, method="bfs") == projective_classes(n, q, method="vector")


@pytest.mark.parametrize("n, q", GRID)
def test_projective_class_invariants(n, q):
    classes = projective_classes(n, q)
    for c in classes:
        assert n % c.d_sigma == 0
        assert (q - 1) % (n // c.d_sigma) == 0
        assert c.lift_count * n == c.d_sigma * (q - 1)
        assert len(c.genuine_classes()) == c.lift_count
        assert {d_sigma_of(n, q, r) for r in c.members()} == {c.d_sigma}
    for d in divisors(n):
        assert sum(1 for c in classes if c.d_sigma == d) == h_closed(n, q, d)


@pytest.mark.parametrize("n, q", GRID)
def test_partition_sanity(n, q):
    classes = projective_classes(n, q)
    genuine = genuine_classes(n, q)
    prim = primitive_residue_count(n, q)
    assert sum(c.lift_count for c in classes) == len(genuine)
    assert sum(len(g.members) for g in genuine) == prim
    assert sum(c.size for c in classes) == prim
    assert all(len(g.members) == n for g in genuine)


def test_projective_class_of_matches_listing():
    for c in projective_classes(3, 5):
        for r in c.members()[:5]:
            assert projective_class_of(3, 5, r) == c


def test_genuine_class_of():
    assert genuine_class_of(2, 3, 1).members == (1, 3)
    assert genuine_class_of(2, 3, 5).members == (5, 7)


def test_budget():
    with pytest.raises(BudgetExceeded):
        projective_classes(6, 16, budget=1000)
    with pytest.raises(BudgetExceeded):
        reduced_primitives(6, 16, budget=1000)


def test_python_int_fallback_matches_numpy(monkeypatch):
    expected = {d: count_frobenius_fixed(3, 7, d) for d in (1, 3)}
    monkeypatch.setattr(galois, "_INT64_SAFE", 1)
    assert isinstance(galois._reduced_scan(3, 7, 10**6), list)
    assert {d: count_frobenius_fixed(3, 7, d) for d in (1, 3)} == expected
    assert minimal_periods(3, 7) == {1: expected[1], 3: expected[3] - expected[1]}


def test_large_residues_stay_exact():
    # q^n - 1 beyond 64 bits; primitivity and d_sigma on single residues use Python ints
    n, q = 5, 2**16 + 1
    r = 3
    assert is_primitive(n, q, r)
    assert d_sigma_of(n, q, r) == n

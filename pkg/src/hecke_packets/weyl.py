"""Affine type-A index combinatorics for SL_n and GL_n tori.

A character of the diagonal torus ``T(k)`` of GL_n is an exponent tuple
``(a_1, ..., a_n)`` in ``(Z/(q-1))^n``; a character of the SL_n torus is such
a tuple modulo the diagonal ``(1, ..., 1)``, stored with its last entry
normalised to zero.

Conjugation by the length-zero element ``omega`` sends ``diag(t_1, ..., t_n)``
to ``diag(t_2, ..., t_n, t_1)``, so on exponents it is the right rotation
``(a_1, ..., a_n) -> (a_n, a_1, ..., a_{n-1})``; on affine indices it is
``i -> i + 1 mod n``. The coroot pairing of index ``i`` is
``a_i - a_{i+1}`` for ``1 <= i < n`` and ``a_n - a_1`` for ``i = 0``, which
with 0-based storage is uniformly ``e[i-1] - e[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class AffineIndex:
    n: int
    i: int

    def __post_init__(self) -> None:
        if self.n < 2 or not 0 <= self.i < self.n:
            raise ValueError(f"affine index {self.i} out of range for n={self.n}")


@dataclass(frozen=True)
class ExponentTupleGL:
    q: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.q - 1
        object.__setattr__(self, "entries", tuple(a % m for a in self.entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    def restrict(self) -> ExponentClassSL:
        return ExponentClassSL(self.q, self.entries)


@dataclass(frozen=True)
class ExponentClassSL:
    """Class of an exponent tuple modulo the diagonal; ``entries[-1] == 0``."""

    q: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", canonical_class(self.entries, self.q))

    @property
    def n(self) -> int:
        return len(self.entries)

    def is_trivial(self) -> bool:
        return not any(self.entries)


def canonical_class(entries: tuple[int, ...] | list[int], q: int) -> tuple[int, ...]:
    m = q - 1
    last = entries[-1]
    return tuple((a - last) % m for a in entries)


def rotate(entries: tuple[int, ...]) -> tuple[int, ...]:
    return entries[-1:] + entries[:-1]


def omega_on_index(idx: AffineIndex) -> AffineIndex:
    return AffineIndex(idx.n, (idx.i + 1) % idx.n)


def omega_on_tuple(t: ExponentTupleGL | ExponentClassSL):
    """Exponents of ``lambda^omega``; SL classes come back re-canonicalised."""
    return type(t)(t.q, rotate(t.entries))


def coroot_exponents(entries: tuple[int, ...], q: int) -> tuple[int, ...]:
    """All pairings ``lambda o alpha_{n_i}^vee`` as exponents mod ``q - 1``, for i = 0..n-1."""
    m = q - 1
    return tuple((entries[i - 1] - entries[i]) % m for i in range(len(entries)))


def coroot_exponent(t: ExponentTupleGL | ExponentClassSL, idx: AffineIndex | int) -> int:
    i = idx.i if isinstance(idx, AffineIndex) else idx
    if not 0 <= i < t.n:
        raise ValueError(f"affine index {i} out of range for n={t.n}")
    return (t.entries[i - 1] - t.entries[i]) % (t.q - 1)

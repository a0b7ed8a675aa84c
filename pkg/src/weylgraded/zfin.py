"""Finite integer sets under exclusive-or, the boundary operator, and necklaces.

The finite subsets of Z form an abelian group of exponent 2 under symmetric
difference; everything downstream (involutions, conjugacy classes, K-theory
normal forms) is bookkeeping in this group.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class NotInImageError(ValueError):
    """Requested preimage does not exist (some residue slice has odd size)."""


class FinSet:
    """Immutable finite set of integers; ``^`` is the group operation."""

    __slots__ = ("_elements",)

    def __init__(self, elements: Iterable[int] = ()) -> None:
        elems = frozenset(elements)
        for e in elems:
            if not isinstance(e, int):
                raise TypeError(f"FinSet elements must be integers, got {e!r}")
        object.__setattr__(self, "_elements", elems)

    @property
    def elements(self) -> tuple[int, ...]:
        """Elements in strictly increasing order (canonical serialization)."""
        return tuple(sorted(self._elements))

    def __contains__(self, n: int) -> bool:
        return n in self._elements

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self._elements)

    def __bool__(self) -> bool:
        return bool(self._elements)

    def __xor__(self, other: "FinSet") -> "FinSet":
        return FinSet(self._elements ^ other._elements)

    def __and__(self, other: "FinSet") -> "FinSet":
        return FinSet(self._elements & other._elements)

    def __or__(self, other: "FinSet") -> "FinSet":
        return FinSet(self._elements | other._elements)

    def issubset(self, other: "FinSet") -> bool:
        return self._elements <= other._elements

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FinSet) and self._elements == other._elements

    def __hash__(self) -> int:
        return hash(self._elements)

    def __repr__(self) -> str:
        return f"FinSet({{{', '.join(map(str, self.elements))}}})"

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"

    def to_json(self) -> list[int]:
        return list(self.elements)

    @classmethod
    def from_json(cls, data: Iterable[int]) -> "FinSet":
        return cls(data)


@dataclass(frozen=True)
class AdmissiblePair:
    """A set J of residues inside {0, ..., n-1} together with the modulus n."""

    J: FinSet
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if not all(0 <= j < self.n for j in self.J):
            raise ValueError(f"J = {self.J} is not a subset of [0, {self.n})")

    def __str__(self) -> str:
        return f"({self.J}, {self.n})"

    def to_json(self) -> dict:
        return {"J": self.J.to_json(), "n": self.n}

    @classmethod
    def from_json(cls, data: dict) -> "AdmissiblePair":
        return cls(FinSet.from_json(data["J"]), int(data["n"]))


@dataclass(frozen=True)
class NecklaceClass:
    """Rotation class of an admissible pair, held by its minimal representative."""

    representative: AdmissiblePair

    def __str__(self) -> str:
        return str(self.representative)

    def to_json(self) -> dict:
        return self.representative.to_json()


def symmetric_difference(K: FinSet, J: FinSet) -> FinSet:
    """Group operation: (K ∪ J) minus (K ∩ J)."""
    return K ^ J


def affine_image(J: FinSet, scale: int, offset: int) -> FinSet:
    """Image of J under j -> scale*j + offset; scale must be nonzero."""
    if scale == 0:
        raise ValueError("scale must be nonzero (the map would not be injective)")
    return FinSet(scale * j + offset for j in J)


def slice(J: FinSet, n: int, i: int) -> FinSet:
    """The i-th residue slice {j : n*j + i in J}."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= i < n:
        raise ValueError(f"residue i must lie in [0, {n}), got {i}")
    return FinSet((t - i) // n for t in J if (t - i) % n == 0)


def boundary(J: FinSet, n: int) -> FinSet:
    """The boundary J ^ (J - n)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return J ^ affine_image(J, 1, -n)


def inverse_boundary(J: FinSet, n: int) -> FinSet:
    """The unique K with boundary(K, n) == J.

    Exists exactly when every residue slice of J has even size.  Built
    constructively: per residue, pair consecutive slice elements a < b and
    take the run {a+1, ..., b}.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out: list[int] = []
    for i in range(n):
        s = sorted(slice(J, n, i))
        if len(s) % 2:
            raise NotInImageError(
                f"slice {i} of {J} mod {n} has odd size; no boundary preimage exists"
            )
        for a, b in zip(s[::2], s[1::2]):
            out.extend(n * k + i for k in range(a + 1, b + 1))
    return FinSet(out)


def shift_delta(s: int) -> FinSet:
    """The interval whose involution realizes the shift by s on the free module.

    {0, ..., s-1} for s >= 0 and {s, ..., -1} for s < 0.
    """
    return FinSet(range(0, s) if s >= 0 else range(s, 0))


def necklace_canonical(p: AdmissiblePair) -> NecklaceClass:
    """Rotation-minimal representative; equal classes <=> same necklace type.

    Minimality is lexicographic on the sorted tuple of residues.  Rotations
    only: necklaces may be turned but not flipped over.
    """
    n = p.n
    best = min(
        tuple(sorted((j + r) % n for j in p.J)) for r in range(n)
    )
    return NecklaceClass(AdmissiblePair(FinSet(best), n))


def _totient(d: int) -> int:
    result, m, q = d, d, 2
    while q * q <= m:
        if m % q == 0:
            while m % q == 0:
                m //= q
            result -= result // q
        q += 1
    if m > 1:
        result -= result // m
    return result


def necklace_count(n: int) -> int:
    """Number of 2-colored necklaces of length n: (1/n) sum_{d|n} phi(d) 2^(n/d)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    total = sum(_totient(d) * 2 ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def necklace_enumerate(n: int) -> list[NecklaceClass]:
    """All distinct necklace classes at size n, smallest representatives first."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    seen: set[tuple[int, ...]] = set()
    for mask in range(2 ** n):
        J = FinSet(i for i in range(n) if mask >> i & 1)
        seen.add(necklace_canonical(AdmissiblePair(J, n)).representative.J.elements)
    reps = sorted(seen, key=lambda t: (len(t), t))
    return [NecklaceClass(AdmissiblePair(FinSet(t), n)) for t in reps]

"""Graded K-theory of A: chain normal forms of projective sums.

Every finitely generated graded projective splits into rank-1 summands
iota_J(A)<s>; absorbing shifts leaves a multiset of finite sets, and the
exchange isomorphism

    iota_J A + iota_K A  ~  iota_{J | K} A + iota_{J & K} A

rewrites any multiset into a unique ascending chain J_1 <= ... <= J_m.  Two
sums are isomorphic exactly when their chains agree, which is also equality in
K_0; in particular summand cancellation holds in the graded category.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .zfin import FinSet, affine_image, shift_delta
from .picard import PicElement, identity
from .lattices import DSet


@dataclass(frozen=True)
class ProjectiveSum:
    """Direct sum of rank-1 graded projectives, stored as (J, shift) summands."""

    summands: tuple[tuple[FinSet, int], ...]

    @classmethod
    def of(cls, *parts) -> "ProjectiveSum":
        """Build from FinSets, bare iterables, or (J, shift) pairs."""
        out = []
        for p in parts:
            if isinstance(p, tuple) and len(p) == 2 and isinstance(p[1], int):
                out.append((FinSet(p[0]), p[1]))
            else:
                out.append((FinSet(p), 0))
        return cls(tuple(out))

    def __len__(self) -> int:
        return len(self.summands)

    def to_json(self) -> list[dict]:
        return [{"J": J.to_json(), "shift": s} for J, s in self.summands]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "ProjectiveSum":
        return cls(
            tuple((FinSet.from_json(d["J"]), int(d.get("shift", 0))) for d in data)
        )

    def __str__(self) -> str:
        if not self.summands:
            return "0"
        return " + ".join(
            f"i{J}A" + (f"<{s}>" if s else "") for J, s in self.summands
        )


@dataclass
class K0Class:
    """Element of K_0 on the basis of shifted free modules: {n: coefficient}."""

    coefficients: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.coefficients = {n: c for n, c in self.coefficients.items() if c}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, K0Class) and self.coefficients == other.coefficients

    def reduced(self) -> "K0Class":
        """Class modulo the free module: the degree-0 coefficient is dropped."""
        return K0Class({n: c for n, c in self.coefficients.items() if n != 0})

    def to_json(self) -> dict:
        return {str(n): c for n, c in sorted(self.coefficients.items())}

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        return " + ".join(
            f"{c}[A<{n}>]" for n, c in sorted(self.coefficients.items())
        )


def absorb_shift(J: FinSet, s: int) -> FinSet:
    """The K with iota_K A isomorphic to iota_J(A)<s>: translate then flip the ray."""
    if not s:
        return J
    return affine_image(J, 1, s) ^ shift_delta(s)


def normalize_sum(S: ProjectiveSum) -> ProjectiveSum:
    """Chain normal form; the membership count of each integer is the invariant.

    The pair rewriting (J, K) -> (J & K, J | K) is confluent: integer t ends
    up in exactly the top count(t) links of the chain.
    """
    sets = [absorb_shift(J, s) for J, s in S.summands]
    m = len(sets)
    counts = Counter(t for J in sets for t in J)
    chain = [
        FinSet(t for t, c in counts.items() if c >= m + 1 - i)
        for i in range(1, m + 1)
    ]
    return ProjectiveSum(tuple((J, 0) for J in chain))


def iso_test(S1: ProjectiveSum, S2: ProjectiveSum) -> bool:
    """Graded isomorphism of the two direct sums."""
    return normalize_sum(S1) == normalize_sum(S2)


def stably_free_witness(J: FinSet | Iterable[int]) -> tuple[list[int], list[int]]:
    """Shift lists with iota_J A + sum A<l in adds> iso to sum A<m in result>.

    Requires J inside Z>=1 (shift-normalize first).  Peeling the maximum m of
    J trades iota_J A + A<m> for iota_{J minus max} A + A<m+1>, so the adds
    are J in descending order and the result is their successors plus A.
    """
    J = FinSet(J)
    if any(t < 1 for t in J):
        raise ValueError(
            f"J = {J} must lie in Z>=1; normalize the class by shifting first"
        )
    adds = sorted(J, reverse=True)
    result = [m + 1 for m in adds] + [0]
    return adds, result


def theta_map(combo: Mapping[FinSet, int] | Iterable[tuple[FinSet, int]]) -> PicElement:
    """Reduced-K_0 to numerically trivial involutions: [iota_J A] -> iota_J.

    Only coefficient parities matter; the image is the xor of the J with odd
    coefficient.
    """
    items = combo.items() if isinstance(combo, Mapping) else combo
    out = FinSet()
    for J, c in items:
        if c % 2:
            out = out ^ FinSet(J)
    return PicElement(1, 0, out) if out else identity()


def k0_class(S: ProjectiveSum) -> K0Class:
    """Coordinates of [S] on the shifted-free basis, via the stably-free witnesses."""
    coeffs: dict[int, int] = {}
    for J, s in S.summands:
        J1 = absorb_shift(J, s)
        n = DSet(J1).min_element()
        K = absorb_shift(J1, -n)
        adds, result = stably_free_witness(K)
        for r in result:
            coeffs[r + n] = coeffs.get(r + n, 0) + 1
        for l in adds:
            coeffs[l + n] = coeffs.get(l + n, 0) - 1
    return K0Class(coeffs)

"""Conjugacy canonicalization of generative autoequivalences.

Every generative element is conjugate to a unique-up-to-rotation S^n iota_J
with (J, n) admissible; necklace rotation classes of these pairs enumerate the
graded Morita equivalence classes of rings graded equivalent to A.
"""
from __future__ import annotations

from .zfin import (
    AdmissiblePair,
    FinSet,
    inverse_boundary,
    necklace_canonical,
    necklace_count,
    slice,
)
from .picard import PicElement, compose, inverse, iota, is_generative, omega


def canonical_admissible(F: PicElement) -> tuple[AdmissiblePair, PicElement]:
    """Admissible pair (J, n) and a conjugator g with g F g^{-1} = S^n iota_J.

    Negative rank is first repaired by conjugating with omega; the involution
    part is then trimmed to residues by inverting the boundary operator on the
    even-sliced complement.  The pair is returned exactly as constructed; any
    rotation canonicalization is a separate, explicit step.
    """
    if not is_generative(F):
        raise ValueError(
            f"{F} is not generative (needs sign +1 and nonzero rank); "
            "no admissible conjugate exists"
        )
    g = PicElement(1, 0, FinSet())
    F1 = F
    if F.b < 0:
        g = omega()
        F1 = compose(compose(g, F), inverse(g))
    n, K = F1.b, F1.J
    J = FinSet(i for i in range(n) if len(slice(K, n, i)) % 2 == 1)
    I = inverse_boundary(J ^ K, n)
    g = compose(iota(I), g)
    return AdmissiblePair(J, n), g


def same_morita_class(F: PicElement, G: PicElement) -> bool:
    """Conjugacy test: equal necklace types of the canonical admissible pairs.

    Equivalently, the twisted endomorphism rings the two elements present are
    graded Morita equivalent.
    """
    pf, _ = canonical_admissible(F)
    pg, _ = canonical_admissible(G)
    return necklace_canonical(pf) == necklace_canonical(pg)


def morita_class_count(n: int) -> int:
    """Number of graded Morita classes realized by rank-n generative elements."""
    return necklace_count(n)

import pytest
from hypothesis import given, strategies as st

from weylgraded.zfin import (
    AdmissiblePair,
    FinSet,
    NotInImageError,
    affine_image,
    boundary,
    inverse_boundary,
    necklace_canonical,
    necklace_count,
    necklace_enumerate,
    slice,
    symmetric_difference,
)

finsets = st.frozensets(st.integers(-10, 10), max_size=5).map(FinSet)
moduli = st.integers(1, 6)


def fs(*xs):
    return FinSet(xs)


class TestSymmetricDifference:
    def test_definition(self):
        assert symmetric_difference(fs(0, 1), fs(1, 2)) == fs(0, 2)

    def test_identity(self):
        assert symmetric_difference(fs(4, 7), FinSet()) == fs(4, 7)

    def test_exponent_two(self):
        assert symmetric_difference(fs(0, 3), fs(0, 3)) == FinSet()

    @given(finsets, finsets, finsets)
    def test_group_axioms(self, a, b, c):
        assert (a ^ b) ^ c == a ^ (b ^ c)
        assert a ^ b == b ^ a
        assert a ^ a == FinSet()


class TestAffineImage:
    def test_shift(self):
        assert affine_image(fs(0, 1), 1, 3) == fs(3, 4)

    def test_dilation(self):
        assert affine_image(fs(0, 1), 2, 0) == fs(0, 2)

    def test_omega_conjugation_map(self):
        # j -> -1-j, the reflection conjugating iota_j to iota_{-1-j}
        assert affine_image(fs(0), -1, -1) == fs(-1)

    def test_zero_scale_rejected(self):
        with pytest.raises(ValueError):
            affine_image(fs(1), 0, 5)


class TestSlice:
    def test_even_residue(self):
        assert slice(fs(0, 3, 5), 2, 0) == fs(0)

    def test_odd_residue(self):
        assert slice(fs(0, 3, 5), 2, 1) == fs(1, 2)

    def test_empty(self):
        assert slice(FinSet(), 3, 2) == FinSet()

    @given(finsets, moduli)
    def test_slices_reassemble(self, J, n):
        rebuilt = FinSet()
        for i in range(n):
            piece = slice(J, n, i)
            if piece:
                rebuilt = rebuilt ^ affine_image(piece, n, i)
        assert rebuilt == J

    def test_residue_out_of_range(self):
        with pytest.raises(ValueError):
            slice(fs(0), 2, 2)


class TestBoundary:
    def test_interval(self):
        assert boundary(fs(1, 2, 3), 1) == fs(0, 3)

    def test_singleton(self):
        assert boundary(fs(2), 2) == fs(0, 2)

    def test_empty(self):
        assert boundary(FinSet(), 5) == FinSet()

    @given(finsets, finsets, moduli)
    def test_additive(self, I, J, n):
        assert boundary(I ^ J, n) == boundary(I, n) ^ boundary(J, n)


class TestInverseBoundary:
    def test_paired_run(self):
        assert inverse_boundary(fs(0, 3), 1) == fs(1, 2, 3)

    def test_mod_two(self):
        K = inverse_boundary(fs(0, 2), 2)
        assert K == fs(2)
        assert boundary(K, 2) == fs(0, 2)

    def test_odd_parity_rejected(self):
        with pytest.raises(NotInImageError):
            inverse_boundary(fs(0), 1)

    @given(finsets, moduli)
    def test_left_inverse(self, K, n):
        assert inverse_boundary(boundary(K, n), n) == K

    @given(finsets, moduli)
    def test_image_characterization(self, J, n):
        even = all(len(slice(J, n, i)) % 2 == 0 for i in range(n))
        if even:
            assert boundary(inverse_boundary(J, n), n) == J
        else:
            with pytest.raises(NotInImageError):
                inverse_boundary(J, n)


class TestNecklaces:
    def test_canonical_rotates(self):
        got = necklace_canonical(AdmissiblePair(fs(1), 2))
        assert got.representative == AdmissiblePair(fs(0), 2)

    def test_canonical_fixed_point(self):
        p = AdmissiblePair(fs(0, 2), 4)
        assert necklace_canonical(p).representative == p

    def test_canonical_empty(self):
        p = AdmissiblePair(FinSet(), 3)
        assert necklace_canonical(p).representative == p

    def test_reflections_not_identified(self):
        # {0,1,3} at n=6 is chiral: its reversal {0,3,5} is no rotation of it
        a = necklace_canonical(AdmissiblePair(fs(0, 1, 3), 6))
        b = necklace_canonical(AdmissiblePair(fs(0, 3, 5), 6))
        assert a != b

    @given(st.integers(1, 8), st.data())
    def test_rotation_invariance(self, n, data):
        J = FinSet(data.draw(st.frozensets(st.integers(0, n - 1))))
        r = data.draw(st.integers(-12, 12))
        rotated = AdmissiblePair(FinSet((j + r) % n for j in J), n)
        assert necklace_canonical(rotated) == necklace_canonical(AdmissiblePair(J, n))

    def test_count_values(self):
        assert [necklace_count(n) for n in range(1, 7)] == [2, 3, 4, 6, 8, 14]

    def test_count_formula_instances(self):
        assert necklace_count(4) == (16 + 4 + 4) // 4
        assert necklace_count(6) == (64 + 8 + 8 + 4) // 6

    def test_enumerate_small(self):
        ones = necklace_enumerate(1)
        assert [c.representative for c in ones] == [
            AdmissiblePair(FinSet(), 1),
            AdmissiblePair(fs(0), 1),
        ]
        twos = necklace_enumerate(2)
        assert [c.representative for c in twos] == [
            AdmissiblePair(FinSet(), 2),
            AdmissiblePair(fs(0), 2),
            AdmissiblePair(fs(0, 1), 2),
        ]
        assert len(necklace_enumerate(3)) == necklace_count(3) == 4

    @pytest.mark.parametrize("n", range(1, 13))
    def test_enumerate_agrees_with_count(self, n):
        assert len(necklace_enumerate(n)) == necklace_count(n)


class TestAdmissiblePair:
    def test_validation(self):
        with pytest.raises(ValueError):
            AdmissiblePair(fs(2), 2)
        with pytest.raises(ValueError):
            AdmissiblePair(FinSet(), 0)


class TestJson:
    def test_finset_roundtrip(self):
        J = fs(-3, 0, 7)
        assert FinSet.from_json(J.to_json()) == J
        assert J.to_json() == [-3, 0, 7]

    def test_pair_roundtrip(self):
        p = AdmissiblePair(fs(0, 2), 4)
        assert AdmissiblePair.from_json(p.to_json()) == p

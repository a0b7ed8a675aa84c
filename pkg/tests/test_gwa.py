from itertools import combinations

import pytest

from weylgraded.zfin import FinSet
from weylgraded.skew import RationalPoly
from weylgraded.gwa import (
    graded_piece_closed_form,
    present,
    ring_pieces,
    simplicity_root_test,
    twisted_endo_piece_oracle,
    verify_gwa_embedding,
    verify_ring_closure,
)

Z = RationalPoly.z()
ONE = RationalPoly.one()


def fs(*xs):
    return FinSet(xs)


def admissible_pairs(n_max):
    out = []
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            for c in combinations(range(n), k):
                out.append((FinSet(c), n))
    return out


class TestPresent:
    def test_veronese(self):
        p = present(FinSet(), 2)
        assert p.f == Z * (Z + 1)
        assert p.idealizer_factor == ONE
        assert p.relations[0] == "X z - z X = 2 X"
        assert p.relations[3] == f"Y X = {(Z * (Z + 1)).shift(-2)}"

    def test_localized_idealizer(self):
        p = present(fs(0), 1)
        assert p.f == ONE
        assert p.idealizer_factor == Z

    def test_idealizer_in_weyl(self):
        p = present(fs(0), 2)
        assert p.f == Z + 1
        assert p.idealizer_factor == Z

    def test_factorization_identity(self):
        for J, n in admissible_pairs(4):
            p = present(J, n)
            assert p.f * p.idealizer_factor == RationalPoly.rising(n)

    def test_rejects_inadmissible(self):
        with pytest.raises(ValueError):
            present(fs(2), 2)
        with pytest.raises(ValueError):
            present(fs(0), 0)


class TestClosedForm:
    def test_negative_degrees(self):
        assert graded_piece_closed_form(fs(0), 1, -2) == (Z, 2)

    def test_positive_degree(self):
        assert graded_piece_closed_form(fs(0), 1, 1) == (Z, -1)

    def test_rank_two_idealizer(self):
        h, p = graded_piece_closed_form(fs(0), 2, 1)
        assert h == Z * (Z + 1)
        assert p == -2

    def test_degree_zero(self):
        assert graded_piece_closed_form(fs(1), 3, 0) == (ONE, 0)

    def test_idealizer_display_both_signs(self):
        # the same coefficient z appears on both sides of degree 0
        for j in range(-4, 5):
            h, p = graded_piece_closed_form(fs(0), 1, j)
            assert p == -j
            assert h == (ONE if j == 0 else Z)


class TestOracle:
    def test_trivial_pair_recovers_free_ring(self):
        for j in range(-4, 5):
            h, p = twisted_endo_piece_oracle(FinSet(), 1, j)
            assert p == -j
            if j >= 0:
                assert h == RationalPoly.rising(j)
            else:
                assert h == ONE

    def test_idealizer_piece(self):
        assert twisted_endo_piece_oracle(fs(0), 1, 1) == (Z, -1)

    def test_two_residue_piece(self):
        assert twisted_endo_piece_oracle(fs(0, 1), 2, -1) == (Z * (Z + 1), 2)

    @pytest.mark.parametrize("pair", admissible_pairs(3))
    def test_matches_closed_form(self, pair):
        J, n = pair
        for j in range(-3, 4):
            assert twisted_endo_piece_oracle(J, n, j) == graded_piece_closed_form(J, n, j)

    def test_veronese_pieces_are_graded_components(self):
        for j in range(-4, 5):
            got = graded_piece_closed_form(FinSet(), 2, j)
            if j >= 0:
                assert got == (RationalPoly.rising(2 * j), -2 * j)
            else:
                assert got == (ONE, -2 * j)
            assert twisted_endo_piece_oracle(FinSet(), 2, j) == got


class TestRingStructure:
    @pytest.mark.parametrize("pair", admissible_pairs(4))
    def test_closure(self, pair):
        assert verify_ring_closure(pair[0], pair[1], 3)

    @pytest.mark.parametrize("pair", admissible_pairs(4))
    def test_gwa_embedding(self, pair):
        assert verify_gwa_embedding(pair[0], pair[1])

    @pytest.mark.parametrize("pair", admissible_pairs(4))
    def test_simplicity_roots(self, pair):
        assert simplicity_root_test(pair[0], pair[1])

    def test_weyl_case_relations(self):
        assert verify_gwa_embedding(FinSet(), 1)


class TestRingPieces:
    def test_table_shape(self):
        table = ring_pieces(fs(0), 1, -2, 2)
        assert sorted(table.pieces) == [-2, -1, 0, 1, 2]
        assert table.pieces[0] == (ONE, 0)

    def test_oracle_table_matches(self):
        a = ring_pieces(fs(0, 2), 3, -2, 2)
        b = ring_pieces(fs(0, 2), 3, -2, 2, oracle=True)
        assert a.pieces == b.pieces

    def test_json(self):
        table = ring_pieces(fs(0), 1, -1, 1)
        data = table.to_json()
        assert set(data) == {"-1", "0", "1"}
        assert data["1"]["p"] == -1

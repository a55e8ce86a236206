from fractions import Fraction as F
from math import gcd

import pytest

from slopeforge.weyl import build_root_system, check_2m_rho, dot, weyl_dim


class TestRootSystems:
    @pytest.mark.parametrize("family,rank,count", [
        ("A", 1, 1), ("A", 2, 3), ("A", 3, 6), ("B", 2, 4), ("B", 3, 9),
        ("C", 3, 9), ("D", 4, 12), ("G", 2, 6), ("F", 4, 24),
        ("E", 6, 36), ("E", 7, 63), ("E", 8, 120),
    ])
    def test_positive_root_counts(self, family, rank, count):
        assert build_root_system(family, rank).num_positive_roots == count

    def test_invalid_pairs(self):
        for family, rank in [("D", 2), ("E", 5), ("F", 3), ("G", 1), ("B", 1)]:
            with pytest.raises(ValueError):
                build_root_system(family, rank)

    def test_rho_pairs_positively(self):
        rs = build_root_system("F", 4)
        assert all(dot(rs.rho, a) > 0 for a in rs.positive_roots)


class TestWeylDim:
    def test_zero_weight(self):
        rs = build_root_system("A", 1)
        assert weyl_dim(rs, rs.rho_multiple(0)) == 1

    def test_a1_adjoint_family(self):
        rs = build_root_system("A", 1)
        assert weyl_dim(rs, rs.rho_multiple(2)) == 3

    def test_a2_value(self):
        rs = build_root_system("A", 2)
        assert weyl_dim(rs, rs.rho_multiple(2)) == 27

    def test_g2_value(self):
        rs = build_root_system("G", 2)
        assert weyl_dim(rs, rs.rho_multiple(4)) == 5**6 == 15625

    def test_b2_value(self):
        rs = build_root_system("B", 2)
        assert weyl_dim(rs, rs.rho_multiple(2)) == 3**4 == 81

    def test_non_dominant_rejected(self):
        rs = build_root_system("A", 2)
        bad = tuple(-c for c in rs.rho)
        with pytest.raises(ValueError):
            weyl_dim(rs, bad)

    def test_non_integral_pairing_rejected(self):
        rs = build_root_system("A", 1)
        with pytest.raises(ValueError):
            weyl_dim(rs, (F(1, 3), F(0)))

    def test_standard_representation(self):
        # A2 fundamental-adjacent check: the weight rho itself gives dim 8
        rs = build_root_system("A", 2)
        assert weyl_dim(rs, rs.rho_multiple(1)) == 8


class TestEvenRhoIdentity:
    @pytest.mark.parametrize("family,rank", [
        ("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 3), ("D", 4), ("G", 2)])
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_identity(self, family, rank, m):
        assert check_2m_rho(build_root_system(family, rank), m)

    def test_identity_every_family_up_to_rank_four(self):
        pairs = ([("A", n) for n in (1, 2, 3, 4)]
                 + [("B", n) for n in (2, 3, 4)]
                 + [("C", n) for n in (2, 3, 4)]
                 + [("D", n) for n in (3, 4)]
                 + [("G", 2), ("F", 4)])
        for family, rank in pairs:
            rs = build_root_system(family, rank)
            for m in (1, 2, 3):
                assert check_2m_rho(rs, m), (family, rank, m)

    def test_coprimality_of_consecutive_values(self):
        for family, rank in [("A", 2), ("B", 2), ("G", 2), ("D", 4)]:
            rs = build_root_system(family, rank)
            n = rs.num_positive_roots
            assert gcd(3**n, 5**n) == 1

    def test_m_validation(self):
        rs = build_root_system("A", 1)
        with pytest.raises(ValueError):
            check_2m_rho(rs, 0)

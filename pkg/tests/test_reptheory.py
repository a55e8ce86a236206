from itertools import product as iter_product

import pytest

from slopeforge.exactnum import Cyclotomic
from slopeforge.groups import (alternating_group, cyclic_group, dihedral_group,
                               generated_subgroup, heisenberg_group,
                               left_cosets, normal_subgroups, quaternion_group,
                               symmetric_group, wreath_cyclic)
from slopeforge.reptheory import (RepTheoryError, character_of, character_table,
                                  conjugate_character, direct_sum, induce,
                                  induced_matrix_rep, inner_product,
                                  inner_product_int, irreducible_dims_gcd,
                                  mackey_check, regular_character,
                                  rep_from_generator_images, restrict, tensor,
                                  tensor_induce, tensor_induced_matrix_rep,
                                  tind_summand_check, trivial_character)


def a3_of_s3():
    S3 = symmetric_group(3)
    return S3, next(N for N in normal_subgroups(S3) if N.order == 3)


def nontrivial_linear(table):
    return next(c for c in table.irreducibles[1:] if int(c.degree) == 1)


class TestInnerProduct:
    def test_trivial_with_itself(self):
        G = symmetric_group(3)
        one = trivial_character(G)
        assert inner_product(one, one) == Cyclotomic.rational(1)

    def test_regular_against_trivial(self):
        G = symmetric_group(3)
        assert inner_product_int(regular_character(G), trivial_character(G)) == 1

    def test_two_dim_irreducible_norm(self):
        S3 = symmetric_group(3)
        chi2 = next(c for c in character_table(S3).irreducibles if int(c.degree) == 2)
        assert inner_product_int(chi2, chi2) == 1

    def test_group_mismatch(self):
        with pytest.raises(RepTheoryError):
            inner_product(trivial_character(symmetric_group(3)),
                          trivial_character(cyclic_group(2)))


class TestCharacterTables:
    def test_c3_linear_with_cyclotomic_values(self):
        table = character_table(cyclic_group(3))
        assert table.degrees == (1, 1, 1)
        conds = sorted(max(v.conductor for v in chi.values)
                       for chi in table.irreducibles)
        assert conds == [1, 3, 3]

    def test_s3_degrees(self):
        assert sorted(character_table(symmetric_group(3)).degrees) == [1, 1, 2]

    def test_q8_degrees(self):
        assert sorted(character_table(quaternion_group()).degrees) == [1, 1, 1, 1, 2]

    @pytest.mark.parametrize("maker,degs", [
        (lambda: symmetric_group(4), [1, 1, 2, 3, 3]),
        (lambda: alternating_group(4), [1, 1, 1, 3]),
        (lambda: alternating_group(5), [1, 3, 3, 4, 5]),
        (lambda: dihedral_group(4), [1, 1, 1, 1, 2]),
        (lambda: dihedral_group(5), [1, 1, 2, 2]),
        (lambda: heisenberg_group(3), [1] * 9 + [3, 3]),
    ])
    def test_degree_lists(self, maker, degs):
        assert sorted(character_table(maker()).degrees) == degs

    def test_orthonormality_exact(self):
        for G in (symmetric_group(3), quaternion_group(), alternating_group(4)):
            table = character_table(G)
            for i, a in enumerate(table.irreducibles):
                for j, b in enumerate(table.irreducibles):
                    expected = Cyclotomic.rational(1 if i == j else 0)
                    assert inner_product(a, b) == expected

    def test_column_orthogonality_exact(self):
        # sum over irreducibles of chi(g) chi(h^-1) is |centralizer| or zero
        for G in (symmetric_group(3), quaternion_group(), alternating_group(4)):
            table = character_table(G)
            inv = G.inverse_class
            r = len(G.conjugacy_classes)
            for k in range(r):
                for l in range(r):
                    total = Cyclotomic.rational(0)
                    for chi in table.irreducibles:
                        total = total + chi.values[k] * chi.values[inv[l]]
                    if k == l:
                        expected = G.order // len(G.conjugacy_classes[k])
                    else:
                        expected = 0
                    assert total == Cyclotomic.rational(expected)

    def test_frobenius_21_irrational_values(self):
        # C7 : C3, whose degree-3 characters need conductor-7 cyclotomics
        from slopeforge.groups import group_from_permutations

        x = tuple((i + 1) % 7 for i in range(7))
        y = tuple((2 * i) % 7 for i in range(7))
        F21 = group_from_permutations([x, y], name="F21")
        table = character_table(F21)
        assert sorted(table.degrees) == [1, 1, 1, 3, 3]
        conds = {max(v.conductor for v in chi.values) for chi in table.irreducibles}
        assert 7 in conds
        for i, a in enumerate(table.irreducibles):
            for j, b in enumerate(table.irreducibles):
                assert inner_product(a, b) == Cyclotomic.rational(1 if i == j else 0)

    def test_special_linear_two_three(self):
        from slopeforge.groups import group_from_permutations

        vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
        idx = {v: i for i, v in enumerate(vecs)}

        def mat_perm(m):
            return tuple(
                idx[((m[0][0] * a + m[0][1] * b) % 3,
                     (m[1][0] * a + m[1][1] * b) % 3)]
                for a, b in vecs)

        SL23 = group_from_permutations(
            [mat_perm([[1, 1], [0, 1]]), mat_perm([[0, 2], [1, 0]])], name="SL23")
        assert SL23.order == 24
        table = character_table(SL23)
        assert sorted(table.degrees) == [1, 1, 1, 2, 2, 2, 3]

    def test_trivial_group(self):
        table = character_table(cyclic_group(1))
        assert table.degrees == (1,)

    def test_order_bound(self):
        with pytest.raises(RepTheoryError):
            character_table(symmetric_group(3), max_order=2)

    def test_dims_gcd(self):
        assert irreducible_dims_gcd(symmetric_group(3)) == 1
        assert irreducible_dims_gcd(cyclic_group(6)) == 1
        assert irreducible_dims_gcd(quaternion_group()) == 1
        with pytest.raises(RepTheoryError):
            irreducible_dims_gcd(cyclic_group(1))


class TestRestriction:
    def test_trivial_restricts_to_trivial(self):
        S3, A3 = a3_of_s3()
        assert restrict(trivial_character(S3), A3) == trivial_character(A3.as_group)

    def test_restriction_of_induced(self):
        S3, A3 = a3_of_s3()
        omega = nontrivial_linear(character_table(A3.as_group))
        res = restrict(induce(omega, A3), A3)
        assert res == omega + omega * omega

    def test_restrict_to_whole_group(self):
        S3 = symmetric_group(3)
        chi = character_table(S3).irreducibles[-1]
        res = restrict(chi, S3.full_subgroup())
        assert list(res.values) == list(chi.values)


class TestConjugation:
    def test_inner_is_identity(self):
        S3, A3 = a3_of_s3()
        omega = nontrivial_linear(character_table(A3.as_group))
        inside = A3.elements[1]
        assert conjugate_character(omega, A3, inside) == omega

    def test_transposition_sends_omega_to_square(self):
        S3, A3 = a3_of_s3()
        omega = nontrivial_linear(character_table(A3.as_group))
        transp = next(i for i in range(6) if S3.element_order(i) == 2)
        assert conjugate_character(omega, A3, transp) == omega * omega

    def test_trivial_fixed(self):
        S3, A3 = a3_of_s3()
        transp = next(i for i in range(6) if S3.element_order(i) == 2)
        one = trivial_character(A3.as_group)
        assert conjugate_character(one, A3, transp) == one


class TestInduction:
    def test_omega_induces_to_two_dim_irreducible(self):
        S3, A3 = a3_of_s3()
        omega = nontrivial_linear(character_table(A3.as_group))
        ind = induce(omega, A3)
        assert int(ind.degree) == 2
        assert inner_product_int(ind, ind) == 1

    def test_trivial_induces_to_permutation_character(self):
        S3, A3 = a3_of_s3()
        ind = induce(trivial_character(A3.as_group), A3)
        # permutation character of S3 on two points: trivial + sign
        table = character_table(S3)
        mults = table.decompose(ind)
        assert sum(m * int(c.degree) for m, c in zip(mults, table.irreducibles)) == 2
        assert mults[0] == 1

    def test_identity_index(self):
        S3 = symmetric_group(3)
        chi = character_table(S3).irreducibles[-1]
        assert induce(restrict(chi, S3.full_subgroup()), S3.full_subgroup()) == chi

    def test_frobenius_reciprocity(self):
        S3, A3 = a3_of_s3()
        tH = character_table(A3.as_group)
        tG = character_table(S3)
        for chi in tH.irreducibles:
            for psi in tG.irreducibles:
                assert inner_product(induce(chi, A3), psi) == inner_product(
                    chi, restrict(psi, A3))


class TestTensorInduction:
    def test_whole_group_identity(self):
        S3 = symmetric_group(3)
        full = S3.full_subgroup()
        chi = character_table(S3).irreducibles[-1]
        assert tensor_induce(restrict(chi, full), full) == chi

    def test_degree_law(self):
        S3, A3 = a3_of_s3()
        omega = nontrivial_linear(character_table(A3.as_group))
        assert int(tensor_induce(omega, A3).degree) == 1

    def test_sign_on_c4_matches_matrix_oracle(self):
        C4 = cyclic_group(4)
        H = generated_subgroup(C4, [C4.power(1, 2)])
        Hg = H.as_group
        rep = rep_from_generator_images(Hg, Hg.generators,
                                        [[[Cyclotomic.rational(-1)]]])
        sign = character_of(rep)
        assert tensor_induce(sign, H) == character_of(tensor_induced_matrix_rep(rep, H))
        assert induce(sign, H) == character_of(induced_matrix_rep(rep, H))

    def test_transversal_independence(self):
        S3, A3 = a3_of_s3()
        omega = nontrivial_linear(character_table(A3.as_group))
        reference = tensor_induce(omega, A3)
        for choice in iter_product(*left_cosets(S3, A3)):
            assert tensor_induce(omega, A3, list(choice)) == reference

    def test_transversal_independence_index_three(self):
        A4 = alternating_group(4)
        V4 = next(N for N in normal_subgroups(A4) if N.order == 4)
        chi = nontrivial_linear(character_table(V4.as_group))
        reference = tensor_induce(chi, V4)
        for choice in iter_product(*left_cosets(A4, V4)):
            assert tensor_induce(chi, V4, list(choice)) == reference

    def test_restriction_formulas(self):
        S3, A3 = a3_of_s3()
        omega = nontrivial_linear(character_table(A3.as_group))
        transversal = [c[0] for c in left_cosets(S3, A3)]
        conjugates = [conjugate_character(omega, A3, g) for g in transversal]
        total, prod = conjugates[0], conjugates[0]
        for term in conjugates[1:]:
            total, prod = total + term, prod * term
        assert restrict(induce(omega, A3), A3) == total
        assert restrict(tensor_induce(omega, A3), A3) == prod

    def test_summand_check(self):
        S3, A3 = a3_of_s3()
        omega = nontrivial_linear(character_table(A3.as_group))
        assert tind_summand_check(omega, A3)
        assert tind_summand_check(restrict(character_table(S3).irreducibles[-1],
                                           S3.full_subgroup()), S3.full_subgroup())

    def test_case_one_tensor_induction_is_irreducible(self):
        # index-2 base pair inside the order-7200 wreath: a degree-3 factor
        # tensor-induces to a degree-9 irreducible of the whole group
        A5 = alternating_group(5)
        W = wreath_cyclic(A5, 2)
        G = W.group()
        gens = []
        for g in A5.generators:
            gens.append(G.index[((0, 1), (g, 0))])
            gens.append(G.index[((0, 1), (0, g))])
        H = generated_subgroup(G, gens)
        assert H.order == 3600
        Hg = H.as_group
        tA5 = character_table(A5)
        chi3 = next(c for c in tA5.irreducibles if int(c.degree) == 3)
        values = []
        for rep_idx in Hg.class_representatives:
            _, (a_idx, _) = G.elements[Hg.elements[rep_idx]]
            values.append(chi3.values[A5.class_of[a_idx]])
        from slopeforge.reptheory import ClassFunction

        factor = ClassFunction(Hg, tuple(values))
        assert inner_product_int(factor, factor) == 1
        big = tensor_induce(factor, H)
        assert int(big.degree) == 9
        assert inner_product_int(big, big) == 1


class TestMackey:
    def test_s3_a3(self):
        S3, A3 = a3_of_s3()
        omega = nontrivial_linear(character_table(A3.as_group))
        ok, witness = mackey_check(omega, omega, A3)
        assert ok
        assert set(witness) == {"lhs", "rhs"}

    def test_c4_c2_sign(self):
        C4 = cyclic_group(4)
        H = generated_subgroup(C4, [C4.power(1, 2)])
        sign = nontrivial_linear(character_table(H.as_group))
        assert mackey_check(sign, sign, H)[0]

    def test_index_one(self):
        S3 = symmetric_group(3)
        table = character_table(S3)
        ok, _ = mackey_check(
            restrict(table.irreducibles[-1], S3.full_subgroup()),
            restrict(table.irreducibles[1], S3.full_subgroup()),
            S3.full_subgroup())
        assert ok

    def test_requires_normal(self):
        S3 = symmetric_group(3)
        transp = next(i for i in range(6) if S3.element_order(i) == 2)
        H = generated_subgroup(S3, [transp])
        with pytest.raises(RepTheoryError):
            mackey_check(trivial_character(H.as_group),
                         trivial_character(H.as_group), H)


class TestMatrixReps:
    def test_rejects_non_multiplicative(self):
        C3 = cyclic_group(3)
        bad = [[[Cyclotomic.rational(-1)]]]  # order-3 generator, order-2 image
        with pytest.raises(RepTheoryError):
            rep_from_generator_images(C3, C3.generators, bad)

    def test_direct_sum_and_tensor(self):
        C4 = cyclic_group(4)
        i4 = Cyclotomic.zeta(4)
        rep = rep_from_generator_images(C4, C4.generators, [[[i4]]])
        chi = character_of(rep)
        both = direct_sum(rep, rep)
        assert character_of(both) == chi + chi
        trivial_rep = rep_from_generator_images(
            C4, C4.generators, [[[Cyclotomic.rational(1)]]])
        assert character_of(tensor(rep, trivial_rep)) == chi

    def test_two_dimensional_multiplicative(self):
        S3 = symmetric_group(3)
        w = Cyclotomic.zeta(3)
        zero, one = Cyclotomic.rational(0), Cyclotomic.rational(1)
        imgs = []
        for g in S3.generators:
            if S3.element_order(g) == 3:
                imgs.append(((w, zero), (zero, w * w)))
            else:
                imgs.append(((zero, one), (one, zero)))
        rep = rep_from_generator_images(S3, S3.generators, imgs)
        chi = character_of(rep)
        assert int(chi.degree) == 2
        assert inner_product_int(chi, chi) == 1

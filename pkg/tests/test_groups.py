import pytest

from slopeforge.groups import (GoursatDichotomyError, GroupError,
                               alternating_group, classify_wreath_subgroup,
                               cyclic_group, dihedral_group, direct_power,
                               direct_product, elementary_abelian_group,
                               embed_in_wreath, generated_subgroup,
                               goursat_classify, group_from_cayley_table,
                               group_from_permutations, heisenberg_group,
                               is_simple, left_cosets, longest_normal_chain,
                               normal_subgroups, outer_automorphism_order,
                               quaternion_group, select_prime, subgroup_closure,
                               symmetric_group, wreath_cyclic)


class TestConstruction:
    def test_cyclic_closure(self):
        assert cyclic_group(3).order == 3

    def test_s3_closure(self):
        assert group_from_permutations([(1, 0, 2), (1, 2, 0)]).order == 6

    def test_empty_generators(self):
        assert group_from_permutations([]).order == 1

    def test_rejects_non_permutation(self):
        with pytest.raises(GroupError):
            group_from_permutations([(0, 0, 1)])

    def test_order_bound(self):
        with pytest.raises(GroupError):
            group_from_permutations([tuple(list(range(1, 11)) + [0])], max_order=5)

    def test_cayley_table_roundtrip(self):
        C3 = cyclic_group(3)
        table = [[C3.mul(i, j) for j in range(3)] for i in range(3)]
        G = group_from_cayley_table(table)
        assert G.order == 3 and G.element_order(1) == 3

    def test_cayley_table_rejects_broken(self):
        with pytest.raises(GroupError):
            group_from_cayley_table([[0, 1], [0, 1]])

    def test_named_groups(self):
        assert symmetric_group(4).order == 24
        assert alternating_group(4).order == 12
        assert alternating_group(5).order == 60
        assert dihedral_group(6).order == 12
        assert quaternion_group().order == 8
        assert heisenberg_group(3).order == 27
        assert elementary_abelian_group(2, 3).order == 8


class TestConjugacyClasses:
    def test_s3(self):
        assert sorted(len(c) for c in symmetric_group(3).conjugacy_classes) == [1, 2, 3]

    def test_abelian_singletons(self):
        G = cyclic_group(12)
        assert all(len(c) == 1 for c in G.conjugacy_classes)

    def test_q8_has_five(self):
        assert len(quaternion_group().conjugacy_classes) == 5

    def test_identity_first(self):
        for G in (symmetric_group(4), quaternion_group()):
            assert G.conjugacy_classes[0] == (0,)


class TestNormalSubgroups:
    def test_s3(self):
        assert [n.order for n in normal_subgroups(symmetric_group(3))] == [1, 3, 6]

    def test_prime_cyclic_simple(self):
        assert is_simple(cyclic_group(5))
        assert not is_simple(cyclic_group(6))

    def test_klein_four_all_subgroups_normal(self):
        assert len(normal_subgroups(elementary_abelian_group(2, 2))) == 5

    def test_a5_simple(self):
        assert is_simple(alternating_group(5))

    def test_chain_length(self):
        ns = normal_subgroups(cyclic_group(8))
        assert [n.order for n in ns] == [1, 2, 4, 8]
        assert longest_normal_chain(ns) == 4


class TestWreath:
    def test_orders(self):
        assert wreath_cyclic(cyclic_group(3), 2).group().order == 18
        assert wreath_cyclic(symmetric_group(3), 1).group().order == 6

    def test_c2_wr_c2_is_dihedral(self):
        W = wreath_cyclic(cyclic_group(2), 2).group()
        D4 = dihedral_group(4)
        assert W.order == 8
        assert sorted(W.element_order(i) for i in range(8)) == sorted(
            D4.element_order(i) for i in range(8))
        assert len(W.conjugacy_classes) == len(D4.conjugacy_classes)

    def test_order_formula(self):
        for ell in (1, 2, 3):
            W = wreath_cyclic(symmetric_group(3), ell)
            assert W.order == ell * 6**ell

    def test_conjugation_relation(self):
        # sigma^-1 (h_1, .., h_n) sigma = (h_sigma(1), ..., h_sigma(n))
        H = symmetric_group(3)
        W = wreath_cyclic(H, 3)
        sigma = (1, 2, 0)
        h = (2, 5, 1)
        t = W.top_element(sigma)
        lhs = W.compose(W.compose(W.inverse(t), W.base_element(h)), t)
        assert lhs == W.base_element(tuple(h[sigma[i]] for i in range(3)))


class TestEmbedding:
    def _check_embedding(self, G, H):
        emb = embed_in_wreath(G, H)
        W = emb.wreath
        for a in range(G.order):
            for b in range(G.order):
                assert W.compose(emb.images[a], emb.images[b]) == emb.images[G.mul(a, b)]
        assert len(set(emb.images)) == G.order
        return emb

    def test_c4_in_c2_wr_c2(self):
        C4 = cyclic_group(4)
        H = generated_subgroup(C4, [C4.power(1, 2)])
        emb = self._check_embedding(C4, H)
        assert emb.wreath.n == 2

    def test_trivial_index(self):
        C4 = cyclic_group(4)
        emb = self._check_embedding(C4, C4.full_subgroup())
        assert all(img[0] == (0,) for img in emb.images)

    def test_s3_in_s2_wr_a3(self):
        S3 = symmetric_group(3)
        A3 = next(N for N in normal_subgroups(S3) if N.order == 3)
        self._check_embedding(S3, A3)

    def test_transversal_conjugacy(self):
        # two transversals give images conjugate inside the wreath product
        S3 = symmetric_group(3)
        A3 = next(N for N in normal_subgroups(S3) if N.order == 3)
        cosets = left_cosets(S3, A3)
        t1 = [c[0] for c in cosets]
        t2 = [cosets[0][1], cosets[1][2]]
        e1 = embed_in_wreath(S3, A3, t1)
        e2 = embed_in_wreath(S3, A3, t2)
        W = e1.wreath
        Hg = A3.as_group
        # conjugator (pi, h) with gamma2_i = gamma1_(pi(i)) * h_i
        pi = [next(j for j, c in enumerate(cosets) if g in c) for g in t2]
        h = tuple(Hg.index[S3.mul(S3.inv(t1[pi[i]]), t2[i])] for i in range(2))
        w = (tuple(pi), h)
        winv = W.inverse(w)
        for g in range(S3.order):
            assert W.compose(winv, W.compose(e1.images[g], w)) == e2.images[g]

    def test_invalid_transversal(self):
        S3 = symmetric_group(3)
        A3 = next(N for N in normal_subgroups(S3) if N.order == 3)
        with pytest.raises(GroupError):
            embed_in_wreath(S3, A3, [0, 0])


class TestGoursat:
    def test_diagonal(self):
        C3 = cyclic_group(3)
        res = goursat_classify([(h, h) for h in range(3)], C3, 2)
        assert not res.full and res.automorphisms == ((0, 1, 2),)

    def test_antidiagonal(self):
        C3 = cyclic_group(3)
        res = goursat_classify([(h, C3.inv(h)) for h in range(3)], C3, 2)
        assert not res.full and res.automorphisms == ((0, 2, 1),)

    def test_full(self):
        C3 = cyclic_group(3)
        P = direct_power(C3, 2)
        assert goursat_classify([tuple(e) for e in P.elements], C3, 2).full

    def test_preconditions(self):
        C3 = cyclic_group(3)
        with pytest.raises(GroupError, match="shift"):
            goursat_classify([(0, 0), (1, 0), (2, 0)], C3, 2)
        with pytest.raises(GroupError, match="surject"):
            goursat_classify([(0, 0)], C3, 2)
        with pytest.raises(GroupError, match="simple"):
            goursat_classify([(h, h) for h in range(4)], cyclic_group(4), 2)
        with pytest.raises(GroupError, match="prime"):
            goursat_classify([(h, h, h, h) for h in range(3)], C3, 4)

    def test_dichotomy_failure_detected(self):
        # the sum-zero plane of (C_3)^3 is shift-stable, surjective, neither
        C3 = cyclic_group(3)
        g = C3.generators[0]
        plane = [tuple(C3.power(g, a) for a in (x, y, (-x - y) % 3))
                 for x in range(3) for y in range(3)]
        with pytest.raises(GoursatDichotomyError):
            goursat_classify(plane, C3, 3)


class TestWreathClassification:
    def test_full_wreath_abelian_flag(self):
        C3 = cyclic_group(3)
        W = wreath_cyclic(C3, 2)
        report = classify_wreath_subgroup(W, W.group())
        assert report.case == "full_wreath"
        assert report.abelian_base
        assert report.trichotomy_ok is None
        assert report.max_normal_chain_length > 3  # diagonals become normal

    def test_semidirect_direct_product(self):
        A5 = alternating_group(5)
        W = wreath_cyclic(A5, 2)
        gens = [W.top_element((1, 0))] + [W.base_element((g, g)) for g in A5.generators]
        Gbar = W.subgroup_from_raw(gens)
        report = classify_wreath_subgroup(W, Gbar)
        assert report.case == "semidirect"
        assert report.direct_product is True
        assert report.chain_bound_ok
        assert report.goursat.automorphisms == (tuple(range(60)),)

    def test_semidirect_outer_twist_is_not_direct(self):
        # twist the diagonal by conjugation with a transposition: this is S5
        A5 = alternating_group(5)
        tau = (1, 0, 2, 3, 4)
        conj = {}
        for i, perm in enumerate(A5.elements):
            image = tuple(tau[perm[tau[j]]] for j in range(5))
            conj[i] = A5.index[image]
        W = wreath_cyclic(A5, 2)
        gens = [W.top_element((1, 0))]
        gens += [W.base_element((g, conj[g])) for g in A5.generators]
        Gbar = W.subgroup_from_raw(gens)
        assert Gbar.order == 120
        report = classify_wreath_subgroup(W, Gbar)
        assert report.case == "semidirect"
        assert report.direct_product is False
        assert report.trichotomy_ok  # normal subgroups exactly 1, A5, the whole
        assert report.normal_subgroup_orders == (1, 60, 120)


class TestAutomorphisms:
    def test_c3(self):
        assert outer_automorphism_order(cyclic_group(3)) == 2

    def test_s3_complete(self):
        assert outer_automorphism_order(symmetric_group(3)) == 1

    def test_a5(self):
        assert outer_automorphism_order(alternating_group(5)) == 2

    def test_search_bound(self):
        with pytest.raises(GroupError):
            outer_automorphism_order(elementary_abelian_group(2, 4), search_bound=10)


class TestSelectPrime:
    def test_examples(self):
        assert select_prime({2}, [2, 1, 1]) == 3
        assert select_prime(set(), [6]) == 5
        assert select_prime({2}, []) == 3

    def test_zero_rejected(self):
        with pytest.raises(GroupError):
            select_prime(set(), [0])


class TestSubgroups:
    def test_closure(self):
        S4 = symmetric_group(4)
        some = subgroup_closure(S4, [S4.generators[0]])
        assert len(some) == S4.element_order(S4.generators[0])

    def test_direct_product_structure(self):
        G = direct_product(cyclic_group(2), cyclic_group(3))
        assert G.order == 6 and G.is_abelian()
        assert max(G.element_order(i) for i in range(6)) == 6

    def test_subgroup_validation(self):
        S3 = symmetric_group(3)
        three = next(i for i in range(6) if S3.element_order(i) == 3)
        with pytest.raises(GroupError):
            S3.subgroup([0, three])  # missing the inverse of the 3-cycle
        with pytest.raises(GroupError):
            S3.subgroup([1, 2])  # missing identity

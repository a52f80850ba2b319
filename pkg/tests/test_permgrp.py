"""Permutations, orbits, Schreier-Sims, design actions, generator files."""

import random

import pytest

from steiner3.catalog import (
    affine_group_generators,
    construct_boolean_affine,
    construct_spherical,
    projective_group_generators,
)
from steiner3.permgrp import (
    GeneratorSet,
    Permutation,
    PermutationError,
    SearchBudgetExceeded,
    SetNotPreserved,
    automorphism_group,
    block_action,
    format_generators,
    group_order,
    is_flag_transitive,
    orbit,
    parse_generators,
)


class TestPermutation:
    def test_composition_is_left_to_right(self):
        p = Permutation((1, 0, 2))
        q = Permutation((0, 2, 1))
        assert (p * q).images == (2, 0, 1)  # x -> q(p(x))

    def test_inverse(self):
        p = Permutation((2, 0, 1))
        assert (p * p.inverse()).is_identity()

    def test_cycles(self):
        p = Permutation((1, 2, 0, 3, 5, 4))
        assert p.cycles() == [(0, 1, 2), (4, 5)]

    def test_from_cycles(self):
        p = Permutation.from_cycles([(0, 1, 2), (4, 5)], 6)
        assert p.images == (1, 2, 0, 3, 5, 4)

    def test_rejects_non_bijection(self):
        with pytest.raises(PermutationError):
            Permutation((0, 0, 1))

    def test_degree_mismatch(self):
        with pytest.raises(PermutationError):
            Permutation((0, 1)) * Permutation((0, 1, 2))


class TestOrbit:
    def test_identity_only(self):
        gens = GeneratorSet(10, (Permutation.identity(10),))
        assert orbit(gens, 5) == [5]

    def test_pgl29_point_orbit_is_whole_line(self):
        gens = projective_group_generators("PGL", 3, 2)
        assert orbit(gens, 0) == list(range(10))

    def test_pgl29_base_block_orbit_matches_block_count(self):
        # b = v(v-1)(v-2) / (k(k-1)(k-2)) with v=10, k=4
        want = 10 * 9 * 8 // (4 * 3 * 2)
        gens = projective_group_generators("PGL", 3, 2)
        base = (0, 1, 2, 9)  # GF(3) u {infinity} inside the line over GF(9)
        blocks = orbit(gens, base, lambda g, s: tuple(sorted(g.images[x] for x in s)))
        assert len(blocks) == want == 30


class TestGroupOrder:
    def test_psl27(self):
        gens = projective_group_generators("PSL", 7, 1)
        want = 8 * 7 * 6 // 2
        assert group_order(gens).order == want == 168

    def test_empty_generators(self):
        summary = group_order(GeneratorSet(10, ()))
        assert summary.order == 1
        assert summary.base == ()
        assert summary.stabilizer_orders == (1,)

    def test_agammal132(self):
        gens = affine_group_generators("AGammaL_1", 5)
        assert group_order(gens).order == 32 * 31 * 5 == 4960

    def test_symmetric_group(self):
        tr = Permutation((1, 0, 2, 3, 4))
        cyc = Permutation((1, 2, 3, 4, 0))
        assert group_order(GeneratorSet(5, (tr, cyc))).order == 120

    def test_stabilizer_chain_divides(self):
        summary = group_order(affine_group_generators("AGL_d_2", 4))
        chain = summary.stabilizer_orders
        assert chain[0] == summary.order and chain[-1] == 1
        for a, b in zip(chain, chain[1:]):
            assert a % b == 0

    @pytest.mark.parametrize("seed", [0, 3, 7])
    def test_orbit_stabilizer(self, seed):
        for gens in (
            affine_group_generators("AGL_d_2", 3),
            projective_group_generators("PSL", 3, 2),
            affine_group_generators("AGammaL_1", 3),
        ):
            total = group_order(gens).order
            stab = group_order(gens, base_prefix=(seed,)).stabilizer_orders[1]
            assert len(orbit(gens, seed)) * stab == total


class TestBlockAction:
    def test_identity(self):
        design = construct_boolean_affine(3)
        assert block_action(design, Permutation.identity(8)).is_identity()

    def test_translation_preserves_blocks(self):
        design = construct_boolean_affine(3)
        g = Permutation(x ^ 1 for x in range(8))
        induced = block_action(design, g)
        assert sorted(induced.images) == list(range(design.b))

    def test_transposition_is_rejected_with_witness(self):
        design = construct_boolean_affine(3)
        swap = Permutation((1, 0, 2, 3, 4, 5, 6, 7))
        with pytest.raises(SetNotPreserved) as err:
            block_action(design, swap)
        witness = err.value.witness
        image = [swap.images[x] for x in witness]
        xor = 0
        for x in image:
            xor ^= x
        assert xor != 0  # the image 4-set is not a plane

    def test_functoriality_on_random_words(self):
        design = construct_boolean_affine(3)
        gens = affine_group_generators("AGL_d_2", 3).gens
        rng = random.Random(7)
        for _ in range(25):
            word = [rng.choice(gens) for _ in range(rng.randint(1, 8))]
            product = word[0]
            for g in word[1:]:
                product = product * g
            induced = block_action(design, word[0])
            for g in word[1:]:
                induced = induced * block_action(design, g)
            assert block_action(design, product) == induced


class TestFlagTransitivity:
    def test_agl18_is_regular_on_flags(self):
        design = construct_boolean_affine(3)
        gens = affine_group_generators("AGL_1", 3)
        report = is_flag_transitive(design, gens)
        assert report.flag_transitive
        assert report.flag_orbit_size == report.flag_count == 56
        assert group_order(gens).order == 56

    def test_psl29_splits_spherical_blocks(self):
        design = construct_spherical(3, 2)
        report = is_flag_transitive(design, projective_group_generators("PSL", 3, 2))
        assert not report.flag_transitive
        assert report.block_orbit_count == 2
        assert report.block_orbit_sizes == (15, 15)
        assert report.point_2_transitive  # PSL(2,9) is still 2-transitive

    def test_trivial_group_is_not_transitive(self):
        design = construct_boolean_affine(3)
        report = is_flag_transitive(design, GeneratorSet(8, ()))
        assert not report.flag_transitive
        assert report.flag_orbit_size == 1
        assert report.block_orbit_count == design.b
        assert report.point_pair_orbit_count == 8 * 7

    def test_non_automorphism_propagates(self):
        design = construct_boolean_affine(3)
        swap = Permutation((1, 0, 2, 3, 4, 5, 6, 7))
        with pytest.raises(SetNotPreserved):
            is_flag_transitive(design, GeneratorSet(8, (swap,)))


class TestAutomorphismGroup:
    def test_affine3(self):
        gl32 = (8 - 1) * (8 - 2) * (8 - 4)
        want = 8 * gl32  # |AGL(3,2)|
        gens = automorphism_group(construct_boolean_affine(3))
        assert group_order(gens).order == want == 1344

    def test_spherical32(self):
        # PGammaL(2,9): twice |PGL(2,9)| = 720
        gens = automorphism_group(construct_spherical(3, 2))
        assert group_order(gens).order == 1440

    def test_budget_bound(self):
        with pytest.raises(SearchBudgetExceeded):
            automorphism_group(construct_boolean_affine(7))

    def test_deterministic(self):
        design = construct_spherical(3, 2)
        first = automorphism_group(design)
        second = automorphism_group(design)
        assert [g.images for g in first.gens] == [g.images for g in second.gens]

    def test_found_generators_are_automorphisms(self):
        design = construct_boolean_affine(4)
        for g in automorphism_group(design).gens:
            block_action(design, g)  # raises if not an automorphism


class TestGeneratorFiles:
    def test_round_trip(self):
        gens = projective_group_generators("PSL", 3, 2)
        text = format_generators(gens, comment="psl(2,9)")
        again = parse_generators(text)
        assert again.degree == gens.degree
        assert [g.images for g in again.gens] == [g.images for g in gens.gens]

    def test_cycle_notation_is_one_based(self):
        text = "degree: 6\n(1 2 3)(5 6)\n"
        gens = parse_generators(text)
        assert gens.gens[0].images == (1, 2, 0, 3, 5, 4)

    def test_comments_and_blank_lines(self):
        text = "# header\n\ndegree: 3\nimg: 1,2,0  # rotation\n"
        gens = parse_generators(text)
        assert gens.gens[0].images == (1, 2, 0)

    def test_missing_degree_rejected(self):
        with pytest.raises(PermutationError):
            parse_generators("img: 0,1\n")

    def test_wrong_length_rejected(self):
        with pytest.raises(PermutationError):
            parse_generators("degree: 3\nimg: 0,1\n")

    def test_cycle_out_of_range_rejected(self):
        with pytest.raises(PermutationError):
            parse_generators("degree: 3\n(1 4)\n")

    def test_junk_rejected(self):
        with pytest.raises(PermutationError):
            parse_generators("degree: 3\nwhat\n")

import pytest

from cubespec import (
    AffineSubspace,
    Blueprint,
    Face,
    LOWER,
    TradePair,
    anf_degree,
    build,
    character,
    constant_function,
    detect_affine,
    enumerate_faces,
    face_sums_vanish,
    has_disjoint_support_basis,
    is_trade,
    level_project,
    make_function,
    phi,
    point_mass,
    psi,
    sign_split,
    split_subspace,
    support,
    tensor,
    three_values_check,
    zero_function,
)
from conftest import random_band_function
from oracles import naive_anf_degree, naive_is_trade


class TestFaces:
    def test_one_fixed_coordinate_on_the_square(self):
        faces = enumerate_faces(2, 1)
        assert len(faces) == 4
        members = {frozenset(face.members()) for face in faces}
        assert members == {
            frozenset({0b00, 0b10}),  # x1 = 0
            frozenset({0b01, 0b11}),  # x1 = 1
            frozenset({0b00, 0b01}),  # x2 = 0
            frozenset({0b10, 0b11}),  # x2 = 1
        }

    def test_whole_cube_face(self):
        faces = enumerate_faces(3, 0)
        assert len(faces) == 1
        assert set(faces[0].members()) == set(range(8))

    def test_counts(self):
        assert len(enumerate_faces(3, 2)) == 12
        assert all(len(list(f.members())) == 2 for f in enumerate_faces(3, 2))

    def test_validation(self):
        with pytest.raises(ValueError):
            enumerate_faces(3, 4)
        with pytest.raises(ValueError):
            Face(2, (1, 1), (0, 0))


class TestFaceSums:
    def test_weight_two_character(self):
        assert face_sums_vanish(character(3, 0b011), 2)

    def test_constant_fails(self):
        assert not face_sums_vanish(constant_function(3, 1), 1)

    def test_level_two_tensor(self):
        f = tensor(phi(2), phi(2))
        assert level_project(f, 2).values == f.values
        assert face_sums_vanish(f, 2)

    def test_random_single_level_samples(self, rng):
        for _ in range(25):
            n = rng.randrange(1, 7)
            i = rng.randrange(1, n + 1)
            assert face_sums_vanish(random_band_function(rng, n, i, i), i)


class TestIsTrade:
    def test_alternating_pair_on_the_square(self):
        tp = TradePair(frozenset({0b00, 0b11}), frozenset({0b01, 0b10}), 2)
        assert is_trade(tp, 1)

    def test_antipodal_singletons_unbalanced(self):
        tp = TradePair(frozenset({0b00}), frozenset({0b11}), 2)
        assert not is_trade(tp, 1)

    def test_size_mismatch_fails_at_level_zero(self):
        tp = TradePair(frozenset({0, 1, 2}), frozenset({4}), 3)
        assert not is_trade(tp, 0)

    def test_pair_validation(self):
        with pytest.raises(ValueError):
            TradePair(frozenset(), frozenset({1}), 2)
        with pytest.raises(ValueError):
            TradePair(frozenset({1}), frozenset({1, 2}), 2)

    def test_matches_face_scan_oracle(self, rng):
        for _ in range(15):
            n = rng.randrange(2, 5)
            codes = rng.sample(range(1 << n), rng.randrange(2, (1 << n) - 1))
            cut = rng.randrange(1, len(codes))
            t0, t1 = frozenset(codes[:cut]), frozenset(codes[cut:])
            tp = TradePair(t0, t1, n)
            for t in range(n + 1):
                assert is_trade(tp, t) == naive_is_trade(t0, t1, n, t)

    def test_trade_parameter_is_downward_closed(self):
        f = build(Blueprint(LOWER, (1,), (2, 2), 0, 5))
        tp = sign_split(f)
        assert is_trade(tp, 2)
        assert is_trade(tp, 1)
        assert is_trade(tp, 0)


class TestSignSplit:
    def test_sign_pair(self):
        tp = sign_split(phi(2))
        assert tp.t0 == {0} and tp.t1 == {3}

    def test_product_pattern(self):
        tp = sign_split(tensor(phi(1), phi(1)))
        assert tp.t0 == {0b00, 0b11} and tp.t1 == {0b01, 0b10}

    def test_needs_both_signs(self):
        with pytest.raises(ValueError):
            sign_split(psi(3))


class TestThreeValues:
    def test_examples(self):
        assert three_values_check(tensor(phi(2), phi(2)))
        assert not three_values_check(make_function(2, [2, 1, 0, 0]))
        assert three_values_check(point_mass(3))

    def test_zero_function_rejected(self):
        with pytest.raises(ValueError):
            three_values_check(zero_function(2))


class TestAnfDegree:
    def test_constant_one(self):
        assert anf_degree(constant_function(2, 1)) == 0

    def test_diagonal_pair_indicator(self):
        # indicator of {00, 11} is 1 + x1 + x2 over Z_2, degree 1
        assert anf_degree(make_function(2, [1, 0, 0, 1])) == 1
        assert naive_anf_degree([1, 0, 0, 1]) == 1

    def test_support_of_level_two_product(self):
        f = tensor(phi(2), phi(2))
        indicator = make_function(4, [1 if v != 0 else 0 for v in f.values])
        assert anf_degree(indicator) == 2

    def test_matches_subset_xor_oracle(self, rng):
        for _ in range(20):
            n = rng.randrange(1, 7)
            vals = [rng.randrange(2) for _ in range(1 << n)]
            if not any(vals):
                vals[0] = 1
            assert anf_degree(make_function(n, vals)) == naive_anf_degree(vals)

    def test_contract_violations(self):
        with pytest.raises(ValueError):
            anf_degree(make_function(1, [2, 0]))
        with pytest.raises(ValueError):
            anf_degree(zero_function(2))


class TestDetectAffine:
    def test_two_dimensional_linear_subspace(self):
        sub = detect_affine({0b000, 0b011, 0b110, 0b101}, 3)
        assert sub is not None
        assert sub.translation == 0 and sub.dimension == 2
        assert set(sub.members()) == {0b000, 0b011, 0b110, 0b101}

    def test_wrong_size(self):
        assert detect_affine({0b00, 0b01, 0b10}, 2) is None

    def test_power_of_two_but_not_affine(self):
        assert detect_affine({0b000, 0b001, 0b010, 0b100}, 3) is None

    def test_translated_subspace(self):
        sub = detect_affine({0b01, 0b11}, 2)
        assert sub is not None
        assert sub.translation == 0b01 and sub.basis == (0b10,)

    def test_block_product_support(self):
        f = tensor(tensor(phi(1), phi(2)), point_mass(1))
        sub = detect_affine(support(f), 4)
        assert sub is not None
        assert sub.translation == 0
        assert sub.basis == (0b0001, 0b0110)

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            detect_affine(set(), 2)


class TestDisjointBasis:
    def test_disjoint_pair(self):
        assert has_disjoint_support_basis(AffineSubspace(4, 0, (0b0001, 0b0110)))

    def test_overlapping_span_reduces_to_sharing_masks(self):
        # span{1100, 0110}: the echelon basis is {1010, 0110}, sharing coordinate 3
        sub = detect_affine({0, 0b0011, 0b0110, 0b0101}, 4)
        assert sub is not None
        assert sub.basis == (0b0101, 0b0110)
        assert not has_disjoint_support_basis(sub)

    def test_one_dimensional(self):
        assert has_disjoint_support_basis(AffineSubspace(3, 0, (0b111,)))


class TestSplitSubspace:
    def test_two_dimensional_split(self):
        sub = AffineSubspace(4, 0, (0b0001, 0b0110))
        tp = split_subspace(sub)
        assert tp.t0 == {0b0000, 0b0111}
        assert tp.t1 == {0b0001, 0b0110}
        assert is_trade(tp, 1)

    def test_one_dimensional_split(self):
        tp = split_subspace(AffineSubspace(3, 0, (0b111,)))
        assert tp.t0 == {0} and tp.t1 == {7}
        assert is_trade(tp, 0)

    def test_matches_sign_split_of_the_build(self):
        f = build(Blueprint(LOWER, (1,), (2,), 1, 4))
        tp = sign_split(f)
        sub = detect_affine(support(f), 4)
        split = split_subspace(sub)
        assert {split.t0, split.t1} == {tp.t0, tp.t1}

    def test_preconditions(self):
        with pytest.raises(ValueError):
            split_subspace(AffineSubspace(4, 0, (0b0011, 0b0110)))
        with pytest.raises(ValueError):
            split_subspace(AffineSubspace(3, 1, ()))

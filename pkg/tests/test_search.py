from fractions import Fraction

import pytest

from cubespec import (
    Blueprint,
    LOWER,
    build,
    canonical_form,
    equivalent,
    make_function,
    min_support,
    min_support_exact_spectrum,
    phi,
    point_mass,
    spectrum,
    support_size,
    tensor,
    verify_classification,
)
from oracles import naive_min_support


class TestMinSupport:
    def test_small_band_witness(self):
        report = min_support(2, 1, 1)
        assert report.min_support == 2
        assert list(report.witness.values) == [1, 0, 0, -1]
        assert equivalent(report.witness, phi(2))

    def test_sharp_bound_examples(self):
        assert min_support(3, 2, 3).min_support == 4
        assert min_support(4, 1, 2).min_support == 4

    def test_matches_unpruned_all_subsets_oracle(self):
        for n in (1, 2, 3):
            for i in range(n + 1):
                for j in range(i, n + 1):
                    assert min_support(n, i, j).min_support == naive_min_support(n, i, j)

    def test_witness_is_normalized_and_in_band(self):
        report = min_support(4, 2, 2)
        w = report.witness
        assert support_size(w) == report.min_support
        ints = [v for v in w.values if v != 0]
        assert all(v.denominator == 1 for v in ints)
        assert ints[0] > 0
        assert spectrum(w).levels <= {2}

    def test_full_band_is_a_point_mass(self):
        report = min_support(3, 0, 3)
        assert report.min_support == 1
        assert list(report.witness.values) == [1, 0, 0, 0, 0, 0, 0, 0]

    def test_exhaustive_limit(self):
        with pytest.raises(ValueError):
            min_support(6, 2, 3)

    def test_parallel_scan_matches_sequential(self):
        seq = min_support(3, 1, 2)
        par = min_support(3, 1, 2, jobs=2)
        assert (seq.min_support, seq.witness.values) == (par.min_support, par.witness.values)


class TestExactSpectrum:
    def test_two_level_gap_on_the_cube(self):
        report = min_support_exact_spectrum(3, {0, 3})
        assert report.min_support == 4
        assert spectrum(report.witness).sorted_levels == (0, 3)
        assert support_size(report.witness) == 4

    def test_constant_level_forces_full_support(self):
        report = min_support_exact_spectrum(2, {0})
        assert report.min_support == 4
        assert spectrum(report.witness).sorted_levels == (0,)

    def test_all_levels_is_a_point_mass(self):
        report = min_support_exact_spectrum(2, {0, 1, 2})
        assert report.min_support == 1

    def test_twist_symmetric_queries_agree(self):
        # the parity twist carries spectrum {0,3} to {1,4} bijectively on H(4)
        c = min_support_exact_spectrum(4, {0, 3}).min_support
        d = min_support_exact_spectrum(4, {1, 4}).min_support
        assert c == d == 8

    def test_size_cap_reports_no_witness(self):
        report = min_support_exact_spectrum(3, {0, 3}, max_size=3)
        assert report.min_support is None
        assert report.witness is None
        assert "no witness" in report.notes[0]

    def test_validation(self):
        with pytest.raises(ValueError):
            min_support_exact_spectrum(3, set())
        with pytest.raises(ValueError):
            min_support_exact_spectrum(3, {4})


class TestCanonicalForm:
    def test_scaling_absorbed(self):
        f = tensor(phi(1), phi(2))
        for c in (Fraction(7), Fraction(-2, 3)):
            assert canonical_form(f.scale(c)).values == canonical_form(f).values

    def test_group_absorbed(self, rng):
        f = tensor(tensor(phi(1), phi(2)), point_mass(1))
        base = canonical_form(f)
        for _ in range(100):
            perm = list(range(4))
            rng.shuffle(perm)
            v = rng.randrange(16)
            c = Fraction(rng.choice([x for x in range(-5, 6) if x]), rng.randrange(1, 4))
            vals = [Fraction(0)] * 16
            for x in range(16):
                y = 0
                for bit in range(4):
                    if x >> bit & 1:
                        y |= 1 << perm[bit]
                vals[x] = c * f.values[y ^ v]
            assert canonical_form(make_function(4, vals)).values == base.values

    def test_idempotent(self):
        cf = canonical_form(tensor(phi(2), phi(2)))
        assert canonical_form(cf.to_function()).values == cf.values

    def test_distinct_blueprints_distinct_forms(self):
        a = canonical_form(build(Blueprint(LOWER, (), (2, 2), 0, 4)))
        b = canonical_form(build(Blueprint(LOWER, (1,), (2,), 1, 4)))
        assert a.values != b.values

    def test_rejects_zero_and_large_n(self):
        with pytest.raises(ValueError):
            canonical_form(make_function(1, [0, 0]))
        with pytest.raises(ValueError):
            canonical_form(point_mass(9))


class TestEquivalent:
    def test_scaled_coordinate_swap(self):
        f = phi(2)
        g = make_function(2, [-3, 0, 0, 3])
        assert equivalent(f, g)

    def test_sign_pattern_blocks_equivalence(self):
        # translation can move {00,11} onto {01,10} but flips one sign,
        # and scaling cannot repair 1,1 against 1,-1
        assert not equivalent(phi(2), make_function(2, [1, 0, 0, 1]))

    def test_factor_reordering(self):
        a = build(Blueprint(LOWER, (1,), (2,), 1, 4))
        b = tensor(tensor(point_mass(1), phi(2)), phi(1))
        assert equivalent(a, b)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            equivalent(phi(2), phi(3))


class TestVerifyClassification:
    def test_two_classes_for_the_four_band(self):
        report = verify_classification(4, 2, 3)
        assert report.ok
        assert len(report.classes_found) == 2
        assert all(idx is not None for _, idx in report.matched_blueprints)
        assert report.min_support == 4

    def test_three_classes_for_the_three_band(self):
        report = verify_classification(3, 0, 2)
        assert report.ok
        assert len(report.classes_found) == 3

    def test_point_mass_band(self):
        report = verify_classification(3, 0, 3)
        assert report.ok
        assert len(report.classes_found) == 1
        assert report.min_support == 1

    def test_kernel_dimension_reported_as_one(self):
        report = verify_classification(4, 1, 3)
        assert report.ok
        assert not any("kernel dimension" in note for note in report.notes)

    def test_extended_flag_gates_n5(self):
        with pytest.raises(ValueError):
            verify_classification(5, 3, 4)
        with pytest.raises(ValueError):
            verify_classification(6, 3, 4, extended=True)

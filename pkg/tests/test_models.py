"""Tests for the probability-model layer."""

import itertools
import json
import math

import numpy as np
import pytest

from zipfred.core.exceptions import InstanceTooLargeError, ValidationError
from zipfred.core.models import (
    DistinctBoundedClass,
    Distribution,
    EnvelopeClass,
    PermutationClass,
    Profile,
    TypeVector,
    ZipfClass,
    dump_class_description,
    expected_distinct,
    expected_distinct_poisson,
    load_class_description,
    parse_class_description,
    poisson_occupancy,
    poissonization_gap_holds,
    profile_of,
    random_dirichlet_distribution,
    sample_poisson_counts,
    sample_sequence,
    type_of,
    zipf_distribution,
    zipf_envelope_constant,
    zipf_normalizer,
)
from zipfred.core.utils import seeded_rng


@pytest.fixture
def skewed():
    """A small unsorted distribution with a tie."""
    return Distribution((0.2, 0.5, 0.2, 0.1))


class TestDistribution:
    """Test Distribution construction and views."""

    def test_sorted_view_breaks_ties_by_index(self, skewed):
        """Ties keep ascending original index."""
        assert skewed.sorted_probs == (0.5, 0.2, 0.2, 0.1)
        assert skewed.sort_order == (1, 0, 2, 3)

    def test_entropy(self):
        """Uniform over 8 symbols has 3 bits."""
        assert Distribution.uniform(8).entropy() == pytest.approx(3.0)
        assert Distribution((1.0, 0.0)).entropy() == 0.0

    def test_permuted(self, skewed):
        """Relabeling moves probabilities and rejects non-permutations."""
        assert skewed.permuted([1, 0, 2, 3]).probs == (0.5, 0.2, 0.2, 0.1)
        with pytest.raises(ValidationError):
            skewed.permuted([0, 0, 1, 2])

    @pytest.mark.parametrize("probs", [(), (0.5, 0.4), (1.2, -0.2), (0.5, float("inf"))])
    def test_invalid_vectors(self, probs):
        """Empty, unnormalized, negative and non-finite vectors fail."""
        with pytest.raises(ValidationError):
            Distribution(probs)

    def test_dict_round_trip(self, skewed):
        """Decimal-string serialization restores the exact floats."""
        assert Distribution.from_dict(skewed.to_dict()) == skewed

    def test_dirichlet_draw_is_valid(self):
        """Dirichlet draws are normalized and reproducible."""
        first = random_dirichlet_distribution(6, seeded_rng(3))
        second = random_dirichlet_distribution(6, seeded_rng(3))
        assert first == second
        assert math.fsum(first.probs) == pytest.approx(1.0, abs=1e-12)


class TestZipf:
    """Test the Zipf family."""

    def test_zipf_values(self):
        """zipf(2, 2) = (0.8, 0.2)."""
        assert zipf_distribution(2.0, 2).probs == pytest.approx((0.8, 0.2))

    def test_normalizer(self):
        """C_{k,alpha} approaches zeta(alpha)."""
        assert zipf_normalizer(2.0, 3) == pytest.approx(1 + 1 / 4 + 1 / 9)
        assert zipf_normalizer(2.0, 10**5) == pytest.approx(math.pi**2 / 6, rel=1e-4)

    @pytest.mark.parametrize("alpha", [1.0, 0.5, float("nan")])
    def test_alpha_must_exceed_one(self, alpha):
        """alpha <= 1 and non-finite powers are rejected."""
        with pytest.raises(ValidationError):
            ZipfClass(alpha, 10)

    def test_zipf_is_sorted(self):
        """The Zipf vector is already nonincreasing."""
        dist = ZipfClass(1.5, 20).distribution()
        assert dist.sorted_probs == dist.probs

    def test_envelope_constant(self):
        """zipf(alpha, k) sits exactly on the envelope c i^-alpha with c = 1/C."""
        alpha, k = 2.0, 16
        c = zipf_envelope_constant(alpha, k)
        env = EnvelopeClass.power_law(alpha, c, k)
        assert env.contains(zipf_distribution(alpha, k))
        tighter = EnvelopeClass.power_law(alpha, 0.99 * c, k)
        assert not tighter.contains(zipf_distribution(alpha, k))


class TestStatistics:
    """Test types, profiles and distinct-symbol statistics."""

    def test_type_of_banana(self):
        """banana over (a, b, n, x)."""
        t = type_of([2, 1, 3, 1, 3, 1], 4)
        assert t.mu == (3, 1, 2, 0)
        assert t.distinct_count == 3
        assert t.support == (0, 1, 2)
        assert t.positive_parts == (3, 1, 2)
        assert t.sorted_mu == (3, 2, 1, 0)

    def test_type_of_rejects_bad_input(self):
        """Empty sequences and out-of-range symbols fail."""
        with pytest.raises(ValidationError):
            type_of([], 3)
        with pytest.raises(ValidationError):
            type_of([1, 4], 3)

    def test_type_vector_sum(self):
        """Multiplicities must add up to n."""
        with pytest.raises(ValidationError):
            TypeVector((1, 1), 3)

    def test_profile(self):
        """Prevalences count symbols per multiplicity."""
        profile = profile_of(TypeVector((3, 1, 2, 1, 0), 7))
        assert profile.prevalences == {1: 2, 2: 1, 3: 1}
        assert profile.distinct_count == 4
        assert profile.prevalence(5) == 0
        with pytest.raises(ValidationError):
            Profile({1: 2}, 3)

    def test_expected_distinct(self):
        """Uniform over 2 with n = 2 expects 1.5 distinct symbols."""
        assert expected_distinct(Distribution.uniform(2), 2) == pytest.approx(1.5)
        assert expected_distinct(Distribution((1.0, 0.0)), 10) == pytest.approx(1.0)

    def test_poisson_occupancy(self):
        """Closed forms for lambda = 1 on two symbols."""
        occupancy = poisson_occupancy(Distribution.uniform(2), 2)
        assert occupancy.distinct == pytest.approx(2 * (1 - math.exp(-1)))
        assert occupancy.singletons == pytest.approx(2 * math.exp(-1))
        assert occupancy.doubletons == pytest.approx(math.exp(-1))
        assert expected_distinct_poisson(Distribution.uniform(2), 2) == occupancy.distinct

    @pytest.mark.parametrize("k", [2, 4, 8, 16, 32])
    @pytest.mark.parametrize("n", [2, 8])
    def test_poissonization_gap(self, k, n):
        """|d^poi - d| < 2 E[phi_2^poi] / n for uniform and Zipf sources."""
        assert poissonization_gap_holds(Distribution.uniform(k), n)
        assert poissonization_gap_holds(zipf_distribution(2.0, k), n)

    @pytest.mark.parametrize(
        "p",
        [Distribution.uniform(5), Distribution((0.7, 0.1, 0.1, 0.1)), zipf_distribution(2.0, 16)],
    )
    def test_expected_distinct_capped_and_nondecreasing(self, p):
        """d(p, n) <= min(n, k) and never drops as n grows."""
        values = [expected_distinct(p, n) for n in range(1, 41)]
        for n, value in enumerate(values, start=1):
            assert value <= min(n, p.k) + 1e-12
        assert all(later >= earlier - 1e-12 for earlier, later in zip(values, values[1:]))

    @pytest.mark.parametrize("relabel", list(itertools.permutations(range(1, 5))))
    def test_profile_ignores_relabeling(self, relabel):
        """Renaming the alphabet changes the type, never the profile."""
        sequence = [2, 1, 3, 1, 3, 1, 4]
        renamed = [relabel[s - 1] for s in sequence]
        assert profile_of(type_of(renamed, 4)) == profile_of(type_of(sequence, 4))


class TestSampling:
    """Test random sequence generation."""

    def test_sample_sequence_range(self):
        """Symbols are 1-based and within the alphabet."""
        seq = sample_sequence(Distribution.uniform(5), 1000, seeded_rng(1))
        assert seq.min() >= 1 and seq.max() <= 5
        assert len(seq) == 1000

    def test_point_mass(self):
        """A point mass always draws the same symbol."""
        seq = sample_sequence(Distribution((0.0, 1.0)), 50, seeded_rng(1))
        assert set(seq.tolist()) == {2}

    def test_poisson_counts_shape(self):
        """Counts come in rows of k with mean n p."""
        counts = sample_poisson_counts(Distribution.uniform(4), 8, seeded_rng(2), trials=20000)
        assert counts.shape == (20000, 4)
        assert counts.mean() == pytest.approx(2.0, rel=0.05)


class TestClasses:
    """Test envelope, permutation and distinct-bounded classes."""

    def test_envelope_validation(self):
        """Envelopes must be nonincreasing and nonnegative."""
        with pytest.raises(ValidationError):
            EnvelopeClass((0.1, 0.5))
        with pytest.raises(ValidationError):
            EnvelopeClass((0.5, -0.1))

    def test_empty_envelope(self):
        """An envelope with sum below one admits no distribution."""
        env = EnvelopeClass((0.3, 0.3, 0.3))
        assert env.is_empty()
        assert env.greedy_member() is None
        assert env.candidate_members() == []

    def test_envelope_from_distribution(self, skewed):
        """The sorted probabilities form the tightest envelope holding the distribution."""
        env = EnvelopeClass.from_distribution(skewed)
        assert env.envelope == skewed.sorted_probs
        assert env.contains(skewed)
        assert env.contains(Distribution((0.1, 0.2, 0.5, 0.2)))
        assert not env.contains(Distribution.uniform(4))

    def test_candidate_members(self):
        """2 zipf(2, 8) admits the point mass and the normalized envelope."""
        zipf8 = zipf_distribution(2.0, 8)
        env = EnvelopeClass(tuple(2.0 * p for p in zipf8.probs))
        candidates = env.candidate_members()
        assert candidates[0].probs[0] == 1.0
        assert any(c.is_close(zipf8) for c in candidates)
        assert not env.contains(Distribution.uniform(8))

    def test_permutation_members(self):
        """Distinct relabelings only."""
        assert len(PermutationClass(Distribution((0.5, 0.25, 0.25))).members()) == 3
        assert len(PermutationClass(Distribution.uniform(4)).members()) == 1
        assert len(PermutationClass(zipf_distribution(2.0, 4)).members()) == 24

    def test_permutation_guard(self):
        """Member lists stop at the enumeration guard."""
        with pytest.raises(InstanceTooLargeError):
            PermutationClass(zipf_distribution(2.0, 9)).members()

    def test_permutation_contains(self, skewed):
        """Membership ignores labels."""
        cls = PermutationClass(skewed)
        assert cls.contains(Distribution((0.1, 0.2, 0.2, 0.5)))
        assert not cls.contains(Distribution.uniform(4))

    @pytest.mark.parametrize("perm", list(itertools.permutations(range(4))))
    def test_permutation_contains_every_relabeling(self, skewed, perm):
        """Permuting a candidate's entries never changes membership."""
        cls = PermutationClass(skewed)
        assert cls.contains(skewed.permuted(perm))
        outsider = Distribution((0.4, 0.3, 0.2, 0.1))
        assert cls.contains(outsider.permuted(perm)) == cls.contains(outsider)

    def test_distinct_bounded_class(self):
        """Membership compares the expected distinct count with d_max."""
        cls = DistinctBoundedClass(d_max=1.6, k=2, n=2)
        assert cls.contains(Distribution.uniform(2))
        assert not DistinctBoundedClass(d_max=1.4, k=2, n=2).contains(Distribution.uniform(2))


class TestSerialization:
    """Test class-description files."""

    @pytest.mark.parametrize(
        "data, kind",
        [
            ({"kind": "zipf", "alpha": "2.0", "k": 8}, ZipfClass),
            ({"kind": "envelope", "alpha": "2.0", "c": "1.5", "k": 8}, EnvelopeClass),
            ({"kind": "envelope", "envelope": ["0.6", "0.5"]}, EnvelopeClass),
            ({"kind": "permutation", "probs": ["0.5", "0.3", "0.2"]}, PermutationClass),
            ({"kind": "explicit", "probs": ["0.5", "0.5"]}, Distribution),
        ],
    )
    def test_parse(self, data, kind):
        """Every kind parses into its class object."""
        assert isinstance(parse_class_description(data), kind)

    @pytest.mark.parametrize(
        "data",
        [
            {"kind": "gaussian"},
            {"kind": "zipf", "alpha": "2.0"},
            {"kind": "explicit", "probs": []},
            {"kind": "explicit", "probs": ["half", "half"]},
            {"kind": "envelope", "envelope": ["0.6", "0.5"], "k": 3},
            ["zipf"],
        ],
    )
    def test_parse_rejects(self, data):
        """Unknown kinds and malformed fields are validation errors."""
        with pytest.raises(ValidationError):
            parse_class_description(data)

    def test_file_round_trip(self, tmp_path):
        """dump then load restores the same class."""
        path = tmp_path / "class.json"
        original = PermutationClass(Distribution((0.7, 0.2, 0.1)))
        dump_class_description(original, path)
        assert json.loads(path.read_text())["kind"] == "permutation"
        assert load_class_description(path) == original

    def test_unreadable_file(self, tmp_path):
        """Missing or malformed files are validation errors."""
        with pytest.raises(ValidationError):
            load_class_description(tmp_path / "missing.json")
        (tmp_path / "bad.json").write_text("{")
        with pytest.raises(ValidationError):
            load_class_description(tmp_path / "bad.json")

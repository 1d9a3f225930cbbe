from __future__ import annotations

import math

import numpy as np
import pytest
from numpy.random import Generator, Philox

from waring.errors import ValidationError
from waring.montecarlo import (
    TrialStats,
    classify_asym222,
    classify_sym222,
    sample_asym222,
    sample_sym222,
    stats_to_csv,
    typical_rank_experiment,
)
from waring.tensor_core import DenseTensor, SymmetricTensor


def test_trial_consumes_its_own_uniform_block():
    """Trial t is a pure function of uniforms [4t, 4t+4) of the Philox stream."""
    raw = Generator(Philox(key=9)).random(40)
    for t in range(10):
        s = sample_sym222(9, t)
        u = raw[4 * t : 4 * t + 4]
        r0 = math.sqrt(-2.0 * math.log1p(-u[0]))
        r1 = math.sqrt(-2.0 * math.log1p(-u[2]))
        expected = [
            r0 * math.cos(2 * math.pi * u[1]),
            r0 * math.sin(2 * math.pi * u[1]),
            r1 * math.cos(2 * math.pi * u[3]),
            r1 * math.sin(2 * math.pi * u[3]),
        ]
        got = [s.coeffs.get(p, 0j).real for p in ((3, 0), (2, 1), (1, 2), (0, 3))]
        assert got == pytest.approx(expected, abs=1e-15)


def test_asym_trial_reshapes_row_major():
    raw = Generator(Philox(key=5)).random(16)
    t1 = sample_asym222(5, 1)
    u = raw[8:16]
    z = []
    for j in range(4):
        r = math.sqrt(-2.0 * math.log1p(-u[2 * j]))
        z.append(r * math.cos(2 * math.pi * u[2 * j + 1]))
        z.append(r * math.sin(2 * math.pi * u[2 * j + 1]))
    assert t1.array.ravel().real == pytest.approx(z, abs=1e-15)


def test_sampling_is_deterministic():
    a = sample_sym222(123, 7)
    b = sample_sym222(123, 7)
    assert a.coeffs == b.coeffs
    assert sample_sym222(124, 7).coeffs != a.coeffs


def test_classify_sym_known_cases():
    # 3 x1 x2^2 - x1^3 has conjugate pencil roots: real rank 3
    a = SymmetricTensor(3, 2, {(3, 0): -1.0, (1, 2): 1.0})
    assert classify_sym222(a) == "rank_3"
    # x1^3 + x2^3 splits over R
    b = SymmetricTensor(3, 2, {(3, 0): 1.0, (0, 3): 1.0})
    assert classify_sym222(b) == "rank_2"
    # a perfect cube is degenerate
    c = SymmetricTensor(3, 2, {(3, 0): 1.0})
    assert classify_sym222(c) == "degenerate"


def test_classify_asym_known_cases():
    rank2 = np.zeros((2, 2, 2))
    rank2[0, 0, 0] = 1.0
    rank2[1, 1, 1] = 1.0
    assert classify_asym222(DenseTensor(rank2)) == "rank_2"
    # slices (I, rotation): det(T0 + t T1) = 1 + t^2, conjugate roots
    rot = np.array([[[1.0, 0.0], [0.0, 1.0]], [[0.0, -1.0], [1.0, 0.0]]])
    assert classify_asym222(DenseTensor(rot)) == "rank_3"
    # the boundary tensor with all ones above the diagonal has a vanishing
    # discriminant: rank 3 but border rank 2, so the sign test cannot decide
    w = np.zeros((2, 2, 2))
    w[1, 0, 0] = w[0, 1, 0] = w[0, 0, 1] = 1.0
    assert classify_asym222(DenseTensor(w)) == "degenerate"
    assert classify_asym222(DenseTensor(np.zeros((2, 2, 2)))) == "degenerate"


def test_classify_validates_input():
    with pytest.raises(ValidationError):
        classify_sym222(SymmetricTensor(3, 2, {(3, 0): 1.0j}))
    with pytest.raises(ValidationError):
        classify_sym222(SymmetricTensor(4, 2, {(2, 2): 1.0}))
    with pytest.raises(ValidationError):
        classify_asym222(DenseTensor(np.zeros((2, 2))))


def test_experiment_counts_frozen_for_seed_42():
    s = typical_rank_experiment("sym222", 10000, 42)
    assert (s.rank2, s.rank3, s.degenerate) == (5142, 4858, 0)
    a = typical_rank_experiment("asym222", 10000, 42)
    assert (a.rank2, a.rank3, a.degenerate) == (7858, 2142, 0)


def test_experiment_is_worker_invariant():
    base = typical_rank_experiment("sym222", 5000, 7, workers=1)
    for workers in (2, 3, 8):
        again = typical_rank_experiment("sym222", 5000, 7, workers=workers)
        assert again == base
    base = typical_rank_experiment("asym222", 5000, 7, workers=1)
    assert typical_rank_experiment("asym222", 5000, 7, workers=5) == base


def test_experiment_counts_match_scalar_classification():
    stats = typical_rank_experiment("sym222", 200, 3)
    labels = [classify_sym222(sample_sym222(3, t)) for t in range(200)]
    assert stats.rank2 == labels.count("rank_2")
    assert stats.rank3 == labels.count("rank_3")
    assert stats.degenerate == labels.count("degenerate")

    stats = typical_rank_experiment("asym222", 200, 3)
    labels = [classify_asym222(sample_asym222(3, t)) for t in range(200)]
    assert stats.rank2 == labels.count("rank_2")
    assert stats.rank3 == labels.count("rank_3")


def test_counts_sum_to_samples():
    s = typical_rank_experiment("sym222", 30000, 1)
    assert s.rank2 + s.rank3 + s.degenerate == s.samples == 30000


def test_fractions_near_the_published_values():
    """Loose CLT bands at 3e4 samples; the tight bands run in the acceptance suite."""
    s = typical_rank_experiment("sym222", 30000, 2024)
    assert 0.49 <= s.fraction <= 0.55
    a = typical_rank_experiment("asym222", 30000, 2024)
    assert 0.76 <= a.fraction <= 0.81


def test_stderr_formula():
    s = TrialStats("sym222", 100, 0, rank2=60, rank3=40, degenerate=0)
    assert s.fraction == pytest.approx(0.6)
    assert s.stderr == pytest.approx(math.sqrt(0.6 * 0.4 / 100))
    empty = TrialStats("sym222", 5, 0, rank2=0, rank3=0, degenerate=5)
    assert math.isnan(empty.fraction) and math.isnan(empty.stderr)


def test_csv_format():
    s = TrialStats("asym222", 100, 9, rank2=75, rank3=25, degenerate=0)
    text = stats_to_csv(s)
    lines = text.splitlines()
    assert lines[0] == "case,samples,seed,rank2,rank3,degenerate,fraction,stderr"
    assert lines[1].startswith("asym222,100,9,75,25,0,0.75,")
    empty = TrialStats("sym222", 2, 0, rank2=0, rank3=0, degenerate=2)
    assert stats_to_csv(empty).splitlines()[1].endswith("nan,nan")


def test_experiment_validates_arguments():
    with pytest.raises(ValidationError):
        typical_rank_experiment("sym333", 10, 0)
    with pytest.raises(ValidationError):
        typical_rank_experiment("sym222", 0, 0)
    with pytest.raises(ValidationError):
        typical_rank_experiment("sym222", 10, -1)
    with pytest.raises(ValidationError):
        typical_rank_experiment("sym222", 10, 0, workers=0)


def test_more_workers_than_samples():
    base = typical_rank_experiment("sym222", 3, 11, workers=1)
    assert typical_rank_experiment("sym222", 3, 11, workers=10) == base

"""
Tests for congruence scaling and the Cauchy-Schwarz positivity sampler.
"""

import numpy as np
import pytest

from app.blocks.block import Block2x2, assemble, partition
from app.blocks.classify import classify
from app.blocks.positivity import cauchy_schwarz_witness, congruence_scale
from app.errors import DimensionMismatch, NonpositiveScale, NotPSDInput
from app.linalg.matrix import ComplexMatrix


def random_psd(rng, n):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return ComplexMatrix(g @ g.conj().T)


class TestCongruenceScale:
    def test_unit_scale_is_identity(self, ad_witness):
        scaled = congruence_scale(ad_witness, 1.0)
        assert np.array_equal(assemble(scaled).data, assemble(ad_witness).data)

    def test_worked_example(self):
        scaled = congruence_scale(Block2x2.scalar(2, 1, 1, 2), 4.0)
        m = assemble(scaled)
        assert m.allclose(ComplexMatrix([[8, 1], [1, 0.5]]), 1e-15)
        assert classify(m).positive

    @pytest.mark.parametrize("t", [0.0, -1.0, float("nan")])
    def test_nonpositive_scale(self, ad_witness, t):
        with pytest.raises(NonpositiveScale):
            congruence_scale(ad_witness, t)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_preserves_positivity(self, rng, n):
        for _ in range(10):
            b = partition(random_psd(rng, 2 * n))
            for t in (0.1, 0.5, 2.0, 10.0):
                assert classify(assemble(congruence_scale(b, t))).positive

    def test_preserves_accretive_dissipative(self, rng):
        for _ in range(10):
            m = ComplexMatrix(random_psd(rng, 4).data + 1j * random_psd(rng, 4).data)
            for t in (0.1, 10.0):
                assert classify(assemble(congruence_scale(partition(m), t))).accretive_dissipative

    @pytest.mark.slow
    def test_positivity_campaign(self):
        """200 PSD blocks, n in {1, 2, 3}, t in {0.1, 0.5, 2, 10}."""
        rng = np.random.default_rng(5)
        for k in range(200):
            b = partition(random_psd(rng, 2 * (1 + k % 3)))
            for t in (0.1, 0.5, 2.0, 10.0):
                assert classify(assemble(congruence_scale(b, t))).positive


class TestCauchySchwarzWitness:
    def test_identity_blocks(self):
        i2 = ComplexMatrix.identity(2)
        assert cauchy_schwarz_witness(i2, i2, i2, trials=500, seed=1) is None

    def test_finds_violation(self):
        a = ComplexMatrix.diag([1, 0])
        c = ComplexMatrix.diag([0, 1])
        record = cauchy_schwarz_witness(a, a, c, trials=1000, seed=7)
        assert record is not None
        assert record.slack < 0
        x, y = record.x, record.y
        lhs = abs(np.vdot(y, c.data @ x)) ** 2
        rhs = np.vdot(x, a.data @ x).real * np.vdot(y, a.data @ y).real
        assert lhs > rhs
        assert np.linalg.norm(x) == pytest.approx(1.0)
        assert np.linalg.norm(y) == pytest.approx(1.0)

    def test_zero_blocks(self):
        z = ComplexMatrix.zeros(2)
        assert cauchy_schwarz_witness(z, z, z, trials=100, seed=3) is None

    def test_deterministic(self):
        a = ComplexMatrix.diag([1, 0])
        c = ComplexMatrix.diag([0, 1])
        first = cauchy_schwarz_witness(a, a, c, trials=50, seed=9)
        second = cauchy_schwarz_witness(a, a, c, trials=50, seed=9)
        assert first.trial == second.trial
        assert np.array_equal(first.x, second.x)

    def test_rejects_indefinite_diagonal(self):
        with pytest.raises(NotPSDInput):
            cauchy_schwarz_witness(ComplexMatrix.diag([1, -1]), ComplexMatrix.identity(2), ComplexMatrix.zeros(2), 10, 0)
        with pytest.raises(NotPSDInput):
            cauchy_schwarz_witness(ComplexMatrix([[0, 1], [0, 0]]), ComplexMatrix.identity(2), ComplexMatrix.zeros(2), 10, 0)

    def test_rejects_incompatible_c(self):
        with pytest.raises(DimensionMismatch):
            cauchy_schwarz_witness(ComplexMatrix.identity(2), ComplexMatrix.identity(3), ComplexMatrix.zeros(2), 10, 0)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_positive_blocks_have_no_witness(self, rng, n):
        """[[T11, T12], [T21, T22]] >= O with C = T21 never violates the bound."""
        for k in range(10):
            b = partition(random_psd(rng, 2 * n))
            assert cauchy_schwarz_witness(b.t11, b.t22, b.t21, trials=1000, seed=k) is None

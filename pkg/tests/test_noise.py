import numpy as np
import pytest

from fuzzymm.errors import ConfigError, DimensionError
from fuzzymm.noise import NoiseSpec, corrupt, corrupt_batch, default_levels, derive_seed, parse_noise

IMG = np.random.default_rng(5).random((6, 9))
# Philox stream for seed 2024 at rho = 0.5, frozen
GOLDEN_SP = [0.0, 0.5, 0.0, 0.5, 0.5, 1.0, 0.5, 0.5, 1.0, 0.0, 0.5, 0.5]
FLAT = IMG.ravel()


class TestParsing:
    def test_parse(self):
        assert parse_noise("salt_pepper:0.05") == NoiseSpec("salt_pepper", 0.05)
        assert parse_noise("gaussian:0.01", seed=3).seed == 3
        assert parse_noise("motion:9").level == 9
        assert parse_noise("motion_blur:4").kind == "motion"

    @pytest.mark.parametrize("text", ["salt_pepper", "gaussian:abc", "speckle:0.1", "salt_pepper:0.6",
                                      "gaussian:-0.1", "motion:0", "motion:21", "motion:2.5"])
    def test_rejected(self, text):
        with pytest.raises(ConfigError):
            parse_noise(text)

    def test_grids(self):
        assert default_levels("salt_pepper") == [0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5]
        assert default_levels("motion") == list(range(1, 21))
        with pytest.raises(ConfigError):
            default_levels("rain")

    def test_seed_derivation(self):
        assert derive_seed(10, 3) == 10 ^ 3


class TestIdentities:
    def test_zero_probability(self):
        assert np.array_equal(corrupt(FLAT, NoiseSpec("salt_pepper", 0.0, 1)), FLAT)

    def test_zero_variance(self):
        assert np.array_equal(corrupt(FLAT, NoiseSpec("gaussian", 0.0, 1)), FLAT)

    def test_unit_blur(self):
        assert np.allclose(corrupt(FLAT, NoiseSpec("motion", 1), shape=IMG.shape), FLAT, atol=1e-15)


class TestStatistics:
    def test_salt_pepper_fraction(self):
        n = 20000
        out = corrupt(np.full(n, 0.5), NoiseSpec("salt_pepper", 0.5, seed=42))
        hit = np.isin(out, (0.0, 1.0)).mean()
        assert abs(hit - 0.5) <= 3 * np.sqrt(0.25 / n)
        # both polarities occur in equal measure
        assert abs((out == 1.0).mean() - 0.25) <= 3 * np.sqrt(0.25 * 0.75 / n)

    def test_gaussian_clamped_and_unbiased(self):
        n, var = 40000, 0.05
        out = corrupt(np.full(n, 0.5), NoiseSpec("gaussian", var, seed=9))
        assert out.min() >= 0 and out.max() <= 1
        assert abs(out.mean() - 0.5) < 3 * np.sqrt(var / n)

    def test_blur_preserves_constant_rows_and_mean(self):
        const = np.tile(np.linspace(0, 1, 6)[:, None], (1, 9))
        assert np.allclose(corrupt(const, NoiseSpec("motion", 5)), const)
        out = corrupt(FLAT, NoiseSpec("motion", 3), shape=IMG.shape).reshape(IMG.shape)
        # interior columns are plain running means of three neighbours
        assert np.allclose(out[:, 4], IMG[:, 3:6].mean(axis=1))

    def test_blur_is_horizontal_only(self):
        img = np.zeros((5, 5))
        img[2, 2] = 1.0
        out = corrupt(img, NoiseSpec("motion", 3))
        assert np.allclose(out[2, 1:4], 1 / 3) and out[[0, 1, 3, 4]].sum() == 0


class TestDeterminism:
    @pytest.mark.parametrize("spec", [NoiseSpec("salt_pepper", 0.2, 7), NoiseSpec("gaussian", 0.1, 7)])
    def test_same_seed_same_output(self, spec):
        assert np.array_equal(corrupt(FLAT, spec), corrupt(FLAT, spec))
        assert not np.array_equal(corrupt(FLAT, spec), corrupt(FLAT, spec.with_seed(8)))

    def test_batch_uses_per_row_seeds(self):
        X = np.vstack([FLAT, FLAT])
        out = corrupt_batch(X, NoiseSpec("salt_pepper", 0.3, 100))
        assert np.array_equal(out[0], corrupt(FLAT, NoiseSpec("salt_pepper", 0.3, 100 ^ 0)))
        assert np.array_equal(out[1], corrupt(FLAT, NoiseSpec("salt_pepper", 0.3, 100 ^ 1)))
        assert not np.array_equal(out[0], out[1])

    def test_golden_salt_pepper(self):
        # pins the generator stream so any change to sampling order is caught
        out = corrupt(np.full(12, 0.5), NoiseSpec("salt_pepper", 0.5, seed=2024))
        assert out.tolist() == GOLDEN_SP


class TestErrors:
    def test_blur_needs_geometry(self):
        with pytest.raises(ConfigError):
            corrupt(FLAT, NoiseSpec("motion", 3))

    def test_geometry_mismatch(self):
        with pytest.raises(DimensionError):
            corrupt(FLAT, NoiseSpec("motion", 3), shape=(5, 5))


"""
Testes unitários para as bases de features (Fourier, Nyström, linear).
"""
from unittest.mock import patch

import numpy as np
import pytest

from src.data.snapshots import SnapshotSet
from src.features import (FeatureFactory, FeatureMatrices, FourierBasis, LinearBasis,
                          NystromBasis, build_feature_matrices, kernel_convergence, load_basis,
                          nystrom_fit, nystrom_interpolate, rff_evaluate, rff_kernel_estimate,
                          save_basis)
from src.features.nystrom import NystromCheapBuilder, NystromPartialBuilder, sample_landmarks
from src.kernels import KernelFactory, KernelSpec
from src.utils.errors import NumericError, ValidationError


@pytest.fixture
def snapshots():
    rng = np.random.default_rng(0)
    return SnapshotSet.from_trajectory(rng.standard_normal((4, 61)), 1.0)


@pytest.fixture
def spread_snapshots():
    """Pontos bem separados: matriz de kernel bem condicionada para σ = 1."""
    rng = np.random.default_rng(1)
    return SnapshotSet.from_trajectory(rng.standard_normal((10, 201)), 1.0)


class TestFeatureMatrices:
    """Testes para o contêiner de features."""

    def test_shape_mismatch(self):
        """Ψ_X e Ψ_Y com formas diferentes são rejeitados."""
        with pytest.raises(ValidationError):
            FeatureMatrices(np.zeros((3, 2)), np.zeros((3, 3)))

    def test_non_finite(self):
        """Valores não finitos geram NumericError."""
        with pytest.raises(NumericError):
            FeatureMatrices(np.array([[np.nan]]), np.array([[1.0]]))

    def test_snapshots_for_rows(self, snapshots):
        """rows seleciona as colunas correspondentes do SnapshotSet."""
        psi = FeatureMatrices(np.zeros((2, 1)), np.zeros((2, 1)), rows=np.array([3, 7]))
        sub = psi.snapshots_for(snapshots)
        np.testing.assert_array_equal(sub.X, snapshots.X[:, [3, 7]])
        assert FeatureMatrices(np.zeros((2, 1)), np.zeros((2, 1))).snapshots_for(snapshots) is snapshots


class TestRandomFourierFeatures:
    """Testes para as features aleatórias de Fourier."""

    def test_shapes_and_unit_modulus(self, snapshots):
        """Ψ é M × K complexo com entradas de módulo 1."""
        psi, basis = build_feature_matrices("rff", snapshots, 16, KernelSpec("gaussian", 2.0), 0)
        assert psi.PsiX.shape == (snapshots.M, 16)
        assert np.iscomplexobj(psi.PsiX)
        np.testing.assert_allclose(np.abs(psi.PsiY), 1.0)
        assert isinstance(basis, FourierBasis) and basis.n_features == 16

    def test_evaluate_matches_feature_rows(self, snapshots):
        """evaluate em novos estados reproduz as linhas de Ψ_X."""
        psi, basis = build_feature_matrices("rff", snapshots, 8, KernelSpec("gaussian", 1.0), 3)
        np.testing.assert_allclose(basis.evaluate(snapshots.X[:, :5]), psi.PsiX[:5])

    def test_deterministic(self, snapshots):
        """Mesma semente → mesmas features."""
        spec = KernelSpec("cauchy", 1.0)
        a, _ = build_feature_matrices("rff", snapshots, 8, spec, 9)
        b, _ = build_feature_matrices("rff", snapshots, 8, spec, 9)
        np.testing.assert_array_equal(a.PsiX, b.PsiX)

    def test_inner_product_approximates_kernel(self):
        """(1/K) Ψ(x) Ψ(y)^H ≈ k(x, y) para K grande."""
        spec = KernelSpec("gaussian", 1.0)
        x, y = np.array([0.1, 0.2, 0.3]), np.array([0.4, -0.1, 0.0])
        basis = FourierBasis(np.random.default_rng(0).normal(0, 1, (20000, 3)), spec)
        exact = KernelFactory.get_kernel(spec).evaluate(x, y)
        assert rff_kernel_estimate(basis, x, y) == pytest.approx(exact, abs=0.02)
        gram = basis.evaluate(x) @ basis.evaluate(y).conj().T / basis.n_features
        assert gram[0, 0].real == pytest.approx(rff_kernel_estimate(basis, x, y), abs=1e-12)

    def test_invalid_arguments(self, snapshots):
        """K = 0 ou kernel ausente são rejeitados."""
        with pytest.raises(ValidationError):
            build_feature_matrices("rff", snapshots, 0, KernelSpec("gaussian", 1.0), 0)
        with pytest.raises(ValidationError):
            build_feature_matrices("rff", snapshots, 4, None, 0)

    def test_extended(self):
        """extended acrescenta frequências mantendo as anteriores."""
        basis = FourierBasis(np.ones((3, 2)), KernelSpec("gaussian", 1.0), 5)
        ext = basis.extended(np.zeros((2, 2)))
        assert ext.n_features == 5 and ext.seed == 5
        np.testing.assert_array_equal(ext.Z[:3], basis.Z)

    def test_evaluate_origin_and_reflection(self):
        """ψ(0) = 1 e ψ(−x) é o conjugado de ψ(x)."""
        Z = np.random.default_rng(2).normal(0, 1, (12, 3))
        basis = FourierBasis(Z, KernelSpec("gaussian", 1.0))
        np.testing.assert_allclose(rff_evaluate(basis, np.zeros(3)), 1.0)
        x = np.array([[0.3], [-1.2], [2.5]])
        np.testing.assert_allclose(rff_evaluate(basis, -x), np.conj(rff_evaluate(basis, x)),
                                   rtol=1e-14, atol=1e-14)

    def test_gram_consistent_with_kernel_estimates(self, snapshots):
        """G / K coincide com as estimativas de Monte Carlo do kernel entre snapshots."""
        data = snapshots.subset(np.arange(50))
        psi, basis = build_feature_matrices("rff", data, 200, KernelSpec("gaussian", 2.0), 4)
        G = psi.PsiX.conj().T @ psi.PsiX
        i, j = 3, 41
        gram = psi.PsiX[i] @ psi.PsiX[j].conj() / basis.n_features
        expected = np.mean(np.exp(1j * (basis.Z @ (data.X[:, i] - data.X[:, j]))))
        assert gram == pytest.approx(expected, abs=1e-12)
        np.testing.assert_allclose(np.diag(G).real, data.M)

    def test_discarded_imaginary_part_reported(self):
        """Parte imaginária acima de 1e−12 é descartada com aviso; pares ±z não avisam."""
        spec = KernelSpec("gaussian", 1.0)
        x, y = np.array([0.5]), np.array([0.0])
        single = FourierBasis(np.array([[1.0]]), spec)
        with patch("src.features.fourier.logger") as logger:
            assert rff_kernel_estimate(single, x, y) == pytest.approx(np.cos(0.5))
            logger.warning.assert_called_once()
        with patch("src.features.fourier.logger") as logger:
            paired = FourierBasis(np.array([[1.0], [-1.0]]), spec)
            assert rff_kernel_estimate(paired, x, y) == pytest.approx(np.cos(0.5))
            logger.warning.assert_not_called()

    def test_convergence_reports_once_per_k(self):
        """kernel_convergence agrega o aviso de parte imaginária por K."""
        with patch("src.features.fourier.logger") as logger:
            results = kernel_convergence(KernelSpec("gaussian", 1.0), [4, 8], 20, 3, 0)
        assert [K for K, _ in results] == [4, 8]
        assert logger.warning.call_count == 2


class TestNystrom:
    """Testes para as autofunções empíricas de Nyström."""

    def test_full_sampling_reconstructs_kernel_matrix(self, spread_snapshots):
        """Com K = M, U Λ U^T reproduz a matriz de kernel dos landmarks."""
        spec = KernelSpec("gaussian", 1.0)
        L = spread_snapshots.X
        basis = nystrom_fit(L, spec)
        Mk = KernelFactory.get_kernel(spec).matrix(L.T, L.T)

        assert basis.rank == basis.K == 200
        recon = (basis.U * basis.Lambda) @ basis.U.T
        assert np.max(np.abs(recon - Mk)) < 1e-10

    def test_interpolation_at_landmarks(self, spread_snapshots):
        """Interpolar nos landmarks coincide com √K U."""
        basis = nystrom_fit(spread_snapshots.X, KernelSpec("gaussian", 1.0))
        interp = nystrom_interpolate(basis, basis.landmarks)
        assert np.max(np.abs(interp - basis.landmark_values())) < 1e-10

    def test_eigenvalues_descending(self, snapshots):
        """Autovalores em ordem decrescente, normalizados por K."""
        basis = nystrom_fit(snapshots.X[:, :20], KernelSpec("gaussian", 2.0))
        assert np.all(np.diff(basis.Lambda) <= 0)
        np.testing.assert_allclose(basis.eigenvalues, basis.Lambda[:basis.rank] / 20)

    def test_duplicate_landmarks_truncated(self):
        """Landmarks repetidos reduzem o posto retido."""
        L = np.array([[0.0, 0.0, 1.0], [0.0, 0.0, 2.0]])
        basis = nystrom_fit(L, KernelSpec("gaussian", 1.0))
        assert basis.rank == 2
        assert nystrom_interpolate(basis, L).shape == (3, 2)

    def test_expensive_variant(self, spread_snapshots):
        """Variante cara: M linhas e valores nos landmarks iguais a √K U."""
        psi, basis = build_feature_matrices("nystrom-expensive", spread_snapshots, 50,
                                            KernelSpec("gaussian", 1.0), 4)
        assert psi.M == spread_snapshots.M and psi.rows is None
        assert isinstance(basis, NystromBasis)
        np.testing.assert_allclose(psi.PsiX[basis.landmark_index], basis.landmark_values(),
                                   atol=1e-8)

    def test_cheap_variant(self, snapshots):
        """Variante barata: M efetivo = K e Ψ_X = √K U."""
        psi, basis = NystromCheapBuilder().build(snapshots, 12, KernelSpec("gaussian", 2.0), 1)
        assert psi.M == 12
        np.testing.assert_array_equal(psi.rows, basis.landmark_index)
        np.testing.assert_array_equal(psi.PsiX, basis.landmark_values())

    def test_partial_variant_extremes(self, spread_snapshots):
        """n_interp = K repete as linhas da variante barata; n_interp = M usa todas."""
        spec = KernelSpec("gaussian", 1.0)
        cheap, _ = NystromCheapBuilder().build(spread_snapshots, 30, spec, 2)
        low, _ = NystromPartialBuilder(30).build(spread_snapshots, 30, spec, 2)
        full, _ = NystromPartialBuilder(spread_snapshots.M).build(spread_snapshots, 30, spec, 2)

        np.testing.assert_array_equal(low.rows, cheap.rows)
        np.testing.assert_allclose(low.PsiX, cheap.PsiX, atol=1e-8)
        np.testing.assert_array_equal(full.rows, np.arange(spread_snapshots.M))

    def test_partial_variant_rows_contain_landmarks(self, snapshots):
        """Linhas interpoladas incluem todos os landmarks."""
        psi, basis = NystromPartialBuilder(25).build(snapshots, 10, KernelSpec("gaussian", 2.0), 0)
        assert psi.M == 25
        assert set(basis.landmark_index.tolist()) <= set(psi.rows.tolist())

    def test_invalid_sizes(self, snapshots):
        """K > M e n_interp fora de [K, M] são rejeitados."""
        spec = KernelSpec("gaussian", 1.0)
        with pytest.raises(ValidationError):
            build_feature_matrices("nystrom_cheap", snapshots, snapshots.M + 1, spec, 0)
        with pytest.raises(ValidationError):
            NystromPartialBuilder(5).build(snapshots, 10, spec, 0)
        with pytest.raises(ValidationError):
            sample_landmarks(5, 0, 0)

    def test_interpolation_vanishes_far_from_landmarks(self, spread_snapshots):
        """Longe de todos os landmarks as autofunções interpoladas se anulam."""
        basis = nystrom_fit(spread_snapshots.X[:, :40], KernelSpec("gaussian", 1.0))
        far = np.full((basis.d, 3), 50.0)
        assert np.max(np.linalg.norm(nystrom_interpolate(basis, far), axis=1)) < 1e-6

    def test_interpolation_matches_extended_precision(self, spread_snapshots):
        """Interpolação em float64 concorda com a soma em precisão estendida."""
        sigma = 1.0
        basis = nystrom_fit(spread_snapshots.X[:, :40], KernelSpec("gaussian", sigma))
        S = spread_snapshots.X[:, 100:110]
        L = basis.landmarks.astype(np.longdouble)
        diff = S.astype(np.longdouble)[:, :, None] - L[:, None, :]
        k = np.exp(-np.sum(diff * diff, axis=0) / (2 * sigma ** 2))
        r = basis.rank
        weights = (basis.U[:, :r].astype(np.longdouble) * np.sqrt(np.longdouble(basis.K))
                   / basis.Lambda[:r].astype(np.longdouble))
        oracle = k @ weights
        interp = nystrom_interpolate(basis, S)
        scale = max(1.0, float(np.max(np.abs(oracle))))
        assert float(np.max(np.abs(interp - oracle))) < 1e-12 * scale


class TestLinearAndFactory:
    """Testes para a base linear e a fábrica de construtores."""

    def test_linear_features(self, snapshots):
        """Base linear: Ψ_X = X^T."""
        psi, basis = build_feature_matrices("linear", snapshots, 0, None, 0)
        np.testing.assert_array_equal(psi.PsiX, snapshots.X.T)
        assert basis.n_features == snapshots.d

    def test_factory_names(self):
        """Nomes com hífen são normalizados; desconhecidos são rejeitados."""
        assert isinstance(FeatureFactory.get_builder("nystrom-cheap"), NystromCheapBuilder)
        assert "nystrom_partial" in FeatureFactory.methods()
        with pytest.raises(ValidationError):
            FeatureFactory.get_builder("kdmd")
        with pytest.raises(ValidationError):
            FeatureFactory.get_builder("nystrom_partial")


class TestPersistence:
    """Testes para gravação e leitura de bases."""

    def test_fourier(self, tmp_path, snapshots):
        """Base de Fourier recarregada avalia igual."""
        _, basis = build_feature_matrices("rff", snapshots, 6, KernelSpec("laplacian", 1.5), 2)
        save_basis(basis, tmp_path, seed=2)
        loaded = load_basis(tmp_path)
        assert loaded.kernel == basis.kernel and loaded.seed == 2
        np.testing.assert_array_equal(loaded.evaluate(snapshots.X), basis.evaluate(snapshots.X))

    def test_nystrom(self, tmp_path, snapshots):
        """Base de Nyström recarregada avalia igual."""
        _, basis = build_feature_matrices("nystrom_expensive", snapshots, 10,
                                          KernelSpec("gaussian", 2.0), 7)
        save_basis(basis, tmp_path)
        loaded = load_basis(tmp_path)
        assert loaded.rank == basis.rank
        np.testing.assert_array_equal(loaded.landmark_index, basis.landmark_index)
        np.testing.assert_array_equal(loaded.evaluate(snapshots.Y), basis.evaluate(snapshots.Y))

    def test_linear(self, tmp_path):
        """Base linear guarda apenas d."""
        save_basis(LinearBasis(3), tmp_path)
        assert load_basis(tmp_path) == LinearBasis(3)

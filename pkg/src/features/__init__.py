# Package de features
from .base import Basis, FeatureBuilder, FeatureMatrices
from .factory import FeatureFactory, build_feature_matrices
from .fourier import FourierBasis, kernel_convergence, rff_evaluate, rff_kernel_estimate
from .linear import LinearBasis
from .nystrom import NystromBasis, nystrom_fit, nystrom_interpolate
from .persistence import load_basis, save_basis

__all__ = [
    "Basis", "FeatureBuilder", "FeatureFactory", "FeatureMatrices", "FourierBasis",
    "LinearBasis", "NystromBasis", "build_feature_matrices", "kernel_convergence",
    "load_basis", "nystrom_fit", "nystrom_interpolate", "rff_evaluate",
    "rff_kernel_estimate", "save_basis",
]

# Package edmd: matriz de Koopman, espectro e DMD
from .compare import leading_eigenvalue_error, mode_similarity
from .dmd import dmd
from .export import export_decomposition, read_eigenvalues
from .gram import GramPair, build_gram
from .koopman import koopman_matrix
from .linalg import DEFAULT_RCOND, hermitian_pinv, penrose_residuals
from .spectrum import (KoopmanDecomposition, eigenfunction_residuals, eigenfunctions, predict,
                       spectrum)

__all__ = [
    "DEFAULT_RCOND", "GramPair", "KoopmanDecomposition", "build_gram", "dmd",
    "eigenfunction_residuals", "eigenfunctions", "export_decomposition", "hermitian_pinv",
    "koopman_matrix", "leading_eigenvalue_error", "mode_similarity", "penrose_residuals",
    "predict", "read_eigenvalues", "spectrum",
]

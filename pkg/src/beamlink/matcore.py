"""Dense complex linear algebra kernel.

Matrices are plain 2-D complex128 numpy arrays (row major). This module
holds the small set of validated operations the rest of the package is
built on, plus the numerical tolerances used package-wide. All functions
are pure; returned factor matrices are fresh arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalFailureError, RejectedInputError

# Package-wide numerical tolerances (double precision, O(1) entries).
SVD_RECONSTRUCTION_TOL = 1e-10
UNITARITY_TOL = 1e-10
EFFECTIVE_CHANNEL_TOL = 1e-9
EQUAL_DIAGONAL_RTOL = 1e-9
SINGULAR_PRODUCT_RTOL = 1e-8
RANK_TOL = 1e-12
GIVENS_UNIT_TOL = 1e-12

ComplexMatrix = np.ndarray


def as_matrix(entries) -> ComplexMatrix:
    """Validate and return a 2-D complex128 matrix (rows, cols >= 1, finite)."""
    a = np.asarray(entries, dtype=np.complex128)
    if a.ndim != 2:
        raise RejectedInputError(f"expected a 2-D matrix, got ndim={a.ndim}")
    if a.shape[0] < 1 or a.shape[1] < 1:
        raise RejectedInputError(f"matrix dimensions must be >= 1, got {a.shape}")
    if not np.all(np.isfinite(a.view(np.float64))):
        raise RejectedInputError("matrix entries must be finite")
    return a


def matmul(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Complex matrix product with explicit dimension checking."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise RejectedInputError(
            f"inner dimensions do not match: {a.shape} x {b.shape}"
        )
    return a @ b


def conj_transpose(a: ComplexMatrix) -> ComplexMatrix:
    """Conjugate (Hermitian) transpose."""
    a = as_matrix(a)
    return a.conj().T.copy()


def svd(a: ComplexMatrix) -> tuple[ComplexMatrix, np.ndarray, ComplexMatrix]:
    """Full singular value decomposition a = u @ diag(deltas) @ v*.

    Returns (u, deltas, v) where u is N x N unitary, v is M x M unitary and
    deltas holds the min(N, M) singular values in non-increasing order.
    v holds right singular vectors as columns (not the conjugate transpose).

    Raises NumericalFailureError if the underlying iteration does not
    converge rather than returning garbage factors.
    """
    a = as_matrix(a)
    n, m = a.shape
    if not np.any(a):
        # All-zero input: simplest valid factorization.
        return np.eye(n, dtype=np.complex128), np.zeros(min(n, m)), np.eye(m, dtype=np.complex128)
    try:
        u, deltas, vh = np.linalg.svd(a, full_matrices=True)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailureError(f"SVD did not converge: {exc}") from exc
    if not (np.all(np.isfinite(deltas)) and np.all(np.isfinite(u.view(np.float64)))):
        raise NumericalFailureError("SVD produced non-finite factors")
    return u, deltas, vh.conj().T.copy()


@dataclass(frozen=True)
class GivensRotation:
    """Plane rotation acting on rows i and j: real cosine c, complex sine s.

    Applied to a vector x it maps
        x[i] -> c * x[i] + s * x[j]
        x[j] -> -conj(s) * x[i] + c * x[j]
    """

    i: int
    j: int
    c: float
    s: complex

    def __post_init__(self):
        if self.i == self.j:
            raise RejectedInputError("rotation indices must differ")
        unit = self.c * self.c + abs(self.s) ** 2
        if abs(unit - 1.0) > GIVENS_UNIT_TOL:
            raise RejectedInputError(f"|c|^2 + |s|^2 = {unit!r} is not 1")

    def apply(self, x: np.ndarray) -> np.ndarray:
        """Return a copy of vector x with the rotation applied to rows i, j."""
        out = np.array(x, dtype=np.complex128, copy=True)
        xi, xj = out[self.i], out[self.j]
        out[self.i] = self.c * xi + self.s * xj
        out[self.j] = -np.conj(self.s) * xi + self.c * xj
        return out


def givens_zeroing(a: complex, b: complex) -> GivensRotation:
    """Rotation parameters (c, s) mapping the pair (a, b) to (r, 0).

    |r| = sqrt(|a|^2 + |b|^2). If both inputs are zero the identity
    rotation is returned.
    """
    mag = np.hypot(abs(a), abs(b))
    if mag == 0.0:
        return GivensRotation(0, 1, 1.0, 0.0 + 0.0j)
    if a == 0:
        return GivensRotation(0, 1, 0.0, complex(np.conj(b) / abs(b)))
    c = abs(a) / mag
    s = (a / abs(a)) * np.conj(b) / mag
    return GivensRotation(0, 1, float(c), complex(s))


def unitarity_defect(a: ComplexMatrix) -> float:
    """Frobenius norm of a* a - I for a square matrix."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise RejectedInputError(f"unitarity defect needs a square matrix, got {a.shape}")
    gram = a.conj().T @ a
    return float(np.linalg.norm(gram - np.eye(a.shape[0])))

"""Unitary group elements (SU(n)) used by conjugation and the group solver."""
from dataclasses import dataclass

import numpy as np

from .errors import NotUnitary

UNITARY_TOL = 1e-10
DET_TOL = 1e-10


@dataclass(frozen=True)
class GroupElement:
    """An element of SU(n): unitary with determinant 1 (within tolerance)."""

    matrix: np.ndarray
    group: str = "SU"

    def __post_init__(self):
        M = np.ascontiguousarray(np.asarray(self.matrix, dtype=np.complex128))
        object.__setattr__(self, "matrix", M)
        n = M.shape[0]
        if M.ndim != 2 or M.shape[1] != n:
            raise ValueError("group element must be a square matrix")
        if np.linalg.norm(M.conj().T @ M - np.eye(n)) > UNITARY_TOL * n:
            raise NotUnitary("matrix is not unitary within tolerance")
        if abs(np.linalg.det(M) - 1.0) > DET_TOL * n:
            raise NotUnitary("determinant is not 1 within tolerance")

    @property
    def n(self):
        return self.matrix.shape[0]

    def inverse(self):
        return GroupElement(self.matrix.conj().T, self.group)

    def __matmul__(self, other):
        return GroupElement(self.matrix @ other.matrix, self.group)

    def dist_to_identity(self):
        return float(np.linalg.norm(self.matrix - np.eye(self.n)))


def identity(n):
    return GroupElement(np.eye(n, dtype=np.complex128))


def det_normalize(M):
    """Divide a unitary matrix by the principal n-th root of its determinant."""
    M = np.asarray(M, dtype=np.complex128)
    n = M.shape[0]
    d = np.linalg.det(M)
    return M * np.exp(-np.log(d) / n)

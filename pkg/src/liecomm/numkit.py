"""Dense complex linear algebra and matrix functions.

Matrices are plain ``numpy.ndarray`` values with dtype complex128. The
Hermitian eigensolver is a cyclic Jacobi iteration (self-contained, high
relative accuracy at the sizes used here, n <= ~64); the exponential is
scaling-and-squaring with a fixed-order Taylor kernel; the principal
logarithm of a unitary matrix is eigen-based, reduced to a Hermitian
problem through the Cayley transform. All tolerances below are module
constants and can be overridden per call.
"""
import numpy as np

from . import _kernels as kernels
from .errors import NoConvergence, NotHermitian, NotUnitary, OutsideInjectivityDomain

HERM_PRE_TOL = 1e-10       # default hermiticity precondition tolerance
UNITARY_PRE_TOL = 1e-10    # default unitarity precondition tolerance
LOG_MARGIN_DEFAULT = 1e-6  # default principal-branch phase margin
LSTSQ_RCOND_DEFAULT = 1e-12


def as_cmatrix(A):
    """Coerce to a square complex128 matrix (C order)."""
    M = np.asarray(A, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    return np.ascontiguousarray(M)


def frob(A):
    """Frobenius norm sqrt(sum |entry|^2)."""
    return float(np.linalg.norm(A))


def herm_eig(H, tol=HERM_PRE_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(w, U)`` with eigenvalues ``w`` sorted descending (ties keep
    the input ordering of the invariant subspace basis) and unitary ``U``
    such that ``U @ diag(w) @ U.conj().T`` reconstructs ``H``.

    Raises :class:`NotHermitian` if ``|H - H*| > tol |H|`` and
    :class:`NoConvergence` if the sweep budget is exhausted.
    """
    H = as_cmatrix(H)
    nrm = frob(H)
    if frob(H - H.conj().T) > tol * max(nrm, 1e-300):
        raise NotHermitian(f"matrix is not Hermitian within {tol:g}")
    A = (H + H.conj().T) / 2.0
    w, V, converged = kernels.jacobi_eigh(A)
    if not converged:
        raise NoConvergence("Jacobi sweeps exhausted", residual=frob(
            V @ np.diag(w) @ V.conj().T - A))
    order = np.argsort(-w, kind="stable")
    return w[order].copy(), np.ascontiguousarray(V[:, order])


def mexp(X):
    """Matrix exponential (scaling and squaring, fixed-order Taylor)."""
    return kernels.expm_ss(as_cmatrix(X))


def mlog_principal(Z, margin=LOG_MARGIN_DEFAULT, unitary_tol=UNITARY_PRE_TOL):
    """Principal logarithm of a unitary matrix.

    Eigen-based: the Cayley transform ``i (I - Z)(I + Z)^-1`` is Hermitian
    with eigenvalues ``tan(theta/2)`` and the same eigenvectors as ``Z``,
    which turns phase extraction into a well-separated Hermitian problem.
    The result is skew-Hermitian with eigenvalues ``i theta``,
    ``theta in (-pi + margin, pi - margin)``.

    Raises :class:`OutsideInjectivityDomain` when an eigenphase violates
    the margin and :class:`NotUnitary` on bad input.
    """
    if margin <= 0:
        raise ValueError("margin must be positive")
    Z = as_cmatrix(Z)
    n = Z.shape[0]
    if frob(Z.conj().T @ Z - np.eye(n)) > unitary_tol * max(1.0, float(n)):
        raise NotUnitary(f"matrix is not unitary within {unitary_tol:g}")
    A = np.eye(n) + Z
    C, ok = kernels.solve_complex(A, np.eye(n) - Z)
    if not ok:
        # I + Z singular: some eigenvalue is exactly -1
        raise OutsideInjectivityDomain("eigenvalue at -1 (phase pi)")
    H = 1j * C
    H = (H + H.conj().T) / 2.0
    w, V, converged = kernels.jacobi_eigh(H)
    if not converged:
        raise NoConvergence("Jacobi sweeps exhausted in mlog")
    theta = 2.0 * np.arctan(w)
    if np.max(np.abs(theta)) > np.pi - margin:
        raise OutsideInjectivityDomain(
            f"eigenphase {np.max(np.abs(theta)):.6g} outside "
            f"(-pi + {margin:g}, pi - {margin:g})")
    L = (V * (1j * theta)) @ V.conj().T
    return (L - L.conj().T) / 2.0


def lstsq_min_norm(J, r, rcond=LSTSQ_RCOND_DEFAULT):
    """Minimum-Euclidean-norm solution of the underdetermined system J s = r.

    ``J`` must have at least as many columns as rows; singular values below
    ``rcond * sigma_max`` are truncated, so rank deficiency is not an error.
    """
    J = np.asarray(J, dtype=np.float64)
    r = np.asarray(r, dtype=np.float64)
    if J.ndim != 2:
        raise ValueError("J must be a matrix")
    if r.shape != (J.shape[0],):
        raise ValueError(f"shape mismatch: J is {J.shape}, r is {r.shape}")
    if J.shape[1] < J.shape[0]:
        raise ValueError("J must have at least as many columns as rows")
    s, *_ = np.linalg.lstsq(J, r, rcond=rcond)
    return s

"""Pure numpy implementations of the hot numerical kernels.

Same algorithms as the compiled extension in ``_core.pyx``; used as the
fallback when the extension is not built (or when forced via the
``LIECOMM_KERNELS=pure`` environment variable).
"""
import numpy as np

_EXPM_THETA = 0.5       # scale target for the Taylor kernel
_EXPM_ORDER = 18        # truncation order; tail < 1e-22 at theta = 0.5
_JACOBI_MAX_SWEEPS = 60
_JACOBI_OFF_TOL = 1e-14  # relative off-diagonal mass at which a sweep stops


def jacobi_eigh(H):
    """Cyclic Jacobi eigendecomposition of a Hermitian matrix.

    Returns ``(w, V, converged)`` with real eigenvalues ``w`` (unsorted),
    unitary ``V`` whose columns are eigenvectors, and a convergence flag.
    """
    A = np.array(H, dtype=np.complex128)
    n = A.shape[0]
    V = np.eye(n, dtype=np.complex128)
    if n < 2:
        return A.real.diagonal().copy(), V, True

    scale = np.linalg.norm(A)
    if scale == 0.0:
        return np.zeros(n), V, True
    stop = _JACOBI_OFF_TOL * scale
    offmask = ~np.eye(n, dtype=bool)

    converged = False
    for _ in range(_JACOBI_MAX_SWEEPS):
        off = np.linalg.norm(A[offmask])
        if off <= stop:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                absa = abs(apq)
                if absa <= 1e-300:
                    continue
                phi = apq / absa
                tau = (A[q, q].real - A[p, p].real) / (2.0 * absa)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # G = [[c, s], [-conj(phi) s, conj(phi) c]] on (p, q)
                rp = c * A[p, :] - phi * s * A[q, :]
                rq = s * A[p, :] + phi * c * A[q, :]
                A[p, :] = rp
                A[q, :] = rq
                cp = c * A[:, p] - np.conj(phi) * s * A[:, q]
                cq = s * A[:, p] + np.conj(phi) * c * A[:, q]
                A[:, p] = cp
                A[:, q] = cq
                A[p, q] = 0.0
                A[q, p] = 0.0
                vp = c * V[:, p] - np.conj(phi) * s * V[:, q]
                vq = s * V[:, p] + np.conj(phi) * c * V[:, q]
                V[:, p] = vp
                V[:, q] = vq
    else:
        converged = np.linalg.norm(A[offmask]) <= stop

    return A.diagonal().real.copy(), V, converged


def expm_ss(X):
    """Matrix exponential by scaling and squaring with a Taylor kernel."""
    A = np.array(X, dtype=np.complex128)
    n = A.shape[0]
    nrm = np.linalg.norm(A)
    s = 0
    if nrm > _EXPM_THETA:
        s = int(np.ceil(np.log2(nrm / _EXPM_THETA)))
    B = A / (2.0 ** s)
    E = np.eye(n, dtype=np.complex128)
    for k in range(_EXPM_ORDER, 0, -1):
        E = np.eye(n, dtype=np.complex128) + (B @ E) / k
    for _ in range(s):
        E = E @ E
    return E


def solve_complex(A, B):
    """Solve A X = B for square complex A (Gauss elimination, partial pivot).

    Returns ``(X, ok)``; ``ok`` is False when a pivot underflows.
    """
    M = np.array(A, dtype=np.complex128)
    X = np.array(B, dtype=np.complex128)
    if X.ndim == 1:
        X = X[:, None]
    n = M.shape[0]
    for col in range(n):
        piv = col + int(np.argmax(np.abs(M[col:, col])))
        if abs(M[piv, col]) < 1e-300:
            return X, False
        if piv != col:
            M[[col, piv], :] = M[[piv, col], :]
            X[[col, piv], :] = X[[piv, col], :]
        inv = 1.0 / M[col, col]
        for r in range(col + 1, n):
            f = M[r, col] * inv
            if f != 0.0:
                M[r, col:] -= f * M[col, col:]
                X[r, :] -= f * X[col, :]
    for col in range(n - 1, -1, -1):
        X[col, :] /= M[col, col]
        for r in range(col):
            X[r, :] -= M[r, col] * X[col, :]
    return X, True

# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twins of the kernels in ``_pure``: cyclic Jacobi eigensolver for
Hermitian matrices, scaling-and-squaring matrix exponential, and a small
complex linear solver."""
import numpy as np

from libc.math cimport sqrt, ceil, log2

ctypedef double complex cplx

DEF EXPM_THETA = 0.5
DEF EXPM_ORDER = 18
DEF JACOBI_MAX_SWEEPS = 60
DEF JACOBI_OFF_TOL = 1e-14


cdef inline double _cabs2(cplx z):
    return z.real * z.real + z.imag * z.imag


def jacobi_eigh(H):
    """Cyclic Jacobi eigendecomposition; returns ``(w, V, converged)``."""
    A_arr = np.array(H, dtype=np.complex128, order="C")
    cdef Py_ssize_t n = A_arr.shape[0]
    V_arr = np.eye(n, dtype=np.complex128)
    cdef cplx[:, :] A = A_arr
    cdef cplx[:, :] V = V_arr
    cdef Py_ssize_t p, q, i, sweep
    cdef double absa, tau, t, c, scale2, off2, stop2
    cdef cplx apq, phi, phic, rp, rq
    cdef bint converged = False

    if n < 2:
        return np.real(np.diag(A_arr)).copy(), V_arr, True

    scale2 = 0.0
    for p in range(n):
        for q in range(n):
            scale2 += _cabs2(A[p, q])
    if scale2 == 0.0:
        return np.zeros(n), V_arr, True
    stop2 = JACOBI_OFF_TOL * JACOBI_OFF_TOL * scale2

    for sweep in range(JACOBI_MAX_SWEEPS):
        off2 = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off2 += 2.0 * _cabs2(A[p, q])
        if off2 <= stop2:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                absa = sqrt(_cabs2(apq))
                if absa <= 1e-300:
                    continue
                phi = apq / absa
                phic = phi.conjugate()
                tau = (A[q, q].real - A[p, p].real) / (2.0 * absa)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                # rows p, q:  row_p' = c row_p - phi s row_q
                for i in range(n):
                    rp = c * A[p, i] - phi * (t * c) * A[q, i]
                    rq = (t * c) * A[p, i] + phi * c * A[q, i]
                    A[p, i] = rp
                    A[q, i] = rq
                # cols p, q:  col_p' = c col_p - conj(phi) s col_q
                for i in range(n):
                    rp = c * A[i, p] - phic * (t * c) * A[i, q]
                    rq = (t * c) * A[i, p] + phic * c * A[i, q]
                    A[i, p] = rp
                    A[i, q] = rq
                A[p, q] = 0.0
                A[q, p] = 0.0
                for i in range(n):
                    rp = c * V[i, p] - phic * (t * c) * V[i, q]
                    rq = (t * c) * V[i, p] + phic * c * V[i, q]
                    V[i, p] = rp
                    V[i, q] = rq
    else:
        off2 = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off2 += 2.0 * _cabs2(A[p, q])
        converged = off2 <= stop2

    return np.real(np.diag(A_arr)).copy(), V_arr, converged


def expm_ss(X):
    """Matrix exponential by scaling and squaring with a Taylor kernel."""
    A_arr = np.array(X, dtype=np.complex128, order="C")
    cdef Py_ssize_t n = A_arr.shape[0]
    cdef cplx[:, :] A = A_arr
    cdef Py_ssize_t i, j, k, r, s_steps
    cdef double nrm2 = 0.0
    for i in range(n):
        for j in range(n):
            nrm2 += _cabs2(A[i, j])
    cdef double nrm = sqrt(nrm2)
    s_steps = 0
    if nrm > EXPM_THETA:
        s_steps = <Py_ssize_t>ceil(log2(nrm / EXPM_THETA))
    cdef double inv_scale = 1.0 / (2.0 ** s_steps)

    B_arr = A_arr * inv_scale
    E_arr = np.eye(n, dtype=np.complex128)
    T_arr = np.empty((n, n), dtype=np.complex128)
    cdef cplx[:, :] B = B_arr
    cdef cplx[:, :] E = E_arr
    cdef cplx[:, :] T = T_arr
    cdef cplx acc
    cdef double invk

    for k in range(EXPM_ORDER, 0, -1):
        invk = 1.0 / k
        # T = I + (B @ E) / k
        for i in range(n):
            for j in range(n):
                acc = 0.0
                for r in range(n):
                    acc = acc + B[i, r] * E[r, j]
                T[i, j] = acc * invk
            T[i, i] = T[i, i] + 1.0
        E_arr, T_arr = T_arr, E_arr
        E = E_arr
        T = T_arr

    for k in range(s_steps):
        for i in range(n):
            for j in range(n):
                acc = 0.0
                for r in range(n):
                    acc = acc + E[i, r] * E[r, j]
                T[i, j] = acc
        E_arr, T_arr = T_arr, E_arr
        E = E_arr
        T = T_arr

    return E_arr


def solve_complex(A, B):
    """Solve A X = B (square complex A, partial pivoting).

    Returns ``(X, ok)``; ``ok`` is False when a pivot underflows.
    """
    M_arr = np.array(A, dtype=np.complex128, order="C")
    B_in = np.asarray(B, dtype=np.complex128)
    squeeze = B_in.ndim == 1
    X_arr = np.array(B_in[:, None] if squeeze else B_in, order="C")
    cdef cplx[:, :] M = M_arr
    cdef cplx[:, :] X = X_arr
    cdef Py_ssize_t n = M_arr.shape[0]
    cdef Py_ssize_t m = X_arr.shape[1]
    cdef Py_ssize_t col, r, piv, i
    cdef double best, cur
    cdef cplx f, tmp

    for col in range(n):
        piv = col
        best = _cabs2(M[col, col])
        for r in range(col + 1, n):
            cur = _cabs2(M[r, col])
            if cur > best:
                best = cur
                piv = r
        if best < 1e-300:
            return (X_arr[:, 0] if squeeze else X_arr), False
        if piv != col:
            for i in range(n):
                tmp = M[col, i]
                M[col, i] = M[piv, i]
                M[piv, i] = tmp
            for i in range(m):
                tmp = X[col, i]
                X[col, i] = X[piv, i]
                X[piv, i] = tmp
        for r in range(col + 1, n):
            f = M[r, col] / M[col, col]
            if f != 0.0:
                for i in range(col, n):
                    M[r, i] = M[r, i] - f * M[col, i]
                for i in range(m):
                    X[r, i] = X[r, i] - f * X[col, i]
    for col in range(n - 1, -1, -1):
        f = M[col, col]
        for i in range(m):
            X[col, i] = X[col, i] / f
        for r in range(col):
            f = M[r, col]
            if f != 0.0:
                for i in range(m):
                    X[r, i] = X[r, i] - f * X[col, i]
    return (X_arr[:, 0] if squeeze else X_arr), True

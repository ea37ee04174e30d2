"""Orthogonal maximal tori: criteria and constructions.

Two frame-diagonal tori in su(n) are orthogonal exactly when the frames
are mutually unbiased (all |u_i . v_j| equal, hence 1/sqrt(n)); the
discrete-Fourier frame of any orthonormal frame realizes this. For the
other classical types the construction is inductive: with theta the
highest root and alpha the simple root with theta = m omega_alpha, recurse
on the semisimple part of the Levi subalgebra obtained by deleting alpha
and append the direction u_theta, which commutes with that Levi part and
is orthogonal to the Chevalley torus.
"""
import numpy as np

from . import algebra as alg
from . import chevalley as ch
from . import numkit
from . import roots as rt
from .errors import IndexOutOfRange, NotUnitary, UnsupportedType
from .group import GroupElement, det_normalize

FRAME_UNITARY_TOL = 1e-12
UNBIASED_TOL_DEFAULT = 1e-8


def check_frame(u, tol=FRAME_UNITARY_TOL):
    """Validate an orthonormal frame (columns of a unitary matrix)."""
    u = np.ascontiguousarray(np.asarray(u, dtype=np.complex128))
    n = u.shape[0]
    if u.ndim != 2 or u.shape[1] != n:
        raise ValueError("frame must be a square matrix of column vectors")
    if np.linalg.norm(u.conj().T @ u - np.eye(n)) > tol * n:
        raise NotUnitary(f"frame is not unitary within {tol:g}")
    return u


def random_frame(n, rng):
    """Haar-ish random frame: QR of a complex Gaussian, phases fixed."""
    X = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    Q, R = np.linalg.qr(X)
    d = np.diag(R)
    return Q * (d / np.abs(d))


def frame_torus_generator(u, i, j):
    """The operator sending u_i -> i u_i, u_j -> -i u_j, else 0."""
    n = u.shape[0]
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRange(f"need distinct indices in [0, {n}), got {i}, {j}")
    ui = u[:, i:i + 1]
    uj = u[:, j:j + 1]
    return 1j * (ui @ ui.conj().T - uj @ uj.conj().T)


def trace_pairing_formula(u, v, i, j, h, k):
    """Closed form for tr(U_ij V_hk) in terms of frame overlaps:

    |u_i.v_k|^2 + |u_j.v_h|^2 - |u_i.v_h|^2 - |u_j.v_k|^2.
    """
    n = u.shape[0]
    for name, idx in (("i", i), ("j", j), ("h", h), ("k", k)):
        if not 0 <= idx < n:
            raise IndexOutOfRange(f"index {name}={idx} out of range [0, {n})")
    if i == j or h == k:
        raise IndexOutOfRange("indices within a pair must be distinct")

    def ov(a, b):
        return abs(np.vdot(u[:, a], v[:, b])) ** 2

    return ov(i, k) + ov(j, h) - ov(i, h) - ov(j, k)


def is_unbiased_pair(u, v, tol=UNBIASED_TOL_DEFAULT):
    """True when all overlaps |u_i . v_h| agree (forced value 1/sqrt(n))."""
    u = check_frame(u)
    v = check_frame(v)
    n = u.shape[0]
    overlaps = np.abs(u.conj().T @ v)
    return bool(np.max(np.abs(overlaps - 1.0 / np.sqrt(n))) <= tol)


def fourier_frame(u):
    """The frame v_j = n^{-1/2} sum_k zeta^{(k-1) j} u_k, zeta = e^{2 pi i/n}.

    Mutually unbiased with u: |u_i . v_j| = 1/sqrt(n) for all i, j.
    """
    u = check_frame(u)
    n = u.shape[0]
    zeta = np.exp(2j * np.pi / n)
    F = np.array([[zeta ** (k * (j + 1)) for j in range(n)]
                  for k in range(n)]) / np.sqrt(n)
    return u @ F


def diagonal_torus(algebra, frame):
    """Torus of algebra elements diagonal in the given frame."""
    frame = check_frame(frame)
    n = algebra.n
    if frame.shape[0] != n:
        raise ValueError(f"frame size {frame.shape[0]} does not match su({n})")
    gens = []
    for k in range(n - 1):
        M = frame_torus_generator(frame, k, k + 1)
        gens.append(algebra.from_matrix(M))
    return alg.TorusBasis(algebra, alg.orthonormalize(gens))


def fourier_orthogonal_torus(algebra, u):
    """The torus diagonal in the Fourier frame of u; orthogonal to t_u."""
    return diagonal_torus(algebra, fourier_frame(u))


def conjugate_into_torus(algebra, z, frame):
    """Conjugate z into the torus diagonal in ``frame``.

    Eigendecomposes ``i Z`` as ``W D W*`` (descending eigenvalues, which
    fixes the conjugator among degenerate choices), sets
    ``g = W F* / det^{1/n}``, and returns ``(g, z')`` with
    ``z' = Ad_{g^{-1}} z = F (-i D) F*`` in the span of the target torus.
    """
    frame = check_frame(frame)
    Z = algebra.realize(z)
    w, W = numkit.herm_eig(1j * Z)
    g = det_normalize(W @ frame.conj().T)
    Zp = (frame * (-1j * w)) @ frame.conj().T
    return GroupElement(g), algebra.from_matrix(Zp)


def ad_conjugate(g, x):
    """Ad_g x = g X g^{-1} pulled back to coordinates."""
    M = g.matrix
    return x.algebra.from_matrix(M @ x.algebra.realize(x) @ M.conj().T)


# --- inductive construction for the classical types -------------------------

def orthogonal_torus_inductive(P, form=None):
    """A maximal torus orthogonal to the Chevalley torus of ``P``.

    Type A delegates to the Fourier construction through the defining
    representation; otherwise the highest-root recursion applies. Returns
    a :class:`TorusBasis` in the compact form's coordinates (build or pass
    ``form = compact_form_from_roots(P)``).
    """
    t = P.type_label.upper()
    if t in ("E", "F", "G"):
        raise UnsupportedType(f"type {t} is out of scope")
    if form is None:
        form = ch.compact_form_from_roots(P)
    vectors = _orthogonal_vectors(form)
    if len(vectors) != P.rank:
        raise AssertionError(
            f"constructed {len(vectors)} torus directions, expected {P.rank}")
    return alg.TorusBasis(form.algebra, alg.orthonormalize(vectors))


def _orthogonal_vectors(form):
    P = form.presentation
    comps = P.components()
    if len(comps) > 1:
        return _embedded_component_vectors(form, comps)
    if P.is_type_A():
        return _fourier_vectors_type_a(form)
    alpha_idx, _mult = rt.highest_root_is_fund_weight(P)
    rest = [i for i in range(P.rank) if i != alpha_idx]
    sub_comps = [c for c in _split_nodes(P, rest)]
    vectors = _embedded_component_vectors(form, sub_comps)
    u_theta = form.algebra.basis_element(form.u_index[P.highest_root])
    vectors.append(u_theta * (1.0 / u_theta.norm()))
    return vectors


def _split_nodes(P, nodes):
    """Connected components of the sub-diagram on ``nodes``."""
    remaining = set(nodes)
    comps = []
    while remaining:
        start = min(remaining)
        stack, comp = [start], set()
        while stack:
            i = stack.pop()
            comp.add(i)
            for j in remaining:
                if j not in comp and P.cartan[i, j] != 0:
                    stack.append(j)
        comps.append(sorted(comp))
        remaining -= comp
    return comps


def _embedded_component_vectors(form, comps):
    out = []
    for comp in comps:
        subform, M = ch.component_embedding(form, comp)
        for v in _orthogonal_vectors(subform):
            w = form.algebra.element(v.coords @ M)
            out.append(w * (1.0 / w.norm()))
    return out


def _fourier_vectors_type_a(form):
    """Fourier torus of the standard frame, pulled back from the defining rep."""
    R = ch.defining_rep_type_a(form)
    n = form.presentation.rank + 1
    V = fourier_frame(np.eye(n, dtype=np.complex128))
    A = np.vstack([R.reshape(form.algebra.dim, -1).real.T,
                   R.reshape(form.algebra.dim, -1).imag.T])
    vectors = []
    for k in range(n - 1):
        Tm = frame_torus_generator(V, k, k + 1)
        b = np.concatenate([Tm.real.ravel(), Tm.imag.ravel()])
        coords, *_ = np.linalg.lstsq(A, b, rcond=None)
        if np.linalg.norm(A @ coords - b) > 1e-10:
            raise AssertionError("Fourier torus did not pull back exactly")
        v = form.algebra.element(coords)
        vectors.append(v * (1.0 / v.norm()))
    return vectors

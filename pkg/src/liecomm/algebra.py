"""Compact semisimple Lie algebras: basis, bracket, invariant inner product.

A :class:`CompactAlgebra` stores real structure constants ``c[i, j, k]``
(coordinates of ``[e_i, e_j]`` in the basis ``{e_k}``), the Gram matrix of
the invariant inner product on that basis, and optionally a faithful
matrix realization (skew-Hermitian traceless matrices for ``su(n)``).

For matrix realizations the inner product is ``<a, b> = -Re tr(ab)``,
the negative trace form. It is proportional to the Killing form on each
simple ideal, so orthogonality statements are unaffected, and its
constants are better conditioned. Structure-constant algebras built from
root-system data use the negative Killing form instead.
"""
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as kernels
from .errors import AlgebraMismatch

JACOBI_TOL = 1e-10      # structure-constant Jacobi identity residual
INVARIANCE_TOL = 1e-10  # ad-invariance of the inner product


@dataclass(frozen=True)
class CompactAlgebra:
    """A compact semisimple Lie algebra in a fixed real basis."""

    name: str
    dim: int
    rank: int
    bracket_constants: np.ndarray        # (dim, dim, dim) real
    gram: np.ndarray                     # (dim, dim) real SPD
    realization: np.ndarray | None = None  # (dim, n, n) complex basis matrices
    basis_labels: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "bracket_constants",
                           np.ascontiguousarray(self.bracket_constants, dtype=np.float64))
        object.__setattr__(self, "gram",
                           np.ascontiguousarray(self.gram, dtype=np.float64))
        if self.realization is not None:
            object.__setattr__(self, "realization",
                               np.ascontiguousarray(self.realization, dtype=np.complex128))

    @property
    def n(self):
        """Size of the defining representation, if realized."""
        if self.realization is None:
            raise AttributeError(f"{self.name} has no matrix realization")
        return self.realization.shape[1]

    def element(self, coords):
        coords = np.asarray(coords, dtype=np.float64)
        if coords.shape != (self.dim,):
            raise ValueError(f"expected {self.dim} coordinates, got {coords.shape}")
        return AlgebraElement(self, coords)

    def zero(self):
        return self.element(np.zeros(self.dim))

    def basis_element(self, i):
        coords = np.zeros(self.dim)
        coords[i] = 1.0
        return self.element(coords)

    def realize(self, element):
        """Matrix of an element in the defining representation."""
        if self.realization is None:
            raise AttributeError(f"{self.name} has no matrix realization")
        return np.einsum("i,iab->ab", element.coords, self.realization)

    def from_matrix(self, M, tol=1e-8):
        """Coordinates of a realized matrix (least squares on the basis).

        Raises ``ValueError`` when ``M`` is farther than ``tol * |M|`` from
        the realized span.
        """
        if self.realization is None:
            raise AttributeError(f"{self.name} has no matrix realization")
        M = np.asarray(M, dtype=np.complex128)
        B = self.realization.reshape(self.dim, -1)
        A = np.vstack([B.real.T, B.imag.T])
        b = np.concatenate([M.real.ravel(), M.imag.ravel()])
        coords, *_ = np.linalg.lstsq(A, b, rcond=None)
        res = np.linalg.norm(A @ coords - b)
        if res > tol * max(1e-300, np.linalg.norm(M)):
            raise ValueError(f"matrix is not in the realized algebra "
                             f"(residual {res:.3g})")
        return self.element(coords)

    def random_element(self, rng, norm=1.0):
        """Uniform direction on the unit sphere of <.,.>, scaled to ``norm``."""
        v = rng.standard_normal(self.dim)
        e = self.element(v)
        return e * (norm / e.norm())


@dataclass(frozen=True)
class AlgebraElement:
    """An element of a :class:`CompactAlgebra`, stored by coordinates."""

    algebra: CompactAlgebra
    coords: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coords",
                           np.ascontiguousarray(self.coords, dtype=np.float64))

    def __add__(self, other):
        _check_same_algebra(self, other)
        return AlgebraElement(self.algebra, self.coords + other.coords)

    def __sub__(self, other):
        _check_same_algebra(self, other)
        return AlgebraElement(self.algebra, self.coords - other.coords)

    def __mul__(self, scalar):
        return AlgebraElement(self.algebra, self.coords * float(scalar))

    __rmul__ = __mul__

    def __neg__(self):
        return AlgebraElement(self.algebra, -self.coords)

    def norm(self):
        return float(np.sqrt(max(inner(self, self), 0.0)))

    def realized(self):
        return self.algebra.realize(self)


def _check_same_algebra(a, b):
    if a.algebra is not b.algebra:
        raise AlgebraMismatch(
            f"elements belong to different algebras "
            f"({a.algebra.name} vs {b.algebra.name})")


def bracket(a, b):
    """Lie bracket [a, b] via the structure constants."""
    _check_same_algebra(a, b)
    c = np.einsum("ijk,i,j->k", a.algebra.bracket_constants, a.coords, b.coords)
    return AlgebraElement(a.algebra, c)


def inner(a, b):
    """Invariant inner product <a, b>."""
    _check_same_algebra(a, b)
    return float(a.coords @ a.algebra.gram @ b.coords)


def ad_matrix(x):
    """Matrix of ad_x on the whole algebra: column j = coords of [x, e_j]."""
    return np.einsum("ijk,i->kj", x.algebra.bracket_constants, x.coords)


def exp_ad(y, x):
    """exp(ad_y) applied to x, i.e. Ad_{exp(Y)} X in a realization."""
    _check_same_algebra(y, x)
    E = kernels.expm_ss(ad_matrix(y).astype(np.complex128))
    return AlgebraElement(x.algebra, (E @ x.coords).real)


def orthonormalize(elements):
    """Gram-Schmidt in the algebra inner product, preserving input order."""
    out = []
    for e in elements:
        v = e
        for u in out:
            v = v - inner(v, u) * u
        nrm = v.norm()
        if nrm < 1e-12:
            raise ValueError("orthonormalize: dependent input vectors")
        out.append(v * (1.0 / nrm))
    return out


@dataclass(frozen=True)
class TorusBasis:
    """Ordered orthonormal basis of a maximal toral subalgebra."""

    algebra: CompactAlgebra
    vectors: tuple  # AlgebraElements, orthonormal in <.,.>

    def __post_init__(self):
        object.__setattr__(self, "vectors", tuple(self.vectors))

    def __len__(self):
        return len(self.vectors)

    def coord_matrix(self):
        return np.array([v.coords for v in self.vectors])

    def residuals(self, reference=None):
        """Max residuals of the torus invariants.

        Returns a dict with keys ``toral`` (pairwise brackets),
        ``orthonormal`` (Gram defect) and, when ``reference`` is given,
        ``orthogonal`` (inner products against another torus).
        """
        vs = self.vectors
        toral = 0.0
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                toral = max(toral, bracket(vs[i], vs[j]).norm())
        G = np.array([[inner(a, b) for b in vs] for a in vs])
        ortho = float(np.max(np.abs(G - np.eye(len(vs)))))
        out = {"toral": toral, "orthonormal": ortho}
        if reference is not None:
            out["orthogonal"] = float(max(
                abs(inner(a, b)) for a in vs for b in reference.vectors))
        return out


def structure_constants_from_realization(B, gram_inv=None):
    """Structure constants of a realized basis ``B[i]`` of matrices.

    Assumes the basis is orthonormal under ``-Re tr(ab)`` unless a Gram
    inverse is supplied.
    """
    comm = np.einsum("iab,jbc->ijac", B, B) - np.einsum("jab,ibc->ijac", B, B)
    c = -np.real(np.einsum("ijab,kba->ijk", comm, B))
    if gram_inv is not None:
        c = np.einsum("ijl,lk->ijk", c, gram_inv)
    return c


def su(n):
    """The compact algebra su(n) of traceless skew-Hermitian matrices.

    Basis: the n-1 diagonal generators ``i (E_kk - E_{k+1,k+1})``
    orthonormalized in order, then for each pair j < k the matrices
    ``(E_jk - E_kj)/sqrt(2)`` and ``i (E_jk + E_kj)/sqrt(2)``. The basis is
    orthonormal for ``<a, b> = -Re tr(ab)``, so the Gram matrix is the
    identity.
    """
    if n < 2:
        raise ValueError("su(n) requires n >= 2")
    mats = []
    labels = []
    diag = []
    for k in range(n - 1):
        D = np.zeros((n, n), dtype=np.complex128)
        D[k, k] = 1j
        D[k + 1, k + 1] = -1j
        diag.append(D)
    # Gram-Schmidt on the diagonal generators, in the listed order
    for k, D in enumerate(diag):
        for P in mats:
            D = D - (-np.real(np.trace(D @ P))) * P
        D = D / np.sqrt(-np.real(np.trace(D @ D)))
        mats.append(D)
        labels.append(("h", k))
    for j in range(n):
        for k in range(j + 1, n):
            U = np.zeros((n, n), dtype=np.complex128)
            U[j, k] = 1.0
            U[k, j] = -1.0
            mats.append(U / np.sqrt(2.0))
            labels.append(("u", (j, k)))
            V = np.zeros((n, n), dtype=np.complex128)
            V[j, k] = 1j
            V[k, j] = 1j
            mats.append(V / np.sqrt(2.0))
            labels.append(("v", (j, k)))
    B = np.array(mats)
    dim = n * n - 1
    assert B.shape[0] == dim
    c = structure_constants_from_realization(B)
    return CompactAlgebra(
        name=f"su({n})",
        dim=dim,
        rank=n - 1,
        bracket_constants=c,
        gram=np.eye(dim),
        realization=B,
        basis_labels=tuple(labels),
    )


def killing_gram(c):
    """Gram matrix of the Killing form tr(ad_x ad_y) from structure constants."""
    return np.einsum("iab,jba->ij", c, c)


def jacobi_residual(c):
    """Max-norm residual of the Jacobi identity over all basis triples."""
    t1 = np.einsum("ijm,mkl->ijkl", c, c)
    t2 = np.einsum("jkm,mil->ijkl", c, c)
    t3 = np.einsum("kim,mjl->ijkl", c, c)
    return float(np.max(np.abs(t1 + t2 + t3)))


def invariance_residual(c, gram):
    """Max residual of <[a,b],c> + <b,[a,c]> = 0 over basis triples."""
    t = np.einsum("ijl,lk->ijk", c, gram)
    return float(np.max(np.abs(t + np.swapaxes(t, 1, 2))))

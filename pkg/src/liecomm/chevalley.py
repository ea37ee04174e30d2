"""Compact real forms built from root-system presentations.

Over the Chevalley basis ``{h_i} u {x_g : g in Phi}`` the compact form is
spanned by ``k_i = i h_i``, ``u_g = x_g - x_{-g}`` and
``v_g = i (x_g + x_{-g})`` for positive g. The real structure constants of
that basis are assembled mechanically from the complex Chevalley
constants, the invariant inner product is the negative Killing form, and
the Jacobi identity is re-verified numerically (failing it signals
inconsistent structure signs and raises :class:`InvalidPresentation`).
"""
from dataclasses import dataclass

import numpy as np

from . import algebra as alg
from . import roots as rt
from .errors import InvalidPresentation

_REALITY_TOL = 1e-10


@dataclass(frozen=True)
class CompactRootForm:
    """A compact form with its Chevalley bookkeeping."""

    presentation: rt.RootSystemPresentation
    algebra: alg.CompactAlgebra
    torus: alg.TorusBasis         # orthonormalized span of the k_i
    labels: tuple                 # ("k", i) | ("u", root) | ("v", root)
    k_index: dict
    u_index: dict
    v_index: dict


def _chevalley_constants(P):
    """Complex structure constants over [h_1..h_r, x_{g>0}, x_{g<0}]."""
    r = P.rank
    pos = list(P.pos_roots)
    npos = len(pos)
    dim = r + 2 * npos
    idx_pos = {g: r + i for i, g in enumerate(pos)}
    idx_neg = {g: r + npos + i for i, g in enumerate(pos)}

    def xindex(g):
        if g in idx_pos:
            return idx_pos[g]
        return idx_neg[tuple(-v for v in g)]

    C = np.zeros((dim, dim, dim))
    units = [tuple(int(i == j) for j in range(r)) for i in range(r)]

    all_roots = [(g, 1) for g in pos] + [(tuple(-v for v in g), -1) for g in pos]

    # [h_i, x_g] = <g, alpha_i^vee> x_g
    for i in range(r):
        for g, _sgn in all_roots:
            val = P.pairing(g, units[i])
            xi = xindex(g)
            C[i, xi, xi] += val
            C[xi, i, xi] -= val

    for g, _ in all_roots:
        xg = xindex(g)
        ng = tuple(-v for v in g)
        xn = xindex(ng)
        # [x_g, x_{-g}] = h_g, the coroot in the h basis
        lg = P.length2(g)
        for i in range(r):
            ci = g[i] * P.length2(units[i]) / lg
            cii = round(ci)
            if abs(ci - cii) > 1e-9:
                raise InvalidPresentation("non-integral coroot coordinate")
            C[xg, xn, i] += cii
        # [x_g, x_b] = N_{g,b} x_{g+b}
        for b, _ in all_roots:
            if b == ng or b == g:
                continue
            s = tuple(x + y for x, y in zip(g, b))
            if P.is_root(s):
                C[xg, xindex(b), xindex(s)] += P.structure_sign(g, b)
    return C


def compact_form_from_roots(P):
    """Compact form of a presentation: algebra, Chevalley torus, labels."""
    r = P.rank
    pos = list(P.pos_roots)
    npos = len(pos)
    dim = r + 2 * npos
    C = _chevalley_constants(P)

    # compact basis in Chevalley coordinates
    T = np.zeros((dim, dim), dtype=np.complex128)
    labels = []
    k_index, u_index, v_index = {}, {}, {}
    for i in range(r):
        T[i, i] = 1j
        labels.append(("k", i))
        k_index[i] = i
    for j, g in enumerate(pos):
        iu = r + 2 * j
        iv = iu + 1
        T[iu, r + j] = 1.0
        T[iu, r + npos + j] = -1.0
        T[iv, r + j] = 1j
        T[iv, r + npos + j] = 1j
        labels.append(("u", g))
        labels.append(("v", g))
        u_index[g] = iu
        v_index[g] = iv

    Tinv = np.linalg.inv(T)
    cc = np.einsum("im,jn,mnp,pk->ijk", T, T, C.astype(np.complex128), Tinv)
    if np.max(np.abs(cc.imag)) > _REALITY_TOL:
        raise InvalidPresentation(
            f"compact structure constants are not real "
            f"(imag {np.max(np.abs(cc.imag)):.3g})")
    c = np.ascontiguousarray(cc.real)

    jac = alg.jacobi_residual(c)
    if jac > alg.JACOBI_TOL:
        raise InvalidPresentation(
            f"Jacobi identity fails (residual {jac:.3g}); structure signs "
            "are inconsistent")

    gram = -alg.killing_gram(c)
    evals = np.linalg.eigvalsh((gram + gram.T) / 2.0)
    if evals.min() <= 0:
        raise InvalidPresentation("negative Killing form is not positive "
                                  "definite; the form is not compact")

    a = alg.CompactAlgebra(
        name=f"g({P.type_label}{P.rank})", dim=dim, rank=r,
        bracket_constants=c, gram=gram, realization=None,
        basis_labels=tuple(labels))
    torus = alg.TorusBasis(a, alg.orthonormalize(
        [a.basis_element(i) for i in range(r)]))
    return CompactRootForm(presentation=P, algebra=a, torus=torus,
                           labels=tuple(labels), k_index=k_index,
                           u_index=u_index, v_index=v_index)


def component_embedding(form, nodes):
    """Compact form of a sub-diagram plus its embedding into ``form``.

    The embedding matches structure signs: a sign flip ``eta`` is chosen on
    the sub-system's positive roots (recursively over its extraspecial
    pairs) so that the map ``k'_j -> k_{node_j}``,
    ``u'_g -> eta_g u_{lift(g)}``, ``v'_g -> eta_g v_{lift(g)}`` is a Lie
    algebra homomorphism. Returns ``(subform, M)`` with
    ``parent_coords = sub_coords @ M``.
    """
    P = form.presentation
    subP, parent_nodes = rt.sub_presentation(P, nodes)
    subform = compact_form_from_roots(subP)

    eta = {}
    for g in subP.pos_roots:
        if subP.height(g) == 1:
            eta[g] = 1
            continue
        a, b = subP.extraspecial[g]
        ratio = subP.structure_sign(a, b) / P.structure_sign(
            rt.lift_root(a, parent_nodes, P.rank),
            rt.lift_root(b, parent_nodes, P.rank))
        if abs(abs(ratio) - 1.0) > 1e-9:
            raise InvalidPresentation("sub-system strings disagree with parent")
        eta[g] = eta[a] * eta[b] * int(round(ratio))

    M = np.zeros((subform.algebra.dim, form.algebra.dim))
    for i, node in enumerate(parent_nodes):
        M[subform.k_index[i], form.k_index[node]] = 1.0
    for g in subP.pos_roots:
        gp = rt.lift_root(g, parent_nodes, P.rank)
        M[subform.u_index[g], form.u_index[gp]] = eta[g]
        M[subform.v_index[g], form.v_index[gp]] = eta[g]
    return subform, M


def defining_rep_type_a(form):
    """Realized basis of a type A compact form in the defining representation.

    Simple chain node i maps to ``E_{i,i+1}``; a positive root with
    contiguous support [i, j] maps to ``eta E_{i,j+1}``, with the sign
    ``eta`` chosen recursively so the realized structure constants agree
    with the abstract ones. Returns an array ``R`` with ``R[idx]`` the
    matrix of basis element ``idx``.
    """
    P = form.presentation
    if not P.is_type_A():
        raise InvalidPresentation("defining representation needs type A")
    r = P.rank
    n = r + 1
    # simple roots need not be listed in chain order (e.g. a D_3 diagram);
    # chain position p holds original node chain[p]
    _, chain = rt.classify_component(P, list(range(r)))

    def span(g):
        m = [g[chain[p]] for p in range(r)]
        sup = [p for p, c in enumerate(m) if c != 0]
        if any(m[p] != 1 for p in sup) or sup != list(range(sup[0], sup[-1] + 1)):
            raise InvalidPresentation(f"root {g} is not a type A root")
        return sup[0], sup[-1] + 1

    def matrix_sign(a, b):
        # [E_{a1 a2}, E_{b1 b2}] for root pairs: +E if a2 == b1, -E if b2 == a1
        a1, a2 = span(a)
        b1, b2 = span(b)
        if a2 == b1:
            return 1
        if b2 == a1:
            return -1
        raise InvalidPresentation("pair does not sum to a root")

    eta = {}
    for g in P.pos_roots:
        if P.height(g) == 1:
            eta[g] = 1
            continue
        a, b = P.extraspecial[g]
        eta[g] = eta[a] * eta[b] * int(round(P.structure_sign(a, b))) * \
            matrix_sign(a, b)

    R = np.zeros((form.algebra.dim, n, n), dtype=np.complex128)
    for p in range(r):
        R[form.k_index[chain[p]], p, p] = 1j
        R[form.k_index[chain[p]], p + 1, p + 1] = -1j
    for g in P.pos_roots:
        i, j = span(g)
        R[form.u_index[g], i, j] = eta[g]
        R[form.u_index[g], j, i] = -eta[g]
        R[form.v_index[g], i, j] = 1j * eta[g]
        R[form.v_index[g], j, i] = 1j * eta[g]
    return R

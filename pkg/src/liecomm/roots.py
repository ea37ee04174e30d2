"""Root-system presentations for the classical families A, B, C, D.

A presentation carries simple roots in Euclidean (epsilon) coordinates,
the positive roots in simple-root integer coordinates (found by the
string-closure algorithm, which only uses the Cartan pairings and so is
type-agnostic), the Cartan matrix, fundamental weights, the highest root,
and Chevalley structure signs.

Signs are fixed by the extraspecial-pair convention: positive roots are
totally ordered by (height, lexicographic coordinates); for each
non-simple positive root the special pair with minimal first member gets
N = +(p+1), and every other constant follows from the standard identities
(antisymmetry, negation, the cyclic length-weighted identity for triples
summing to zero, and a Jacobi relation). All derived constants are
integers; the build asserts this.
"""
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidPresentation, NotApplicable, UnsupportedType

_LEN_ATOL = 1e-9


def _simple_roots_eps(type_label, rank):
    """Canonical simple roots in epsilon coordinates (Bourbaki)."""
    t = type_label.upper()
    if t == "A":
        if rank < 1:
            raise ValueError("type A requires rank >= 1")
        amb = rank + 1
        roots = []
        for i in range(rank):
            v = np.zeros(amb)
            v[i], v[i + 1] = 1.0, -1.0
            roots.append(v)
        return np.array(roots)
    if t in ("B", "C"):
        if rank < 2:
            raise ValueError(f"type {t} requires rank >= 2")
        roots = []
        for i in range(rank - 1):
            v = np.zeros(rank)
            v[i], v[i + 1] = 1.0, -1.0
            roots.append(v)
        v = np.zeros(rank)
        v[rank - 1] = 1.0 if t == "B" else 2.0
        roots.append(v)
        return np.array(roots)
    if t == "D":
        if rank < 3:
            raise ValueError("type D requires rank >= 3")
        roots = []
        for i in range(rank - 1):
            v = np.zeros(rank)
            v[i], v[i + 1] = 1.0, -1.0
            roots.append(v)
        v = np.zeros(rank)
        v[rank - 2], v[rank - 1] = 1.0, 1.0
        roots.append(v)
        return np.array(roots)
    if t in ("E", "F", "G"):
        raise UnsupportedType(f"type {t} is not supported")
    raise ValueError(f"unknown root-system type {type_label!r}")


@dataclass(frozen=True)
class RootSystemPresentation:
    """Root system with a fixed simple basis and Chevalley structure signs."""

    type_label: str
    rank: int
    simple_eps: np.ndarray          # (rank, ambient) simple roots
    cartan: np.ndarray              # cartan[i, j] = <alpha_j, alpha_i^vee>
    pos_roots: tuple                # integer coordinate tuples, height-lex order
    heights: tuple
    fundamental_weights: np.ndarray  # (rank, ambient), rows are omega_i
    highest_root: tuple | None      # None when reducible
    special_signs: dict             # (a, b) coord tuples -> int N
    extraspecial: dict              # gamma -> (a, b)
    _index: dict = field(repr=False, default_factory=dict)

    # -- geometry ------------------------------------------------------------

    def eps_vector(self, root):
        return np.asarray(root, dtype=np.float64) @ self.simple_eps

    def length2(self, root):
        v = self.eps_vector(root)
        return float(v @ v)

    def pairing(self, beta, alpha):
        """<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)."""
        va, vb = self.eps_vector(alpha), self.eps_vector(beta)
        return 2.0 * float(vb @ va) / float(va @ va)

    def is_positive_root(self, t):
        return tuple(t) in self._index

    def is_root(self, t):
        t = tuple(t)
        return t in self._index or tuple(-c for c in t) in self._index

    def order(self, t):
        return self._index[tuple(t)]

    def height(self, t):
        return int(sum(t))

    # -- structure -----------------------------------------------------------

    def components(self):
        """Connected components of the Dynkin diagram (node index lists)."""
        seen = [False] * self.rank
        comps = []
        for start in range(self.rank):
            if seen[start]:
                continue
            stack, comp = [start], []
            seen[start] = True
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(self.rank):
                    if not seen[j] and self.cartan[i, j] != 0:
                        seen[j] = True
                        stack.append(j)
            comps.append(sorted(comp))
        return comps

    def is_irreducible(self):
        return len(self.components()) == 1

    def is_type_A(self):
        """Simply-laced chain (covers every A_r, including rank 1)."""
        if not self.is_irreducible():
            return False
        deg = [0] * self.rank
        for i in range(self.rank):
            for j in range(self.rank):
                if i != j and self.cartan[i, j] != 0:
                    if self.cartan[i, j] * self.cartan[j, i] != 1:
                        return False
                    deg[i] += 1
        return all(d <= 2 for d in deg)

    def string_down(self, a, b):
        """p = max k >= 0 with b - k a a root (the a-string below b)."""
        p = 0
        a, b = np.asarray(a, int), np.asarray(b, int)
        while self.is_root(tuple(b - (p + 1) * a)):
            p += 1
        return p

    def structure_sign(self, a, b):
        """N_{a,b} for roots a, b with a + b a root (a, b, a+b nonzero).

        Reduces through antisymmetry, negation and the cyclic identity to
        the stored positive special pairs.
        """
        a, b = tuple(int(v) for v in a), tuple(int(v) for v in b)
        pa, pb = self.is_positive_root(a), self.is_positive_root(b)
        if pa and pb:
            if self.order(a) < self.order(b):
                return float(self.special_signs[(a, b)])
            return -float(self.special_signs[(b, a)])
        na, nb = tuple(-v for v in a), tuple(-v for v in b)
        if self.is_positive_root(na) and self.is_positive_root(nb):
            return -self.structure_sign(na, nb)
        # mixed signs: rotate the triple a + b + z = 0 onto a same-signed pair
        z = tuple(-(x + y) for x, y in zip(a, b))
        zpos = self.is_positive_root(z)
        if zpos == pb:  # b and z share a sign
            return self.structure_sign(b, z) * self.length2(z) / self.length2(a)
        return self.structure_sign(z, a) * self.length2(z) / self.length2(b)

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self):
        return {
            "type": self.type_label,
            "rank": self.rank,
            "cartan": [[int(v) for v in row] for row in self.cartan],
            "signs": sorted(
                [[self.order(a), self.order(b), int(n)]
                 for (a, b), n in self.special_signs.items()]),
        }


def _positive_roots(simple_eps):
    """String-closure enumeration of the positive roots, by height."""
    rank = simple_eps.shape[0]

    def pairing(beta, alpha_idx):
        va = simple_eps[alpha_idx]
        vb = np.asarray(beta, float) @ simple_eps
        return int(round(2.0 * float(vb @ va) / float(va @ va)))

    units = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    known = set(units)
    layer = list(units)
    ordered = [sorted(units)]
    while layer:
        created = set()
        for gamma in layer:
            g = np.asarray(gamma, int)
            for i in range(rank):
                if gamma == units[i]:
                    continue
                a = np.asarray(units[i], int)
                p = 0
                while tuple(g - (p + 1) * a) in known or \
                        tuple(-(g - (p + 1) * a)) in known:
                    p += 1
                q = p - pairing(gamma, i)
                if q >= 1:
                    created.add(tuple(int(v) for v in g + a))
        created -= known
        if not created:
            break
        known |= created
        layer = sorted(created)
        ordered.append(layer)
    out = []
    for group in ordered:
        out.extend(group)
    return out


def _structure_signs(pres_stub):
    """Chevalley signs from extraspecial pairs, by increasing height."""
    P = pres_stub
    special, extraspecial = {}, {}
    for gamma in P.pos_roots:
        if P.height(gamma) == 1:
            continue
        g = np.asarray(gamma, int)
        pairs = []
        for a in P.pos_roots:
            if P.order(a) >= P.order(gamma):
                break
            b = tuple(g - np.asarray(a, int))
            if P.is_positive_root(b) and P.order(a) < P.order(b):
                pairs.append((a, b))
        pairs.sort(key=lambda ab: P.order(ab[0]))
        if not pairs:
            raise InvalidPresentation(f"no decomposition for root {gamma}")
        a1, b1 = pairs[0]
        extraspecial[gamma] = (a1, b1)
        special[(a1, b1)] = P.string_down(a1, b1) + 1
        object.__setattr__(P, "special_signs", special)  # incremental visibility
        for a, b in pairs[1:]:
            # Jacobi on (x_{a1}, x_{b1}, x_{-b}) determines N(gamma, -b):
            #   N(a1,b1) N(gamma,-b) + [b1-b root] N(b1,-b) N(b1-b, a1)
            #                        + [a1-b root] N(-b,a1) N(a1-b, b1) = 0
            nb = tuple(-v for v in b)
            t2 = t3 = 0.0
            d1 = tuple(np.asarray(b1, int) - np.asarray(b, int))
            if P.is_root(d1):
                t2 = P.structure_sign(b1, nb) * P.structure_sign(d1, a1)
            d2 = tuple(np.asarray(a1, int) - np.asarray(b, int))
            if P.is_root(d2):
                t3 = P.structure_sign(nb, a1) * P.structure_sign(d2, b1)
            n_gmb = -(t2 + t3) / special[(a1, b1)]
            val = n_gmb * P.length2(gamma) / P.length2(a)
            n_int = int(round(val))
            if abs(val - n_int) > 1e-6 or n_int == 0:
                raise InvalidPresentation(
                    f"non-integral structure sign {val} for pair {(a, b)}")
            special[(a, b)] = n_int
    return special, extraspecial


def presentation_from_simple_roots(simple_eps, type_label="?"):
    """Build a presentation from arbitrary simple roots in epsilon coordinates."""
    simple_eps = np.asarray(simple_eps, dtype=np.float64)
    rank = simple_eps.shape[0]
    cartan = np.zeros((rank, rank), dtype=np.int64)
    for i in range(rank):
        for j in range(rank):
            val = 2.0 * float(simple_eps[j] @ simple_eps[i]) / \
                float(simple_eps[i] @ simple_eps[i])
            cartan[i, j] = int(round(val))
            if abs(val - cartan[i, j]) > _LEN_ATOL:
                raise InvalidPresentation("non-integral Cartan pairing")

    pos = _positive_roots(simple_eps)
    index = {t: i for i, t in enumerate(pos)}
    heights = tuple(int(sum(t)) for t in pos)

    # omega_i = sum_j W[i, j] alpha_j with <omega_i, alpha_j^vee> = delta_ij
    M = np.array([[2.0 * float(simple_eps[k] @ simple_eps[j]) /
                   float(simple_eps[j] @ simple_eps[j])
                   for j in range(rank)] for k in range(rank)])
    W = np.linalg.solve(M.T, np.eye(rank))
    weights = W @ simple_eps

    maxh = max(heights)
    tops = [pos[i] for i, h in enumerate(heights) if h == maxh]
    highest = tops[0] if len(tops) == 1 else None

    P = RootSystemPresentation(
        type_label=type_label, rank=rank, simple_eps=simple_eps,
        cartan=cartan, pos_roots=tuple(pos), heights=heights,
        fundamental_weights=weights, highest_root=highest,
        special_signs={}, extraspecial={}, _index=index)
    signs, extra = _structure_signs(P)
    object.__setattr__(P, "special_signs", signs)
    object.__setattr__(P, "extraspecial", extra)
    return P


_EXPECTED_COUNTS = {"A": lambda r: r * (r + 1) // 2,
                    "B": lambda r: r * r,
                    "C": lambda r: r * r,
                    "D": lambda r: r * (r - 1)}


def presentation(type_label, rank):
    """Canonical presentation for a classical type (A, B, C or D)."""
    t = type_label.upper()
    P = presentation_from_simple_roots(_simple_roots_eps(t, rank), type_label=t)
    expected = _EXPECTED_COUNTS[t](rank)
    if len(P.pos_roots) != expected:
        raise InvalidPresentation(
            f"{t}{rank}: found {len(P.pos_roots)} positive roots, "
            f"expected {expected}")
    return P


def highest_root_is_fund_weight(P):
    """The simple root alpha and multiple m with theta = m omega_alpha.

    Defined for irreducible systems not of type A; raises
    :class:`NotApplicable` for type A. Returns ``(index, m)`` with
    m in {1, 2}, verified through the Cartan pairings of theta.
    """
    if not P.is_irreducible():
        raise NotApplicable("highest root is defined for irreducible systems")
    if P.is_type_A():
        raise NotApplicable("type A excluded: theta is not a fundamental-"
                            "weight multiple")
    theta = P.highest_root
    coeffs = []
    for i in range(P.rank):
        unit = tuple(int(i == j) for j in range(P.rank))
        c = P.pairing(theta, unit)
        ci = int(round(c))
        if abs(c - ci) > _LEN_ATOL:
            raise InvalidPresentation("non-integral weight coordinate")
        coeffs.append(ci)
    nonzero = [(i, c) for i, c in enumerate(coeffs) if c != 0]
    if len(nonzero) != 1 or nonzero[0][1] not in (1, 2):
        raise InvalidPresentation(
            f"highest root has weight coordinates {coeffs}; expected a "
            "single 1 or 2")
    return nonzero[0]


def classify_component(P, nodes):
    """Classify the sub-diagram on ``nodes`` and return (label, ordered nodes).

    The ordering is canonical: chains run from the simply-laced end toward
    the multiple bond (types B and C), and type D puts the branch node in
    position rank-2. Used when extracting sub-presentations, where the
    type A defining representation needs a chain order.
    """
    nodes = list(nodes)
    k = len(nodes)
    if k == 1:
        return "A", nodes
    adj = {i: [j for j in nodes
               if j != i and P.cartan[i, j] != 0] for i in nodes}
    deg = {i: len(adj[i]) for i in nodes}
    branch = [i for i in nodes if deg[i] >= 3]
    if not branch:
        ends = [i for i in nodes if deg[i] == 1]
        if len(ends) != 2:
            raise InvalidPresentation("component is not a tree")
        start = min(ends)
        order = [start]
        while len(order) < k:
            nxt = [j for j in adj[order[-1]] if j not in order]
            order.extend(nxt)
        prods = [P.cartan[order[i], order[i + 1]] *
                 P.cartan[order[i + 1], order[i]] for i in range(k - 1)]
        if all(p == 1 for p in prods):
            return "A", order
        if sum(1 for p in prods if p == 2) == 1 and prods.count(1) == k - 2:
            if prods[0] == 2:
                order.reverse()
                prods.reverse()
            if prods[-1] != 2:
                raise InvalidPresentation("double bond not at the chain end")
            last, prev = order[-1], order[-2]
            unit = lambda i: tuple(int(i == j) for j in range(P.rank))
            if P.length2(unit(last)) < P.length2(unit(prev)) - _LEN_ATOL:
                return "B", order
            return "C", order
        raise InvalidPresentation("chain with unexpected bond multiplicities")
    if len(branch) == 1 and deg[branch[0]] == 3:
        b = branch[0]
        arms = []
        for first in adj[b]:
            arm, prev, cur = [first], b, first
            while deg[cur] == 2:
                nxt = [j for j in adj[cur] if j != prev][0]
                arm.append(nxt)
                prev, cur = cur, nxt
            arms.append(arm)
        arms.sort(key=len)
        if len(arms[0]) == 1 and len(arms[1]) == 1:
            long_arm = arms[2]
            order = list(reversed(long_arm)) + [b] + \
                sorted([arms[0][0], arms[1][0]])
            return "D", order
    raise InvalidPresentation("component is outside the supported families")


def sub_presentation(P, nodes):
    """Presentation of the sub-system generated by a subset of simple roots.

    Returns ``(subP, parent_nodes)`` where ``parent_nodes[i]`` is the parent
    simple-node index of the i-th sub-simple root (canonical order).
    """
    _, order = classify_component(P, nodes)
    label, _ = classify_component(P, nodes)
    subP = presentation_from_simple_roots(P.simple_eps[order], type_label=label)
    return subP, list(order)


def lift_root(sub_coords, parent_nodes, parent_rank):
    """Integer coordinates of a sub-system root inside the parent system."""
    out = [0] * parent_rank
    for m, node in zip(sub_coords, parent_nodes):
        out[node] += int(m)
    return tuple(out)

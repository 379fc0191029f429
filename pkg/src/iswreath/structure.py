"""Idempotent structure of cross-sections, isomorphism search, and conjugators.

Every isomorphism between R-cross-sections of IS_n is conjugation by a
permutation ``theta``: ``x alpha theta = x theta phi(alpha)``. For
IS_m wr_p IS_n the conjugating element is ``(vartheta, theta)`` in
S_m wr S_n. The extraction routines here build the witness from the
cross-section structure (block idempotents and their ``nu`` labels; the
``(0, a)`` outer layer; the per-block inner isomorphisms) and then check it.
If the construction is under-determined they fall back to a lexicographic
search over the finite candidate set.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from . import isn, wreath
from .config import DEFAULT_BOUNDS
from .cross_sections import (
    CrossSection,
    OrderedPartition,
    inverse_cross_section,
    isn_ambient,
    validate_cross_section,
)
from .errors import (
    NotCrossSection,
    NotIdempotent,
    NotIsomorphism,
    TheoremFalsified,
    TooLarge,
)
from .isn import PartialBijection
from .semigroup import FiniteSemigroup
from .wreath import WreathElement


# -- idempotents and block idempotents ------------------------------------------------

@dataclass(frozen=True)
class IdempotentPoset:
    elements: tuple
    leq: np.ndarray   # leq[i, j] iff elements[i] <= elements[j]

    @classmethod
    def of(cls, cs: CrossSection) -> IdempotentPoset:
        es = tuple(cs.idempotents())
        k = len(es)
        leq = np.zeros((k, k), dtype=bool)
        for i, e in enumerate(es):
            for j, f in enumerate(es):
                leq[i, j] = e * f == e and f * e == e
        return cls(es, leq)

    def le(self, e, f) -> bool:
        return bool(self.leq[self.elements.index(e), self.elements.index(f)])

    def is_partial_order(self) -> bool:
        L = self.leq
        refl = bool(L.diagonal().all())
        antisym = not bool((L & L.T & ~np.eye(len(L), dtype=bool)).any())
        trans = bool(((L.astype(int) @ L.astype(int) > 0) <= L).all())
        return refl and antisym and trans

    def minimum(self):
        for i, e in enumerate(self.elements):
            if self.leq[i].all():
                return e
        return None


def _zero_of(cs: CrossSection):
    if cs.ambient.kind == "isn":
        return isn.zero(cs.ambient.n)
    return wreath.w_zero(cs.ambient.m, cs.ambient.n)


def is_block_idempotent_order(e, cs: CrossSection) -> bool:
    """No two nonzero idempotents below ``e`` multiply to zero."""
    if not e.is_idempotent():
        raise NotIdempotent(f"{e} is not idempotent")
    z = _zero_of(cs)
    below = [f for f in cs.idempotents() if f != z and e * f == f and f * e == f]
    return not any(f1 * f2 == z for f1 in below for f2 in below)


def is_block_idempotent_definition(e: PartialBijection, op: OrderedPartition) -> bool:
    """``dom(e)`` lies inside a single block."""
    if not e.is_idempotent():
        raise NotIdempotent(f"{e} is not idempotent")
    d = e.dom
    return any(d <= set(b) for b in op.blocks)


def is_block_idempotent(e, cs: CrossSection, method: str = "order") -> bool:
    if method == "order":
        return is_block_idempotent_order(e, cs)
    if method == "definition":
        op = cs.partition if cs.partition is not None else recover_partition(cs)
        return is_block_idempotent_definition(e, op)
    raise ValueError(f"unknown method {method!r}")


def block_idempotents(cs: CrossSection) -> list:
    return [e for e in cs.idempotents() if is_block_idempotent_order(e, cs)]


def recover_partition(cs: CrossSection) -> OrderedPartition:
    """Read the ordered partition off the block idempotents.

    Blocks are the domains of the maximal block idempotents. Inside a block
    the block idempotent domains are the upper segments ``{x_j, ..., x_k}``,
    so the ``j``-th point lies in exactly ``j`` of them.
    """
    if cs.ambient.kind != "isn":
        raise NotCrossSection("partition recovery needs an IS_n cross-section")
    if cs.kind == "L":
        cs = inverse_cross_section(cs)
    diag = validate_cross_section(cs.elements, cs.ambient, "R")
    if not diag:
        raise NotCrossSection(str(diag))
    n = cs.ambient.n
    doms = [e.dom for e in block_idempotents(cs) if e.dom]
    maximal = [d for d in doms if not any(d < other for other in doms)]
    blocks = []
    for d in maximal:
        inside = [other for other in doms if other <= d]
        depth = {x: sum(1 for other in inside if x in other) for x in d}
        blocks.append(tuple(sorted(d, key=depth.__getitem__)))
    return OrderedPartition(n, tuple(blocks))


# -- isomorphism search -----------------------------------------------------------------

def element_profiles(S: FiniteSemigroup) -> list[tuple]:
    """Isomorphism-invariant fingerprint of each element.

    (idempotent, index, period, |xS|, |Sx|, |xSx|, #{y: xy = y}, #{y: yx = y})
    """
    t = S.table
    k = len(S)
    out = []
    ar = np.arange(k)
    for x in range(k):
        seen = {}
        p, i = x, 1
        while p not in seen:
            seen[p] = i
            p = S.rows[p][x]
            i += 1
        index = seen[p]
        period = i - index
        xS = set(S.rows[x])
        Sx = set(t[:, x].tolist())
        xSx = {S.rows[y][x] for y in xS}
        out.append((
            S.rows[x][x] == x,
            index,
            period,
            len(xS),
            len(Sx),
            len(xSx),
            int((t[x] == ar).sum()),
            int((t[:, x] == ar).sum()),
        ))
    return out


def find_isomorphisms(S: FiniteSemigroup, T: FiniteSemigroup, limit: int | None = None,
                      max_size: int | None = None) -> list[tuple[int, ...]]:
    """All bijections ``phi`` (as index tuples) with ``phi(xy) = phi(x)phi(y)``.

    Backtracking with profile-compatible candidates; every assignment is closed
    under products with the already-assigned elements before branching again.
    Results are in lexicographic order of the tuples.
    """
    bound = DEFAULT_BOUNDS.max_iso_size if max_size is None else max_size
    k = len(S)
    if max(k, len(T)) > bound:
        raise TooLarge(f"semigroup of size {max(k, len(T))} exceeds max_iso_size={bound}")
    if k != len(T):
        return []
    ps, pt = element_profiles(S), element_profiles(T)
    if sorted(ps) != sorted(pt):
        return []
    cands = [[j for j in range(k) if pt[j] == ps[i]] for i in range(k)]
    order = sorted(range(k), key=lambda i: (len(cands[i]), i))
    Sr, Tr = S.rows, T.rows
    results: list[tuple[int, ...]] = []

    def extend(phi, inv, assigned, i, j) -> bool:
        phi[i], inv[j] = j, i
        queue = [i]
        assigned.append(i)
        while queue:
            x = queue.pop()
            for u in list(assigned):
                for s, t in ((Sr[x][u], Tr[phi[x]][phi[u]]), (Sr[u][x], Tr[phi[u]][phi[x]])):
                    if phi[s] == -1:
                        if inv[t] != -1 or ps[s] != pt[t]:
                            return False
                        phi[s], inv[t] = t, s
                        assigned.append(s)
                        queue.append(s)
                    elif phi[s] != t:
                        return False
        return True

    def search(phi, inv, assigned):
        if limit is not None and len(results) >= limit:
            return
        nxt = next((i for i in order if phi[i] == -1), None)
        if nxt is None:
            results.append(tuple(phi))
            return
        for j in cands[nxt]:
            if inv[j] != -1:
                continue
            phi2, inv2, as2 = phi[:], inv[:], assigned[:]
            if extend(phi2, inv2, as2, nxt, j):
                search(phi2, inv2, as2)

    search([-1] * k, [-1] * k, [])
    return sorted(results)


def is_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup, phi: Sequence[int]) -> bool:
    k = len(S)
    if k != len(T) or sorted(phi) != list(range(k)):
        return False
    p = np.asarray(phi)
    return bool(np.array_equal(p[S.table], T.table[np.ix_(p, p)]))


def cross_section_isomorphisms(cs1: CrossSection, cs2: CrossSection, limit: int | None = None) -> list[dict]:
    """Isomorphisms between two cross-sections, as element dicts."""
    S, T = cs1.semigroup, cs2.semigroup
    return [
        {S.elements[i]: T.elements[j] for i, j in enumerate(phi)}
        for phi in find_isomorphisms(S, T, limit=limit)
    ]


def _check_is_isomorphism(cs1: CrossSection, cs2: CrossSection, phi: Mapping) -> None:
    if set(phi) != cs1.element_set or set(phi.values()) != cs2.element_set or len(cs1) != len(cs2):
        raise NotIsomorphism("map is not a bijection between the two cross-sections")
    for x in cs1.elements:
        for y in cs1.elements:
            if phi[x * y] != phi[x] * phi[y]:
                raise NotIsomorphism(f"phi({x} * {y}) != phi({x}) * phi({y})")


# -- conjugators ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Conjugator:
    """``theta`` in one-line form (``theta[x-1]`` is the image of ``x``);
    ``vartheta[x-1]`` is the S_m component at ``x`` in the wreath case."""

    theta: tuple[int, ...]
    vartheta: tuple[tuple[int, ...], ...] | None = None
    via: str = "construction"

    def to_json(self) -> dict:
        return {
            "theta": list(self.theta),
            "vartheta": None if self.vartheta is None else [list(p) for p in self.vartheta],
        }

    def as_wreath_element(self, m: int) -> WreathElement:
        n = len(self.theta)
        return WreathElement(m, n, isn.from_permutation(self.theta),
                             tuple(isn.from_permutation(p) for p in self.vartheta))


def check_conjugacy_isn(theta: Sequence[int], phi: Mapping) -> tuple | None:
    """First ``(alpha, x)`` breaking ``x alpha theta = x theta phi(alpha)``, or None."""
    for alpha, beta in phi.items():
        for x in range(1, alpha.n + 1):
            xt = theta[x - 1]
            left, right = alpha(x), beta(xt)
            if (left is None) != (right is None):
                return (alpha, x)
            if left is not None and theta[left - 1] != right:
                return (alpha, x)
    return None


def _to_r_problem(R1: CrossSection, R2: CrossSection, phi: Mapping, inv):
    """Replace L-cross-sections by their inverses; the witness is unchanged."""
    if R1.kind == "R" and R2.kind == "R":
        return R1, R2, phi
    if R1.kind != R2.kind:
        raise NotIsomorphism("cannot compare an R-cross-section with an L-cross-section")
    return (inverse_cross_section(R1), inverse_cross_section(R2),
            {inv(x): inv(y) for x, y in phi.items()})


def _order_position(op: OrderedPartition) -> dict[int, int]:
    return {x: j for b in op.blocks for j, x in enumerate(b)}


def _nu_construction(R1: CrossSection, R2: CrossSection, phi: Mapping) -> tuple[int, ...] | None:
    n = R1.ambient.n
    op1, op2 = recover_partition(R1), recover_partition(R2)
    pos2 = _order_position(op2)
    theta = [0] * n
    for block in op1.blocks:
        for j, x in enumerate(block):
            e = isn.id_on(n, block[j:])        # nu_1(e) = x
            img = phi.get(e)
            if img is None or not img.is_idempotent() or not img.dom:
                return None
            if not is_block_idempotent_definition(img, op2):
                return None
            theta[x - 1] = min(img.dom, key=pos2.__getitem__)   # nu_2(phi(e))
    if sorted(theta) != list(range(1, n + 1)):
        return None
    return tuple(theta)


def conjugator_isn(R1: CrossSection, R2: CrossSection, phi: Mapping) -> Conjugator:
    """Permutation ``theta`` with ``phi(alpha) = theta^-1 alpha theta`` for all alpha in R1."""
    _check_is_isomorphism(R1, R2, phi)
    R1, R2, phi = _to_r_problem(R1, R2, phi, isn.inverse)
    theta = _nu_construction(R1, R2, phi)
    if theta is not None and check_conjugacy_isn(theta, phi) is None:
        return Conjugator(theta)
    for perm in itertools.permutations(range(1, R1.ambient.n + 1)):
        if check_conjugacy_isn(perm, phi) is None:
            return Conjugator(tuple(perm), via="search")
    raise TheoremFalsified(f"no permutation conjugates the isomorphism {R1.partition} -> {R2.partition}")


def check_conjugacy_wreath(theta: Sequence[int], vartheta: Sequence[Sequence[int]], phi: Mapping) -> tuple | None:
    """First ``((f, a), x)`` violating the component conditions, or None.

    For ``(g, b) = phi((f, a))``: ``dom b = theta(dom a)``, and for x in dom a,
    ``(xa)theta = (x theta)b`` and ``g(x theta) = vartheta(x)^-1 f(x) vartheta(xa)``.
    """
    vt = [isn.from_permutation(p) for p in vartheta]
    vt_inv = [isn.inverse(p) for p in vt]
    for p, q in phi.items():
        a, b = p.a, q.a
        if frozenset(theta[x - 1] for x in a.dom) != b.dom:
            return (p, None)
        for x in a.dom:
            xa = a(x)
            xt = theta[x - 1]
            if theta[xa - 1] != b(xt):
                return (p, x)
            if q.f[xt - 1] != vt_inv[x - 1] * p.f[x - 1] * vt[xa - 1]:
                return (p, x)
    return None


def _outer_layer(R: CrossSection) -> dict[PartialBijection, WreathElement]:
    """``e'R``: the elements ``(0, a)``, keyed by their outer part."""
    z = isn.zero(R.ambient.m)
    return {p.a: p for p in R.elements if all(v == z for v in p.f if v is not None)}


def _wreath_construction(R1: CrossSection, R2: CrossSection, phi: Mapping):
    m, n = R1.ambient.m, R1.ambient.n
    full = frozenset(range(1, m + 1))

    # the idempotent (0, 1) is fixed by every isomorphism
    e0 = WreathElement(m, n, isn.identity(n), (isn.zero(m),) * n)
    if e0 not in R1 or phi.get(e0) != e0:
        return None

    # theta from the induced isomorphism of the outer cross-sections
    out1, out2 = _outer_layer(R1), _outer_layer(R2)
    phi1 = {a: phi[p].a for a, p in out1.items()}
    if set(phi1.values()) != set(out2):
        return None
    C1 = CrossSection("R", isn_ambient(n), tuple(out1))
    C2 = CrossSection("R", isn_ambient(n), tuple(out2))
    try:
        theta = conjugator_isn(C1, C2, phi1).theta
    except NotIsomorphism:
        return None

    vartheta: list = [None] * n
    for block in recover_partition(C1).blocks:
        top = block[-1]
        ttop = theta[top - 1]
        # inner isomorphism at the top point, from the elements (f, id_{top})
        sigma = {}
        for p in R1.elements:
            if p.a.dom == {top}:
                q = phi[p]
                if q.a.dom != {ttop}:
                    return None
                sigma[p.f[top - 1]] = q.f[ttop - 1]
        I1 = CrossSection("R", isn_ambient(m), tuple(sigma))
        I2 = CrossSection("R", isn_ambient(m), tuple(sigma.values()))
        try:
            vt_top = isn.from_permutation(conjugator_isn(I1, I2, sigma).theta)
        except NotIsomorphism:
            return None
        vartheta[top - 1] = vt_top
        # tau elements: domain {x}, x -> top, full inner domain at x
        for x in block[:-1]:
            tau = next((p for p in R1.elements
                        if p.a.dom == {x} and p.f[x - 1].dom == full), None)
            if tau is None:
                return None
            g = phi[tau].f[theta[x - 1] - 1]
            if g is None or not g.is_permutation():
                return None
            vartheta[x - 1] = tau.f[x - 1] * vt_top * isn.inverse(g)
    return tuple(theta), tuple(v.images for v in vartheta)


def conjugator_wreath(R1: CrossSection, R2: CrossSection, phi: Mapping) -> Conjugator:
    """``(vartheta, theta)`` in S_m wr S_n with ``phi(p) = Theta^-1 p Theta``."""
    _check_is_isomorphism(R1, R2, phi)
    R1, R2, phi = _to_r_problem(R1, R2, phi, wreath.w_inverse)
    m, n = R1.ambient.m, R1.ambient.n
    built = _wreath_construction(R1, R2, phi)
    if built is not None and check_conjugacy_wreath(*built, phi) is None:
        return Conjugator(*built)
    inner_perms = list(itertools.permutations(range(1, m + 1)))
    for theta in itertools.permutations(range(1, n + 1)):
        for vartheta in itertools.product(inner_perms, repeat=n):
            if check_conjugacy_wreath(theta, vartheta, phi) is None:
                return Conjugator(tuple(theta), tuple(vartheta), via="search")
    raise TheoremFalsified("no element of S_m wr S_n conjugates the isomorphism")


def conjugate(p: WreathElement, c: Conjugator) -> WreathElement:
    """``Theta^-1 p Theta`` computed in the wreath product."""
    T = c.as_wreath_element(p.m)
    return wreath.w_inverse(T) * p * T


# -- N_e counts -------------------------------------------------------------------------------

def count_N_e(e: WreathElement, R: CrossSection) -> int:
    """``|N_e n R| = prod_{x in dom(a_e)} (1 + 2^|dom f_e(x)|)`` (closed form)."""
    if not e.is_idempotent() or e not in R:
        raise NotIdempotent(f"{e} is not an idempotent of the cross-section")
    out = 1
    for x in e.a.dom:
        out *= 1 + 2 ** len(e.f[x - 1].dom)
    return out


def count_N_e_direct(e: WreathElement, R: CrossSection) -> int:
    """``#{z in R : e z = z}`` by direct multiplication."""
    if not e.is_idempotent():
        raise NotIdempotent(f"{e} is not idempotent")
    return sum(1 for z in R.elements if e * z == z)

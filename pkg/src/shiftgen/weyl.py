"""Finite Weyl group enumeration, dot action, affine linkage, alcove tests.

Elements act on fundamental-weight coordinates as integer matrices.  The
affine group here is W_p = W . p Z Phi (dot action on weights = ordinary
affine action on lam + rho), and the extended group replaces the root
lattice by the full weight lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rootsys import ResourceError, RootSystemData, pairing

DEFAULT_WEYL_CAP = 10**6


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _mat_vec(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def simple_reflection_matrix(rs: RootSystemData, i: int):
    """Matrix of s_i on fundamental coordinates: v -> v - v_i * alpha_i."""
    n = rs.rank
    return tuple(
        tuple(int(k == j) - (rs.cartan[k][i] if j == i else 0) for j in range(n))
        for k in range(n)
    )


@dataclass(frozen=True)
class WeylElement:
    matrix: tuple[tuple[int, ...], ...]
    length: int
    word: tuple[int, ...]

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def apply(self, v):
        return _mat_vec(self.matrix, v)


def enumerate_weyl(rs: RootSystemData, cap: int = DEFAULT_WEYL_CAP):
    """Yield every Weyl element once, breadth-first by length.

    Refuses up front when the known group order exceeds the cap (E8 needs an
    explicitly raised cap).
    """
    if rs.weyl_order > cap:
        raise ResourceError(
            f"Weyl group of {rs.type_label} has {rs.weyl_order} elements, "
            f"exceeding the cap {cap}; raise the cap explicitly to enumerate"
        )
    n = rs.rank
    gens = [simple_reflection_matrix(rs, i) for i in range(n)]
    ident = WeylElement(matrix=_identity(n), length=0, word=())
    seen = {ident.matrix}
    frontier = [ident]
    yield ident
    while frontier:
        nxt = []
        for w in frontier:
            for i, s in enumerate(gens):
                m = _mat_mul(s, w.matrix)
                if m not in seen:
                    seen.add(m)
                    el = WeylElement(matrix=m, length=w.length + 1, word=(i,) + w.word)
                    nxt.append(el)
                    yield el
        frontier = nxt


def dot_action_matrix(rs: RootSystemData, matrix, lam):
    """w.(lam) = w(lam + rho) - rho for a linear part given as a matrix."""
    shifted = tuple(x + 1 for x in lam)
    img = _mat_vec(matrix, shifted)
    return tuple(x - 1 for x in img)


def dot_action(rs: RootSystemData, w: WeylElement, lam):
    return dot_action_matrix(rs, w.matrix, lam)


@dataclass(frozen=True)
class AffineWitness:
    """Affine map x -> matrix @ x + p * translation (fundamental coords)."""

    matrix: tuple[tuple[int, ...], ...]
    translation: tuple[int, ...]
    p: int

    def apply(self, v):
        return tuple(
            x + self.p * t for x, t in zip(_mat_vec(self.matrix, v), self.translation)
        )

    def dot(self, lam):
        """Dot action: apply to lam + rho, subtract rho."""
        img = self.apply(tuple(x + 1 for x in lam))
        return tuple(x - 1 for x in img)


@dataclass(frozen=True)
class LinkageResult:
    linked: bool
    witness: AffineWitness | None


def _alcove_reduce(rs: RootSystemData, v, p: int):
    """Reduce v into the closure of the fundamental p-alcove.

    Returns (rep, f) with f an AffineWitness in W . p Z Phi and rep = f(v).
    Wall reflections strictly decrease the squared norm, so the loop
    terminates; ties (which wall first) are broken by lowest index.
    """
    n = rs.rank
    mat = _identity(n)
    trans = tuple(0 for _ in range(n))
    cur = tuple(v)
    alpha0_fund = rs.fundamental_coords_of_root(rs.alpha0)
    refl0 = _reflection_matrix(rs, rs.alpha0, rs.alpha0_coroot)
    while True:
        neg = next((i for i in range(n) if cur[i] < 0), None)
        if neg is not None:
            s = simple_reflection_matrix(rs, neg)
            cur = _mat_vec(s, cur)
            mat = _mat_mul(s, mat)
            trans = _mat_vec(s, trans)
            continue
        k = pairing(rs, cur, rs.alpha0_coroot)
        if k > p:
            # reflect across the affine wall (., alpha0^vee) = p
            cur = tuple(x - (k - p) * a for x, a in zip(cur, alpha0_fund))
            off = _mat_vec(refl0, trans)
            mat = _mat_mul(refl0, mat)
            trans = tuple(o + a for o, a in zip(off, alpha0_fund))
            continue
        return cur, AffineWitness(matrix=mat, translation=trans, p=p)


def _reflection_matrix(rs: RootSystemData, root, coroot):
    """Reflection through a (non-simple) root, on fundamental coordinates."""
    n = rs.rank
    fund = rs.fundamental_coords_of_root(root)
    return tuple(
        tuple(int(k == j) - fund[k] * coroot[j] for j in range(n)) for k in range(n)
    )


def _invert_affine(f: AffineWitness) -> AffineWitness:
    n = len(f.matrix)
    # integer matrix with det +-1; invert exactly
    aug = [
        [Fraction(f.matrix[i][j]) for j in range(n)]
        + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                fac = aug[r][col]
                aug[r] = [x - fac * y for x, y in zip(aug[r], aug[col])]
    minv = tuple(tuple(int(aug[i][n + j]) for j in range(n)) for i in range(n))
    # (Mx + p t)^{-1} : y -> M^{-1} y - p M^{-1} t
    mt = _mat_vec(minv, f.translation)
    return AffineWitness(matrix=minv, translation=tuple(-x for x in mt), p=f.p)


def _compose_affine(g: AffineWitness, f: AffineWitness) -> AffineWitness:
    # (g o f)(x) = Mg (Mf x + p tf) + p tg
    m = _mat_mul(g.matrix, f.matrix)
    t = tuple(a + b for a, b in zip(_mat_vec(g.matrix, f.translation), g.translation))
    return AffineWitness(matrix=m, translation=t, p=g.p)


def linked_Wp(rs: RootSystemData, lam, mu, p: int) -> LinkageResult:
    """Decide whether lam is in the W_p dot-orbit of mu, with a witness.

    Both lam + rho and mu + rho are reduced to the canonical representative
    in the closure of the fundamental p-alcove; linked iff they agree.  The
    witness w satisfies w.(mu) = lam (dot action).
    """
    rep_l, f_l = _alcove_reduce(rs, tuple(x + 1 for x in lam), p)
    rep_m, f_m = _alcove_reduce(rs, tuple(x + 1 for x in mu), p)
    if rep_l != rep_m:
        return LinkageResult(linked=False, witness=None)
    w = _compose_affine(_invert_affine(f_l), f_m)
    assert w.dot(mu) == tuple(lam)
    return LinkageResult(linked=True, witness=w)


def conjugate_to_zero_ext(rs: RootSystemData, mu, p: int, cap: int = DEFAULT_WEYL_CAP):
    """Witness (w, tau) with mu = w.0 + p*tau, tau in X, if one exists.

    Searches the finite Weyl group: mu is extended-affinely dot-conjugate to
    0 iff mu + rho is congruent to w(rho) mod pX for some w.
    """
    if not rs.is_dominant(mu):
        raise ValueError(f"weight {mu} is not dominant")
    target = tuple(x + 1 for x in mu)
    for w in enumerate_weyl(rs, cap):
        wrho = w.apply(rs.rho)
        diff = tuple(a - b for a, b in zip(target, wrho))
        if all(d % p == 0 for d in diff):
            tau = tuple(d // p for d in diff)
            return w, tau
    return None


def extended_conjugate_witness(rs: RootSystemData, lam, mu, p: int, cap: int = DEFAULT_WEYL_CAP):
    """Witness (w, tau) with lam = w.(mu) + p*tau, tau in X, if one exists."""
    target = tuple(x + 1 for x in lam)
    for w in enumerate_weyl(rs, cap):
        img = w.apply(tuple(x + 1 for x in mu))
        diff = tuple(a - b for a, b in zip(target, img))
        if all(d % p == 0 for d in diff):
            return w, tuple(d // p for d in diff)
    return None


def find_nu_small_conjugate(
    rs: RootSystemData, mu_prime, p: int, b: int, cap: int = DEFAULT_WEYL_CAP
):
    """The unique dominant b-small extended-conjugate of mu_prime, or None.

    Requires p > 2b + h, the regime in which at most one such weight exists;
    a double hit raises, since it would contradict that uniqueness.
    """
    if p <= 2 * b + rs.h:
        raise ValueError(f"need p > 2b + h = {2 * b + rs.h}, got p = {p}")
    hits = []
    for nu in dominant_weights_up_to(rs, b):
        if extended_conjugate_witness(rs, nu, mu_prime, p, cap) is not None:
            hits.append(nu)
            if len(hits) > 1:
                raise AssertionError(
                    f"two b-small conjugates {hits} of {mu_prime} with p > 2b+h"
                )
    return hits[0] if hits else None


def dominant_weights_up_to(rs: RootSystemData, b: int):
    """All dominant weights with pairing against the highest coroot <= b."""
    coeffs = rs.alpha0_coroot
    out = []

    def rec(prefix, remaining, idx):
        if idx == rs.rank:
            out.append(tuple(prefix))
            return
        step = coeffs[idx]
        for x in range(remaining // step + 1):
            rec(prefix + [x], remaining - step * x, idx + 1)

    rec([], b, 0)
    return out


def alcove_tests(rs: RootSystemData, lam, p: int) -> dict:
    """Lowest-alcove closure, Jantzen region, and p-regularity flags."""
    lam_rho = tuple(x + 1 for x in lam)
    level = pairing(rs, lam_rho, rs.alpha0_coroot)
    regular = all(
        pairing(rs, lam_rho, cv) % p != 0 for cv in rs.positive_coroots
    )
    return {
        "in_closure_lowest_alcove": level <= p,
        "in_jantzen_region": level <= p * (p - rs.h + 2),
        "p_regular": regular,
    }

"""Graded Kostant partition function, Weyl dimension formula, and the
large-prime cohomology dimension sum.

The graded count p_j(nu) is the number of multisets of exactly j positive
roots summing to nu; the ungraded partition function is its sum over j.
Arguments outside the root lattice count 0, which is the convention that
makes the alternating Weyl sum total well defined for every dominant weight.
"""

from __future__ import annotations

from fractions import Fraction

from .rootsys import ResourceError, RootSystemData, pairing
from .weyl import DEFAULT_WEYL_CAP, dot_action, enumerate_weyl

MEMO_CAP = 2_000_000


class _GradedCounter:
    def __init__(self, rs: RootSystemData):
        self.roots = rs.positive_roots
        self.memo: dict = {}

    def count(self, idx: int, nu: tuple[int, ...], j: int) -> int:
        if any(x < 0 for x in nu):
            return 0
        if j == 0:
            return 1 if all(x == 0 for x in nu) else 0
        if idx == len(self.roots):
            return 0
        if sum(nu) < j:  # each root has height >= 1
            return 0
        key = (idx, nu, j)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if len(self.memo) >= MEMO_CAP:
            raise ResourceError(f"partition memo table exceeded {MEMO_CAP} entries")
        root = self.roots[idx]
        without = self.count(idx + 1, nu, j)
        reduced = tuple(a - b for a, b in zip(nu, root))
        with_it = self.count(idx, reduced, j - 1)
        self.memo[key] = val = without + with_it
        return val


def kostant_graded(rs: RootSystemData, nu, j: int) -> int:
    """Number of multisets of exactly j positive roots summing to nu.

    nu is given in simple-root coordinates and must be integral.
    """
    rs._check_dim(nu)
    if j < 0:
        raise ValueError("part count j must be >= 0")
    if any(x != int(x) for x in nu):
        raise ValueError(f"{nu} is not in the root lattice")
    return _GradedCounter(rs).count(0, tuple(int(x) for x in nu), j)


def _root_coords_or_none(rs: RootSystemData, lam):
    coords = rs.root_coords(lam)
    if any(x.denominator != 1 for x in coords):
        return None
    return tuple(int(x) for x in coords)


def appendix_dimension(rs: RootSystemData, mu, m: int, p: int, cap: int = DEFAULT_WEYL_CAP):
    """Alternating Weyl sum for dim H^m of the finite group at q = p.

    Zero in odd degree; in even degree, sum of det(w) * p_{m/2}(w.(mu)) over
    the Weyl group, with non-root-lattice or negative arguments counting 0.
    Returns (value, validity flags for the large-prime regime).
    """
    if not rs.is_dominant(mu):
        raise ValueError(f"weight {mu} is not dominant")
    if m < 0:
        raise ValueError("m must be >= 0")
    level = pairing(rs, tuple(x + 1 for x in mu), rs.alpha0_coroot)
    flags = {
        "p_above_collapse": p > 12 * m + 13 * rs.h - 16,
        "p_above_alcove_level": p >= pairing(rs, mu, rs.alpha0_coroot) + rs.h - 1,
        "mu_in_lowest_alcove_closure": level <= p,
    }
    if m % 2 == 1:
        return 0, flags
    counter = _GradedCounter(rs)
    total = 0
    for w in enumerate_weyl(rs, cap):
        img = dot_action(rs, w, mu)
        coords = _root_coords_or_none(rs, img)
        if coords is None or any(x < 0 for x in coords):
            continue
        total += w.sign * counter.count(0, coords, m // 2)
    return total, flags


def weyl_dimension(rs: RootSystemData, lam) -> int:
    """Product formula dimension of the costandard module, exact."""
    if not rs.is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    lam_rho = tuple(x + 1 for x in lam)
    result = Fraction(1)
    for cv in rs.positive_coroots:
        result *= Fraction(pairing(rs, lam_rho, cv), pairing(rs, rs.rho, cv))
    assert result.denominator == 1 and result > 0
    return int(result)

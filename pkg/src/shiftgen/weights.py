"""Weight arithmetic: digits, shifts, smallness, restriction, lattice order.

Weights are tuples of ints in the fundamental-weight basis.  A weight is
``p^r``-restricted iff every coordinate lies in ``[0, p^r)``, so the p-adic
digit expansion is just the componentwise base-p expansion; the digit list
carries an explicit length ``r`` because the cyclic shift action depends
on it.

The shift ``lam^[e]`` over ``q = p^r`` is implemented as cyclic rotation of
the r digits by e.  (The representation-theoretic definition goes through
restriction to the finite torus; rotation is the combinatorial
characterization and is what everything downstream uses.)
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .rootsys import RootSystemData, pairing


@dataclass(frozen=True)
class DigitExpansion:
    p: int
    digits: tuple[tuple[int, ...], ...]  # each entry p-restricted

    @property
    def r(self) -> int:
        return len(self.digits)

    def reconstruct(self) -> tuple[int, ...]:
        rank = len(self.digits[0]) if self.digits else 0
        out = [0] * rank
        for i, d in enumerate(self.digits):
            for k in range(rank):
                out[k] += d[k] * self.p**i
        return tuple(out)


def is_restricted(rs: RootSystemData, lam, p: int, r: int) -> bool:
    """True iff lam is p^r-restricted (componentwise in [0, p^r))."""
    rs._check_dim(lam)
    bound = p**r
    return all(0 <= x < bound for x in lam)


def _require_restricted(rs, lam, p, r, name="weight"):
    if not is_restricted(rs, lam, p, r):
        raise ValueError(f"{name} {lam} is not {p}^{r}-restricted")


def minimal_digit_length(rs: RootSystemData, lam, p: int) -> int:
    if not rs.is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    r = 0
    while not is_restricted(rs, lam, p, r):
        r += 1
    return r


def digit_expand(rs: RootSystemData, lam, p: int, r: int | None = None) -> DigitExpansion:
    """Base-p digit weights of a dominant weight, with explicit length r."""
    if not rs.is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    if r is None:
        r = minimal_digit_length(rs, lam, p)
    else:
        _require_restricted(rs, lam, p, r)
    rem = list(lam)
    digits = []
    for _ in range(r):
        digits.append(tuple(x % p for x in rem))
        rem = [x // p for x in rem]
    assert all(x == 0 for x in rem)
    return DigitExpansion(p=p, digits=tuple(digits))


def q_shift(rs: RootSystemData, lam, p: int, r: int, e: int) -> tuple[int, ...]:
    """Cyclic rotation of the r digits by e; a Z/rZ action on X+_r."""
    if e < 0:
        raise ValueError("shift amount must be non-negative")
    exp = digit_expand(rs, lam, p, r)
    if r == 0:
        return lam
    e %= r
    rotated = exp.digits[-e:] + exp.digits[:-e] if e else exp.digits
    return DigitExpansion(p=p, digits=rotated).reconstruct()


def digit_difference(rs: RootSystemData, lam, mu, p: int, r: int) -> int:
    """Number of digit positions (among the first r) where lam and mu differ."""
    a = digit_expand(rs, lam, p, r).digits
    b = digit_expand(rs, mu, p, r).digits
    return sum(1 for x, y in zip(a, b) if x != y)


def common_zero_runs(rs: RootSystemData, lam, mu, p: int, r: int, epsilon: int = 0):
    """Maximal runs of positions >= epsilon where both digit lists are zero.

    Returns a list of (start, length) pairs in increasing start order.
    """
    a = digit_expand(rs, lam, p, r).digits
    b = digit_expand(rs, mu, p, r).digits
    zero = tuple(0 for _ in range(rs.rank))
    runs = []
    i = epsilon
    while i < r:
        if a[i] == zero and b[i] == zero:
            j = i
            while j < r and a[j] == zero and b[j] == zero:
                j += 1
            runs.append((i, j - i))
            i = j
        else:
            i += 1
    return runs


def longest_common_zero_run(rs: RootSystemData, lam, mu, p: int, r: int, epsilon: int = 0):
    """Leftmost longest common zero run at positions >= epsilon.

    Returns (start, length); (r, 0) when no common zero digit exists there.
    """
    runs = common_zero_runs(rs, lam, mu, p, r, epsilon)
    if not runs:
        return (r, 0)
    best = max(run[1] for run in runs)
    return next(run for run in runs if run[1] == best)


def is_b_small(rs: RootSystemData, lam, b: int) -> bool:
    """True iff |(lam, beta^vee)| <= b for every positive coroot.

    For dominant lam this is equivalent to the single test against the
    highest coroot, which callers may use as a shortcut.
    """
    if rs.is_dominant(lam):
        return pairing(rs, lam, rs.alpha0_coroot) <= b
    return all(abs(pairing(rs, lam, cv)) <= b for cv in rs.positive_coroots)


def is_b_small_exhaustive(rs: RootSystemData, lam, b: int) -> bool:
    """The definition, checked over all positive coroots (test oracle)."""
    return all(abs(pairing(rs, lam, cv)) <= b for cv in rs.positive_coroots)


def lattice_order(rs: RootSystemData, lam, p: int | None = None):
    """Order data of lam in X/Z.Phi.

    Returns (t_lambda, t_p_lambda, c_bar_lambda) where t_lambda is the order
    of lam modulo the root lattice, t_p_lambda its p-part (1 when p is None)
    and c_bar_lambda the maximal simple-root coefficient of t*lam with t the
    global torsion exponent.
    """
    coords = rs.root_coords(lam)
    t_lam = lcm(*(x.denominator for x in coords)) if coords else 1
    t_p = 1
    if p is not None:
        while t_lam % (t_p * p) == 0:
            t_p *= p
    bar = [x * rs.t for x in coords]
    assert all(x.denominator == 1 for x in bar)
    c_bar = max((int(x) for x in bar), default=0) if any(bar) else 0
    return t_lam, t_p, c_bar


def dominance_leq(rs: RootSystemData, mu, lam) -> bool:
    """True iff lam - mu is a non-negative integer sum of simple roots."""
    diff = tuple(a - b for a, b in zip(lam, mu))
    coords = rs.root_coords(diff)
    return all(x.denominator == 1 and x >= 0 for x in coords)


def parse_weight(text: str, rank: int | None = None) -> tuple[int, ...]:
    """Parse the bracketed comma-separated weight literal, e.g. "[2,0,1]"."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"weight literal must be bracketed: {text!r}")
    body = s[1:-1].strip()
    coords = tuple(int(x) for x in body.split(",")) if body else ()
    if rank is not None and len(coords) != rank:
        raise ValueError(f"weight {text!r} has {len(coords)} coords, expected {rank}")
    return coords


def format_weight(lam) -> str:
    return "[" + ",".join(str(x) for x in lam) + "]"

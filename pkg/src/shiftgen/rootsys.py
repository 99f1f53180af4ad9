"""Immutable root-system data for the irreducible types, exact arithmetic only.

Conventions (documented for the whole package):
  * Simple roots are numbered as in the Bourbaki planches.
  * Roots are stored in simple-root coordinates, coroots in simple-coroot
    coordinates, weights in fundamental-weight coordinates.
  * The Cartan matrix entry ``cartan[i][j]`` is the pairing of the j-th
    simple root with the i-th simple coroot, so for a weight ``lam`` in
    fundamental coordinates the simple-root coordinates are
    ``cartan^{-1} @ lam`` (computed with Fractions, never floats).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm


class ResourceError(RuntimeError):
    """Raised when an enumeration would exceed its explicit cap."""


_LEGAL_RANKS = {
    "A": range(1, 9),
    "B": range(2, 9),
    "C": range(2, 9),
    "D": range(4, 9),
    "E": range(6, 9),
    "F": range(4, 5),
    "G": range(2, 3),
}


def _cartan_matrix(series: str, n: int) -> list[list[int]]:
    # Entry [i][j] = (alpha_j, alpha_i^vee); transpose of the tables that
    # list (alpha_i, alpha_j^vee).  The two agree off the B/C/F/G arrows.
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i, j, vij=-1, vji=-1):
        # vij = (alpha_j, alpha_i^vee), vji = (alpha_i, alpha_j^vee)
        a[i][j] = vij
        a[j][i] = vji

    if series in ("A", "B", "C"):
        for i in range(n - 1):
            edge(i, i + 1)
        if series == "B" and n >= 2:
            # alpha_n short: (alpha_{n-1}, alpha_n^vee) = -2
            a[n - 1][n - 2] = -2
        if series == "C" and n >= 2:
            # alpha_n long: (alpha_n, alpha_{n-1}^vee) = -2
            a[n - 2][n - 1] = -2
    elif series == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
    elif series == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for i, j in zip(chain, chain[1:]):
            edge(i, j)
        edge(1, 3)
    elif series == "F":
        edge(0, 1)
        edge(2, 3)
        # alpha_2 long, alpha_3 short:
        # [1][2] = (alpha_3, alpha_2^vee) = -1, [2][1] = (alpha_2, alpha_3^vee) = -2
        edge(1, 2, vij=-1, vji=-2)
    elif series == "G":
        # alpha_1 short, alpha_2 long
        a[0][1] = -3  # (alpha_2, alpha_1^vee)
        a[1][0] = -1  # (alpha_1, alpha_2^vee)
    return a


def _invert_rational(mat: list[list[int]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _symmetrizer(cartan: list[list[int]]) -> list[Fraction]:
    # d_i with d_i * cartan[i][j] = d_j * cartan[j][i]; normalized so min d = 1
    # (short roots have squared length 2).
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                stack.append(j)
    lo = min(d)  # type: ignore[type-var]
    return [x / lo for x in d]  # type: ignore[union-attr]


def _positive_roots(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    # Closure of the simple roots under root strings, by increasing height.
    n = len(cartan)
    roots = {tuple(int(i == j) for j in range(n)) for i in range(n)}
    frontier = list(roots)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(n):
                pair = sum(beta[j] * cartan[i][j] for j in range(n))
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        q += 1
                    else:
                        break
                if q - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in roots:
                        roots.add(cand)
                        new.append(cand)
        frontier = new
    return sorted(roots, key=lambda r: (sum(r), r))


@dataclass(frozen=True)
class RootSystemData:
    """All per-type tables the bound formulas and engines consume."""

    type_label: str
    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    cartan_inverse: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    positive_coroots: tuple[tuple[int, ...], ...]
    root_lengths: tuple[Fraction, ...]  # (beta,beta)/2 per positive root
    rho: tuple[int, ...]
    alpha0: tuple[int, ...]
    alpha0_coroot: tuple[int, ...]
    alpha_tilde: tuple[int, ...]
    h: int
    t: int
    c: int
    c2rho: int
    w0_action: tuple[int, ...]  # permutation: (lam*)_i = lam_{w0_action[i]}
    weyl_order: int = field(repr=False, default=0)

    def root_coords(self, lam) -> tuple[Fraction, ...]:
        """Simple-root coordinates of a weight given in fundamental coords."""
        self._check_dim(lam)
        return tuple(
            sum(self.cartan_inverse[i][k] * lam[k] for k in range(self.rank))
            for i in range(self.rank)
        )

    def fundamental_coords_of_root(self, beta) -> tuple[int, ...]:
        """Fundamental coordinates of a root-lattice vector."""
        return tuple(
            sum(self.cartan[i][j] * beta[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def star(self, lam) -> tuple[int, ...]:
        """Opposition involution: negative of the longest-element image."""
        self._check_dim(lam)
        return tuple(lam[self.w0_action[i]] for i in range(self.rank))

    def is_dominant(self, lam) -> bool:
        self._check_dim(lam)
        return all(x >= 0 for x in lam)

    def _check_dim(self, vec) -> None:
        if len(vec) != self.rank:
            raise ValueError(f"expected length {self.rank}, got {len(vec)}")


def pairing(rs: RootSystemData, lam, coroot) -> int:
    """Pair a weight (fundamental coords) with a coroot (simple-coroot coords)."""
    rs._check_dim(lam)
    rs._check_dim(coroot)
    return sum(int(d) * int(x) for d, x in zip(coroot, lam))


_WEYL_ORDERS = {
    "A": lambda n: factorial(n + 1),
    "B": lambda n: 2**n * factorial(n),
    "C": lambda n: 2**n * factorial(n),
    "D": lambda n: 2 ** (n - 1) * factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def parse_type_label(label: str) -> tuple[str, int]:
    series = label[:1].upper()
    try:
        rank = int(label[1:])
    except ValueError:
        raise ValueError(f"malformed type label {label!r}") from None
    if series not in _LEGAL_RANKS or rank not in _LEGAL_RANKS[series]:
        raise ValueError(f"unknown or out-of-range type label {label!r}")
    return series, rank


@lru_cache(maxsize=None)
def build_root_system(label: str) -> RootSystemData:
    series, n = parse_type_label(label)
    cartan = _cartan_matrix(series, n)
    cinv = _invert_rational(cartan)
    d = _symmetrizer(cartan)
    roots = _positive_roots(cartan)

    def sq_half(beta) -> Fraction:
        # (beta, beta)/2 with (alpha_i, alpha_j) = d_j * cartan[j][i]
        total = Fraction(0)
        for i in range(n):
            if beta[i]:
                for j in range(n):
                    if beta[j]:
                        total += beta[i] * beta[j] * d[j] * cartan[j][i]
        return total / 2

    lengths = [sq_half(b) for b in roots]
    coroots = []
    for beta, db in zip(roots, lengths):
        coroots.append(tuple(int(beta[j] * d[j] / db) for j in range(n)))

    def is_dominant_root(beta) -> bool:
        return all(sum(beta[j] * cartan[i][j] for j in range(n)) >= 0 for i in range(n))

    short_len = min(lengths)
    long_len = max(lengths)
    alpha0 = next(b for b, l in zip(roots, lengths) if l == short_len and is_dominant_root(b))
    alpha_tilde = next(b for b, l in zip(roots, lengths) if l == long_len and is_dominant_root(b))
    i0 = roots.index(alpha0)
    alpha0_coroot = coroots[i0]

    rho = tuple(1 for _ in range(n))
    h = sum(alpha0_coroot) + 1

    # torsion exponent of X / Z.Phi: lcm of the orders of the fundamental
    # weights, read off the denominators of the inverse Cartan matrix
    t = lcm(*(x.denominator for row in cinv for x in row))

    two_rho_root = [0] * n
    for b in roots:
        for j in range(n):
            two_rho_root[j] += b[j]
    c2rho = max(two_rho_root)
    c = max(alpha_tilde)

    w0 = _opposition_permutation(cartan, n)

    return RootSystemData(
        type_label=f"{series}{n}",
        series=series,
        rank=n,
        cartan=tuple(tuple(r) for r in cartan),
        cartan_inverse=tuple(tuple(r) for r in cinv),
        positive_roots=tuple(roots),
        positive_coroots=tuple(coroots),
        root_lengths=tuple(lengths),
        rho=rho,
        alpha0=tuple(alpha0),
        alpha0_coroot=tuple(alpha0_coroot),
        alpha_tilde=tuple(alpha_tilde),
        h=h,
        t=t,
        c=c,
        c2rho=c2rho,
        w0_action=w0,
        weyl_order=_WEYL_ORDERS[series](n),
    )


def _opposition_permutation(cartan, n) -> tuple[int, ...]:
    # lam* = -w0(lam) permutes the fundamental weights; find the permutation
    # by making -omega_j dominant with simple reflections.
    perm = []
    for j in range(n):
        v = [-int(i == j) for i in range(n)]
        while True:
            neg = next((i for i in range(n) if v[i] < 0), None)
            if neg is None:
                break
            coeff = v[neg]
            for k in range(n):
                v[k] -= coeff * cartan[k][neg]
        img = [i for i in range(n) if v[i] != 0]
        assert img and all(v[i] == 1 for i in img) and len(img) == 1
        perm.append(img[0])
    # perm[j] = index of (omega_j)*; star acts by lam*_i = lam_{inverse perm}
    inv = [0] * n
    for j, i in enumerate(perm):
        inv[i] = j
    return tuple(inv)

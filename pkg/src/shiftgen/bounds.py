"""Every named numeric constant, as total functions over exact integers.

All logarithms are integer logs computed by repeated multiplication; no
floating point enters anywhere.  Constants that the source theory states
p-uniformly are realized as the p = 2 values, which dominate pointwise
(base-p logs decrease in p).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsys import RootSystemData
from .weights import lattice_order


def ilog(p: int, x: int) -> int:
    """Greatest-integer log: largest k with p**k <= x.  Requires x >= 1."""
    if x < 1:
        raise ValueError(f"ilog needs x >= 1, got {x}")
    k = 0
    power = p
    while power <= x:
        k += 1
        power *= p
    return k


def ceil_log2(num: int, den: int = 1) -> int:
    """Smallest k >= 0 with 2**k >= num/den.  Requires num/den >= 1."""
    if num < den:
        raise ValueError("ceil_log2 needs an argument >= 1")
    k = 0
    power = den
    while power < num:
        k += 1
        power *= 2
    return k


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class BoundContext:
    rs: RootSystemData
    m: int = 0
    p: int | None = None
    r: int | None = None
    epsilon: int = 0
    sharp_mode: bool = False
    alt_mprime_inequality: bool = False

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("cohomological degree m must be >= 0")
        if self.p is not None and self.p < 2:
            raise ValueError("p must be a prime >= 2")
        if self.r is not None and self.r < 1:
            raise ValueError("r must be >= 1")
        if self.epsilon < 0:
            raise ValueError("epsilon must be >= 0")


def e_of(r: int, p: int) -> int:
    """Threshold e(r) = [(r-1)/(p-1)], clamped to 0 for r <= 0."""
    if r <= 0:
        return 0
    return (r - 1) // (p - 1)


def f_of(r: int, p: int) -> int:
    """Threshold f(r) = [log_p(|r|+1)] + 2."""
    return ilog(p, abs(r) + 1) + 2


def _three(ctx: BoundContext) -> int:
    # Root smallness coefficient: 3 in general, 2 when no root needs three
    # simple-root steps (every type but G2), under the sharp toggle.
    return 2 if ctx.sharp_mode and ctx.rs.series != "G" else 3


def _m_eff(ctx: BoundContext) -> int:
    # The odd-prime symmetric-algebra refinement halves the degree.
    if ctx.sharp_mode and ctx.p is not None and ctx.p > 2:
        return ctx.m // 2
    return ctx.m


def smallness_bounds(ctx: BoundContext) -> dict:
    """The cohomology smallness/restriction bound family, by name."""
    rs, m = ctx.rs, ctx.m
    h = rs.h
    k = _three(ctx)
    me = _m_eff(ctx)
    out: dict[str, int] = {
        "nilpotent_radical": k * me,
        "ext_Gr": k * me + 2 * h - 3,
        "ext_Gr_degree1": h - 1,
        "Gr_restricted": k * me + h - 2,
    }
    if ctx.p is not None:
        p = ctx.p
        out["U1"] = k * me * p
        if ctx.r is not None:
            pr = p**ctx.r
            out["Ur"] = k * me * pr
            b = (h - 1) * (pr - 1)  # smallness of a p^r-restricted weight
            out["Br_twisted"] = k * me * pr + b
            out["Br_untwisted"] = k * me + b // pr
            out["Gr_bsmall"] = k * me + b // pr
    return out


def tensor_restriction_level(ctx: BoundContext, b: int) -> int:
    """Restriction level of composition factors of a product of two
    p^b-restricted irreducibles: b + [log_p(h-1)] + 2, improving to b + 1
    for p >= 2h - 2."""
    if ctx.p is None:
        raise ValueError("p is required")
    if ctx.p >= 2 * ctx.rs.h - 2:
        return b + 1
    return b + ilog(ctx.p, ctx.rs.h - 1) + 2


def filtration_cutoff_b(ctx: BoundContext) -> int:
    """Induced-module filtration cutoff: [ (3m+3h-4) / (1 - 1/p^r) ], whose
    p-uniform envelope (attained at p^r = 2) is 6m + 6h - 8."""
    base = 3 * ctx.m + 3 * ctx.rs.h - 4
    if ctx.p is None or ctx.r is None:
        return 6 * ctx.m + 6 * ctx.rs.h - 8
    pr = ctx.p**ctx.r
    return base * pr // (pr - 1)


def phi(ctx: BoundContext) -> int:
    """phi(m, p) = [log_p(3m + 2h - 2)] + 1 (p = 2 when unspecified)."""
    p = ctx.p if ctx.p is not None else 2
    return ilog(p, 3 * ctx.m + 2 * ctx.rs.h - 2) + 1


@lru_cache(maxsize=None)
def _delta(label: str, m: int, p: int) -> int:
    from .rootsys import build_root_system

    rs = build_root_system(label)
    ph = ilog(p, 3 * m + 2 * rs.h - 2) + 1
    if m == 0:
        return ph
    return 2 * ph + max(_delta(label, i, p) for i in range(m))


def delta(ctx: BoundContext) -> int:
    """Digit-difference bound for algebraic-group extensions.

    delta(Phi, 0) = phi(0); delta(Phi, m) = 2*phi(m) + max_{i<m} delta(Phi, i).
    p-uniform value is the p = 2 evaluation (the pointwise maximum).
    """
    p = ctx.p if ctx.p is not None else 2
    return _delta(ctx.rs.type_label, ctx.m, p)


def digit_bound_d(ctx: BoundContext) -> int:
    """Digit-difference bound d for finite-group extensions.

    Minimal legal choice: delta at the auxiliary degree m' = max(m,
    ceil((6m + 4h - 10)/3)), the smallest m' with 3m' + 2h + 2 >= 6m + 6h - 8.
    The alt flag switches the printed inequality constant from +2 to -2.
    """
    h = ctx.rs.h
    shift = 6 if ctx.alt_mprime_inequality else 10
    m_prime = max(ctx.m, ceil_div(6 * ctx.m + 4 * h - shift, 3), 0)
    sub = BoundContext(rs=ctx.rs, m=m_prime, p=ctx.p)
    return delta(sub)


def d_prime(ctx: BoundContext) -> int:
    """d'(Phi, m, eps) = max(eps, max_{n <= m} d(Phi, n))."""
    best = max(
        digit_bound_d(BoundContext(rs=ctx.rs, m=n, p=ctx.p,
                                   alt_mprime_inequality=ctx.alt_mprime_inequality))
        for n in range(ctx.m + 1)
    )
    return max(ctx.epsilon, best)


def coarse_constants(ctx: BoundContext) -> dict:
    """p-uniform restriction-isomorphism constants e0, f0, g for (Phi, m)."""
    rs = ctx.rs
    e0 = rs.c * rs.t * ctx.m
    f0 = ceil_log2(rs.t * rs.c2rho, 2) + 2
    g = ilog(2, rs.h - 1) + 2
    return {"e0": e0, "f0": f0, "g": g}


@dataclass(frozen=True)
class CpskRequirement:
    """Exact and coarse thresholds for the restriction isomorphism."""

    e_min: int
    f_min: int
    q_min: int
    per_weight: tuple[dict, ...]
    e0: int
    f0: int
    g: int


def cpsk_constants(ctx: BoundContext, weight_list) -> CpskRequirement:
    """Minimal (e, f) making the restriction map an isomorphism through
    degree m, per highest weight, plus the coarse p-uniform constants."""
    if ctx.p is None:
        raise ValueError("p is required")
    rs, m, p = ctx.rs, ctx.m, ctx.p
    e_min = e_of(rs.c * rs.t * m, p)
    f_min = 2  # f(0) = 2 is the floor
    rows = []
    for lam in weight_list:
        t_lam, t_p, c_bar = lattice_order(rs, lam, p)
        e_req = e_of(rs.c * rs.t * m, p)
        if p != 2 and m >= 1:
            # the extra odd-prime requirement is vacuous at m = 0, where the
            # argument of e is negative
            e_req = max(e_req, e_of(rs.c * t_p * (m - 1), p) + 1)
        f_req = f_of(c_bar, p)
        rows.append(
            {
                "weight": tuple(lam),
                "t_lambda": t_lam,
                "t_p_lambda": t_p,
                "c_bar": c_bar,
                "e_req": e_req,
                "f_req": f_req,
            }
        )
        e_min = max(e_min, e_req)
        f_min = max(f_min, f_req)
    coarse = coarse_constants(ctx)
    return CpskRequirement(
        e_min=e_min,
        f_min=f_min,
        q_min=p ** (e_min + f_min),
        per_weight=tuple(rows),
        **coarse,
    )


def r0_threshold(ctx: BoundContext) -> int:
    """Shift-construction threshold (d'+1)(e0+f0+g+1) + eps - 1."""
    dp = d_prime(ctx)
    coarse = coarse_constants(ctx)
    return (dp + 1) * (coarse["e0"] + coarse["f0"] + coarse["g"] + 1) + ctx.epsilon - 1


def large_prime_thresholds(ctx: BoundContext) -> dict:
    """The five large-prime regime thresholds for (Phi, m)."""
    h, m = ctx.rs.h, ctx.m
    return {
        "h": h,
        "alcove_decomposition": 6 * m + 7 * h - 9,
        "collapse": 12 * m + 13 * h - 16,
        "linkage_classification": (4 * m + 1) * (h - 1),
        "nu_cap": 2 * m * (h - 1),
    }

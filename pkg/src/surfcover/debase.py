"""Affine base-point removal for arbitrary rational surface parametrizations.

The reparametrization ``(s, t) -> (s, 1/t + f(s))`` with ``f`` interpolating
the base points clears every affine base point, provided

1. ``p1, p2, p3, q`` share one total degree and have gcd 1,
2. ``t**n`` appears with nonzero coefficient in all four (``n`` that degree),
3. no two base points share an s-coordinate.

Condition 3 is detected from the radical of ``<p1, p2, p3, q>`` and repaired
with shears ``(s + lam*t, t)``.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .groebner import NO_BASE_POINTS, GBasis, buchberger, find_interpolant, zero_dim_radical
from .polycore import ONE, MPoly, RatFn, mv_gcd, mv_lcm, subst_poly_cleared
from .ruledcover import BudgetExhausted, PipelineError, Substitution

log = logging.getLogger(__name__)

S, T = MPoly.var("s"), MPoly.var("t")


@dataclass(frozen=True)
class SurfaceParam:
    """Components ``p_i / q`` over a common denominator."""

    p: tuple
    q: MPoly

    def __post_init__(self):
        if not self.q:
            raise ValueError("zero denominator")
        for g in self.polys():
            if not set(g.gens) <= {"s", "t"}:
                raise ValueError(f"{g} is not a polynomial in s, t")

    @classmethod
    def from_components(cls, components) -> "SurfaceParam":
        comps = [RatFn.coerce(c) for c in components]
        q = mv_lcm([c.den for c in comps])
        return cls(tuple(c.num * q.exact_div(c.den) for c in comps), q)

    def polys(self) -> tuple:
        return self.p + (self.q,)

    def components(self) -> tuple:
        return tuple(RatFn(pi, self.q) for pi in self.p)

    def cancel_gcd(self) -> "SurfaceParam":
        g = mv_gcd(self.polys())
        if g == ONE:
            return self
        return SurfaceParam(tuple(pi.exact_div(g) for pi in self.p), self.q.exact_div(g))

    def common_degree(self):
        degs = {g.total_degree() for g in self.polys()}
        return degs.pop() if len(degs) == 1 else None

    def condition1(self) -> bool:
        return self.common_degree() is not None and mv_gcd(self.polys()) == ONE

    def condition2(self) -> bool:
        n = self.common_degree()
        if n is None:
            return False
        return all(g.eval({"s": 0}).coeff_wrt("t", n) for g in self.polys())

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components()) + ")"


def compose(P: SurfaceParam, s_img, t_img) -> SurfaceParam:
    """``P(s_img, t_img)`` rewritten over a common denominator, gcd cancelled."""
    binding = {"s": RatFn.coerce(s_img), "t": RatFn.coerce(t_img)}
    parts = [subst_poly_cleared(g, binding) for g in P.polys()]
    top = {v: max(e.get(v, 0) for _, e in parts) for v in binding}
    out = []
    for num, e in parts:
        for v, k in top.items():
            if k - e.get(v, 0):
                num = num * binding[v].den ** (k - e.get(v, 0))
        out.append(num)
    return SurfaceParam(tuple(out[:3]), out[3]).cancel_gcd()


def projective_change(P: SurfaceParam, M) -> SurfaceParam:
    """Apply ``(s, t) -> (L1/L0, L2/L0)`` where ``(L1, L2, L0) = M @ (s, t, 1)``."""
    L1, L2, L0 = (a * S + b * T + c for a, b, c in M)
    n = max(g.total_degree() for g in P.polys())
    out = []
    for g in P.polys():
        acc = MPoly.const(0)
        pow_cache: dict = {}
        for e, c in _terms_st(g):
            key = e
            if key not in pow_cache:
                a, b = e
                pow_cache[key] = L1 ** a * L2 ** b * L0 ** (n - a - b)
            acc = acc + c * pow_cache[key]
        out.append(acc)
    return SurfaceParam(tuple(out[:3]), out[3]).cancel_gcd()


def _terms_st(g: MPoly):
    idx = {v: g.gens.index(v) for v in ("s", "t") if v in g.gens}
    for e, c in g.terms.items():
        yield (e[idx["s"]] if "s" in idx else 0, e[idx["t"]] if "t" in idx else 0), c


def _det3(M) -> Fraction:
    (a, b, c), (d, e, f), (g, h, i) = M
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _inv3(M):
    det = Fraction(_det3(M))
    (a, b, c), (d, e, f), (g, h, i) = M
    adj = (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )
    return tuple(tuple(x / det for x in row) for row in adj)


def _projective_subst(M, label: str) -> Substitution:
    def images(m):
        L1, L2, L0 = (a * S + b * T + c for a, b, c in m)
        return RatFn(L1, L0), RatFn(L2, L0)

    return Substitution(label, images(M), images(_inv3(M)))


def shear(lam) -> Substitution:
    lam = Fraction(lam)
    return Substitution(
        f"s -> {S + lam * T}",
        (RatFn(S + lam * T), RatFn(T)),
        (RatFn(S - lam * T), RatFn(T)),
    )


def lambda_sequence(seed: int, budget: int = 32) -> list:
    """Shear parameters ``1, -1, 2, -2, ...`` rotated by ``seed``."""
    base = [(-1) ** (i % 2) * (i // 2 + 1) for i in range(budget)]
    k = seed % budget if budget else 0
    return base[k:] + base[:k]


@dataclass
class Conditioned:
    param: SurfaceParam
    log: list = field(default_factory=list)


def enforce_condition1(P: SurfaceParam, seed: int = 0, max_attempts: int = 64) -> Conditioned:
    """Equal total degrees and trivial gcd via a seeded projective-linear change."""
    P = P.cancel_gcd()
    if P.common_degree() is not None:
        return Conditioned(P, [])
    rng = random.Random(seed)
    tried = []
    for _ in range(max_attempts):
        M = tuple(tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(3))
        if _det3(M) == 0 or M[2][:2] == (0, 0):
            continue
        tried.append(M)
        cand = projective_change(P, M)
        if cand.common_degree() is not None:
            return Conditioned(cand, [_projective_subst(M, f"projective change {list(map(list, M))}")])
    raise BudgetExhausted("condition 1 (degree and gcd)", tried)


def enforce_condition2(P: SurfaceParam, seed: int = 0, max_attempts: int = 32) -> Conditioned:
    """Nonzero ``t**n`` coefficients in all four polynomials via a shear."""
    if not P.condition1():
        raise ValueError("condition 1 must hold before condition 2 is enforced")
    if P.condition2():
        return Conditioned(P, [])
    tried = []
    for lam in lambda_sequence(seed, max_attempts):
        tried.append(lam)
        sub = shear(lam)
        cand = compose(P, *sub.forward)
        if cand.condition1() and cand.condition2():
            return Conditioned(cand, [sub])
    raise BudgetExhausted("condition 2 (t^n coefficients)", tried)


def base_point_report(P: SurfaceParam) -> GBasis:
    """Reduced lex(t > s) basis of the radical of ``<p1, p2, p3, q>``."""
    return zero_dim_radical(P.polys())


def has_base_points(P: SurfaceParam) -> bool:
    return not buchberger(P.polys(), ("t", "s")).is_unit()


class BasePointsRemain(PipelineError):
    """The reparametrized output still has affine base points."""


@dataclass
class DebaseResult:
    param: SurfaceParam
    f: MPoly | None
    shears: list
    log: list
    radicals: list

    @property
    def changed(self) -> bool:
        return bool(self.log)


def psi(f: MPoly) -> Substitution:
    return Substitution(
        f"t -> 1/t+({f})",
        (RatFn(S), 1 / RatFn(T) + f),
        (RatFn(S), 1 / (RatFn(T) - f)),
    )


def remove_base_points_general(P: SurfaceParam, seed: int = 0, max_attempts: int = 32) -> DebaseResult:
    """Shear until the radical holds ``t - f(s)``, then apply ``(s, 1/t + f(s))``.

    The output is re-verified to be free of affine base points.
    """
    shears, changes, radicals = [], [], []
    lambdas = iter(lambda_sequence(seed, max_attempts))
    while True:
        rad = base_point_report(P)
        radicals.append(rad)
        f = find_interpolant(rad)
        if f is NO_BASE_POINTS:
            return DebaseResult(P, None, shears, changes, radicals)
        if f is not None:
            break
        lam = next(lambdas, None)
        if lam is None:
            raise BudgetExhausted("condition 3 (distinct s-coordinates)", shears)
        log.debug("base points share an s-coordinate; shearing with %s", lam)
        sub = shear(lam)
        P = compose(P, *sub.forward)
        shears.append(lam)
        changes.append(sub)
    sub = psi(f)
    out = compose(P, *sub.forward)
    changes.append(sub)
    if has_base_points(out):
        raise BasePointsRemain(f"{out} still has affine base points after t -> 1/t+({f})")
    return DebaseResult(out, f, shears, changes, radicals)


def debase(components, seed: int = 0, max_attempts: int = 32) -> DebaseResult:
    """Full pipeline: try the input as given, fall back to enforcing conditions 1-2."""
    P = components if isinstance(components, SurfaceParam) else SurfaceParam.from_components(components)
    P = P.cancel_gcd()
    try:
        return remove_base_points_general(P, seed, max_attempts)
    except BasePointsRemain:
        log.info("direct reparametrization left base points; enforcing conditions 1 and 2")
    c1 = enforce_condition1(P, seed, max_attempts)
    c2 = enforce_condition2(c1.param, seed, max_attempts)
    res = remove_base_points_general(c2.param, seed, max_attempts)
    res.log = c1.log + c2.log + res.log
    return res

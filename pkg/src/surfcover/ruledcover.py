"""Two-chart covering of rational ruled surfaces.

A ruled parametrization has components ``(r_i(s) + t*p_i(s)) / q(s)``.  The
pipeline standardizes it, strips affine base points, and decides whether the
chart is surjective; when it is not, the missed set lies on a line and a second
chart through that line is built.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .groebner import NO_BASE_POINTS, GBasis, find_interpolant, zero_dim_radical
from .polycore import (
    ONE,
    ZERO,
    MPoly,
    RatFn,
    mv_gcd,
    mv_lcm,
    substitute,
    to_dense,
    uni_gcd,
)

log = logging.getLogger(__name__)

S, T = MPoly.var("s"), MPoly.var("t")
X, Y, Z = MPoly.var("x"), MPoly.var("y"), MPoly.var("z")
COORDS = (X, Y, Z)
PAIRS = ((0, 1), (0, 2), (1, 2))


class NotRuledForm(ValueError):
    """Input is not of the form ``(r_i + t*p_i)/q``; converting it is out of scope."""


class PipelineError(RuntimeError):
    """An internal consistency check failed (a guaranteed property did not hold)."""


class BudgetExhausted(RuntimeError):
    def __init__(self, what: str, attempts):
        super().__init__(f"{what}: no valid choice after {len(attempts)} attempts {attempts}")
        self.attempts = attempts


@dataclass(frozen=True)
class Substitution:
    """A reparametrization ``(s, t) -> forward(s, t)`` and its inverse."""

    label: str
    forward: tuple
    inverse: tuple

    def composes_to_identity(self) -> bool:
        s_img, t_img = self.forward
        back = {"s": self.inverse[0], "t": self.inverse[1]}
        return substitute(s_img, back) == RatFn(S) and substitute(t_img, back) == RatFn(T)

    def apply(self, components):
        binding = {"s": self.forward[0], "t": self.forward[1]}
        return tuple(substitute(c, binding) for c in components)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "forward": [str(f) for f in self.forward],
            "inverse": [str(f) for f in self.inverse],
        }


def _subst(label, fs, ft, is_, it) -> Substitution:
    return Substitution(label, (RatFn.coerce(fs), RatFn.coerce(ft)), (RatFn.coerce(is_), RatFn.coerce(it)))


@dataclass(frozen=True)
class RuledParam:
    r: tuple
    p: tuple
    q: MPoly

    def __post_init__(self):
        for poly in self.r + self.p + (self.q,):
            if not poly.is_univariate("s"):
                raise ValueError(f"{poly} is not a polynomial in s")
        if not self.q:
            raise ValueError("zero denominator")
        if not any(self.p):
            raise ValueError("all p_i are zero")

    def components(self) -> tuple:
        return tuple(RatFn(r + T * p, self.q) for r, p in zip(self.r, self.p))

    def nonzero_p(self) -> list:
        return [p for p in self.p if p]

    def p_degree(self) -> int:
        return max(p.degree("s") for p in self.nonzero_p())

    def is_standardized(self) -> bool:
        ps = self.nonzero_p()
        if len({p.degree("s") for p in ps}) != 1:
            return False
        return uni_gcd(ps) == ONE

    def is_cylinder(self) -> bool:
        return sum(1 for p in self.p if not p) == 2

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components()) + ")"


def detect_ruled_form(components) -> RuledParam:
    comps = [RatFn.coerce(c) for c in components]
    if len(comps) != 3:
        raise ValueError("expected three components")
    for c in comps:
        extra = set(c.gens) - {"s", "t"}
        if extra:
            raise NotRuledForm(f"component {c} uses variables {sorted(extra)}")
    q = mv_lcm([c.den for c in comps])
    if q.degree("t") > 0:
        raise NotRuledForm(
            "common denominator depends on t; converting a general "
            "parametrization to ruled form is out of scope"
        )
    r, p = [], []
    for c in comps:
        num = c.num * q.exact_div(c.den)
        if num.degree("t") > 1:
            raise NotRuledForm(
                f"numerator of {c} has degree {num.degree('t')} in t; converting a "
                "general parametrization to ruled form is out of scope"
            )
        r.append(num.coeff_wrt("t", 0))
        p.append(num.coeff_wrt("t", 1))
    if not any(p):
        raise NotRuledForm("no component depends on t")
    return RuledParam(tuple(r), tuple(p), q)


def _small_ints(rng: random.Random, lo=-3, hi=3, nonzero=False) -> int:
    while True:
        v = rng.randint(lo, hi)
        if v or not nonzero:
            return v


def _homog_sub(poly: MPoly, num: MPoly, den: MPoly, total: int) -> MPoly:
    """``den**total * poly(num/den)`` for a univariate ``poly`` of degree <= total."""
    out = ZERO
    for k, c in enumerate(to_dense(poly, "s")):
        if c:
            out = out + c * num ** k * den ** (total - k)
    return out


def _cancel_common(r, p, q):
    g = mv_gcd(list(r) + list(p) + [q])
    if g == ONE:
        return r, p, q
    return (
        tuple(x.exact_div(g) for x in r),
        tuple(x.exact_div(g) for x in p),
        q.exact_div(g),
    )


@dataclass
class Standardized:
    param: RuledParam
    log: list = field(default_factory=list)


def standardize(P: RuledParam, seed: int = 0, max_attempts: int = 64) -> Standardized:
    """Make the nonzero ``p_i`` equal-degree and coprime by invertible changes."""
    if P.is_standardized():
        return Standardized(P, [])
    rng = random.Random(seed)
    steps = []
    r, p, q = P.r, P.p, P.q

    def s_free_numerator(r, p):
        return any(pi and pi.is_constant() and ri.is_constant() for ri, pi in zip(r, p))

    if s_free_numerator(r, p):
        tried = []
        for _ in range(max_attempts):
            a, b = _small_ints(rng, nonzero=True), _small_ints(rng, nonzero=True)
            tried.append((a, b))
            nr = tuple(ri + a * S * pi for ri, pi in zip(r, p))
            np_ = tuple(b * pi for pi in p)
            if not s_free_numerator(nr, np_):
                r, p = nr, np_
                steps.append(_subst(f"t -> {a * S + b * T}", S, a * S + b * T, S, (T - a * S) * Fraction(1, b)))
                break
        else:
            raise BudgetExhausted("step (a) change (s, a*s+b*t)", tried)

    if len({pi.degree("s") for pi in p if pi}) != 1:
        total = max(x.degree("s") for x in r + p + (q,) if x)
        tried = []
        for _ in range(max_attempts):
            a, b, c, d = (_small_ints(rng) for _ in range(4))
            if c == 0 or a * d - b * c == 0:
                continue
            tried.append((a, b, c, d))
            num, den = a * S + b, c * S + d
            nr = tuple(_homog_sub(x, num, den, total) for x in r)
            np_ = tuple(_homog_sub(x, num, den, total) for x in p)
            nq = _homog_sub(q, num, den, total)
            if len({x.degree("s") for x in np_ if x}) == 1:
                r, p, q = _cancel_common(nr, np_, nq)
                steps.append(
                    _subst(
                        f"s -> ({num})/({den})",
                        RatFn(num, den), T,
                        RatFn(d * S - b, -c * S + a), T,
                    )
                )
                break
        else:
            raise BudgetExhausted("Moebius change equalizing deg p_i", tried)

    delta = uni_gcd([pi for pi in p if pi])
    if delta != ONE:
        p = tuple(pi.exact_div(delta) if pi else pi for pi in p)
        steps.append(_subst(f"t -> t/({delta})", S, RatFn(T, delta), S, T * delta))

    out = RuledParam(r, p, q)
    if not out.is_standardized():
        raise PipelineError(f"standardization produced a non-standardized {out}")
    return Standardized(out, steps)


def base_point_ideal(P: RuledParam) -> list:
    return [pi * T + ri for ri, pi in zip(P.r, P.p)] + [P.q]


@dataclass(frozen=True)
class RemovalStep:
    radical: GBasis
    f: MPoly
    qtilde: MPoly
    q_before: MPoly
    q_after: MPoly


@dataclass
class Removal:
    param: RuledParam
    steps: list
    log: list

    @property
    def iterations(self) -> int:
        return len(self.steps)


def remove_base_points_ruled(P: RuledParam) -> Removal:
    """Iterate ``t -> 1/t + f(s)`` then ``t -> 1/(Q~ t)`` until no affine base points remain."""
    steps, changes = [], []
    while True:
        rad = zero_dim_radical(base_point_ideal(P))
        f = find_interpolant(rad)
        if f is NO_BASE_POINTS:
            return Removal(P, steps, changes)
        if f is None:
            raise PipelineError(f"radical {rad} of a ruled parametrization has no t-f(s) element")
        Q = [ri + f * pi for ri, pi in zip(P.r, P.p)]
        qt = uni_gcd(Q + [P.q])
        if qt.is_constant():
            raise PipelineError(f"interpolant {f} removed no base point")
        new = RuledParam(tuple(x.exact_div(qt) for x in Q), P.p, P.q.exact_div(qt))
        if new.q.degree("s") >= P.q.degree("s"):
            raise PipelineError("denominator degree did not decrease")
        log.debug("base point removal: f=%s, Q~=%s", f, qt)
        changes.append(_subst(f"t -> 1/t+({f})", S, 1 / RatFn(T) + f, S, 1 / (RatFn(T) - f)))
        inv = RatFn(ONE, qt * T)
        changes.append(_subst(f"t -> 1/(({qt})*t)", S, inv, S, inv))
        steps.append(RemovalStep(rad, f, qt, P.q, new.q))
        P = new


def compute_alphas(P: RuledParam) -> tuple:
    r, p = P.r, P.p
    return tuple(-p[i] * r[j] + p[j] * r[i] for i, j in PAIRS)


def normality_test(P: RuledParam) -> bool:
    bound = P.p_degree() + P.q.degree("s")
    return max(a.degree("s") for a in compute_alphas(P)) > bound


def a_polynomials(P: RuledParam) -> tuple:
    alphas = compute_alphas(P)
    out = []
    for (i, j), a in zip(PAIRS, alphas):
        out.append(P.q * P.p[j] * COORDS[i] - P.q * P.p[i] * COORDS[j] - a)
    return tuple(out)


@dataclass(frozen=True)
class Line3:
    implicit: tuple
    point: tuple
    direction: tuple

    def at(self, lam) -> tuple:
        return tuple(b + lam * d for b, d in zip(self.point, self.direction))

    def parametric_exprs(self, var: str = "t") -> tuple:
        v = MPoly.var(var)
        return tuple(b + d * v for b, d in zip(self.point, self.direction))

    def to_json(self) -> dict:
        from .polycore import scalar_str

        return {
            "implicit": [str(f) for f in self.implicit],
            "parametric": {
                "point": [scalar_str(c) for c in self.point],
                "direction": [scalar_str(c) for c in self.direction],
            },
        }


def _linear_row(form: MPoly) -> list:
    row = [form.coeff_wrt(v, 1) for v in "xyz"]
    const = form
    for v in "xyz":
        const = const.coeff_wrt(v, 0)
    for c in row + [const]:
        if not c.is_constant():
            raise PipelineError(f"{form} is not an affine form in x, y, z")
    return [c.constant_value() for c in row] + [const.constant_value()]


def _rref(rows: list):
    rows = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(3):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [c / lead for c in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows, pivots


def critical_line(P: RuledParam) -> Line3:
    """The line ``V(LC_s(A_12), LC_s(A_13), LC_s(A_23))``."""
    forms = []
    for a in a_polynomials(P):
        if not a:
            continue
        lc = a.lc_wrt("s")
        if lc.is_constant():
            raise PipelineError(f"LC_s of {a} is a nonzero constant: the critical set is empty")
        forms.append(lc.monic())
    rows, pivots = _rref([_linear_row(f) for f in forms])
    if len(pivots) != 2:
        raise PipelineError(f"critical forms {forms} have rank {len(pivots)}, expected 2")
    for row in rows[2:]:
        if row[3]:
            raise PipelineError(f"critical forms {forms} are inconsistent")
    free = ({0, 1, 2} - set(pivots)).pop()
    point = [Fraction(0)] * 3
    direction = [Fraction(0)] * 3
    direction[free] = Fraction(1)
    for row, col in zip(rows, pivots):
        point[col] = -row[3]
        direction[col] = -row[free]
    unique = []
    for f in forms:
        if f not in unique:
            unique.append(f)
    return Line3(tuple(unique), tuple(point), tuple(direction))


def second_parametrization(P: RuledParam, k: int | None = None, offset_sign: int = -1) -> tuple:
    """``P(1/s, (q(1/s) t + offset_sign * r_k(1/s)) / p_k(1/s))``.

    ``k`` is a 1-based index with ``p_k != 0`` (default: the smallest such).
    With ``offset_sign=-1`` the k-th component of the result is ``t`` itself.
    """
    if k is None:
        k = next(i for i, p in enumerate(P.p, 1) if p)
    if not P.p[k - 1]:
        raise ValueError(f"p_{k} is zero")
    inv = {"s": RatFn(ONE, S)}
    q1, r1, p1 = (substitute(x, inv) for x in (P.q, P.r[k - 1], P.p[k - 1]))
    t_img = (q1 * T + offset_sign * r1) / p1
    H = tuple(substitute(c, {"s": inv["s"], "t": t_img}) for c in P.components())
    for h in H:
        if not h.den.eval({"s": 0}):
            raise PipelineError(f"s divides the denominator of {h}")
    return H


@dataclass
class CoverReport:
    primary: RuledParam
    secondary: tuple | None
    line: Line3 | None
    normal: bool
    cylinder: bool
    log: list
    alphas: tuple = ()
    removal_steps: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "primary": [str(c) for c in self.primary.components()],
            "secondary": None if self.secondary is None else [str(c) for c in self.secondary],
            "line": None if self.line is None else self.line.to_json(),
            "normal": self.normal,
            "cylinder": self.cylinder,
            "log": [e.to_json() for e in self.log],
        }


def cover(
    components, seed: int = 0, max_attempts: int = 64, k: int | None = None, offset_sign: int = -1
) -> CoverReport:
    P = components if isinstance(components, RuledParam) else detect_ruled_form(components)
    std = standardize(P, seed=seed, max_attempts=max_attempts)
    removal = remove_base_points_ruled(std.param)
    P = removal.param
    changes = std.log + removal.log
    alphas = compute_alphas(P)
    cylinder = P.is_cylinder()
    if cylinder:
        log.info("cylinder: surjective coverage via curve normalization is not attempted")
    if normality_test(P):
        return CoverReport(P, None, None, True, cylinder, changes, alphas, removal.steps)
    line = critical_line(P)
    H = second_parametrization(P, k=k, offset_sign=offset_sign)
    return CoverReport(P, H, line, False, cylinder, changes, alphas, removal.steps)

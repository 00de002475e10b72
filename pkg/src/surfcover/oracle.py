"""Independent checks: implicit membership, seeded sampling, point reachability."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .groebner import buchberger
from .polycore import MPoly, PoleError, RatFn, evaluate, mv_lcm, subst_poly_cleared, substitute
from .ruledcover import CoverReport

Point3 = tuple


def implicit_check(components, F: MPoly) -> bool:
    """True iff ``F(components)`` is identically zero."""
    if not F:
        raise ValueError("implicit equation is zero")
    comps = [RatFn.coerce(c) for c in components]
    num, _ = subst_poly_cleared(F, dict(zip("xyz", comps)))
    return not num


def sample_points(components, seed: int = 0, n: int = 8, max_tries: int = 1000) -> list:
    """``n`` exact surface points at seeded rational parameters, skipping poles."""
    if n < 1:
        raise ValueError("n must be positive")
    comps = [RatFn.coerce(c) for c in components]
    rng = random.Random(seed)
    out = []
    for _ in range(max_tries):
        s = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
        t = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
        try:
            out.append(tuple(evaluate(c, {"s": s, "t": t}) for c in comps))
        except PoleError:
            continue
        if len(out) == n:
            return out
    raise RuntimeError(f"only {len(out)} of {n} samples avoided the poles in {max_tries} tries")


def point_reachable(components, pt) -> bool:
    """Whether ``pt`` has a preimage over the algebraic closure.

    Solves ``num_i - pt_i * den_i = 0`` together with ``w * den - 1 = 0``
    (``den`` the common denominator) and reports whether that system is
    consistent.
    """
    comps = [RatFn.coerce(c) for c in components]
    den = mv_lcm([c.den for c in comps])
    gens = [c.num * den.exact_div(c.den) - Fraction(v) * den for c, v in zip(comps, pt)]
    gens.append(MPoly.var("w") * den - 1)
    return not buchberger(gens, ("w", "t", "s")).is_unit()


def _line_forms_vanish(H, line) -> list:
    h0 = [substitute(h, {"s": 0}) for h in H]
    bad = []
    for form in line.implicit:
        if substitute(form, dict(zip("xyz", h0))):
            bad.append(str(form))
    return bad


@dataclass
class Verdict:
    checks: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": self.checks, "witnesses": self.witnesses}


def cover_crosscheck(report: CoverReport, F: MPoly, seed: int = 0, n: int = 10) -> Verdict:
    v = Verdict()
    v.checks["primary_on_surface"] = implicit_check(report.primary.components(), F)
    if report.secondary is None:
        return v
    H = report.secondary
    v.checks["secondary_on_surface"] = implicit_check(H, F)
    bad = _line_forms_vanish(H, report.line)
    v.checks["secondary_at_s0_on_line"] = not bad
    if bad:
        v.witnesses["secondary_at_s0_on_line"] = bad
    rng = random.Random(seed)
    missed = []
    for _ in range(n):
        lam = Fraction(rng.randint(-30, 30), rng.randint(1, 5))
        pt = report.line.at(lam)
        if not point_reachable(H, pt):
            missed.append([str(c) for c in pt])
    v.checks["line_points_reachable"] = not missed
    if missed:
        v.witnesses["line_points_reachable"] = missed
    return v

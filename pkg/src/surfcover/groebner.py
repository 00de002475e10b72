"""Lexicographic Groebner bases, radicals of zero-dimensional ideals, interpolants.

Internally a polynomial is a dict ``{exponents: gmpy2.mpq}`` whose exponent
tuples are listed in priority order (highest variable first), so plain tuple
comparison is the lex order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from gmpy2 import mpq

from .polycore import ONE, MPoly, squarefree_part


class NotZeroDimensional(ArithmeticError):
    """The ideal has no nonzero univariate element in a requested variable."""


@dataclass(frozen=True)
class MonomialOrder:
    """Lex order; ``priority`` lists variables from highest to lowest."""

    priority: tuple

    def __init__(self, priority: Iterable[str]):
        object.__setattr__(self, "priority", tuple(priority))

    def __str__(self) -> str:
        return "lex(" + " > ".join(self.priority) + ")"


def lex(*names: str) -> MonomialOrder:
    return MonomialOrder(names)


T_OVER_S = lex("t", "s")


def _as_order(order) -> MonomialOrder:
    return order if isinstance(order, MonomialOrder) else MonomialOrder(order)


def _to_internal(p: MPoly, order: MonomialOrder) -> dict:
    extra = set(p.gens) - set(order.priority)
    if extra:
        raise ValueError(f"variables {sorted(extra)} are not in {order}")
    idx = [p.gens.index(v) if v in p.gens else None for v in order.priority]
    return {
        tuple(e[i] if i is not None else 0 for i in idx): mpq(c.numerator, c.denominator)
        for e, c in p.terms.items()
    }


def _from_internal(d: dict, order: MonomialOrder) -> MPoly:
    return MPoly(
        {e: Fraction(int(c.numerator), int(c.denominator)) for e, c in d.items()},
        order.priority,
    )


def _monic(d: dict) -> dict:
    lc = d[max(d)]
    if lc == 1:
        return d
    inv = 1 / lc
    return {e: c * inv for e, c in d.items()}


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_shifted(p: dict, g: dict, coef, shift: tuple) -> None:
    """In place: ``p -= coef * x^shift * g``."""
    for e, c in g.items():
        ne = tuple(x + y for x, y in zip(e, shift))
        v = p.get(ne, 0) - coef * c
        if v:
            p[ne] = v
        else:
            p.pop(ne, None)


def _reduce(f: dict, basis: Sequence[tuple]) -> dict:
    """Full reduction of ``f`` by monic ``[(lm, poly), ...]``."""
    p = dict(f)
    rem = {}
    while p:
        m = max(p)
        c = p[m]
        for lm, g in basis:
            if _divides(lm, m):
                _sub_shifted(p, g, c, tuple(x - y for x, y in zip(m, lm)))
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _spoly(f: dict, lf: tuple, g: dict, lg: tuple) -> dict:
    l = _lcm(lf, lg)
    out = {}
    sf = tuple(x - y for x, y in zip(l, lf))
    sg = tuple(x - y for x, y in zip(l, lg))
    for e, c in f.items():
        out[tuple(x + y for x, y in zip(e, sf))] = c
    _sub_shifted(out, g, mpq(1), sg)
    return out


def _buchberger(polys: list, nvars: int) -> list:
    basis: list = []  # (lm, monic poly)
    pending: set = set()
    heap: list = []
    unit = tuple([0] * nvars)

    def add(p):
        p = _monic(p)
        lm = max(p)
        basis.append((lm, p))
        k = len(basis) - 1
        for i in range(k):
            pending.add((i, k))
            heapq.heappush(heap, (_lcm(basis[i][0], lm), i, k))
        return lm == unit

    for p in polys:
        r = _reduce(p, basis)
        if r and add(r):
            return [(unit, {unit: mpq(1)})]

    while heap:
        l, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        li, fi = basis[i]
        lj, fj = basis[j]
        if all(x + y == z for x, y, z in zip(li, lj, l)):
            continue  # coprime leading monomials
        chain = False
        for k, (lk, _) in enumerate(basis):
            if k in (i, j) or not _divides(lk, l):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                chain = True
                break
        if chain:
            continue
        r = _reduce(_spoly(fi, li, fj, lj), basis)
        if r and add(r):
            return [(unit, {unit: mpq(1)})]
    return basis


def _interreduce(basis: list) -> list:
    lms = [lm for lm, _ in basis]
    keep = []
    for i, (lm, p) in enumerate(basis):
        redundant = any(
            _divides(lms[j], lm) and (lms[j] != lm or j < i)
            for j in range(len(basis))
            if j != i
        )
        if not redundant:
            keep.append((lm, p))
    out = []
    for i, (lm, p) in enumerate(keep):
        others = [b for j, b in enumerate(keep) if j != i]
        tail = {e: c for e, c in p.items() if e != lm}
        red = _reduce(tail, others)
        red[lm] = p[lm]
        out.append((lm, _monic(red)))
    out.sort(key=lambda b: b[0], reverse=True)
    return out


@dataclass(frozen=True)
class GBasis:
    """Reduced lex Groebner basis."""

    generators: tuple
    order: MonomialOrder

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0] == ONE

    def _internal(self) -> list:
        out = []
        for g in self.generators:
            d = _to_internal(g, self.order)
            out.append((max(d), d))
        return out

    def reduce(self, f: MPoly) -> MPoly:
        return _from_internal(_reduce(_to_internal(f, self.order), self._internal()), self.order)

    def contains(self, f: MPoly) -> bool:
        return not self.reduce(f)

    def same_ideal(self, polys: Iterable[MPoly]) -> bool:
        """Ideal equality by mutual reduction to zero."""
        polys = [p for p in polys if p]
        if not all(self.contains(p) for p in polys):
            return False
        other = buchberger(polys, self.order)
        return all(other.contains(g) for g in self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        return "{" + ", ".join(str(g) for g in self.generators) + "}"


def buchberger(gens: Iterable[MPoly], order) -> GBasis:
    """Reduced Groebner basis of ``<gens>`` for a lex order."""
    order = _as_order(order)
    polys = [_to_internal(MPoly.coerce(g), order) for g in gens]
    polys = [p for p in polys if p]
    if not polys:
        raise ValueError("Groebner basis of the zero ideal")
    basis = _interreduce(_buchberger(polys, len(order.priority)))
    return GBasis(tuple(_from_internal(p, order) for _, p in basis), order)


def normal_form(f: MPoly, gb: GBasis) -> MPoly:
    return gb.reduce(MPoly.coerce(f))


def is_reduced(gb: GBasis) -> bool:
    basis = gb._internal()
    for i, (lm, p) in enumerate(basis):
        if p[lm] != 1:
            return False
        for j, (lm2, _) in enumerate(basis):
            if i != j and any(_divides(lm2, e) for e in p):
                return False
    return True


def s_pairs_reduce_to_zero(gb: GBasis) -> bool:
    basis = gb._internal()
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            (li, fi), (lj, fj) = basis[i], basis[j]
            if _reduce(_spoly(fi, li, fj, lj), basis):
                return False
    return True


def standard_monomials(gb: GBasis, limit: int = 10000) -> list:
    """Monomials outside the leading-term ideal, as exponent tuples in ``gb.order``.

    Their number is the dimension of the quotient ring, which for a radical
    ideal counts the points of its variety.
    """
    if gb.is_unit():
        return []
    lms = [lm for lm, _ in gb._internal()]
    n = len(gb.order.priority)
    seen, frontier = set(), [tuple([0] * n)]
    while frontier:
        m = frontier.pop()
        if m in seen or any(_divides(lm, m) for lm in lms):
            continue
        seen.add(m)
        if len(seen) > limit:
            raise NotZeroDimensional(f"more than {limit} standard monomials")
        for i in range(n):
            frontier.append(tuple(e + (j == i) for j, e in enumerate(m)))
    return sorted(seen, reverse=True)


def univariate_element(gb: GBasis, var: str) -> MPoly | None:
    """The basis element lying in ``k[var]`` when ``var`` is the lowest variable."""
    for g in gb.generators:
        if set(g.gens) <= {var}:
            return g
    return None


def eliminate_univariate(gens: Iterable[MPoly], keep: str, variables=("s", "t")) -> MPoly:
    """Monic generator of ``<gens> ∩ k[keep]``."""
    others = [v for v in variables if v != keep]
    gb = buchberger(gens, tuple(others) + (keep,))
    g = univariate_element(gb, keep)
    if g is None:
        raise NotZeroDimensional(f"no element of the ideal lies in k[{keep}]")
    return g


def zero_dim_radical(gens: Iterable[MPoly], order=T_OVER_S) -> GBasis:
    """Radical of a zero-dimensional ideal by adjoining squarefree eliminants."""
    order = _as_order(order)
    gens = [MPoly.coerce(g) for g in gens]
    gb = buchberger(gens, order)
    if gb.is_unit():
        return gb
    extra = []
    for v in order.priority:
        rest = tuple(w for w in order.priority if w != v)
        g = univariate_element(gb if order.priority[-1] == v else buchberger(gens, rest + (v,)), v)
        if g is None:
            raise NotZeroDimensional(f"no element of the ideal lies in k[{v}]")
        extra.append(squarefree_part(g))
    return buchberger(list(gb.generators) + extra, order)


class _NoBasePoints:
    def __repr__(self) -> str:
        return "NO_BASE_POINTS"

    def __bool__(self) -> bool:
        return False


NO_BASE_POINTS = _NoBasePoints()


def find_interpolant(rad: GBasis, t: str = "t", s: str = "s"):
    """``f(s)`` such that ``t - f(s)`` is a basis element.

    Returns ``NO_BASE_POINTS`` for the unit ideal and ``None`` when no basis
    element has that shape (base points share an s-coordinate).
    """
    if rad.is_unit():
        return NO_BASE_POINTS
    for g in rad.generators:
        if g.degree(t) != 1 or not set(g.gens) <= {s, t}:
            continue
        lead = g.coeff_wrt(t, 1)
        if not lead.is_constant():
            continue
        rest = g.coeff_wrt(t, 0)
        return -rest * (1 / lead.constant_value())
    return None

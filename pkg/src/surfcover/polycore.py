"""Exact sparse multivariate polynomials and rational functions over QQ.

Polynomials keep only the variables they actually use, ordered by a fixed
global priority (``s < t < x < y < z < w``, unknown names after those,
alphabetically).  Coefficients are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Fraction
VAR_ORDER = ("s", "t", "x", "y", "z", "w")
NEG_INF = float("-inf")

Number = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """A denominator vanishes at the requested evaluation point."""


def var_key(name: str):
    if name in VAR_ORDER:
        return (0, VAR_ORDER.index(name), name)
    return (1, 0, name)


def _merge_gens(a: tuple, b: tuple) -> tuple:
    if a == b:
        return a
    return tuple(sorted(set(a) | set(b), key=var_key))


def _lift(terms: dict, src: tuple, dst: tuple) -> dict:
    if src == dst:
        return terms
    idx = [dst.index(v) for v in src]
    n = len(dst)
    out = {}
    for e, c in terms.items():
        ne = [0] * n
        for i, k in zip(idx, e):
            ne[i] = k
        out[tuple(ne)] = c
    return out


def _add_exp(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _frac_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class MPoly:
    """Immutable sparse polynomial ``{exponent tuple: Fraction}``."""

    __slots__ = ("gens", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Number] | None = None, gens: Iterable[str] = ()):
        gens = tuple(gens)
        if tuple(sorted(gens, key=var_key)) != gens:
            order = sorted(range(len(gens)), key=lambda i: var_key(gens[i]))
            new_gens = tuple(gens[i] for i in order)
            terms = {tuple(e[i] for i in order): c for e, c in (terms or {}).items()}
            gens = new_gens
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != len(gens):
                raise ValueError(f"exponent {e} does not match variables {gens}")
            if c:
                clean[tuple(e)] = c if isinstance(c, Fraction) else Fraction(c)
        self._set(gens, clean)

    def _set(self, gens, terms):
        n = len(gens)
        if n:
            used = [i for i in range(n) if any(e[i] for e in terms)]
            if len(used) != n:
                gens = tuple(gens[i] for i in used)
                terms = {tuple(e[i] for i in used): c for e, c in terms.items()}
        self.gens = gens
        self.terms = terms
        self._hash = None

    @classmethod
    def _raw(cls, gens, terms) -> "MPoly":
        p = cls.__new__(cls)
        p._set(gens, terms)
        return p

    @classmethod
    def const(cls, c: Number) -> "MPoly":
        c = Fraction(c)
        return cls._raw((), {(): c} if c else {})

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls._raw((name,), {(1,): Fraction(1)})

    @classmethod
    def coerce(cls, x) -> "MPoly":
        if isinstance(x, MPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot convert {type(x).__name__} to MPoly")

    # basic predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.gens

    def constant_value(self) -> Fraction:
        if self.gens:
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.gens, frozenset(self.terms.items())))
        return self._hash

    # arithmetic ------------------------------------------------------------

    def __neg__(self) -> "MPoly":
        return MPoly._raw(self.gens, {e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "MPoly":
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        gens = _merge_gens(self.gens, other.gens)
        out = dict(_lift(self.terms, self.gens, gens))
        for e, c in _lift(other.terms, other.gens, gens).items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MPoly._raw(gens, out)

    __radd__ = __add__

    def __sub__(self, other) -> "MPoly":
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return MPoly.coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return MPoly._raw(self.gens, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        if not other.gens:
            return self * other.constant_value()
        if not self.gens:
            return other * self.constant_value()
        gens = _merge_gens(self.gens, other.gens)
        a = _lift(self.terms, self.gens, gens)
        b = _lift(other.terms, other.gens, gens)
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = _add_exp(ea, eb)
                out[e] = out.get(e, 0) + ca * cb
        return MPoly._raw(gens, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: Number) -> "MPoly":
        return self * Fraction(c)

    # degree and coefficient access ----------------------------------------

    def degree(self, var: str):
        """Degree in ``var``; the zero polynomial gives ``NEG_INF``."""
        if not self.terms:
            return NEG_INF
        if var not in self.gens:
            return 0
        i = self.gens.index(var)
        return max(e[i] for e in self.terms)

    def total_degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def coeffs_wrt(self, var: str) -> dict:
        """View as a univariate polynomial in ``var``: ``{k: coefficient}``."""
        if var not in self.gens:
            return {0: self} if self.terms else {}
        i = self.gens.index(var)
        buckets: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            buckets.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: MPoly._raw(self.gens, t) for k, t in buckets.items()}

    def coeff_wrt(self, var: str, k: int) -> "MPoly":
        return self.coeffs_wrt(var).get(k, ZERO)

    def lc_wrt(self, var: str) -> "MPoly":
        if not self.terms:
            raise ValueError("leading coefficient of the zero polynomial")
        return self.coeff_wrt(var, self.degree(var))

    def leading_term(self):
        """Leading (exponent, coefficient) under the canonical graded-lex order."""
        if not self.terms:
            raise ValueError("leading term of the zero polynomial")
        e = max(self.terms, key=_canon_key)
        return e, self.terms[e]

    def lc(self) -> Fraction:
        return self.leading_term()[1]

    def monic(self) -> "MPoly":
        return self * (1 / self.lc()) if self.terms else self

    def primitive(self) -> "MPoly":
        """Integer coefficients with content 1 and positive leading coefficient."""
        if not self.terms:
            return self
        den = math.lcm(*(c.denominator for c in self.terms.values()))
        num = math.gcd(*(c.numerator for c in self.terms.values()))
        f = Fraction(den, num)
        if self.lc() < 0:
            f = -f
        return self * f

    def diff(self, var: str) -> "MPoly":
        if var not in self.gens:
            return ZERO
        i = self.gens.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return MPoly._raw(self.gens, out)

    def eval(self, point: Mapping[str, Number]) -> "MPoly":
        """Partial evaluation at scalar values; unbound variables remain."""
        bound = [(i, Fraction(point[v])) for i, v in enumerate(self.gens) if v in point]
        if not bound:
            return self
        out: dict = {}
        for e, c in self.terms.items():
            ne = list(e)
            for i, val in bound:
                c = c * val ** e[i]
                ne[i] = 0
            if c:
                ne = tuple(ne)
                out[ne] = out.get(ne, 0) + c
        return MPoly._raw(self.gens, {e: c for e, c in out.items() if c})

    def value(self, point: Mapping[str, Number]) -> Fraction:
        missing = [v for v in self.gens if v not in point]
        if missing:
            raise ValueError(f"no value for variable(s) {missing}")
        return self.eval(point).constant_value()

    def is_univariate(self, var: str | None = None) -> bool:
        if var is None:
            return len(self.gens) <= 1
        return set(self.gens) <= {var}

    # division --------------------------------------------------------------

    def exact_div(self, d: "MPoly | Number") -> "MPoly":
        """Exact quotient; raises ``ArithmeticError`` when ``d`` does not divide."""
        d = MPoly.coerce(d)
        if not d.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not d.gens:
            return self * (1 / d.constant_value())
        if not self.terms:
            return self
        gens = _merge_gens(self.gens, d.gens)
        if len(gens) != len(self.gens):
            raise ArithmeticError(f"{d} does not divide {self}")
        dt = _lift(d.terms, d.gens, gens)
        dlm = max(dt)
        dlc = dt[dlm]
        rem = dict(self.terms)
        quo = {}
        while rem:
            m = max(rem)
            c = rem[m]
            diff = tuple(x - y for x, y in zip(m, dlm))
            if any(k < 0 for k in diff):
                raise ArithmeticError(f"{d} does not divide {self}")
            qc = c / dlc
            quo[diff] = qc
            for e, dc in dt.items():
                ne = _add_exp(e, diff)
                v = rem.get(ne, 0) - qc * dc
                if v:
                    rem[ne] = v
                else:
                    rem.pop(ne, None)
        return MPoly._raw(gens, quo)

    def divides(self, other: "MPoly") -> bool:
        try:
            other.exact_div(self)
        except ArithmeticError:
            return False
        return True

    # printing --------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: _canon_key(ec[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.gens, e) if k
            )
            if not mono:
                term = _frac_str(c)
            elif c == 1:
                term = mono
            elif c == -1:
                term = "-" + mono
            else:
                term = f"{_frac_str(c)}*{mono}"
            if parts and not term.startswith("-"):
                term = "+" + term
            parts.append(term)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"MPoly({self})"


def _canon_key(e: tuple):
    return (sum(e), e)


ZERO = MPoly._raw((), {})
ONE = MPoly._raw((), {(): Fraction(1)})


def mp_arith(a, b, op: str) -> MPoly:
    a, b = MPoly.coerce(a), MPoly.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def mp_deg(p: MPoly, var: str):
    return p.degree(var)


def mp_lc_wrt(p: MPoly, var: str) -> MPoly:
    return p.lc_wrt(var)


def symbols(names: str):
    return tuple(MPoly.var(n) for n in names.replace(",", " ").split())


# univariate kernels ----------------------------------------------------------


def _univariate_var(polys: Iterable[MPoly]) -> str | None:
    names = set()
    for p in polys:
        names.update(p.gens)
    if len(names) > 1:
        raise ValueError(f"expected univariate polynomials, found variables {sorted(names)}")
    return names.pop() if names else None


def to_dense(p: MPoly, var: str | None) -> list:
    """Coefficient list, lowest degree first; ``[]`` for zero."""
    if not p.terms:
        return []
    if not p.gens:
        return [p.constant_value()]
    if p.gens != (var,):
        raise ValueError(f"{p} is not univariate in {var}")
    out = [Fraction(0)] * (p.degree(var) + 1)
    for (k,), c in p.terms.items():
        out[k] = c
    return out


def from_dense(coeffs: list, var: str | None) -> MPoly:
    if var is None:
        return MPoly.const(coeffs[0]) if coeffs else ZERO
    return MPoly._raw((var,), {(k,): c for k, c in enumerate(coeffs) if c})


def _dense_trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _dense_rem(a: list, b: list) -> list:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        f = a[-1] / lb
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
        _dense_trim(a)
    return a


def _dense_divmod(a: list, b: list):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    while a and len(a) - 1 >= db:
        f = a[-1] / lb
        shift = len(a) - 1 - db
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
        _dense_trim(a)
    return q, a


def _dense_gcd(a: list, b: list) -> list:
    while b:
        a, b = b, _dense_rem(a, b)
    if not a:
        return a
    lc = a[-1]
    return [c / lc for c in a]


def uni_gcd(polys: Iterable[MPoly]) -> MPoly:
    """Monic gcd of univariate polynomials; zero entries are ignored."""
    polys = [MPoly.coerce(p) for p in polys]
    nonzero = [p for p in polys if p]
    if not nonzero:
        raise ValueError("gcd of an all-zero list")
    var = _univariate_var(nonzero)
    g: list = []
    for p in nonzero:
        g = _dense_gcd(g, to_dense(p, var)) if g else _dense_gcd(to_dense(p, var), [])
        if len(g) == 1:
            return ONE
    return from_dense(g, var)


def squarefree_part(p: MPoly) -> MPoly:
    if not p:
        raise ValueError("squarefree part of zero")
    var = _univariate_var([p])
    if var is None:
        return ONE
    g = uni_gcd([p, p.diff(var)])
    return p.exact_div(g).monic()


def multiplicities(p: MPoly) -> list:
    """Squarefree decomposition ``[(factor, multiplicity), ...]`` (Yun)."""
    var = _univariate_var([p])
    if var is None:
        return []
    out = []
    a = p.monic()
    b = a.diff(var)
    c = uni_gcd([a, b])
    w = a.exact_div(c)
    y = b.exact_div(c)
    z = y - w.diff(var)
    i = 1
    while not w.is_constant():
        g = uni_gcd([w, z]) if z else w.monic()
        if not g.is_constant():
            out.append((g, i))
        w = w.exact_div(g)
        y = z.exact_div(g)
        z = y - w.diff(var)
        i += 1
    return out


def max_root_multiplicity(p: MPoly) -> int:
    decomposition = multiplicities(p)
    return max((m for _, m in decomposition), default=0)


# multivariate gcd ------------------------------------------------------------


def _content(p: MPoly, var: str) -> MPoly:
    return mv_gcd(list(p.coeffs_wrt(var).values()))


def _primitive_part(p: MPoly, var: str) -> MPoly:
    return p.exact_div(_content(p, var)).primitive()


def _from_coeffs(coeffs: dict, var: str) -> MPoly:
    out = ZERO
    v = MPoly.var(var)
    for k, c in coeffs.items():
        out = out + c * v ** k
    return out


def prem(a: MPoly, b: MPoly, var: str) -> MPoly:
    """Pseudo-remainder of ``a`` by ``b`` as polynomials in ``var``."""
    ca = {k: c for k, c in a.coeffs_wrt(var).items() if c}
    cb = {k: c for k, c in b.coeffs_wrt(var).items() if c}
    db = max(cb)
    lcb = cb[db]
    while ca and max(ca) >= db:
        da = max(ca)
        lca = ca[da]
        shift = da - db
        new = {k: c * lcb for k, c in ca.items()}
        for k, c in cb.items():
            new[k + shift] = new.get(k + shift, ZERO) - lca * c
        ca = {k: c for k, c in new.items() if c}
    return _from_coeffs(ca, var)


def _gcd2(a: MPoly, b: MPoly) -> MPoly:
    if not a:
        return b
    if not b:
        return a
    if a.is_constant() or b.is_constant():
        return ONE
    gens = _merge_gens(a.gens, b.gens)
    if len(gens) == 1:
        return uni_gcd([a, b])
    v = gens[-1]
    if v not in a.gens:
        return _gcd2(a, _content(b, v))
    if v not in b.gens:
        return _gcd2(_content(a, v), b)
    ca, cb = _content(a, v), _content(b, v)
    c = _gcd2(ca, cb)
    A = a.exact_div(ca).primitive()
    B = b.exact_div(cb).primitive()
    if A.degree(v) < B.degree(v):
        A, B = B, A
    while True:
        r = prem(A, B, v)
        if not r:
            break
        if r.degree(v) == 0:
            B = ONE
            break
        A, B = B, _primitive_part(r, v)
    if B.is_constant():
        return c.monic()
    return (c * _primitive_part(B, v)).monic()


def mv_gcd(polys: Iterable[MPoly]) -> MPoly:
    """Monic gcd of multivariate polynomials (Gauss primitive-part recursion)."""
    nonzero = [MPoly.coerce(p) for p in polys]
    nonzero = [p for p in nonzero if p]
    if not nonzero:
        raise ValueError("gcd of an all-zero list")
    nonzero.sort(key=lambda p: (p.total_degree(), len(p.terms)))
    g = nonzero[0]
    for p in nonzero[1:]:
        g = _gcd2(g, p)
        if g.is_constant():
            return ONE
    return g.monic()


def mv_lcm(polys: Iterable[MPoly]) -> MPoly:
    out = ONE
    for p in polys:
        out = (out * p).exact_div(mv_gcd([out, p]))
    return out.monic()


# rational functions ----------------------------------------------------------


def _is_atom(p: MPoly) -> bool:
    """A single token or power ``v^k``, safe to the right of ``/``."""
    if len(p.terms) != 1:
        return False
    (e, c), = p.terms.items()
    if not any(e):
        return c > 0
    return c == 1 and sum(1 for k in e if k) == 1


class RatFn:
    """Quotient ``num/den`` kept in lowest terms.

    Normal form: gcd(num, den) = 1, the pair scaled to integer coefficients
    with joint content 1, and the denominator's leading coefficient positive.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, normalize: bool = True):
        num, den = MPoly.coerce(num), MPoly.coerce(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if normalize:
            num, den = _normalize_pair(num, den)
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> "RatFn":
        if isinstance(x, RatFn):
            return x
        return cls(MPoly.coerce(x))

    @property
    def gens(self) -> tuple:
        return _merge_gens(self.num.gens, self.den.gens)

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> MPoly:
        if not self.den.is_constant():
            raise ValueError(f"{self} is not a polynomial")
        return self.num * (1 / self.den.constant_value())

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, MPoly)):
            other = RatFn.coerce(other)
        if not isinstance(other, RatFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> "RatFn":
        return RatFn(-self.num, self.den, normalize=False) if self.num else self

    def __add__(self, other) -> "RatFn":
        other = RatFn.coerce(other)
        if self.den == other.den:
            return RatFn(self.num + other.num, self.den)
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFn":
        return self + (-RatFn.coerce(other))

    def __rsub__(self, other) -> "RatFn":
        return RatFn.coerce(other) - self

    def __mul__(self, other) -> "RatFn":
        other = RatFn.coerce(other)
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFn":
        other = RatFn.coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFn":
        return RatFn.coerce(other) / self

    def __pow__(self, n: int) -> "RatFn":
        if n < 0:
            return RatFn(self.den ** -n, self.num ** -n)
        return RatFn(self.num ** n, self.den ** n, normalize=False)

    def degree(self, var: str):
        return max(self.num.degree(var), self.den.degree(var))

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        num, den = str(self.num), str(self.den)
        if len(self.num.terms) > 1:
            num = f"({num})"
        if not _is_atom(self.den):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RatFn({self})"


def _normalize_pair(num: MPoly, den: MPoly):
    if not num:
        return ZERO, ONE
    if not den.is_constant() and not num.is_constant():
        g = mv_gcd([num, den])
        if not g.is_constant():
            num, den = num.exact_div(g), den.exact_div(g)
    coeffs = list(num.terms.values()) + list(den.terms.values())
    scale = Fraction(
        math.lcm(*(c.denominator for c in coeffs)),
        math.gcd(*(c.numerator for c in coeffs)),
    )
    if den.lc() < 0:
        scale = -scale
    return num * scale, den * scale


def _power_table(base: MPoly, n: int) -> list:
    out = [ONE]
    for _ in range(n):
        out.append(out[-1] * base)
    return out


def _subst_poly(p: MPoly, bindings: dict) -> tuple:
    """Substitute ``{var: RatFn}`` into ``p``.

    Returns ``(numerator, {var: exponent})`` where the true value is the
    numerator divided by ``prod(den_var ** exponent)``.
    """
    active = [v for v in p.gens if v in bindings]
    if not active:
        return p, {}
    degs = {v: p.degree(v) for v in active}
    num_pow = {v: _power_table(bindings[v].num, degs[v]) for v in active}
    den_pow = {v: _power_table(bindings[v].den, degs[v]) for v in active}
    idx = {v: p.gens.index(v) for v in active}
    rest = [i for i, v in enumerate(p.gens) if v not in bindings]
    rest_gens = tuple(p.gens[i] for i in rest)
    out = ZERO
    cache: dict = {}
    for e, c in p.terms.items():
        key = tuple(e[idx[v]] for v in active)
        if key not in cache:
            prod = ONE
            for v, k in zip(active, key):
                prod = prod * num_pow[v][k] * den_pow[v][degs[v] - k]
            cache[key] = prod
        mono = MPoly._raw(rest_gens, {tuple(e[i] for i in rest): c})
        out = out + mono * cache[key]
    return out, degs


def substitute(f, bindings: Mapping[str, object]) -> RatFn:
    """Compose ``f`` with ``{var: rational function}`` and cancel common factors."""
    f = RatFn.coerce(f)
    bindings = {v: RatFn.coerce(g) for v, g in bindings.items()}
    n, dn = _subst_poly(f.num, bindings)
    d, dd = _subst_poly(f.den, bindings)
    for v in set(dn) | set(dd):
        k = dd.get(v, 0) - dn.get(v, 0)
        if k > 0:
            n = n * bindings[v].den ** k
        elif k < 0:
            d = d * bindings[v].den ** (-k)
    if not d:
        raise ZeroDivisionError(f"substitution makes the denominator of {f} vanish")
    return RatFn(n, d)


def subst_poly_cleared(p: MPoly, bindings: Mapping[str, object]) -> tuple:
    """Polynomial substitution without cancellation (see ``_subst_poly``)."""
    return _subst_poly(MPoly.coerce(p), {v: RatFn.coerce(g) for v, g in bindings.items()})


def evaluate(f, point: Mapping[str, Number]) -> Fraction:
    """Exact value of ``f`` at ``point``; raises :class:`PoleError` at poles."""
    f = RatFn.coerce(f)
    den = f.den.value(point)
    if not den:
        raise PoleError(f"denominator of {f} vanishes at {dict(point)}")
    return f.num.value(point) / den


def scalar_str(c: Number) -> str:
    return _frac_str(Fraction(c))

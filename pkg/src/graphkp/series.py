"""Exact truncated power series in weighted variables.

Series live in Q[x_1, x_2, ...] where the variable x_i carries weight i; they
are printed as ``q1, q2, ...`` or ``p1, p2, ...`` depending on the series'
variable family.  A :class:`TruncSeries` keeps the terms of weighted degree at
most ``order`` as a sparse map from monomials to ``fractions.Fraction``
coefficients.  All arithmetic is exact; floats are rejected outright.

A monomial is a tuple of ``(variable index, exponent)`` pairs sorted by
variable index, with zero exponents never stored; the empty tuple is the
constant monomial.  The canonical term order is graded (by weighted degree),
then lexicographic on dense exponent vectors with higher powers of x_1 first.
Rendering follows that order, which makes printed output byte-stable.

Derivatives shrink the truncation order: differentiating a series of order N
with respect to x_i leaves terms that are only reliable through weight N - i,
and the returned series carries that reduced order.  Nothing in this module
ever pads a series back up to a higher order.

Series are never mutated after construction; every operation returns a fresh
value, so results can be shared freely across threads and summed in any
association order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

MAX_ORDER = 8
DEFAULT_ORDER = 7

Monomial = tuple[tuple[int, int], ...]

#: The constant monomial.
UNIT: Monomial = ()


def _fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not allowed")
    return value if isinstance(value, Fraction) else Fraction(value)


def mono(exponents: Mapping[int, int] | Iterable[tuple[int, int]]) -> Monomial:
    """Build a canonical monomial from {variable index: exponent} pairs."""
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    out = []
    for var, exp in sorted(items):
        var = int(var)
        exp = int(exp)
        if var < 1:
            raise ValueError(f"variable index must be >= 1, got {var}")
        if exp < 0:
            raise ValueError(f"negative exponent on variable {var}")
        if exp:
            out.append((var, exp))
    return tuple(out)


def mono_weight(m: Monomial) -> int:
    return sum(var * exp for var, exp in m)


def mono_key(m: Monomial):
    """Canonical sort key: graded, then lex on dense exponents, x1-heavy first."""
    top = m[-1][0] if m else 0
    dense = [0] * top
    for var, exp in m:
        dense[var - 1] = -exp
    return (mono_weight(m), dense)


def _mono_text(m: Monomial, var: str) -> str:
    return " ".join(f"{var}{i}" if e == 1 else f"{var}{i}^{e}" for i, e in m)


class TruncSeries:
    """Sparse exact multivariate series truncated at a weighted degree."""

    __slots__ = ("order", "var", "terms")

    def __init__(self, order: int = DEFAULT_ORDER, var: str = "q", terms=None):
        if not 0 <= order <= MAX_ORDER:
            raise ValueError(f"truncation order must be in [0, {MAX_ORDER}], got {order}")
        if var not in ("q", "p"):
            raise ValueError(f"variable family must be 'q' or 'p', got {var!r}")
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(m, tuple):
                    m = mono(m)
                c = _fraction(c)
                if c and mono_weight(m) <= order:
                    clean[m] = c
        self.order = order
        self.var = var
        self.terms = clean

    @classmethod
    def _raw(cls, order: int, var: str, terms: dict) -> "TruncSeries":
        # internal fast path: terms must already be clean (no zeros, weights <= order)
        s = object.__new__(cls)
        s.order = order
        s.var = var
        s.terms = terms
        return s

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER, var: str = "q") -> "TruncSeries":
        return cls(order, var)

    @classmethod
    def constant(cls, value, order: int = DEFAULT_ORDER, var: str = "q") -> "TruncSeries":
        return cls(order, var, {UNIT: _fraction(value)})

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER, var: str = "q") -> "TruncSeries":
        return cls.constant(1, order, var)

    @classmethod
    def variable(cls, index: int, order: int = DEFAULT_ORDER, var: str = "q") -> "TruncSeries":
        return cls(order, var, {mono({index: 1}): Fraction(1)})

    # -- structure ---------------------------------------------------------

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get(UNIT, Fraction(0))

    def coefficient(self, m) -> Fraction:
        """Coefficient of a monomial; querying beyond the order is an error."""
        if not isinstance(m, tuple):
            m = mono(m)
        w = mono_weight(m)
        if w > self.order:
            raise ValueError(f"monomial weight {w} exceeds truncation order {self.order}")
        return self.terms.get(m, Fraction(0))

    def homogeneous_part(self, weight: int) -> "TruncSeries":
        return TruncSeries._raw(
            self.order, self.var,
            {m: c for m, c in self.terms.items() if mono_weight(m) == weight})

    def truncate(self, order: int) -> "TruncSeries":
        """Lower the truncation order, dropping heavier terms.  Never raises it."""
        if order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        if order == self.order:
            return self
        return TruncSeries._raw(
            order, self.var,
            {m: c for m, c in self.terms.items() if mono_weight(m) <= order})

    def min_weight(self) -> int:
        """Smallest weight carrying a term; order + 1 for the zero series."""
        return min((mono_weight(m) for m in self.terms), default=self.order + 1)

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"truncation order mismatch: {self.order} vs {other.order}")
        if self.var != other.var:
            raise ValueError(f"variable family mismatch: {self.var} vs {other.var}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.constant(other, self.order, self.var)
        elif not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return TruncSeries._raw(self.order, self.var, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._raw(self.order, self.var,
                                {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.constant(other, self.order, self.var)
        elif not isinstance(other, TruncSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _fraction(other)
            if not c:
                return TruncSeries._raw(self.order, self.var, {})
            return TruncSeries._raw(self.order, self.var,
                                    {m: c * v for m, v in self.terms.items()})
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_compatible(other)
        order = self.order
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            w1 = mono_weight(m1)
            for m2, c2 in other.terms.items():
                if w1 + mono_weight(m2) > order:
                    continue
                e = dict(m1)
                for var, exp in m2:
                    e[var] = e.get(var, 0) + exp
                key = tuple(sorted(e.items()))
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return TruncSeries._raw(self.order, self.var, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("series powers must be nonnegative integers")
        result = TruncSeries.one(self.order, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _fraction(other)
            return self.terms == ({UNIT: c} if c else {})
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.var == other.var and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    # -- rendering ---------------------------------------------------------

    def text(self) -> str:
        """Canonical plain-text rendering, e.g. ``q1^3 + 3 q1 q2 + 2 q3``."""
        if not self.terms:
            return "0"
        pieces = []
        for m in sorted(self.terms, key=mono_key):
            c = self.terms[m]
            body = _mono_text(m, self.var)
            mag = abs(c)
            if body and mag == 1:
                term = body
            elif body:
                term = f"{mag} {body}"
            else:
                term = str(mag)
            pieces.append(("-" if c < 0 else "+", term))
        sign, first = pieces[0]
        out = ("-" if sign == "-" else "") + first
        for sign, term in pieces[1:]:
            out += f" {sign} {term}"
        return out

    def to_json_obj(self) -> dict:
        terms = []
        for m in sorted(self.terms, key=mono_key):
            c = self.terms[m]
            terms.append({
                "exponents": {str(var): exp for var, exp in m},
                "numerator": c.numerator,
                "denominator": c.denominator,
            })
        return {"var": self.var, "order": self.order, "terms": terms}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "TruncSeries":
        try:
            order = int(obj["order"])
            var = obj["var"]
            terms = {}
            for t in obj["terms"]:
                m = mono({int(k): int(v) for k, v in t["exponents"].items()})
                c = Fraction(int(t["numerator"]), int(t["denominator"]))
                terms[m] = terms.get(m, 0) + c
        except (KeyError, TypeError) as err:
            raise ValueError(f"malformed series object: {err}") from err
        return cls(order, var, terms)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"TruncSeries(order={self.order}, var={self.var!r}, <{self.text()}>)"


# -- calculus ---------------------------------------------------------------


def exp(a: TruncSeries) -> TruncSeries:
    """Exponential of a series with zero constant term."""
    if a.constant_term:
        raise ValueError("exp requires a zero constant term")
    result = TruncSeries.one(a.order, a.var)
    term = result
    for k in range(1, a.order + 1):
        term = term * a * Fraction(1, k)
        if not term:
            break
        result = result + term
    return result


def log(a: TruncSeries) -> TruncSeries:
    """Logarithm of a series with constant term 1; inverse of :func:`exp`."""
    if a.constant_term != 1:
        raise ValueError("log requires constant term 1")
    u = a - 1
    result = TruncSeries.zero(a.order, a.var)
    power = TruncSeries.one(a.order, a.var)
    for k in range(1, a.order + 1):
        power = power * u
        if not power:
            break
        result = result + power * Fraction((-1) ** (k + 1), k)
    return result


def partial(a: TruncSeries, var_index: int, times: int = 1) -> TruncSeries:
    """Iterated formal derivative d^times/d(x_var_index)^times.

    The result's order is the weight through which it is reliable,
    ``a.order - times * var_index`` (floored at 0).
    """
    if var_index < 1:
        raise ValueError(f"variable index must be >= 1, got {var_index}")
    if times < 1:
        raise ValueError(f"derivative count must be >= 1, got {times}")
    new_order = max(0, a.order - times * var_index)
    out: dict[Monomial, Fraction] = {}
    for m, c in a.terms.items():
        exps = dict(m)
        e = exps.get(var_index, 0)
        if e < times:
            continue
        for t in range(times):
            c = c * (e - t)
        if e > times:
            exps[var_index] = e - times
        else:
            del exps[var_index]
        out[tuple(sorted(exps.items()))] = c
    return TruncSeries._raw(new_order, a.var, out)


def substitute(a: TruncSeries, factors, var: str = "p") -> TruncSeries:
    """Rescale variables, x_i -> factor_i * y_i, keeping weights unchanged.

    ``factors`` maps variable indices to nonzero rationals; an object with a
    ``factors`` attribute (a rescale plan) is accepted as well.  Every variable
    appearing in ``a`` must have a factor.
    """
    factors = getattr(factors, "factors", factors)
    out: dict[Monomial, Fraction] = {}
    for m, c in a.terms.items():
        for i, e in m:
            f = factors.get(i)
            if f is None or f == 0:
                raise ValueError(f"no nonzero rescale factor for variable {i}")
            c = c * _fraction(f) ** e
        out[m] = c
    return TruncSeries._raw(a.order, var, out)


def evaluate(a: TruncSeries, values: Mapping[int, Fraction]) -> Fraction:
    """Evaluate at a rational point; every variable present needs a value."""
    total = Fraction(0)
    for m, c in a.terms.items():
        for i, e in m:
            if i not in values:
                raise ValueError(f"no value supplied for variable {i}")
            c = c * _fraction(values[i]) ** e
        total += c
    return total

"""Schur polynomials in power-sum variables and the first two KP equations.

One-part Schur polynomials (complete homogeneous symmetric functions) are
read off from the generating function

    sum_{n>=0} s_n = exp(sum_{k>=1} p_k / k),

with the weight of p_i taken to be i; general s_lambda come from the
Jacobi-Trudi determinant det(s_{lambda_i - i + j}).

``target_series`` builds the reference tau-function

    1 + 2^0 s_1 + 2^1 s_2 + ... + 2^(n(n-1)/2) s_n + ...

which every rescaled generating function in :mod:`graphkp.ensemble` must
match.  Any series 1 + sum c_n s_n with one-part Schur polynomials only is a
tau-function, so its log solves the KP hierarchy; the two residual operators
here check the first two equations:

    kp1: F_{2,2} - F_{1,3} + 1/2 (F_{1,1})^2 + 1/12 F_{1,1,1,1}
    kp2: F_{2,3} - F_{1,4} + F_{1,1} F_{1,2} + 1/6 F_{1,1,1,2}

(subscripts are repeated partial derivatives).  Every term of kp1 lowers
weight by exactly 4 and every term of kp2 by exactly 5, so the residual of
an order-N series is reliable through weight N - 4 resp. N - 5; the
returned residual carries that reduced order and never claims more.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from graphkp import series
from graphkp.series import DEFAULT_ORDER, TruncSeries, mono, mono_key, partial

Partition = tuple[int, ...]


def partitions_of(w: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Weakly decreasing partitions of w, largest first part first."""
    if w == 0:
        return ((),)
    if max_part is None:
        max_part = w
    out = []
    for first in range(min(w, max_part), 0, -1):
        for rest in partitions_of(w - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _exp_power_sums(order: int) -> TruncSeries:
    base = TruncSeries(order, "p",
                       {mono({k: 1}): Fraction(1, k) for k in range(1, order + 1)})
    return series.exp(base)


def schur_one_part(n: int, order: int = DEFAULT_ORDER) -> TruncSeries:
    """s_n in power-sum variables, exact through its own weight."""
    if n > order:
        raise ValueError(f"s_{n} does not fit truncation order {order}")
    return _exp_power_sums(order).homogeneous_part(n)


def _validate_partition(lam) -> Partition:
    lam = tuple(int(x) for x in lam)
    if any(a < 1 for a in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"not a partition: {lam}")
    return lam


def schur_jacobi_trudi(lam, order: int = DEFAULT_ORDER) -> TruncSeries:
    """s_lambda = det(s_{lambda_i - i + j}) with s_0 = 1 and s_m = 0 for m < 0."""
    lam = _validate_partition(lam)
    weight = sum(lam)
    if weight > order:
        raise ValueError(f"|lambda| = {weight} exceeds truncation order {order}")
    l = len(lam)
    if l == 0:
        return TruncSeries.one(order, "p")
    one = TruncSeries.one(order, "p")
    zero = TruncSeries.zero(order, "p")

    def entry(i: int, j: int) -> TruncSeries:
        idx = lam[i] - i + j
        if idx < 0:
            return zero
        if idx == 0:
            return one
        return schur_one_part(idx, order)

    # determinant by expansion along rows, memoized on the remaining columns
    memo: dict[int, TruncSeries] = {}

    def minor(colmask: int) -> TruncSeries:
        if colmask == 0:
            return one
        cached = memo.get(colmask)
        if cached is not None:
            return cached
        row = l - colmask.bit_count()
        total = zero
        sign = 1
        rest = colmask
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            e = entry(row, j)
            if e:
                total = total + e * minor(colmask ^ low) * sign
            sign = -sign
            rest ^= low
        memo[colmask] = total
        return total

    return minor((1 << l) - 1)


def target_series(order: int = DEFAULT_ORDER) -> TruncSeries:
    """1 + sum_{n>=1} 2^(n(n-1)/2) s_n, truncated at the order."""
    total = TruncSeries.one(order, "p")
    for n in range(1, order + 1):
        total = total + schur_one_part(n, order) * Fraction(2 ** (n * (n - 1) // 2))
    return total


def schur_combination(coeffs, order: int = DEFAULT_ORDER) -> TruncSeries:
    """Rebuild sum c_lambda s_lambda from a coefficient map."""
    total = TruncSeries.zero(order, "p")
    for lam, c in coeffs.items():
        total = total + schur_jacobi_trudi(lam, order) * Fraction(c)
    return total


def schur_expand(tau: TruncSeries) -> dict[Partition, Fraction]:
    """Coefficients c_lambda with tau = sum c_lambda s_lambda, |lambda| <= order.

    Works weight by weight: at weight w the s_lambda with |lambda| = w are a
    basis of the quasihomogeneous polynomials, so the coefficients come from
    one exact linear solve per weight (Gaussian elimination over Fraction).
    Zero coefficients are omitted from the result.
    """
    if tau.var != "p":
        raise ValueError("Schur expansion expects a series in p-variables")
    out: dict[Partition, Fraction] = {}
    for w in range(tau.order + 1):
        parts = partitions_of(w)
        monos = sorted({mono({i: list(lam).count(i) for i in set(lam)})
                        for lam in parts}, key=mono_key)
        index = {m: r for r, m in enumerate(monos)}
        rows = len(monos)
        # columns: one per partition, right-hand side appended
        matrix = [[Fraction(0)] * (len(parts) + 1) for _ in range(rows)]
        for cidx, lam in enumerate(parts):
            s = schur_jacobi_trudi(lam, w)
            for m, c in s.terms.items():
                matrix[index[m]][cidx] = c
        target = tau.homogeneous_part(w)
        for m, c in target.terms.items():
            matrix[index[m]][-1] = c
        solution = _solve_exact(matrix, len(parts))
        for lam, c in zip(parts, solution):
            if c:
                out[lam] = c
    return out


def _solve_exact(matrix: list[list[Fraction]], ncols: int) -> list[Fraction]:
    """Gaussian elimination over Fractions for a square augmented system."""
    rows = len(matrix)
    if rows != ncols:
        raise ValueError("expected a square system")
    for col in range(ncols):
        pivot = next((r for r in range(col, rows) if matrix[r][col]), None)
        if pivot is None:
            raise ValueError("singular basis matrix")
        matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
        inv = 1 / matrix[col][col]
        matrix[col] = [x * inv for x in matrix[col]]
        for r in range(rows):
            if r != col and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[col])]
    return [matrix[r][-1] for r in range(ncols)]


# -- KP residuals ---------------------------------------------------------------


def kp1_residual(F: TruncSeries) -> TruncSeries:
    """Residual of the first KP equation; its order is the weight through
    which a zero residual is actually certified (F.order - 4)."""
    if F.var != "p":
        raise ValueError("KP residuals expect a series in p-variables")
    if F.order < 4:
        raise ValueError(f"first KP equation needs order >= 4, got {F.order}")
    m = F.order - 4
    d22 = partial(F, 2, 2).truncate(m)
    d13 = partial(partial(F, 1), 3).truncate(m)
    d11 = partial(F, 1, 2).truncate(m)
    d1111 = partial(F, 1, 4).truncate(m)
    return d22 - d13 + (d11 * d11) * Fraction(1, 2) + d1111 * Fraction(1, 12)


def kp2_residual(F: TruncSeries) -> TruncSeries:
    """Residual of the second KP equation, reliable through F.order - 5."""
    if F.var != "p":
        raise ValueError("KP residuals expect a series in p-variables")
    if F.order < 5:
        raise ValueError(f"second KP equation needs order >= 5, got {F.order}")
    m = F.order - 5
    d23 = partial(partial(F, 2), 3).truncate(m)
    d14 = partial(partial(F, 1), 4).truncate(m)
    d11 = partial(F, 1, 2).truncate(m)
    d12 = partial(partial(F, 1), 2).truncate(m)
    d1112 = partial(partial(F, 1, 3), 2).truncate(m)
    return d23 - d14 + d11 * d12 + d1112 * Fraction(1, 6)

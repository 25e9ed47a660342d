"""Shared test utilities: small graph builders, a polynomial text parser for
frozen expected values, and random series generation."""

from __future__ import annotations

import random
from fractions import Fraction

from graphkp.graphs import Graph
from graphkp.series import TruncSeries, mono


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """One center (vertex 0) joined to n - 1 leaves."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def parse_poly(text: str, order: int, var: str = "q") -> TruncSeries:
    """Parse '" q1^4 + 6 q1^2 q2 - 1/2 q3"' style text into a series.

    Independent of TruncSeries.text() so the two cannot share a bug: this is
    a from-scratch tokenizer used only to transcribe expected values.
    """
    terms: dict = {}
    normalized = text.replace("-", "+-").replace(" ", "")
    for chunk in normalized.split("+"):
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:]
        coeff = Fraction(1)
        exps: dict[int, int] = {}
        i = 0
        if chunk and chunk[0] not in ("q", "p"):
            j = i
            while j < len(chunk) and chunk[j] not in ("q", "p"):
                j += 1
            coeff = Fraction(chunk[i:j])
            i = j
        while i < len(chunk):
            assert chunk[i] == var, f"unexpected variable letter in {chunk!r}"
            i += 1
            j = i
            while j < len(chunk) and chunk[j].isdigit():
                j += 1
            idx = int(chunk[i:j])
            i = j
            exp = 1
            if i < len(chunk) and chunk[i] == "^":
                i += 1
                j = i
                while j < len(chunk) and chunk[j].isdigit():
                    j += 1
                exp = int(chunk[i:j])
                i = j
            exps[idx] = exps.get(idx, 0) + exp
        key = mono(exps)
        terms[key] = terms.get(key, 0) + sign * coeff
    return TruncSeries(order, var, terms)


def random_series(rng: random.Random, order: int, var: str = "q",
                  max_terms: int = 6, constant=None) -> TruncSeries:
    """Random sparse series; ``constant`` pins the constant term if given."""
    terms: dict = {}
    for _ in range(rng.randint(0, max_terms)):
        exps: dict[int, int] = {}
        budget = rng.randint(1, order)
        while budget:
            i = rng.randint(1, budget)
            exps[i] = exps.get(i, 0) + 1
            budget -= i
        coeff = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        key = mono(exps)
        terms[key] = terms.get(key, 0) + coeff
    s = TruncSeries(order, var, terms)
    if constant is not None:
        base = {m: c for m, c in s.terms.items() if m}
        if constant:
            base[()] = Fraction(constant)
        s = TruncSeries(order, var, base)
    return s


def random_rational(rng: random.Random, lo: int = -9, hi: int = 9,
                    nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(lo, hi), rng.randint(1, 9))
        if value or not nonzero:
            return value

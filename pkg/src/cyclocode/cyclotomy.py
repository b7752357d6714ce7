"""Cyclotomic classes, order-2 cyclotomic numbers and Gaussian periods.

Character sums are never evaluated numerically.  A sum of the canonical
additive character over a multiset of field elements is stored as the
histogram of absolute-trace values, i.e. the cyclotomic integer
sum_c n_c zeta_p^c, which is a rational integer exactly when all n_c with
c != 0 agree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import HypothesisViolated, OddDegree, OrderDoesNotDivide


@dataclass(frozen=True)
class CyclotomicClass:
    """D_i^(m) = gamma^i <gamma^m>, stored as the sorted logs of its members."""

    i: int
    m: int
    members: np.ndarray

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(int(x) for x in self.members)


def cyclotomic_class(ctx, i, m):
    N = ctx.n_units
    if m < 1 or N % m:
        raise OrderDoesNotDivide(f"{m} does not divide {N}")
    i %= m
    return CyclotomicClass(i, m, np.arange(i, N, m, dtype=np.int64))


def class_index_array(ctx, x, m):
    """Index i of the class D_i^(m) containing each element, -1 for zero."""
    x = np.asarray(x, dtype=np.int64)
    if ctx.n_units % m:
        raise OrderDoesNotDivide(f"{m} does not divide {ctx.n_units}")
    return np.where(x < 0, -1, x % m)


@dataclass(frozen=True)
class CyclotomicIntegerSum:
    """sum_c counts[c] * zeta_p^c with counts indexed by c in F_p."""

    counts: tuple

    @property
    def p(self):
        return len(self.counts)

    def reduce(self):
        """The rational integer value, or None if the sum is not rational."""
        rest = self.counts[1:]
        if any(c != rest[0] for c in rest):
            return None
        return self.counts[0] - (rest[0] if rest else 0)

    @property
    def is_rational(self):
        return self.reduce() is not None

    def __add__(self, other):
        if self.p != other.p:
            raise ValueError("characteristics differ")
        return CyclotomicIntegerSum(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def scaled(self, factor):
        return CyclotomicIntegerSum(tuple(factor * c for c in self.counts))

    def __repr__(self):
        v = self.reduce()
        shown = v if v is not None else "irrational"
        return f"CyclotomicIntegerSum({list(self.counts)} -> {shown})"


def character_sum(ctx, subset):
    """Exact sum of chi over ``subset`` (log-coded elements; ZERO allowed)."""
    x = np.fromiter(subset, dtype=np.int64) if not isinstance(subset, np.ndarray) else subset
    traces = ctx.trace_absolute_array(x)
    counts = np.bincount(traces.ravel(), minlength=ctx.p)
    return CyclotomicIntegerSum(tuple(int(c) for c in counts))


def cyclotomic_number_bruteforce(ctx, i, j, m):
    """(i,j)^(m) = |(D_i + 1) ∩ D_j| by direct membership testing."""
    cls = cyclotomic_class(ctx, i, m)
    shifted = ctx.add_array(cls.members, ctx.one)
    return int(np.count_nonzero(class_index_array(ctx, shifted, m) == j % m))


def cyclotomic_number_order2_closed(q, k, i, j):
    """Order-2 cyclotomic numbers when 4 | q^k - 1."""
    Q = q**k
    if (Q - 1) % 4:
        raise HypothesisViolated(f"4 does not divide {Q} - 1")
    if (i % 2, j % 2) == (0, 0):
        return (Q - 5) // 4
    return (Q - 1) // 4


@dataclass(frozen=True)
class GaussianPeriods:
    eta0: int
    eta1: int


def gaussian_periods_closed(p, t, k):
    """Order-2 Gaussian periods eta_0, eta_1 of F_{p^(tk)} in closed form.

    Only even tk is supported: then (sqrt(-1))^(tk) = (-1)^(tk/2) and both
    periods are rational integers.
    """
    tk = t * k
    if tk % 2:
        raise OddDegree(f"tk = {tk} is odd")
    root = p ** (tk // 2)  # q^(k/2)
    sign = (-1) ** (tk - 1)
    if p % 4 == 1:
        num = -1 + sign * root
    elif p % 4 == 3:
        num = -1 + sign * (-1) ** (tk // 2) * root
    else:
        raise HypothesisViolated("p must be odd")
    eta0 = num // 2
    return GaussianPeriods(eta0, -1 - eta0)


def gaussian_periods_bruteforce(ctx):
    """Gaussian periods from exact character sums over D_0^(2) and D_1^(2)."""
    s0 = character_sum(ctx, cyclotomic_class(ctx, 0, 2).members).reduce()
    s1 = character_sum(ctx, cyclotomic_class(ctx, 1, 2).members).reduce()
    if s0 is None or s1 is None:
        raise AssertionError("order-2 Gaussian period is not rational")
    return GaussianPeriods(s0, s1)

"""Finite fields F_{q^k} (q = p^t) backed by discrete-log and Zech tables.

Elements are plain ints in the *log representation*: ``ZERO == -1`` and every
nonzero element is its discrete logarithm ``i`` in ``[0, q^k - 2]`` relative to
the fixed primitive element gamma.  So ``1`` is ``0`` and gamma is ``1``.
Multiplication is addition of logs, addition goes through the Zech table
``zech[i] = log(1 + gamma^i)``.

The polynomial-basis view is available through *vector codes*: the integer
``c_0 + c_1 p + ... + c_{m-1} p^{m-1}`` of the coefficient vector of an element
reduced modulo the defining polynomial (``m = t*k``).  Prime-field elements are
therefore the codes ``0..p-1`` themselves.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from math import gcd

import numpy as np
import sympy
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_pow_mod

from .errors import (
    DivisionByZero,
    NonPrimitiveModulus,
    NotPrime,
    NotPrimePower,
    ReducibleModulus,
    TableBudgetExceeded,
)

ZERO = -1
TABLE_BUDGET = 2**22


@dataclass(frozen=True)
class FieldParams:
    p: int
    t: int
    k: int

    @property
    def q(self):
        return self.p**self.t

    @property
    def degree(self):
        """Degree t*k of F_{q^k} over the prime field."""
        return self.t * self.k

    @property
    def order(self):
        """Field size q^k."""
        return self.p ** (self.t * self.k)

    @property
    def delta(self):
        return (self.order - 1) // (self.q - 1)

    def as_dict(self):
        return {"p": self.p, "t": self.t, "q": self.q, "k": self.k, "delta": self.delta}


def split_prime_power(q):
    """Return (p, t) with q = p**t, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    f = sympy.factorint(q)
    if len(f) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    ((p, t),) = f.items()
    return int(p), int(t)


def parse_modulus(text):
    """Parse ``"3,1,1"`` (constant term first) into a coefficient list."""
    try:
        return [int(c) for c in text.replace(" ", "").split(",") if c != ""]
    except ValueError:
        raise ValueError(f"bad modulus text {text!r}; expected e.g. '3,1,1'") from None


def _is_primitive(coeffs, p, order_minus_1, prime_factors):
    # coeffs: monic, constant term first.  x has order q^k-1 modulo f.
    if coeffs[0] % p == 0:
        return False
    f = [ZZ(c) for c in reversed(coeffs)]
    x = [ZZ(1), ZZ(0)]
    one = [ZZ(1)]
    if gf_pow_mod(x, order_minus_1, f, p, ZZ) != one:
        return False
    return all(gf_pow_mod(x, order_minus_1 // r, f, p, ZZ) != one for r in prime_factors)


def smallest_primitive_polynomial(p, m):
    """Lexicographically smallest monic primitive polynomial of degree m over F_p.

    Coefficient tuples ``(c_0, ..., c_{m-1})`` are compared with the constant
    term most significant.
    """
    order_minus_1 = p**m - 1
    factors = list(sympy.factorint(order_minus_1))
    # constant term must be nonzero; product() walks tuples in lexicographic order
    for lower in itertools.product(range(1, p), *[range(p)] * (m - 1)):
        coeffs = list(lower) + [1]
        if _is_primitive(coeffs, p, order_minus_1, factors):
            return tuple(coeffs)
    raise AssertionError(f"no primitive polynomial of degree {m} over F_{p}")


class FieldCtx:
    """An immutable F_{q^k} with log / antilog / Zech and both trace tables.

    Use :func:`build_field` rather than calling this directly.
    """

    def __init__(self, params: FieldParams, modulus: tuple[int, ...]):
        self.params = params
        self.modulus = modulus
        self.p = params.p
        self.q = params.q
        self.k = params.k
        self.m = params.degree
        self.order = params.order
        self.n_units = self.order - 1
        self.delta = params.delta
        self.one = 0
        self.gamma = 1 % self.n_units
        self.neg_one = self.n_units // 2 if self.p % 2 else 0
        self._build_tables()
        for arr in (self.exp, self.log, self.zech, self.tr_rel, self.tr_abs, self.fq_index):
            arr.setflags(write=False)

    # -- construction -----------------------------------------------------

    def _build_tables(self):
        p, m, N = self.p, self.m, self.n_units
        digits = _power_digits(self.modulus, p, N)
        weights = p ** np.arange(m, dtype=np.int64)
        exp = digits.astype(np.int64) @ weights
        log = np.full(self.order, ZERO, dtype=np.int64)
        log[exp] = np.arange(N, dtype=np.int64)
        if np.count_nonzero(log >= 0) != N:
            raise NonPrimitiveModulus(f"root of {self.modulus} is not primitive")
        self.exp = exp
        self.log = log
        d0 = exp % p
        self.zech = log[exp - d0 + (d0 + 1) % p]

        idx = np.arange(N, dtype=np.int64)
        acc = idx.copy()
        for j in range(1, self.k):
            acc = self.add_array(acc, (idx * pow(self.q, j, N)) % N)
        self.tr_rel = acc
        acc = idx.copy()
        for j in range(1, m):
            acc = self.add_array(acc, (idx * pow(p, j, N)) % N)
        tr_abs = np.where(acc < 0, 0, exp[np.maximum(acc, 0)])
        if np.any(tr_abs >= p):
            raise AssertionError("absolute trace left the prime field")
        self.tr_abs = tr_abs

        # dense F_q index: ZERO -> 0, gamma^(delta*j) -> j + 1
        fq_index = np.full(N + 1, -1, dtype=np.int64)
        fq_index[0] = 0
        fq_index[1 + self.delta * np.arange(self.q - 1)] = np.arange(1, self.q)
        self.fq_index = fq_index

    # -- scalar arithmetic ------------------------------------------------

    def element(self, e):
        """gamma**e for any integer e (negative allowed)."""
        return e % self.n_units

    def add(self, x, y):
        if x == ZERO:
            return y
        if y == ZERO:
            return x
        z = int(self.zech[(y - x) % self.n_units])
        return ZERO if z == ZERO else (x + z) % self.n_units

    def neg(self, x):
        return ZERO if x == ZERO else (x + self.neg_one) % self.n_units

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if x == ZERO or y == ZERO:
            return ZERO
        return (x + y) % self.n_units

    def inv(self, x):
        if x == ZERO:
            raise DivisionByZero("inverse of zero")
        return (-x) % self.n_units

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, e):
        if x == ZERO:
            if e > 0:
                return ZERO
            if e == 0:
                return self.one
            raise DivisionByZero("zero to a negative power")
        return (x * e) % self.n_units

    # -- vectorised arithmetic on log arrays ------------------------------

    def add_array(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        x, y = np.broadcast_arrays(x, y)
        z = self.zech[(y - x) % self.n_units]
        out = np.where(z < 0, ZERO, (x + z) % self.n_units)
        out = np.where(x < 0, y, out)
        return np.where(y < 0, x, out)

    def mul_array(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        return np.where((x < 0) | (y < 0), ZERO, (x + y) % self.n_units)

    def neg_array(self, x):
        x = np.asarray(x, dtype=np.int64)
        return np.where(x < 0, ZERO, (x + self.neg_one) % self.n_units)

    def trace_relative_array(self, x):
        x = np.asarray(x, dtype=np.int64)
        return np.where(x < 0, ZERO, self.tr_rel[np.maximum(x, 0)])

    def trace_absolute_array(self, x):
        x = np.asarray(x, dtype=np.int64)
        return np.where(x < 0, 0, self.tr_abs[np.maximum(x, 0)])

    # -- conversions ------------------------------------------------------

    def elements(self):
        """All q^k elements: ZERO first, then gamma^0, gamma^1, ..."""
        return np.arange(-1, self.n_units, dtype=np.int64)

    def subfield(self):
        """The q elements of F_q inside F_{q^k}."""
        return np.concatenate(([ZERO], self.delta * np.arange(self.q - 1, dtype=np.int64)))

    def in_subfield(self, x):
        return x == ZERO or x % self.delta == 0

    def to_vector(self, x):
        """Vector code of x (polynomial basis, constant coefficient least significant)."""
        return 0 if x == ZERO else int(self.exp[x])

    def from_vector(self, code):
        return int(self.log[code])

    def to_coeffs(self, x):
        v = self.to_vector(x)
        return [(v // self.p**j) % self.p for j in range(self.m)]

    def from_coeffs(self, coeffs):
        coeffs = list(coeffs) + [0] * (self.m - len(coeffs))
        return self.from_vector(sum((c % self.p) * self.p**j for j, c in enumerate(coeffs)))

    def from_int(self, c):
        """The prime-field element c mod p."""
        return self.from_vector(c % self.p)

    def fingerprint(self):
        h = hashlib.sha256()
        h.update(repr((self.params, self.modulus)).encode())
        for arr in (self.exp, self.zech, self.tr_rel, self.tr_abs):
            h.update(arr.tobytes())
        return h.hexdigest()

    def __repr__(self):
        return (
            f"FieldCtx(p={self.p}, t={self.params.t}, k={self.k}, "
            f"q^k={self.order}, modulus={list(self.modulus)})"
        )


def _power_digits(modulus, p, count):
    """Coefficient vectors of x^0 .. x^(count-1) modulo ``modulus``."""
    m = len(modulus) - 1
    comp = np.zeros((m, m), dtype=np.int64)
    for j in range(1, m):
        comp[j - 1, j] = 1
    comp[m - 1, :] = [(-c) % p for c in modulus[:m]]
    dtype = np.uint8 if p < 256 else np.int64
    out = np.zeros((count, m), dtype=dtype)
    out[0, 0] = 1
    filled, step = 1, comp
    block = 1 << 15
    while filled < count:
        take = min(filled, count - filled)
        for s in range(0, take, block):
            e = min(s + block, take)
            out[filled + s:filled + e] = (out[s:e].astype(np.int64) @ step) % p
        filled += take
        step = (step @ step) % p
    return out


def _normalize_modulus(coeffs, p, m):
    coeffs = [c % p for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) - 1 != m:
        raise ReducibleModulus(f"modulus must have degree {m}, got {len(coeffs) - 1}")
    lead_inv = pow(coeffs[-1], -1, p)
    return tuple(c * lead_inv % p for c in coeffs)


def build_field(p, t, k, modulus_override=None, table_budget=TABLE_BUDGET):
    """Construct F_{q^k}, q = p**t, with a reproducible primitive element.

    Without an override the modulus is the lexicographically smallest monic
    primitive polynomial of degree t*k over F_p and gamma is the class of x.
    ``modulus_override`` may be a coefficient sequence or a ``"3,1,1"`` string
    (constant term first).
    """
    if not sympy.isprime(p):
        raise NotPrime(f"{p} is not prime")
    if t < 1 or k < 1:
        raise ValueError("t and k must be positive")
    m = t * k
    if p**m > table_budget:
        raise TableBudgetExceeded(f"{p}^{m} elements exceed the table budget {table_budget}")
    if modulus_override is None:
        modulus = smallest_primitive_polynomial(p, m)
    else:
        if isinstance(modulus_override, str):
            modulus_override = parse_modulus(modulus_override)
        modulus = _normalize_modulus(modulus_override, p, m)
        if not gf_irreducible_p([ZZ(c) for c in reversed(modulus)], p, ZZ):
            raise ReducibleModulus(f"{list(modulus)} is reducible over F_{p}")
        if not _is_primitive(modulus, p, p**m - 1, list(sympy.factorint(p**m - 1))):
            raise NonPrimitiveModulus(f"root of {list(modulus)} is not primitive")
    return FieldCtx(FieldParams(p, t, k), modulus)


def build_field_for(q, k, modulus_override=None, table_budget=TABLE_BUDGET):
    """Same as build_field but takes the prime power q directly."""
    p, t = split_prime_power(q)
    return build_field(p, t, k, modulus_override, table_budget)


def arith(ctx, op, x, y=None):
    """Dispatch ``op`` in {add, sub, mul, div, neg, inv, pow} on log-coded elements."""
    if op in ("neg", "inv"):
        return getattr(ctx, op)(x)
    if op in ("add", "sub", "mul", "div", "pow"):
        return getattr(ctx, op)(x, y)
    raise ValueError(f"unknown operation {op!r}")


def trace_relative(ctx, x):
    """Tr_{F_{q^k}/F_q}(x), returned as a (log-coded) element of the subfield."""
    return ZERO if x == ZERO else int(ctx.tr_rel[x])


def trace_absolute(ctx, x):
    """Absolute trace to F_p as an integer in [0, p-1]."""
    return 0 if x == ZERO else int(ctx.tr_abs[x])


def subfield_trace_absolute(ctx, y):
    """Tr_{F_q/F_p}(y) for y in the subfield F_q, as an integer."""
    if not ctx.in_subfield(y):
        raise ValueError("element is not in F_q")
    acc = ZERO
    for j in range(ctx.params.t):
        acc = ctx.add(acc, ctx.pow(y, ctx.p**j))
    return ctx.to_vector(acc)


def euler_phi(n):
    return int(sympy.totient(n))


def lcm(a, b):
    return a * b // gcd(a, b)

"""Codewords of C_(a1), C_(a2), C_(a1,a2) and exhaustive weight enumeration.

By Delsarte's theorem the code with parity-check polynomial h_{a1}(x)h_{a2}(x)
is {c(alpha, beta)} with c_i = Tr_{q^k/q}(alpha gamma^(a1 i) + beta gamma^(a2 i)).

The enumerator never forms the sum inside the trace.  By F_q-linearity
c_i = 0 iff Tr(alpha gamma^(a1 i)) == -Tr(beta gamma^(a2 i)), so two
precomputed (q^k x n) tables of small F_q indices turn the inner loop into
byte comparisons.  ``codeword`` takes the direct route (field additions then
trace) and serves as the independent check on that shortcut.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import EnumerationBudgetExceeded, HypothesisViolated
from .field import ZERO, FieldParams

DEFAULT_BUDGET = 10**8
_CHUNK_ELEMENTS = 1 << 24


@dataclass(frozen=True)
class CodeSpec:
    params: FieldParams
    a1: int
    a2: int | None
    n: int
    a: int
    lam: int | None
    epsilon: int | None

    @property
    def reducible(self):
        return self.a2 is not None

    @property
    def dimension(self):
        return 2 * self.params.k if self.reducible else self.params.k

    def exponents(self):
        return (self.a1,) if self.a2 is None else (self.a1, self.a2)


def _lambda_for(q, a):
    if a % 2:
        return None
    return (q - 1) // gcd(q - 1, a // 2)


def sign_epsilon(a, other, N):
    """1 if other = a + N/3, 2 if other = a - N/3 (mod N), else None."""
    if N % 3:
        return None
    d = (other - a) % N
    if d == N // 3:
        return 1
    if d == 2 * N // 3:
        return 2
    return None


def make_spec(params, a1, a2=None, strict=True, length=None):
    """Normalise exponents and derive n, a, lambda and epsilon.

    With ``strict`` a reducible spec must satisfy a1 - a2 = ±(q^k-1)/3 and n is
    the larger of the two component lengths (first match on ties).  Without
    it any pair is accepted and n is the lcm of the component lengths.
    ``length`` forces the length of an irreducible spec to a multiple of its
    natural length (the code is then a repetition of the shorter one).
    """
    if hasattr(params, "params"):
        params = params.params
    N = params.order - 1
    a1 %= N
    n1 = N // gcd(N, a1)
    if a2 is None:
        if length is not None:
            if length % n1:
                raise HypothesisViolated(f"length {length} is not a multiple of {n1}")
            n1 = length
        return CodeSpec(params, a1, None, n1, a1, _lambda_for(params.q, a1), None)
    a2 %= N
    n2 = N // gcd(N, a2)
    if strict:
        if sign_epsilon(a1, a2, N) is None:
            raise HypothesisViolated(f"a1 - a2 is not ±(q^k-1)/3 modulo {N}")
        n = max(n1, n2)
        a = a1 if n == n1 else a2
        if (a1 * n) % N or (a2 * n) % N:
            raise HypothesisViolated(f"length {n} does not annihilate both exponents")
    else:
        n = n1 * n2 // gcd(n1, n2)
        a = a1 if n1 >= n2 else a2
    other = a2 if a == a1 else a1
    return CodeSpec(params, a1, a2, n, a, _lambda_for(params.q, a), sign_epsilon(a, other, N))


@dataclass(frozen=True)
class WeightDistribution:
    """Weight enumerator as sorted (weight, frequency) pairs."""

    entries: tuple

    @classmethod
    def from_counts(cls, counts):
        if isinstance(counts, np.ndarray):
            counts = {w: int(f) for w, f in enumerate(counts) if f}
        merged = Counter()
        for w, f in dict(counts).items():
            merged[int(w)] += int(f)
        return cls(tuple(sorted((w, f) for w, f in merged.items() if f)))

    def as_dict(self):
        return dict(self.entries)

    @property
    def total(self):
        return sum(f for _, f in self.entries)

    @property
    def weights(self):
        return tuple(w for w, _ in self.entries)

    def first_moment(self):
        return sum(w * f for w, f in self.entries)

    def to_json(self):
        return [{"weight": w, "frequency": f} for w, f in self.entries]

    def to_polynomial(self, var="z"):
        terms = []
        for w, f in self.entries:
            if w == 0:
                terms.append(str(f))
            else:
                terms.append(f"{'' if f == 1 else f}{var}^{w}")
        return " + ".join(terms)

    def __str__(self):
        return self.to_polynomial()


# -- single codewords -------------------------------------------------------

def codeword(ctx, spec, alpha, beta=ZERO):
    """c(alpha, beta) as log-coded F_q elements (ZERO == -1), length n."""
    i = np.arange(spec.n, dtype=np.int64)
    x = ctx.mul_array(alpha, (spec.a1 * i) % ctx.n_units)
    if spec.reducible:
        x = ctx.add_array(x, ctx.mul_array(beta, (spec.a2 * i) % ctx.n_units))
    return ctx.trace_relative_array(x)


def hamming_weight(word):
    return int(np.count_nonzero(np.asarray(word) != ZERO))


def z_count(ctx, spec, alpha, beta=ZERO):
    """Number of zero coordinates of c(alpha, beta)."""
    return spec.n - hamming_weight(codeword(ctx, spec, alpha, beta))


def cyclic_shift(word, s=1):
    return np.roll(word, -s)


# -- exhaustive enumeration -------------------------------------------------

def _fq_dtype(q):
    return np.uint8 if q <= 256 else np.uint16 if q <= 65536 else np.int64


def trace_table(ctx, a, n, negate=False, alphas=None):
    """Dense F_q indices of Tr(alpha gamma^(a i)) for every alpha (rows) and i < n."""
    if alphas is None:
        alphas = ctx.elements()
    i = np.arange(n, dtype=np.int64)
    x = ctx.mul_array(np.asarray(alphas)[:, None], ((a * i) % ctx.n_units)[None, :])
    tr = ctx.trace_relative_array(x)
    if negate:
        tr = ctx.neg_array(tr)
    return ctx.fq_index[tr + 1].astype(_fq_dtype(ctx.q))


def resolve_threads(threads=None):
    if threads is None or threads == 0:
        env = os.environ.get("CYCLOCODE_THREADS")
        threads = int(env) if env else 0
    if threads <= 0:
        threads = os.cpu_count() or 1
    return threads


def _weight_histogram(left, right, n):
    # left: (A, n), right: (B, n); histogram of n - #{i: left[a,i] == right[b,i]}
    hist = np.zeros(n + 1, dtype=np.int64)
    if len(left) == 0:
        return hist
    step = max(1, _CHUNK_ELEMENTS // max(1, right.shape[0] * n))
    for s in range(0, len(left), step):
        eq = (left[s:s + step, None, :] == right[None, :, :]).sum(axis=2, dtype=np.int32)
        hist += np.bincount((n - eq).ravel(), minlength=n + 1)
    return hist


def _parallel_histogram(left, right, n, threads):
    threads = resolve_threads(threads)
    if threads == 1 or len(left) < 2 * threads:
        return _weight_histogram(left, right, n)
    slices = np.array_split(np.arange(len(left)), threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(lambda idx: _weight_histogram(left[idx], right, n), slices)
        return sum(parts)


def weight_distribution_bruteforce(ctx, spec, budget=DEFAULT_BUDGET, mode="full", threads=1):
    """Exact weight enumerator by enumerating every codeword.

    ``mode="full"`` walks all (alpha, beta) pairs.  ``mode="scalar"`` walks
    alpha = 0 and one alpha per F_q^*-orbit, weighting by q - 1, which is exact
    because c(y alpha, y beta) = y c(alpha, beta) for y in F_q^*; every beta is
    still enumerated.
    """
    Q, n = ctx.order, spec.n
    size = Q * Q if spec.reducible else Q
    if size > budget:
        raise EnumerationBudgetExceeded(f"{size} codewords exceed the budget {budget}")
    if mode not in ("full", "scalar"):
        raise ValueError(f"unknown mode {mode!r}")

    if not spec.reducible:
        zero_row = np.zeros((1, n), dtype=_fq_dtype(ctx.q))
        hist = _weight_histogram(trace_table(ctx, spec.a1, n), zero_row, n)
        return WeightDistribution.from_counts(hist)

    right = trace_table(ctx, spec.a2, n, negate=True)
    if mode == "full":
        left = trace_table(ctx, spec.a1, n)
        hist = _parallel_histogram(left, right, n, threads)
    else:
        zero_alpha = trace_table(ctx, spec.a1, n, alphas=np.array([ZERO]))
        reps = trace_table(ctx, spec.a1, n, alphas=np.arange(ctx.delta, dtype=np.int64))
        hist = _weight_histogram(zero_alpha, right, n)
        hist += (ctx.q - 1) * _parallel_histogram(reps, right, n, threads)
    return WeightDistribution.from_counts(hist)


def all_codewords(ctx, spec):
    """Every codeword, row-major over (log alpha, log beta) with ZERO first.

    Rows hold dense F_q indices.  Built with the direct field-addition route.
    """
    elems = ctx.elements()
    i = np.arange(spec.n, dtype=np.int64)
    u = ctx.mul_array(elems[:, None], ((spec.a1 * i) % ctx.n_units)[None, :])
    if not spec.reducible:
        return ctx.fq_index[ctx.trace_relative_array(u) + 1].astype(_fq_dtype(ctx.q))
    v = ctx.mul_array(elems[:, None], ((spec.a2 * i) % ctx.n_units)[None, :])
    rows = []
    for a in range(len(elems)):
        x = ctx.add_array(u[a][None, :], v)
        rows.append(ctx.fq_index[ctx.trace_relative_array(x) + 1].astype(_fq_dtype(ctx.q)))
    return np.concatenate(rows)


def distinct_codeword_count(ctx, spec):
    words = np.ascontiguousarray(all_codewords(ctx, spec))
    return len({row.tobytes() for row in words})


def sample_weights(ctx, spec, samples, seed=0):
    """Hamming weights of codewords for uniformly drawn (alpha, beta)."""
    rng = np.random.default_rng(seed)
    draws = rng.integers(-1, ctx.n_units, size=(samples, 2))
    return [hamming_weight(codeword(ctx, spec, int(a), int(b))) for a, b in draws]

from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cyclocode import (
    ZERO,
    WeightDistribution,
    codeword,
    make_spec,
    trace_relative,
    weight_distribution_bruteforce,
    z_count,
)
from cyclocode.code import (
    cyclic_shift,
    distinct_codeword_count,
    hamming_weight,
    sample_weights,
)
from cyclocode.errors import EnumerationBudgetExceeded, HypothesisViolated

from conftest import field

EX1 = {0: 1, 12: 252, 14: 252, 18: 3444, 19: 10584, 20: 10584, 21: 3444}
EX2 = {0: 1, 12: 72, 16: 72, 18: 264, 20: 864, 22: 864, 24: 264}


@pytest.fixture(scope="module")
def ex1(f169):
    return make_spec(f169, 8, 64)


@pytest.fixture(scope="module")
def ex2(f49):
    return make_spec(f49, 2, -14)


def test_spec_normalisation(ex1, ex2):
    assert (ex1.n, ex1.a, ex1.lam, ex1.epsilon) == (21, 8, 3, 1)
    assert (ex2.a2, ex2.n, ex2.a, ex2.lam, ex2.epsilon) == (34, 24, 2, 6, 2)
    assert ex2.dimension == 4


def test_spec_rejects_unrelated_pair(f49):
    with pytest.raises(HypothesisViolated):
        make_spec(f49, 2, 6)
    assert make_spec(f49, 2, 6, strict=False).n == 24


def test_repeated_irreducible_length(f49):
    assert make_spec(f49, 6, length=24).n == 24
    with pytest.raises(HypothesisViolated):
        make_spec(f49, 6, length=10)


def test_zero_codeword(f49, ex2):
    w = codeword(f49, ex2, ZERO, ZERO)
    assert len(w) == 24 and np.all(w == ZERO)
    assert z_count(f49, ex2, ZERO, ZERO) == 24


def test_length_21(f169, ex1):
    assert len(codeword(f169, ex1, 5, 7)) == 21


def test_component_weights(f49, ex2):
    for alpha in range(48):
        assert hamming_weight(codeword(f49, ex2, alpha, ZERO)) in (18, 24)


def _naive_enumerator(ctx, spec):
    # scalar field arithmetic only: no trace tables, no vectorisation
    counts = Counter()
    elems = [int(x) for x in ctx.elements()]
    for alpha in elems:
        for beta in elems:
            w = 0
            for i in range(spec.n):
                x = ctx.add(ctx.mul(alpha, ctx.pow(ctx.gamma, spec.a1 * i)),
                            ctx.mul(beta, ctx.pow(ctx.gamma, spec.a2 * i)))
                w += trace_relative(ctx, x) != ZERO
            counts[w] += 1
    return dict(counts)


def test_example2_naive_oracle(f49, ex2):
    naive = _naive_enumerator(f49, ex2)
    assert naive == EX2
    assert weight_distribution_bruteforce(f49, ex2).as_dict() == naive


def test_example1(f169, ex1):
    assert weight_distribution_bruteforce(f169, ex1).as_dict() == EX1


@pytest.mark.parametrize("threads", [1, 3])
def test_scalar_mode_equals_full(f169, ex1, threads):
    full = weight_distribution_bruteforce(f169, ex1, threads=threads)
    assert weight_distribution_bruteforce(f169, ex1, mode="scalar", threads=threads) == full


def test_unknown_mode(f49, ex2):
    with pytest.raises(ValueError):
        weight_distribution_bruteforce(f49, ex2, mode="fast")


def test_budget(f49, ex2):
    with pytest.raises(EnumerationBudgetExceeded):
        weight_distribution_bruteforce(f49, ex2, budget=1000)


def test_components_share_distribution(f49, f169):
    for ctx, a1, a2, n in ((f49, 2, 34, 24), (f169, 8, 64, 21)):
        d1 = weight_distribution_bruteforce(ctx, make_spec(ctx, a1, length=n))
        d2 = weight_distribution_bruteforce(ctx, make_spec(ctx, a2, length=n))
        assert d1 == d2
        assert d1.total == ctx.order


def test_irreducible_natural_length(f49):
    assert weight_distribution_bruteforce(f49, make_spec(f49, 6)).as_dict() == {0: 1, 6: 24, 8: 24}


def test_structural_identities(f49, f169, ex1, ex2):
    for ctx, spec in ((f49, ex2), (f169, ex1)):
        wd = weight_distribution_bruteforce(ctx, spec)
        q, k = ctx.q, ctx.k
        assert wd.total == q ** (2 * k)
        assert wd.first_moment() == spec.n * (q - 1) * q ** (2 * k - 1)
        assert distinct_codeword_count(ctx, spec) == q ** (2 * k)


def test_cyclic_closure(f169, ex1):
    rng = np.random.default_rng(1)
    for alpha, beta in rng.integers(-1, 168, size=(100, 2)):
        alpha, beta = int(alpha), int(beta)
        w = codeword(f169, ex1, alpha, beta)
        shifted = codeword(f169, ex1, f169.mul(alpha, ex1.a1), f169.mul(beta, ex1.a2))
        assert np.array_equal(cyclic_shift(w), shifted)


@settings(max_examples=100, deadline=None)
@given(st.integers(-1, 47), st.integers(-1, 47))
def test_weight_plus_zeros(alpha, beta):
    ctx = field(7, 2)
    spec = make_spec(ctx, 2, 34)
    assert hamming_weight(codeword(ctx, spec, alpha, beta)) + z_count(ctx, spec, alpha, beta) == spec.n


def test_sampling_is_seeded(f49, ex2):
    a = sample_weights(f49, ex2, 50, seed=3)
    assert a == sample_weights(f49, ex2, 50, seed=3)
    assert set(a) <= set(EX2)


def test_serialisation():
    wd = WeightDistribution.from_counts({24: 24, 0: 1, 18: 24})
    assert wd.to_json() == [{"weight": 0, "frequency": 1}, {"weight": 18, "frequency": 24},
                            {"weight": 24, "frequency": 24}]
    assert wd.to_polynomial() == "1 + 24z^18 + 24z^24"
    assert str(WeightDistribution.from_counts(np.array([1, 0, 3]))) == "1 + 3z^2"

import json

import numpy as np
import pytest

from cyclocode import (
    check_conditions,
    lemma3_verify,
    lemma4_verify,
    lemma5_closed,
    partition_census,
    table1_closed,
    table2_closed,
    table3_bruteforce,
    table3_closed,
    table4_closed,
    theorem2_check,
    theorem3_check,
)
from cyclocode.errors import ConditionsNotMet, HypothesisViolated
from cyclocode.theorems import (
    admissible_lambdas,
    lemma1_verify,
    lemma2_verify,
    lemma5_case_verify,
    remark1_verify,
    remark2_verify,
    table2_from_table3,
    table3_pair_values,
    table3_rows,
    z_identity_verify,
)

from conftest import field


def test_conditions_example1():
    r = check_conditions(13, 2, 8, 64)
    assert r.all_pass
    assert (r.n, r.derived["a"], r.lam, r.derived["epsilon"]) == (21, 8, 3, 1)
    assert r.derived["tau_index"] == 56


def test_conditions_example2():
    r = check_conditions(7, 2, 2, -14)
    assert r.all_pass
    assert (r.n, r.derived["a"], r.lam) == (24, 2, 6)


def test_conditions_gcd_failure():
    r = check_conditions(7, 2, 3, 19)
    assert not r.all_pass
    assert any("gcd" in c.name for c in r.failures())


@pytest.mark.parametrize("q,k", [(7, 3), (5, 2), (4, 2), (6, 2)])
def test_conditions_never_raise(q, k):
    assert not check_conditions(q, k, 2, 10).all_pass


def test_conditions_report_shape():
    r = check_conditions(7, 2, 2, 34)
    rows = r.to_json()
    assert set(rows[0]) == {"check_name", "pass", "witness"}
    assert r.semiprimitive


def test_lemma3_examples():
    assert lemma3_verify(7, 2, 2, 34).passed
    rec = lemma3_verify(13, 2, 8, 64)
    assert rec.passed
    assert any(c.name == "n = lambda*Delta/2" and c.actual == 21 for c in rec.checks)
    with pytest.raises(HypothesisViolated):
        lemma3_verify(7, 2, 2, 6)


def test_lemma4(f49, f169):
    assert lemma4_verify(f49, 6, 0).passed
    assert lemma4_verify(f169, 3, 0).passed
    assert lemma4_verify(f49, 6).passed
    with pytest.raises(HypothesisViolated):
        lemma4_verify(f49, 2)


def test_admissible_lambdas():
    assert admissible_lambdas(7, 2) == [6]
    assert admissible_lambdas(13, 2) == [3, 6, 12]


def test_census_q7(f49):
    c = partition_census(f49, 1)
    assert set(c.e_sizes.values()) == {24}
    assert c.g_size == 48 * 47
    assert c.s_sizes == (264, 864, 864, 264)
    assert 6 * 24 + c.g_size == 49**2 - 1
    assert remark2_verify(c, 7, 2).passed
    assert json.dumps(c.to_json())


def test_census_sigma_multiple_of_three(f49):
    with pytest.raises(HypothesisViolated):
        partition_census(f49, 3)


def test_lemma5_closed():
    assert lemma5_closed(7, 2) == (264, 864, 864, 264)
    assert lemma5_closed(13, 2) == (3444, 10584, 10584, 3444)
    s = lemma5_closed(19, 2)
    assert sum(s) == 360 * 359


def test_table3_q7(f49):
    closed = table3_closed(7, 2)
    assert closed.as_dict() == {72: 1, 30: 72, 16: 72, 9: 264, 2: 864, -5: 864, -12: 264}
    assert closed.total == 49**2
    assert table3_bruteforce(f49, 1) == closed


def test_table3_q13_entry():
    assert table3_closed(13, 2).as_dict()[-21] == 3444


def test_lemma5_cases(f49):
    assert lemma5_case_verify(f49, 2).passed


def test_table1_table2_examples():
    r1 = check_conditions(13, 2, 8, 64)
    assert table2_closed(r1).as_dict() == {0: 1, 12: 252, 14: 252, 18: 3444, 19: 10584,
                                           20: 10584, 21: 3444}
    r2 = check_conditions(7, 2, 2, -14)
    assert table2_closed(r2).as_dict() == {0: 1, 12: 72, 16: 72, 18: 264, 20: 864, 22: 864, 24: 264}
    assert table1_closed(r2).as_dict() == {0: 1, 18: 24, 24: 24}
    with pytest.raises(ConditionsNotMet):
        table2_closed(check_conditions(7, 2, 3, 19))


@pytest.mark.parametrize("q", [7, 13, 19, 25, 31, 37, 43, 49])
def test_table2_rederived_from_table3(q):
    from cyclocode.catalog import enumerate_catalog
    for e in enumerate_catalog(q, 2):
        rep = check_conditions(q, 2, *e.pair)
        assert table2_from_table3(rep) == table2_closed(rep)


@pytest.mark.parametrize("q", [7, 13, 19, 25, 31, 37, 43, 49])
def test_z_integrality(q):
    for lam in admissible_lambdas(q, 2):
        n = lam * (q + 1) // 2
        for _, v, _ in table3_rows(q, 2):
            num = 3 * n + lam * v
            assert num % (3 * q) == 0 and 0 <= num // (3 * q) <= n


@pytest.mark.parametrize("q,a1,a2", [(7, 2, -14), (7, -14, 2), (13, 8, 64), (13, 64, 8)])
def test_z_identity(q, a1, a2):
    rec = z_identity_verify(field(q, 2), check_conditions(q, 2, a1, a2))
    assert rec.passed, rec.failures()


def test_sigma_invariance_per_pair(f49):
    # {tau^(i sigma)} is {1, tau, tau^2} whenever 3 does not divide sigma
    base = table3_pair_values(f49, 1)
    for sigma in (2, 4, 5):
        assert np.array_equal(table3_pair_values(f49, sigma), base)


def test_theorem2_examples():
    assert theorem2_check(13, 2, 3).all_pass
    assert theorem2_check(13, 2, 3).derived["n"] == 42
    assert set(table4_closed(13, 2, 3).weights) == {0, 24, 28, 36, 38, 40, 42}
    assert theorem2_check(7, 2, 3).derived["n"] == 24
    with pytest.raises(HypothesisViolated):
        theorem2_check(13, 2, 4)


def test_theorem3_examples():
    rec = theorem3_check(13, 2, 3)
    assert rec.passed
    assert any(c.name == "lambda = 2h" and c.actual == 6 for c in rec.checks)
    assert theorem3_check(7, 2, 3).passed
    names = {c.name for c in rec.checks}
    assert {f"gcd(Delta, {r}) = gcd(k, {r})" for r in (1, 2, 3, 4, 6, 12)} <= names


def test_field_level_records(f49, f169):
    for ctx in (f49, f169):
        assert lemma1_verify(ctx).passed
        assert lemma2_verify(ctx).passed
        assert remark1_verify(ctx).passed


def test_record_json(f49):
    rows = lemma2_verify(f49).to_json()
    assert list(rows[0]) == ["check_name", "expected", "actual", "pass"]

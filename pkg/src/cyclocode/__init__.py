"""Reducible cyclic codes built from two semiprimitive two-weight irreducible codes.

Closed-form weight distributions next to exact brute-force enumeration over
finite-field log tables, plus verifiers for the supporting lemmas.
"""

from .catalog import CatalogEntry, count_formula, enumerate_catalog, probe_conjecture
from .code import (
    CodeSpec,
    WeightDistribution,
    codeword,
    make_spec,
    weight_distribution_bruteforce,
    z_count,
)
from .cyclotomy import (
    CyclotomicIntegerSum,
    GaussianPeriods,
    character_sum,
    cyclotomic_class,
    cyclotomic_number_bruteforce,
    cyclotomic_number_order2_closed,
    gaussian_periods_closed,
)
from .field import ZERO, FieldCtx, FieldParams, arith, build_field, trace_absolute, trace_relative
from .poly import cyclotomic_coset, minimal_polynomial, polys_equal
from .theorems import (
    ConditionsReport,
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

__version__ = "0.1.0"

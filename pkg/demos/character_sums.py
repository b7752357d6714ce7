# Exact character sums
# ====================
#
# chi(y) = zeta_p^Tr(y).  A sum of chi over a set is kept as the histogram of
# trace values, which names a rational integer exactly when every nonzero
# trace value occurs equally often.  No floating point is involved.

from cyclocode import (
    character_sum,
    cyclotomic_class,
    gaussian_periods_closed,
    lemma5_closed,
    partition_census,
    table3_bruteforce,
    table3_closed,
)
from cyclocode.field import build_field_for
from cyclocode.theorems import lemma5_case_verify

ctx = build_field_for(7, 2)
d0 = cyclotomic_class(ctx, 0, 2)
print("sum over D_0^(2):", character_sum(ctx, d0.members))
print("closed form     :", gaussian_periods_closed(7, 1, 2))
print("single element  :", character_sum(ctx, [ctx.gamma]))

# %%
# The pairs (alpha, beta) split into the origin, two sets W_0, W_1 and four
# sets S_0..S_3.  Each set carries a single value of
# sum_{z in D_0} sum_i chi(z(alpha + tau^i beta)).
census = partition_census(ctx, sigma=1)
print("\n|S_l| brute force:", census.s_sizes, " closed:", lemma5_closed(7, 2))
print("value table (brute):", table3_bruteforce(ctx).entries)
print("value table (closed):", table3_closed(7, 2).entries)

rec = lemma5_case_verify(ctx)
print("per-pair agreement:", rec.passed, f"({len(rec.checks)} checks)")

# Finite fields as log tables
# ===========================
#
# Every element of F_{q^k} other than zero is stored as its discrete log with
# respect to a fixed primitive element gamma.  Multiplication is addition of
# logs; addition goes through the Zech table zech[i] = log(1 + gamma^i).

import numpy as np

from cyclocode import ZERO, build_field, trace_absolute, trace_relative

ctx = build_field(7, 1, 2)
print(ctx)
print("Delta =", ctx.delta)

# The default modulus is the smallest monic primitive polynomial, so the
# element called gamma is reproducible from run to run.
g = ctx.gamma
print("gamma^2 as coefficients (constant first):", ctx.to_coeffs(ctx.mul(g, g)))

# tau = gamma^((q^k-1)/3) is a primitive cube root of unity.
tau = ctx.pow(g, ctx.n_units // 3)
print("tau^2 + tau + 1 =", ctx.add(ctx.add(ctx.mul(tau, tau), tau), ctx.one), "(ZERO is", ZERO, ")")

# %%
# Traces.  The relative trace lands in the copy of F_7 spanned by gamma^Delta.
values = [ctx.to_vector(trace_relative(ctx, int(x))) for x in ctx.elements()]
print("relative trace fibre sizes:", np.bincount(values))
print("Tr(gamma) to F_7:", trace_absolute(ctx, g))

# %%
# Over F_9 the subfield is itself an extension, and the absolute trace is the
# composition of the two relative ones.
ctx9 = build_field(3, 2, 2)
print(ctx9, "subfield logs:", ctx9.subfield().tolist())

# Counting the codes
# ==================
#
# For fixed (q, k) every a with gcd(Delta, a) = 2 paired with a +- (q^k-1)/3
# gives such a code.  Codes are identified by their pair of cyclotomic cosets,
# and their number should be phi(Delta/2)(q-1)/k.

from cyclocode import count_formula, enumerate_catalog, probe_conjecture
from cyclocode.field import build_field_for

for e in enumerate_catalog(7, 2):
    print(f"C_{e.reps}  n={e.n}  lambda={e.lam}  enumerator digest {e.digest}")

for q in (7, 13, 19, 25, 31):
    print(f"q={q}: catalog {len(enumerate_catalog(q, 2))}, formula {count_formula(q, 2)}")

# %%
# Do other two-factor codes share one of these enumerators?  The probe only
# reports what it finds.
out = probe_conjecture(build_field_for(7, 2))
print(f"\nexamined {out['examined']} pairs, {len(out['matches'])} matches, "
      f"{len(out['outside_catalog'])} outside the catalog")

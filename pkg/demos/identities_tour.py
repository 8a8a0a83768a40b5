"""
Checking product identities against enumeration
===============================================

Each check returns a verdict with coefficient columns, so failures come
with a witness.
"""

from partfreq import Series, expand, parse_product
from partfreq.identities import check_corollary8, check_orbit2_gf, check_pmm, check_theorem4

# truncated products are exact integer series
spec = parse_product("(q^2;q^2)^2 / ((q;q) (q^4;q^4))")
print(spec, "=", expand(spec, 12).coeffs)

# generating function of the upper-left fillings
v = check_pmm(3, 30)
print(v.name, v.passed, v.columns["eta_quotient"][:12])

# p(n) mod b from a product of (1 + q^a + ... ) blocks
for b in (2, 3, 5):
    print("mod", b, check_theorem4(b, 120).passed)

print("corollary8 m=2", check_corollary8(2, 40).passed)

# the closed form for orbit size 2 against two independent enumerations
v = check_orbit2_gf(2, 16)
for name, col in v.columns.items():
    print(f"{name:20s}", col)
for label, bad in v.comparisons.items():
    print(label, "ok" if not bad else f"first mismatch at n={bad[0].index}")

# Series is a plain truncated ring
s = Series([1, 1], 6)
print((s**5).coeffs, (1 / s).coeffs)

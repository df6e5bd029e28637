"""
Counting points and assembling the L-polynomial
===============================================

The sums S_k live in the cyclotomic integers Z[zeta_p].  Finitely many
of them determine the whole tower: the reciprocal L-function is a
polynomial of degree N = ad + ab + bc, so S_1 .. S_N pin it down and
every later sum is a prediction we can test against brute force.
"""

from toricsums import (
    FamilyParams,
    exp_sum_series,
    hodge_polygon,
    l_polynomial,
    newton_polygon,
    predict_sum,
)

params = FamilyParams(2, 1, 1, 1)
p = 3
lam = 1

# one extra sum beyond the degree, to have something to predict
series = exp_sum_series(params, p, lam, params.degree + 1)
for k, s in enumerate(series.sums, start=1):
    print(f"S_{k} = {s}")

lp = l_polynomial(series)
print()
print(f"reciprocal L-function, degree {lp.degree}:")
for r, c in enumerate(lp.coeffs):
    print(f"    T^{r}: {c}")

# the degree-many sums determine S_{N+1}; compare against enumeration
want = series.sums[params.degree]
got = predict_sum(lp, params.degree + 1)
print()
print(f"predicted S_{params.degree + 1} = {got}")
print(f"enumerated S_{params.degree + 1} = {want}")
assert got == want

# Newton polygon from q-adic valuations of the coefficients; at an
# ordinary prime it sits exactly on the Hodge polygon.
np_ = newton_polygon(lp)
hp = hodge_polygon(params)
print()
print(f"Newton slopes: {[str(s) for s in np_.slopes()]}")
print(f"Hodge  slopes: {[str(s) for s in hp.slopes()]}")
print(f"ordinary at p = {p}: {np_.vertices == hp.vertices}")

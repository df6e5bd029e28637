"""
Monomial bases, weights, and the Hodge polygon
==============================================

The family lives on the two-torus and is indexed by four exponents
(a, b, c, d).  Everything in this demo is combinatorial: no prime is
needed until the ordinarity report at the end.
"""

from fractions import Fraction

from toricsums import FamilyParams, basis_set, hodge_polygon, ordinarity_report, weight_profile
from toricsums.hodge import weight_of


def frac(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# The basis: one monomial per unit of the degree ad + ab + bc.

for tup in ((1, 1, 1, 1), (2, 1, 1, 1), (1, 1, 2, 1), (1, 1, 2, 3)):
    params = FamilyParams(*tup)
    pts = basis_set(params)
    print(f"family {tup}: degree {params.degree}")
    for v in pts:
        print(f"    x^{v}   weight {frac(weight_of(params, v))}")

# The exponents may be negative when the pole exponents c, d exceed 1;
# the weight function still assigns each monomial a rational weight in
# [0, 2), and 0 is attained only by the constant.

# ---------------------------------------------------------------------------
# Weights aggregate into the Hodge polygon: sort the weights, take
# partial sums.  Its slopes are the generic p-adic slopes of the family.

params = FamilyParams(2, 1, 1, 1)
prof = weight_profile(params)
print()
print(f"weights of {(2, 1, 1, 1)}: {[frac(w) for w in prof.weights]}")
poly = hodge_polygon(params)
print(f"Hodge polygon vertices: {[(frac(x), frac(y)) for x, y in poly.vertices]}")
print(f"Hodge slopes: {[frac(s) for s in poly.slopes()]}")

# ---------------------------------------------------------------------------
# Ordinarity: three face determinants decide nondegeneracy, and a single
# congruence on p guarantees Newton polygon = Hodge polygon.

print()
for p in (3, 5, 7):
    rep = ordinarity_report(params, p)
    dets = {f.name: f.det for f in rep.faces}
    print(f"p = {p}: face determinants {dets}, "
          f"need p = 1 mod {rep.congruence_modulus}, "
          f"guaranteed ordinary: {rep.guaranteed_ordinary}")

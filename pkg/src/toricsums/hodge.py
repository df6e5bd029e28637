"""Monomial basis, weight functions and limit polygons for the family.

The Newton polytope of x1**a + x2**b + L/(x1**c x2**d) is the triangle with
vertices (a, 0), (0, b), (-c, -d); the origin is interior. Weights are the
polytope gauge, computed cone by cone with exact rationals.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import InvariantError, PreconditionError
from .exact import invariant_factors, lower_convex_hull


def basis_set(params):
    """Monomial exponents representing the middle cohomology, as a sorted list.

    Exactly params.degree points inside the box -c < v1 <= a, -d < v2 <= b,
    carved out case by case on (c, d).
    """
    a, b, c, d = params.a, params.b, params.c, params.d
    pts = []
    for v1 in range(1 - c, a + 1):
        for v2 in range(1 - d, b + 1):
            if c > 1 and d > 1:
                lo = (d - 1) * (v1 - a) <= (c - 1) * v2
                hi = (c - 1) * v2 < (d - 1) * v1 + b * (c - 1)
                keep = lo and hi
            elif c == 1 and d > 1:
                keep = not (v1 == a and 1 - d <= v2 <= 0)
            elif c > 1 and d == 1:
                keep = not (v2 == b and 1 - c <= v1 <= 0)
            else:
                keep = (v1, v2) != (0, b)
            if keep:
                pts.append((v1, v2))
    pts.sort()
    if len(pts) != params.degree:
        raise InvariantError(f"basis has {len(pts)} points, expected {params.degree}")
    return pts


def _cone_index(params, v):
    """Which closed cone of the fan contains v: 0 for the first quadrant,
    1 for the cone spanned by (a, 0) and (-c, -d), 2 for (0, b) and (-c, -d)."""
    c, d = params.c, params.d
    v1, v2 = v
    if v1 >= 0 and v2 >= 0:
        return 0
    if v2 <= 0 and d * v1 >= c * v2:
        return 1
    if v1 <= 0 and c * v2 >= d * v1:
        return 2
    raise InvariantError(f"fan does not cover {v}")  # unreachable


def weight_of(params, v):
    """Polytope gauge of v: the smallest t >= 0 with v inside t times the triangle."""
    a, b, c, d = params.a, params.b, params.c, params.d
    v1, v2 = v
    cone = _cone_index(params, v)
    if cone == 0:
        return Fraction(v1, a) + Fraction(v2, b)
    if cone == 1:
        return Fraction(-(a + c) * v2, a * d) + Fraction(v1, a)
    return Fraction(-(b + d) * v1, b * c) + Fraction(v2, b)


def m_of(params, v):
    """Smallest r >= 0 such that L**r x**v lies in the coordinate ring of the
    cone over the polytope: max(0, -v1/c, -v2/d)."""
    return max(Fraction(0), Fraction(-v[0], params.c), Fraction(-v[1], params.d))


def weight_denominator(params):
    return params.a * params.b * lcm(params.c, params.d)


def deformation_weight(params, s):
    """Weight of L**s relative to the s = m(v) normalization: s * N / (a*b)."""
    return Fraction(params.degree, params.a * params.b) * s


def total_weight(params, r, v):
    """Weight of L**r x**v for r >= m(v)."""
    m = m_of(params, v)
    if r < m:
        raise PreconditionError(f"exponent r = {r} below m(v) = {m}")
    return weight_of(params, v) + deformation_weight(params, r - m)


@dataclass(frozen=True)
class WeightProfile:
    denominator: int
    weights: tuple  # ascending Fractions, one per basis monomial

    def counts(self):
        return Counter(self.weights)


def weight_profile(params):
    den = weight_denominator(params)
    ws = []
    for v in basis_set(params):
        w = weight_of(params, v)
        if (w * den).denominator != 1:
            raise InvariantError(f"weight {w} not in (1/{den})Z")
        ws.append(w)
    ws.sort()
    return WeightProfile(den, tuple(ws))


def hodge_polygon(params):
    """Lower convex graph whose slopes are the basis weights in ascending order."""
    prof = weight_profile(params)
    pts = [(Fraction(0), Fraction(0))]
    acc = Fraction(0)
    for i, w in enumerate(prof.weights, start=1):
        acc += w
        pts.append((Fraction(i), acc))
    return lower_convex_hull(pts)


def slope_multiset_ab(a, b):
    """Closed-form limit slope multiset for c = d = 1: all (a*i + b*j)/(a*b)
    with 0 <= i <= b, 0 <= j <= a, with one copy of the value 1 removed."""
    vals = sorted(Fraction(a * i + b * j, a * b) for i in range(b + 1) for j in range(a + 1))
    vals.remove(Fraction(1))
    return vals


_FACE_NAMES = ("coordinate", "x2_pole", "x1_pole")


def _face_matrices(params):
    a, b, c, d = params.a, params.b, params.c, params.d
    return (
        [[a, 0], [0, b]],
        [[0, -c], [b, -d]],
        [[a, -c], [0, -d]],
    )


@dataclass(frozen=True)
class FaceReport:
    name: str
    matrix: tuple
    det: int
    invariant_factors: tuple
    nondegenerate: bool
    ordinary_sufficient: bool


@dataclass(frozen=True)
class OrdinarityReport:
    p: int
    faces: tuple
    nondegenerate: bool
    congruence_modulus: int
    gcd_ad: int
    guaranteed_ordinary: bool


def ordinarity_report(params, p):
    """Facewise diagonal criteria plus the aggregate sufficient condition
    gcd(a, d) = 1 and p = 1 mod a*b*lcm(c, d)."""
    params.check_prime(p)
    faces = []
    for name, M in zip(_FACE_NAMES, _face_matrices(params)):
        det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
        inv = invariant_factors(M)
        nondeg = gcd(p, abs(det)) == 1
        ordinary = nondeg and all((p - 1) % f == 0 for f in inv)
        faces.append(FaceReport(name, tuple(tuple(r) for r in M), det, inv, nondeg, ordinary))
    modulus = params.a * params.b * lcm(params.c, params.d)
    g_ad = gcd(params.a, params.d)
    guaranteed = g_ad == 1 and p % modulus == 1 % modulus
    return OrdinarityReport(
        p=p,
        faces=tuple(faces),
        nondegenerate=all(f.nondegenerate for f in faces),
        congruence_modulus=modulus,
        gcd_ad=g_ad,
        guaranteed_ordinary=guaranteed,
    )

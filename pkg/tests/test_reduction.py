"""The rewrite engine: certificates, linearity, the derivative flag."""

import pytest
from fractions import Fraction
from hypothesis import given, settings
from hypothesis import strategies as st

from toricsums.errors import PreconditionError
from toricsums.family import FamilyParams
from toricsums.gkz import companion_matrix
from toricsums.hodge import basis_set
from toricsums.ratfunc import Poly, RatFunc
from toricsums.reduction import (
    PrimeFieldScalars,
    RationalFunctionScalars,
    apply_D1,
    apply_D2,
    class_add,
    class_eq,
    class_scale,
    connection_matrix,
    euler_relation_defects,
    flag_coordinates,
    reduce_to_basis,
    verify_certificate,
)

PARAMS_POOL = [
    FamilyParams(1, 1, 1, 1),
    FamilyParams(2, 1, 1, 1),
    FamilyParams(1, 1, 2, 1),
    FamilyParams(1, 1, 1, 2),
    FamilyParams(1, 1, 2, 3),
    FamilyParams(3, 2, 1, 1),
    FamilyParams(3, 4, 1, 1),
]

exponents = st.tuples(st.integers(-7, 7), st.integers(-7, 7))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(PARAMS_POOL), exponents)
def test_certificate_rational_ring(P, u):
    ring = RationalFunctionScalars()
    cls_ = {u: ring.one}
    cert = reduce_to_basis(cls_, P, ring)
    assert verify_certificate(cls_, cert, P, ring)
    assert set(cert.coords) == set(basis_set(P))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(PARAMS_POOL), exponents, st.integers(1, 4))
def test_certificate_prime_field(P, u, lam):
    p = 5
    ring = PrimeFieldScalars(p, lam)
    cls_ = {u: ring.from_int(3)}
    cert = reduce_to_basis(cls_, P, ring)
    assert verify_certificate(cls_, cert, P, ring)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(PARAMS_POOL), exponents, exponents)
def test_reduction_is_linear(P, u, v):
    ring = RationalFunctionScalars()
    x = {u: ring.one}
    y = {v: ring.from_int(2)}
    both = reduce_to_basis(class_add(ring, x, y), P, ring)
    cx = reduce_to_basis(x, P, ring)
    cy = reduce_to_basis(y, P, ring)
    merged = class_add(ring, cx.coords, cy.coords)
    assert class_eq(ring, both.coords, merged)


def test_basis_monomials_are_fixed_points():
    for P in PARAMS_POOL:
        ring = RationalFunctionScalars()
        for v in basis_set(P):
            cert = reduce_to_basis({v: ring.one}, P, ring)
            assert cert.h1 == {} and cert.h2 == {}
            assert cert.coords[v] == ring.one
            nonzero = [w for w, s in cert.coords.items() if not ring.is_zero(s)]
            assert nonzero == [v]


def test_euler_relations_reduce_to_zero():
    for P in PARAMS_POOL:
        first, second = euler_relation_defects(P)
        assert first == {}
        assert second == {}


def test_scale_distributes_over_class():
    P = FamilyParams(1, 1, 1, 1)
    ring = RationalFunctionScalars()
    x = {(2, 1): ring.one, (0, 3): ring.from_int(4)}
    doubled = class_scale(ring, x, ring.from_int(2))
    assert class_eq(ring, doubled, class_add(ring, x, x))


def test_derivative_operators_on_a_monomial():
    # D1(x1 x2) = x1 x2 + pi (a x1**(1+a) x2 - c L x**((1,1)+mu))
    P = FamilyParams(2, 1, 1, 1)
    ring = RationalFunctionScalars()
    out = apply_D1({(1, 1): ring.one}, P, ring)
    lam = ring.lam_el
    assert class_eq(ring, out, {
        (1, 1): ring.one,
        (3, 1): ring.from_int(2),
        (0, 0): ring.neg(lam),
    })


@pytest.mark.parametrize("tup", [(1, 1, 1, 1), (2, 1, 1, 1), (1, 1, 2, 1)])
def test_connection_equals_companion(tup):
    P = FamilyParams(*tup)
    conn = connection_matrix(P)
    comp = companion_matrix(P)
    wrapped = [[RatFunc(e, Poly.const(Fraction(1))) for e in row] for row in comp]
    assert conn == wrapped


def test_flag_coordinates_triangular_shape():
    # the i-th derivative class has weight filtration level i, so the
    # coordinate matrix against the ordered basis is lower triangular with
    # nonzero diagonal for this family
    P = FamilyParams(1, 1, 1, 1)
    ring = RationalFunctionScalars()
    reps, certs = flag_coordinates(P, ring, 3)
    order = basis_set(P)
    F = [[certs[j].coords[v] for j in range(3)] for v in order]
    for i in range(3):
        assert not ring.is_zero(F[i][i])
        for j in range(i + 1, 3):
            assert ring.is_zero(F[i][j])


def test_prime_ring_rejects_division_by_p_multiples():
    ring = PrimeFieldScalars(5, 1)
    with pytest.raises(Exception):
        ring.div(ring.from_int(3), ring.from_int(5))


def test_reduction_rejects_theta_in_prime_ring():
    ring = PrimeFieldScalars(5, 1)
    with pytest.raises(PreconditionError):
        ring.theta(ring.from_int(2))

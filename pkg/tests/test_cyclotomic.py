"""Arithmetic in Z[zeta_p] on the power basis 1..zeta**(p-2)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricsums.cyclotomic import CycloInt, CycloRat, ord_q, pi_valuation
from toricsums.errors import InvariantError


def zeta(p, t=1):
    return CycloInt.zeta_power(p, t)


def test_power_basis_relation():
    # 1 + zeta + ... + zeta**(p-1) = 0
    for p in (3, 5, 7):
        total = CycloInt.from_int(p, 1)
        for t in range(1, p):
            total = total + zeta(p, t)
        assert not total


def test_zeta_has_order_p():
    for p in (3, 5):
        acc = CycloInt.from_int(p, 1)
        for _ in range(p):
            acc = acc * zeta(p)
        assert acc == CycloInt.from_int(p, 1)


coeffs5 = st.lists(st.integers(-9, 9), min_size=4, max_size=4)


@settings(max_examples=100, deadline=None)
@given(coeffs5, coeffs5, coeffs5)
def test_ring_axioms_p5(xs, ys, zs):
    x, y, z = (CycloInt(5, tuple(c)) for c in (xs, ys, zs))
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x + (-x) == CycloInt.zero(5)


def test_pi_valuation_basics():
    p = 5
    one = CycloInt.from_int(p, 1)
    assert pi_valuation(one) == 0
    assert pi_valuation(one - zeta(p)) == 1
    assert pi_valuation(CycloInt.from_int(p, p)) == p - 1
    assert pi_valuation(CycloInt.zero(p)) is None
    assert pi_valuation((one - zeta(p)) * (one - zeta(p, 2))) == 2


def test_ord_q_normalization():
    # over F_q with q = p**atilde, ord is scaled so ord(q) = 1
    p = 3
    q_elt = CycloInt.from_int(p, 9)
    assert ord_q(q_elt, 1) == Fraction(2)
    assert ord_q(q_elt, 2) == Fraction(1)
    assert ord_q(CycloInt.from_int(p, 3), 1) == Fraction(1)


@settings(max_examples=80, deadline=None)
@given(coeffs5, coeffs5)
def test_valuation_is_multiplicative(xs, ys):
    x = CycloInt(5, tuple(xs))
    y = CycloInt(5, tuple(ys))
    vx, vy, vxy = pi_valuation(x), pi_valuation(y), pi_valuation(x * y)
    if vx is None or vy is None:
        assert vxy is None
    else:
        assert vxy == vx + vy


def test_rational_layer_integrality():
    p = 3
    x = CycloRat(p, (Fraction(1, 2), Fraction(3)))
    assert not x.is_integral()
    with pytest.raises(InvariantError):
        x.to_int_checked()
    y = x.scale(Fraction(2))
    assert y.is_integral()
    assert y.to_int_checked() == CycloInt(p, (1, 6))


def test_residue_mod_pi():
    p = 5
    x = CycloInt(p, (2, 1, 1, 3))
    # modulo 1 - zeta every zeta power collapses to 1
    assert x.residue_mod_pi() == (2 + 1 + 1 + 3) % p

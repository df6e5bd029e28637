"""Exact arithmetic in Z[zeta_p] and Q(zeta_p) for an odd prime p.

Elements are stored on the power basis 1, zeta, ..., zeta**(p-2) with the
relation 1 + zeta + ... + zeta**(p-1) = 0. The valuation at the prime
pi = 1 - zeta is computed by exact division, never numerically.
"""

from fractions import Fraction
from functools import lru_cache

from .errors import InvariantError, PreconditionError
from .ratfunc import solve_linear


def _check_prime(p):
    if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
        raise PreconditionError(f"{p} is not prime")


def _mul_reduce(p, xs, ys):
    """Multiply two coefficient tuples and reduce zeta**(p-1) = -(1+...+zeta**(p-2))."""
    n = p - 1
    out = [0] * (2 * n - 1)
    for i, x in enumerate(xs):
        if not x:
            continue
        for j, y in enumerate(ys):
            out[i + j] += x * y
    for k in range(2 * n - 2, n - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            base = k - n
            for j in range(n):
                out[base + j] -= c
    return tuple(out[:n])


class CycloInt:
    """Element of Z[zeta_p] on the power basis."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        _check_prime(p)
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise PreconditionError(f"need {p - 1} coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def zero(cls, p):
        return cls(p, (0,) * (p - 1))

    @classmethod
    def from_int(cls, p, n):
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def zeta_power(cls, p, t):
        t %= p
        if t < p - 1:
            cs = [0] * (p - 1)
            cs[t] = 1
            return cls(p, cs)
        return cls(p, (-1,) * (p - 1))

    def _like(self, other):
        if not isinstance(other, CycloInt) or other.p != self.p:
            raise PreconditionError("mixed cyclotomic operands")

    def __add__(self, other):
        self._like(other)
        return CycloInt(self.p, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._like(other)
        return CycloInt(self.p, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycloInt(self.p, tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloInt(self.p, tuple(x * other for x in self.coeffs))
        self._like(other)
        return CycloInt(self.p, _mul_reduce(self.p, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, CycloInt) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"CycloInt(p={self.p}, {list(self.coeffs)})"

    def to_rat(self):
        return CycloRat(self.p, tuple(Fraction(c) for c in self.coeffs))

    def residue_mod_pi(self):
        """Image in Z[zeta]/(1 - zeta) = F_p, i.e. sum of coefficients mod p."""
        return sum(self.coeffs) % self.p


@lru_cache(maxsize=None)
def _one_minus_zeta_inverse_matrix(p):
    """Matrix of multiplication by (1 - zeta)**(-1) on the power basis, over Q."""
    n = p - 1
    cols = []
    for j in range(n):
        e = [0] * n
        e[j] = 1
        prod = _mul_reduce(p, (1, -1) + (0,) * (n - 2), tuple(e))
        cols.append([Fraction(c) for c in prod])
    # invert the multiplication matrix (columns are images of basis vectors)
    M = [[cols[j][i] for j in range(n)] for i in range(n)]
    idcols = []
    for j in range(n):
        e = [Fraction(0)] * n
        e[j] = Fraction(1)
        idcols.append(e)
    inv_cols = solve_linear(M, idcols, one=Fraction(1))
    return tuple(tuple(inv_cols[j][i] for j in range(n)) for i in range(n))


def pi_valuation(x):
    """Valuation of x in Z[zeta_p] at the prime (1 - zeta); None for x = 0.

    Normalized so that pi itself has valuation 1 and p has valuation p - 1.
    """
    if not isinstance(x, CycloInt):
        raise PreconditionError("pi_valuation expects a CycloInt")
    if not x:
        return None
    p = x.p
    inv = _one_minus_zeta_inverse_matrix(p)
    coeffs = tuple(Fraction(c) for c in x.coeffs)
    v = 0
    while True:
        if sum(coeffs) % p != 0:
            return v
        nxt = tuple(sum(row[j] * coeffs[j] for j in range(p - 1)) for row in inv)
        if any(c.denominator != 1 for c in nxt):
            raise InvariantError("inexact division by (1 - zeta)")
        coeffs = nxt
        v += 1


def ord_q(x, atilde):
    """q-adic valuation of x where q = p**atilde; None for zero."""
    v = pi_valuation(x)
    if v is None:
        return None
    return Fraction(v, (x.p - 1) * atilde)


class CycloRat:
    """Element of Q(zeta_p) on the power basis, Fraction coefficients."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        _check_prime(p)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise PreconditionError(f"need {p - 1} coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def zero(cls, p):
        return cls(p, (Fraction(0),) * (p - 1))

    @classmethod
    def from_int(cls, p, n):
        return cls(p, (Fraction(n),) + (Fraction(0),) * (p - 2))

    def _like(self, other):
        if not isinstance(other, CycloRat) or other.p != self.p:
            raise PreconditionError("mixed cyclotomic operands")

    def __add__(self, other):
        self._like(other)
        return CycloRat(self.p, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._like(other)
        return CycloRat(self.p, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycloRat(self.p, tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloRat(self.p, tuple(x * other for x in self.coeffs))
        self._like(other)
        return CycloRat(self.p, _mul_reduce(self.p, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def scale(self, f):
        return CycloRat(self.p, tuple(x * f for x in self.coeffs))

    def __eq__(self, other):
        return isinstance(other, CycloRat) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"CycloRat(p={self.p}, {list(self.coeffs)})"

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def to_int_checked(self):
        if not self.is_integral():
            raise InvariantError(f"non-integral cyclotomic value {self!r}")
        return CycloInt(self.p, tuple(int(c) for c in self.coeffs))

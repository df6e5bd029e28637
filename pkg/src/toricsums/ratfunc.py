"""Dense univariate polynomials and rational functions over an exact field.

Coefficients can be any exact field elements supporting +, -, *, /, ==,
bool (False exactly for zero) and ** 0 (multiplicative one). fractions.Fraction
qualifies, as does the pi-adic scalar type used for Frobenius matrices.
"""

from itertools import zip_longest

from .errors import InvariantError, PreconditionError


class Poly:
    """Polynomial in one variable, dense coefficient tuple, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c):
        return cls((c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                var = "L" if k == 1 else f"L^{k}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        return " + ".join(parts).replace("+ -", "- ")

    def _zero_coeff(self, other=None):
        if self.coeffs:
            return self.coeffs[0] * 0
        if isinstance(other, Poly) and other.coeffs:
            return other.coeffs[0] * 0
        return 0

    def __add__(self, other):
        z = self._zero_coeff(other)
        return Poly([x + y for x, y in zip_longest(self.coeffs, other.coeffs, fillvalue=z)])

    def __sub__(self, other):
        z = self._zero_coeff(other)
        return Poly([x - y for x, y in zip_longest(self.coeffs, other.coeffs, fillvalue=z)])

    def __neg__(self):
        return Poly([-x for x in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        z = self.coeffs[0] * 0
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return Poly(out)

    def scale(self, c):
        return Poly([x * c for x in self.coeffs])

    def shift(self, k):
        """Multiply by variable**k (k >= 0)."""
        if not self.coeffs:
            return self
        z = self.coeffs[0] * 0
        return Poly([z] * k + list(self.coeffs))

    def theta(self):
        """Euler derivative t * d/dt."""
        return Poly([c * i for i, c in enumerate(self.coeffs)])

    def __pow__(self, n):
        if n < 0:
            raise PreconditionError("negative polynomial power")
        result = None
        base = self
        while True:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if not n:
                break
            base = base * base
        if result is None:
            raise InvariantError("0th power needs a one; use Poly.const")
        return result

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return x * 0
        return acc

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = other.coeffs[-1]
        inv_lead = lead ** 0 / lead
        rem = list(self.coeffs)
        z = other.coeffs[0] * 0
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [z] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lead
            quo[k] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * oc
        return Poly(quo), Poly(rem)

    def compose_power(self, k):
        """Substitute variable -> variable**k."""
        if k <= 0:
            raise PreconditionError("power substitution needs k >= 1")
        if not self.coeffs:
            return self
        z = self.coeffs[0] * 0
        out = [z] * (self.degree * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Poly(out)


def poly_gcd(a, b):
    """Monic gcd over the coefficient field."""
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    if a.is_zero():
        return a
    lead = a.coeffs[-1]
    return a.scale(lead ** 0 / lead)


class RatFunc:
    """Quotient of two Poly, kept reduced with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = Poly.const(num.coeffs[0] ** 0) if num.coeffs else None
            if den is None:
                raise PreconditionError("cannot infer a denominator for the zero numerator")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            lead = den.coeffs[-1]
            den = den.scale(lead ** 0 / lead)
            self.num, self.den = num, Poly.const(den.coeffs[-1])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, _ = num.divmod(g)
            den, _ = den.divmod(g)
        lead = den.coeffs[-1]
        inv = lead ** 0 / lead
        self.num = num.scale(inv)
        self.den = den.scale(inv)

    @classmethod
    def from_poly(cls, p, one):
        return cls(p, Poly.const(one))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if len(self.den.coeffs) == 1 and self.den.coeffs[0] == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __add__(self, other):
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            return RatFunc(self.num.scale(other), self.den)
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __pow__(self, n):
        if n == 0:
            one = (self.num.coeffs or self.den.coeffs)[0] ** 0
            return RatFunc(Poly.const(one), Poly.const(one))
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def theta(self):
        """Euler derivative t*d/dt via the quotient rule."""
        n, d = self.num, self.den
        return RatFunc(n.theta() * d - n * d.theta(), d * d)

    def series_coefficients(self, count):
        """First `count` power series coefficients at t = 0.

        The denominator must not vanish at 0.
        """
        d = self.den.coeffs
        if not d or not d[0]:
            raise PreconditionError("rational function has a pole at 0")
        inv_d0 = d[0] ** 0 / d[0]
        z = d[0] * 0
        n = self.num.coeffs
        out = []
        for k in range(count):
            acc = n[k] if k < len(n) else z
            for j in range(1, min(k, len(d) - 1) + 1):
                acc = acc - d[j] * out[k - j]
            out.append(acc * inv_d0)
        return out


def solve_linear(A, B, *, one):
    """Solve A X = B by Gaussian elimination over an exact field.

    A is square (list of lists), B a list of columns-as-lists. Returns X as
    list of columns. Raises InvariantError when A is singular.
    """
    n = len(A)
    M = [list(row) for row in A]
    cols = [list(col) for col in B]
    for col in cols:
        if len(col) != n:
            raise PreconditionError("right hand side has wrong length")
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k]), None)
        if piv is None:
            raise InvariantError("singular matrix in exact solve")
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            for col in cols:
                col[k], col[piv] = col[piv], col[k]
        inv = one / M[k][k]
        M[k] = [x * inv for x in M[k]]
        for col in cols:
            col[k] = col[k] * inv
        for i in range(n):
            if i == k or not M[i][k]:
                continue
            f = M[i][k]
            M[i] = [x - f * y for x, y in zip(M[i], M[k])]
            for col in cols:
                col[i] = col[i] - f * col[k]
    return [list(col) for col in cols]

"""p-adic Frobenius structure of the family, computed exactly.

Scalars live in Q[pi]/(pi**(p-1) + p), the totally ramified degree p-1
extension generated by the exponential-splitting constant. The chain-level
Frobenius is psi_p composed with multiplication by the splitting product

    PHI = E(L x**mu) E(x1**a) E(x2**b),   E(t) = exp(pi (t - t**p)),

truncated at a certified total degree. Everything downstream of the
truncation is exact; the one analytic input is the coefficient bound
ord_pi E_i >= i (p-1)^2 / p^2, which also bounds every dropped term. The
reported precision margin subtracts the worst denominator introduced by the
change to the derivative-flag basis (nu0 below); coordinate extraction
itself does not lose pi-integrality on the weighted spaces, which is what
makes the margin a certificate rather than a heuristic.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .errors import InvariantError, PreconditionError, StarvationError
from .hodge import basis_set, weight_of
from .lfunction import exp_sum_series, l_polynomial
from .ratfunc import Poly, RatFunc, solve_linear
from .reduction import flag_representatives, reduce_to_basis


def _frac_ord_p(fr, p):
    if fr == 0:
        return None
    v = 0
    num, den = fr.numerator, fr.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


class PiAdic:
    """Element of Q[pi]/(pi**(p-1) + p) with exact Fraction coordinates.

    ord_pi is exact: the p-orders of the p-1 coordinates are distinct mod
    p-1, so the minimum over i + (p-1)*ord_p(c_i) is attained once.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise PreconditionError(f"need {p - 1} coordinates, got {len(coeffs)}")
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def zero(cls, p):
        return cls(p, (Fraction(0),) * (p - 1))

    @classmethod
    def one(cls, p):
        return cls.from_fraction(p, 1)

    @classmethod
    def from_fraction(cls, p, fr):
        return cls(p, (Fraction(fr),) + (Fraction(0),) * (p - 2))

    @classmethod
    def pi(cls, p):
        if p == 3:
            return cls(p, (Fraction(0), Fraction(1)))
        return cls(p, (Fraction(0), Fraction(1)) + (Fraction(0),) * (p - 3))

    def _like(self, other):
        if not isinstance(other, PiAdic) or other.p != self.p:
            raise PreconditionError("mixed pi-adic operands")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PiAdic.from_fraction(self.p, other)
        self._like(other)
        return PiAdic(self.p, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PiAdic.from_fraction(self.p, other)
        self._like(other)
        return PiAdic(self.p, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return PiAdic(self.p, tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PiAdic(self.p, tuple(x * other for x in self.coeffs))
        self._like(other)
        n = self.p - 1
        out = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        # fold with pi**(p-1) = -p
        for k in range(2 * n - 2, n - 1, -1):
            if out[k]:
                out[k - n] -= self.p * out[k]
                out[k] = Fraction(0)
        return PiAdic(self.p, tuple(out[:n]))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero pi-adic scalar")
        n = self.p - 1
        cols = []
        for j in range(n):
            e = [Fraction(0)] * n
            e[j] = Fraction(1)
            col = (self * PiAdic(self.p, e)).coeffs
            cols.append(list(col))
        M = [[cols[j][i] for j in range(n)] for i in range(n)]
        e0 = [Fraction(1)] + [Fraction(0)] * (n - 1)
        sol = solve_linear(M, [e0], one=Fraction(1))[0]
        return PiAdic(self.p, tuple(sol))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PiAdic(self.p, tuple(x / other for x in self.coeffs))
        self._like(other)
        return self * other.inverse()

    def __pow__(self, e):
        if e == 0:
            return PiAdic.one(self.p)
        if e < 0:
            return self.inverse() ** (-e)
        result = PiAdic.one(self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            base = base * base
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, PiAdic) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"PiAdic(p={self.p}, {list(self.coeffs)})"

    def ord_pi(self):
        """Exact valuation in pi units (ord pi = 1, ord p = p - 1); None if zero."""
        best = None
        for i, c in enumerate(self.coeffs):
            v = _frac_ord_p(c, self.p)
            if v is None:
                continue
            t = i + (self.p - 1) * v
            if best is None or t < best:
                best = t
        return best

    def shift_down(self):
        """Exact division by pi."""
        cs = self.coeffs
        return PiAdic(self.p, cs[1:] + (-cs[0] / self.p,))

    def digits(self, count):
        """Canonical digit expansion d_0..d_{count-1} with x = sum d_i pi**i
        mod pi**count, digits in [0, p). Requires ord_pi >= 0."""
        x = self
        out = []
        for _ in range(count):
            c0 = x.coeffs[0]
            if c0.denominator % self.p == 0:
                raise PreconditionError("scalar is not pi-integral")
            d = (c0.numerator * pow(c0.denominator, self.p - 2, self.p)) % self.p
            out.append(d)
            x = (x - d).shift_down()
        if x.ord_pi() is not None and x.ord_pi() < 0:
            raise PreconditionError("scalar is not pi-integral")
        return out


def ord_ge(x, m):
    """True when ord_pi(x) >= m (zero counts as infinite order)."""
    v = x.ord_pi()
    return v is None or v >= m


def congruent_mod_pi(x, y, m):
    return ord_ge(x - y, m)


class PiConstScalars:
    """PiAdic field scalars with the deformation specialized to a unit."""

    kind = "piconst"

    def __init__(self, p, lam_value):
        if not lam_value:
            raise PreconditionError("deformation value must be a unit")
        self.p = p
        self.zero = PiAdic.zero(p)
        self.one = PiAdic.one(p)
        self.pi_el = PiAdic.pi(p)
        self.lam_el = lam_value

    def from_int(self, n):
        return PiAdic.from_fraction(self.p, n)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def div(self, x, y):
        return x / y

    def theta(self, x):
        raise PreconditionError("specialized ring has no deformation derivative")

    def is_zero(self, x):
        return not x


class PiLambdaScalars:
    """Laurent polynomials in the deformation with PiAdic coefficients.

    Elements are dicts {exponent: PiAdic}. lam_power is 1 on the source side
    of the Frobenius and p on the target side, where the natural deformation
    variable is the p-th power of the source one.
    """

    kind = "pilambda"

    def __init__(self, p, lam_power=1):
        self.p = p
        self.lam_power = lam_power
        self.zero = {}
        self.one = {0: PiAdic.one(p)}
        self.pi_el = {0: PiAdic.pi(p)}
        self.lam_el = {lam_power: PiAdic.one(p)}

    def from_int(self, n):
        if n == 0:
            return {}
        return {0: PiAdic.from_fraction(self.p, n)}

    def add(self, x, y):
        out = dict(x)
        for e, c in y.items():
            t = out.get(e)
            t = c if t is None else t + c
            if t:
                out[e] = t
            else:
                out.pop(e, None)
        return out

    def neg(self, x):
        return {e: -c for e, c in x.items()}

    def mul(self, x, y):
        out = {}
        for e1, c1 in x.items():
            for e2, c2 in y.items():
                e = e1 + e2
                t = c1 * c2
                if not t:
                    continue
                cur = out.get(e)
                t = t if cur is None else cur + t
                if t:
                    out[e] = t
                else:
                    out.pop(e, None)
        return out

    def div(self, x, y):
        if len(y) != 1:
            raise PreconditionError("can only divide by monomials in the deformation")
        (e0, c0), = y.items()
        inv = c0.inverse()
        return {e - e0: c * inv for e, c in x.items()}

    def theta(self, x):
        return {e: c * e for e, c in x.items() if e != 0}

    def is_zero(self, x):
        return not x


def splitting_coefficients(p, count):
    """Coefficients E_0..E_{count-1} of exp(pi (t - t**p)), exact.

    Satisfies ord_pi E_i >= i (p-1)^2 / p^2; E_0 = 1, E_1 = pi.
    """
    pi = PiAdic.pi(p)
    pi_pows = [PiAdic.one(p)]
    for _ in range(count):
        pi_pows.append(pi_pows[-1] * pi)
    fact = [1]
    for i in range(1, count + 1):
        fact.append(fact[-1] * i)
    out = [PiAdic.zero(p) for _ in range(count)]
    j = 0
    while p * j < count:
        b = pi_pows[j] * Fraction((-1) ** j, fact[j])
        for i in range(count - p * j):
            a = pi_pows[i] * Fraction(1, fact[i])
            out[i + p * j] = out[i + p * j] + a * b
        j += 1
    return out


def splitting_bound(p, i):
    """Lower bound for ord_pi of the i-th splitting coefficient."""
    return Fraction(i * (p - 1) ** 2, p * p)


def dwork_root(p, target_ord):
    """Partial sum of E(1): a primitive p-th root of unity mod pi**target_ord.

    Returns (value, certified order). The value is congruent to 1 + pi
    mod pi**2, which matches the valuation normalization pi = 1 - zeta up
    to a unit.
    """
    count = 1
    while splitting_bound(p, count) < target_ord:
        count += 1
    coeffs = splitting_coefficients(p, count + 1)
    total = PiAdic.zero(p)
    for c in coeffs:
        total = total + c
    return total, target_ord


def embed_cyclotomic(x, zeta_hat):
    """Image of a Z[zeta_p] element under zeta -> zeta_hat, as PiAdic."""
    p = x.p
    acc = PiAdic.zero(p)
    power = PiAdic.one(p)
    for c in x.coeffs:
        if c:
            acc = acc + power * c
        power = power * zeta_hat
    return acc


def teichmuller_lift(p, residue, target_ord):
    """(value, certified pi order) for the Teichmuller representative of a
    unit residue. Exact (order None) for residue +-1."""
    residue %= p
    if residue == 0:
        raise PreconditionError("no Teichmuller lift of zero")
    if residue == 1:
        return PiAdic.one(p), None
    if residue == p - 1:
        return -PiAdic.one(p), None
    k = max(1, ceil(target_ord / (p - 1)))
    val = pow(residue, p ** k, p ** (k + 1))
    return PiAdic.from_fraction(p, val), (k + 1) * (p - 1)


def _laurent_to_poly(x, p, floor_ord=None):
    """Laurent dict -> Poly over PiAdic.

    Exact data must have no negative exponents. Truncated data may carry
    uncancelled tail debris at negative exponents; with floor_ord set, such
    coefficients are dropped when their order clears the certified floor and
    rejected otherwise.
    """
    if not x:
        return Poly()
    if min(x) < 0:
        if floor_ord is None:
            raise InvariantError(
                "negative deformation exponent where a series was expected")
        for e, cval in x.items():
            if e < 0 and not ord_ge(cval, floor_ord):
                v = cval.ord_pi()
                raise InvariantError(
                    f"negative deformation exponent {e} with order {v}, "
                    f"below the certified floor {floor_ord}")
        x = {e: cval for e, cval in x.items() if e >= 0}
        if not x:
            return Poly()
    hi = max(x)
    z = PiAdic.zero(p)
    return Poly([x.get(e, z) for e in range(hi + 1)])


def _min_ord_series(coeffs):
    best = None
    for c in coeffs:
        v = c.ord_pi()
        if v is None:
            continue
        if best is None or v < best:
            best = v
    return best


@dataclass
class FlagData:
    """Derivative flag over the pi-adic deformation ring: representatives,
    their basis coordinates (F columns), and the structure matrix columns."""

    basis: list
    reps: list
    F: list            # F[row v][col i] as Poly over PiAdic
    B: list            # B[i][j] as RatFunc over PiAdic (column j = image of flag j)


def flag_data(params, p):
    ring = PiLambdaScalars(p, 1)
    n = params.degree
    reps = flag_representatives(params, ring, n + 1)
    certs = [reduce_to_basis(r, params, ring) for r in reps]
    order = basis_set(params)
    F = [[_laurent_to_poly(certs[i].coords[v], p) for i in range(n)] for v in order]
    one = PiAdic.one(p)
    Frf = [[RatFunc(e, Poly.const(one)) for e in row] for row in F]
    target = [RatFunc(_laurent_to_poly(certs[n].coords[v], p), Poly.const(one)) for v in order]
    g = solve_linear(Frf, [target], one=RatFunc(Poly.const(one)))[0]
    zero = RatFunc(Poly(), Poly.const(one))
    one_rf = RatFunc(Poly.const(one))
    B = [[zero] * n for _ in range(n)]
    for i in range(n - 1):
        B[i + 1][i] = one_rf
    for i in range(n):
        B[i][n - 1] = g[i]
    return FlagData(basis=order, reps=reps[:n], F=F, B=B)


def _phi_terms(params, p, cutoff):
    """Truncated splitting product: list of (lam_exp, x_exponent, PiAdic)."""
    E = splitting_coefficients(p, cutoff + 1)
    a, b, c, d = params.a, params.b, params.c, params.d
    out = []
    for k in range(cutoff + 1):
        if not E[k]:
            continue
        for i in range(cutoff + 1 - k):
            if not E[i]:
                continue
            Eki = E[k] * E[i]
            for j in range(cutoff + 1 - k - i):
                if not E[j]:
                    continue
                coeff = Eki * E[j]
                if coeff:
                    out.append((k, (i * a - k * c, j * b - k * d), coeff))
    return out


def _psi_p_laurent(terms, p):
    """Keep x-exponents divisible by p and divide them by p.

    terms: dict x_exponent -> laurent dict. Returns the same shape.
    """
    out = {}
    for (v1, v2), lau in terms.items():
        if v1 % p or v2 % p:
            continue
        key = (v1 // p, v2 // p)
        cur = out.get(key)
        if cur is None:
            out[key] = dict(lau)
        else:
            for e, c in lau.items():
                t = cur.get(e)
                t = c if t is None else t + c
                if t:
                    cur[e] = t
                else:
                    cur.pop(e, None)
    return out


def required_cutoff(p, pi_digits, nu0):
    """Smallest total splitting degree whose dropped tail is provably
    below pi**(pi_digits + nu0)."""
    w = 0
    while splitting_bound(p, w + 1) < pi_digits + nu0:
        w += 1
    return w


def default_cutoff(params, p):
    wmax = max(weight_of(params, v) for v in basis_set(params))
    return 2 * params.degree + int(ceil(p * wmax))


@dataclass
class FrobeniusSeries:
    params: object
    p: int
    pi_digits: int
    margin: int
    cutoff: int
    nu0: int
    lam_order: int
    basis: list
    U: list        # U[i][j] = list of PiAdic, coefficient of L**n
    B: list        # same shape, series of the structure matrix
    B_padded: list


def frobenius_series(params, p, pi_digits=8, lam_order=None, cutoff=None):
    """Frobenius matrix U(L) on the derivative flag, as an exact series in the
    deformation, certified modulo pi**margin with margin >= pi_digits.

    Column j holds the coordinates of the Frobenius image of the j-th flag
    class in the flag at the p-th power of the deformation.

    Supported for pole exponents c = d = 1: deeper poles put fractional
    powers of the deformation into the reduction, which the series ring
    does not carry.
    """
    params.check_prime(p)
    if params.c * params.d != 1:
        raise PreconditionError(
            "the series Frobenius needs pole exponents c = d = 1")
    n = params.degree
    ab = params.a * params.b
    if lam_order is None:
        lam_order = 2 * p * ab + 10
    fd = flag_data(params, p)
    one = PiAdic.one(p)
    one_rf = RatFunc(Poly.const(one))
    # F at the p-th power of the deformation, and its worst inverse denominator
    Fp = [[RatFunc(e.compose_power(p), Poly.const(one)) for e in row] for row in fd.F]
    idcols = []
    for j in range(n):
        col = [RatFunc(Poly(), Poly.const(one)) for _ in range(n)]
        col[j] = one_rf
        idcols.append(col)
    inv_cols = solve_linear(Fp, idcols, one=one_rf)
    nu0 = 0
    for col in inv_cols:
        for entry in col:
            v = _min_ord_series(entry.series_coefficients(lam_order + 1))
            if v is not None and -v > nu0:
                nu0 = -v
    if cutoff is None:
        cutoff = max(required_cutoff(p, pi_digits, nu0), default_cutoff(params, p))
    margin = int(splitting_bound(p, cutoff + 1)) - nu0
    if margin < pi_digits:
        raise StarvationError(
            f"splitting cutoff {cutoff} certifies only pi**{margin}, "
            f"need pi**{pi_digits}; raise the cutoff",
            achieved=margin, requested=pi_digits)
    phi = _phi_terms(params, p, cutoff)
    ringp = PiLambdaScalars(p, p)
    Mcols = []
    for j in range(n):
        rep = fd.reps[j]
        prod = {}
        for (rx, rlau) in rep.items():
            for (k, vx, coeff) in phi:
                key = (rx[0] + vx[0], rx[1] + vx[1])
                cur = prod.setdefault(key, {})
                for e, c in rlau.items():
                    t = coeff * c
                    if not t:
                        continue
                    prev = cur.get(e + k)
                    t = t if prev is None else prev + t
                    if t:
                        cur[e + k] = t
                    else:
                        cur.pop(e + k, None)
        prod = {k: v for k, v in prod.items() if v}
        img = _psi_p_laurent(prod, p)
        cert = reduce_to_basis(img, params, ringp)
        Mcols.append([cert.coords[v] for v in fd.basis])
    Mrf = [[RatFunc(_laurent_to_poly(Mcols[j][i], p, floor_ord=pi_digits + nu0), Poly.const(one))
            for j in range(n)] for i in range(len(fd.basis))]
    Ucols = solve_linear(Fp, [[Mrf[i][j] for i in range(n)] for j in range(n)], one=one_rf)
    U = [[None] * n for _ in range(n)]
    for j in range(n):
        for i in range(n):
            coeffs = Ucols[j][i].series_coefficients(lam_order + 1)
            bad = _min_ord_series(coeffs)
            if bad is not None and bad < 0:
                raise InvariantError(
                    f"Frobenius entry ({i},{j}) is not pi-integral (ord {bad})")
            U[i][j] = coeffs
    Bser = [[entry.series_coefficients(lam_order + 1) for entry in row] for row in fd.B]
    Bpad = [[_pad_power_series(entry, p, lam_order + 1) for entry in row] for row in fd.B]
    return FrobeniusSeries(params=params, p=p, pi_digits=pi_digits, margin=margin,
                           cutoff=cutoff, nu0=nu0, lam_order=lam_order,
                           basis=fd.basis, U=U, B=Bser, B_padded=Bpad)


def _pad_power_series(entry, p, count):
    """Series of entry evaluated at the p-th power of the variable."""
    comp = RatFunc(entry.num.compose_power(p), entry.den.compose_power(p))
    return comp.series_coefficients(count)


def _series_add(x, y):
    return [a + b for a, b in zip(x, y)]


def _series_neg(x):
    return [-a for a in x]


def _series_mul(x, y, count, p):
    z = PiAdic.zero(p)
    out = [z] * count
    for i, a in enumerate(x[:count]):
        if not a:
            continue
        for j, b in enumerate(y[: count - i]):
            if b:
                out[i + j] = out[i + j] + a * b
    return out


def _series_theta(x):
    return [c * i for i, c in enumerate(x)]


def _mat_series_mul(A, B, count, p):
    n = len(A)
    m = len(B[0])
    k = len(B)
    z = [PiAdic.zero(p)] * count
    out = [[z for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for j in range(m):
            acc = [PiAdic.zero(p)] * count
            for t in range(k):
                acc = _series_add(acc, _series_mul(A[i][t], B[t][j], count, p))
            out[i][j] = acc
    return out


@dataclass
class HorizontalityReport:
    lam_checked: int
    variants: dict      # name -> min ord_pi over all residual coefficients (None = 0 residual)
    margin: int


def horizontality_residual(fs, lam_checked=None):
    """Residual of theta(U) - U*B + p*B(L**p)*U and labeled variants.

    The stated shape should vanish to the certified precision; the variants
    (transposed structure matrix, reversed transport) are diagnostics and are
    reported without being silently substituted.
    """
    p = fs.p
    count = (fs.lam_order + 1) if lam_checked is None else min(lam_checked, fs.lam_order + 1)
    U = [[entry[:count] for entry in row] for row in fs.U]
    B = [[entry[:count] for entry in row] for row in fs.B]
    Bp = [[entry[:count] for entry in row] for row in fs.B_padded]
    n = len(U)

    def residual(Bmat, Bpmat, left_to_right=True):
        thU = [[_series_theta(e) for e in row] for row in U]
        if left_to_right:
            t1 = _mat_series_mul(U, Bmat, count, p)
            t2 = _mat_series_mul(Bpmat, U, count, p)
        else:
            t1 = _mat_series_mul(Bmat, U, count, p)
            t2 = _mat_series_mul(U, Bpmat, count, p)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = _series_add(thU[i][j], _series_neg(t1[i][j]))
                acc = _series_add(acc, [c * p for c in t2[i][j]])
                row.append(acc)
            out.append(row)
        return out

    def min_ord(mat):
        best = None
        for row in mat:
            for entry in row:
                v = _min_ord_series(entry)
                if v is None:
                    continue
                if best is None or v < best:
                    best = v
        return best

    Bt = [[B[j][i] for j in range(n)] for i in range(n)]
    Bpt = [[Bp[j][i] for j in range(n)] for i in range(n)]
    variants = {
        "stated": min_ord(residual(B, Bp, True)),
        "transposed": min_ord(residual(Bt, Bpt, True)),
        "reversed": min_ord(residual(B, Bp, False)),
    }
    return HorizontalityReport(lam_checked=count, variants=variants, margin=fs.margin)


@dataclass
class FrobeniusPoint:
    params: object
    p: int
    lam_residue: int
    pi_digits: int
    margin: int
    cutoff: int
    nu0: int
    basis: list
    U: list   # PiAdic matrix


def frobenius_at_point(params, p, lam_residue, pi_digits=8, cutoff=None):
    """Frobenius matrix at the Teichmuller point above a unit residue.

    The fiber is its own image (the lift is fixed by the p-power map), so U
    is a square PiAdic matrix certified modulo pi**margin.
    """
    params.check_prime(p)
    if params.c * params.d != 1:
        raise PreconditionError(
            "the point Frobenius needs pole exponents c = d = 1")
    n = params.degree
    lam_hat, lam_ord = teichmuller_lift(p, lam_residue, pi_digits + 2 * n * (p - 1))
    ring1 = PiLambdaScalars(p, 1)
    ring = PiConstScalars(p, lam_hat)
    reps_lam = flag_representatives(params, ring1, n)

    def specialize(lau):
        acc = PiAdic.zero(p)
        for e, c in lau.items():
            acc = acc + c * lam_hat ** e
        return acc

    reps = [{x: specialize(lau) for x, lau in rep.items()} for rep in reps_lam]
    certs = [reduce_to_basis(r, params, ring) for r in reps]
    order = basis_set(params)
    F = [[certs[i].coords[v] for i in range(n)] for v in order]
    idcols = []
    for j in range(n):
        col = [PiAdic.zero(p)] * n
        col[j] = PiAdic.one(p)
        idcols.append(col)
    inv_cols = solve_linear(F, idcols, one=PiAdic.one(p))
    nu0 = 0
    for col in inv_cols:
        for entry in col:
            v = entry.ord_pi()
            if v is not None and -v > nu0:
                nu0 = -v
    if cutoff is None:
        cutoff = max(required_cutoff(p, pi_digits, nu0), default_cutoff(params, p))
    margin = int(splitting_bound(p, cutoff + 1)) - nu0
    if lam_ord is not None:
        margin = min(margin, lam_ord - nu0)
    if margin < pi_digits:
        raise StarvationError(
            f"cutoff {cutoff} certifies only pi**{margin}, need pi**{pi_digits}",
            achieved=margin, requested=pi_digits)
    phi = _phi_terms(params, p, cutoff)
    lam_pows = [PiAdic.one(p)]
    for _ in range(cutoff + 1):
        lam_pows.append(lam_pows[-1] * lam_hat)
    Ucols = []
    for j in range(n):
        prod = {}
        for rx, rc in reps[j].items():
            for (k, vx, coeff) in phi:
                key = (rx[0] + vx[0], rx[1] + vx[1])
                t = coeff * rc * lam_pows[k]
                if not t:
                    continue
                cur = prod.get(key)
                t = t if cur is None else cur + t
                if t:
                    prod[key] = t
                else:
                    prod.pop(key, None)
        img = {}
        for (v1, v2), cval in prod.items():
            if v1 % p or v2 % p:
                continue
            key = (v1 // p, v2 // p)
            cur = img.get(key)
            t = cval if cur is None else cur + cval
            if t:
                img[key] = t
            else:
                img.pop(key, None)
        cert = reduce_to_basis(img, params, ring)
        Mcol = [cert.coords[v] for v in order]
        Ucols.append(solve_linear(F, [Mcol], one=PiAdic.one(p))[0])
    U = [[Ucols[j][i] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            v = U[i][j].ord_pi()
            if v is not None and v < 0:
                raise InvariantError(f"Frobenius entry ({i},{j}) not pi-integral")
    return FrobeniusPoint(params=params, p=p, lam_residue=lam_residue,
                          pi_digits=pi_digits, margin=margin, cutoff=cutoff,
                          nu0=nu0, basis=order, U=U)


def reciprocal_char_poly(U, p):
    """Coefficients of det(1 - U T) from trace power sums, exact."""
    n = len(U)

    def mat_mul(A, B):
        return [[sum((A[i][t] * B[t][j] for t in range(n)), PiAdic.zero(p))
                 for j in range(n)] for i in range(n)]

    traces = []
    power = U
    for _ in range(n):
        traces.append(sum((power[i][i] for i in range(n)), PiAdic.zero(p)))
        power = mat_mul(power, U)
    coeffs = [PiAdic.one(p)]
    for m in range(1, n + 1):
        acc = PiAdic.zero(p)
        for k in range(1, m + 1):
            acc = acc + traces[k - 1] * coeffs[m - k]
        coeffs.append(acc * Fraction(-1, m))
    return coeffs


@dataclass
class CharPolyComparison:
    params: object
    p: int
    lam_residue: int
    det_coeffs: list
    lpoly_coeffs: list
    embedded: list
    agreement: list   # per coefficient: ord_pi of the difference (None = equal)
    min_agreement: object
    margin: int


def compare_char_poly_with_lfunction(params, p, lam_residue, pi_digits=8, workers=1):
    """det(1 - U T) at the Teichmuller point against the counted L-polynomial,
    matched through zeta -> E(1)."""
    fp = frobenius_at_point(params, p, lam_residue, pi_digits)
    det_coeffs = reciprocal_char_poly(fp.U, p)
    series = exp_sum_series(params, p, lam_residue, params.degree, workers=workers)
    lp = l_polynomial(series)
    zeta_hat, _ = dwork_root(p, fp.margin + 2)
    embedded = [embed_cyclotomic(c, zeta_hat) for c in lp.coeffs]
    agreement = []
    overall = None
    for dc, ec in zip(det_coeffs, embedded):
        v = (dc - ec).ord_pi()
        agreement.append(v)
        if v is not None and (overall is None or v < overall):
            overall = v
    return CharPolyComparison(params=params, p=p, lam_residue=lam_residue,
                              det_coeffs=det_coeffs, lpoly_coeffs=list(lp.coeffs),
                              embedded=embedded, agreement=agreement,
                              min_agreement=overall, margin=fp.margin)

"""Exact arithmetic in K = Q(sqrt(d)) and its ring of integers.

Elements are stored by rational coordinates (a, b) in the integral basis
(1, w), where w = sqrt(d) when d = 2, 3 mod 4 and w = (1 + sqrt(d))/2 when
d = 1 mod 4. In both cases w satisfies w^2 = t*w - n with

    t = 0, n = -d          (d = 2, 3 mod 4)
    t = 1, n = (1 - d)/4   (d = 1 mod 4)

and w = (t + sqrt(D))/2 for the discriminant D = t^2 - 4n.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .errors import (DegenerateD, DivisionByZero, FieldMismatch, ImaginaryField,
                     NotIntegral, NotSquarefree, UnitInput)


def is_squarefree(m):
    m = abs(m)
    if m == 0:
        return False
    p = 2
    while p * p <= m:
        if m % (p * p) == 0:
            return False
        if m % p == 0:
            m //= p
        p += 1
    return True


def prime_factors(m):
    m = abs(m)
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def is_prime(m):
    return m >= 2 and prime_factors(m) == [m]


def divisors(m):
    m = abs(m)
    small = [k for k in range(1, isqrt(m) + 1) if m % k == 0]
    return sorted(set(small + [m // k for k in small]))


@dataclass(frozen=True)
class QuadraticField:
    d: int

    def __post_init__(self):
        if self.d in (0, 1):
            raise DegenerateD(f"d = {self.d} does not define a quadratic field")
        if not is_squarefree(self.d):
            raise NotSquarefree(f"d = {self.d} is not squarefree")

    @property
    def half(self):
        """True when w = (1 + sqrt(d))/2."""
        return self.d % 4 == 1

    @property
    def D(self):
        return self.d if self.half else 4 * self.d

    @property
    def t(self):
        return 1 if self.half else 0

    @property
    def n(self):
        return (1 - self.d) // 4 if self.half else -self.d

    @property
    def imaginary(self):
        return self.d < 0

    @property
    def omega_str(self):
        return f"(1+√{self.d})/2" if self.half else f"√{self.d}"

    def __call__(self, a=0, b=0):
        return FieldElement(self, Fraction(a), Fraction(b))

    @property
    def one(self):
        return self(1)

    @property
    def w(self):
        return self(0, 1)

    def sqrt_d(self):
        return self(-1, 2) if self.half else self(0, 1)

    def __str__(self):
        return f"Q(√{self.d})"


def make_field(d):
    return QuadraticField(int(d))


class FieldElement:
    """a + b*w with a, b rational."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field, a, b):
        self.field = field
        self.a = Fraction(a)
        self.b = Fraction(b)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, -self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        K = self.field
        a, b, c, e = self.a, self.b, other.a, other.b
        be = b * e
        return FieldElement(K, a * c - be * K.n, a * e + b * c + be * K.t)

    __rmul__ = __mul__

    def inverse(self):
        N = self.norm()
        if N == 0:
            raise DivisionByZero("inverse of zero")
        c = self.conjugate()
        return FieldElement(self.field, c.a / N, c.b / N)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.field.d, self.a, self.b))

    def __bool__(self):
        return bool(self.a or self.b)

    def conjugate(self):
        # sigma(w) = t - w
        return FieldElement(self.field, self.a + self.b * self.field.t, -self.b)

    def norm(self):
        K = self.field
        return self.a * self.a + self.a * self.b * K.t + self.b * self.b * K.n

    def trace(self):
        return 2 * self.a + self.b * self.field.t

    def is_integral(self):
        return self.a.denominator == 1 and self.b.denominator == 1

    def is_unit(self):
        return self.is_integral() and abs(self.norm()) == 1

    def coords(self):
        return (self.a, self.b)

    def sqrt_coords(self):
        """(p, q) with self = p + q*sqrt(d)."""
        if self.field.half:
            return self.a + self.b / 2, self.b / 2
        return self.a, self.b

    def __repr__(self):
        return f"FieldElement(d={self.field.d}, a={self.a}, b={self.b})"

    def __str__(self):
        p, q = self.sqrt_coords()
        den = p.denominator * q.denominator // _gcd(p.denominator, q.denominator)
        P, Q = int(p * den), int(q * den)
        root = f"√{self.field.d}"
        if Q == 0:
            body = str(P)
        else:
            qs = root if abs(Q) == 1 else f"{abs(Q)}{root}"
            if P == 0:
                body = ("-" if Q < 0 else "") + qs
            else:
                body = f"{P}{'-' if Q < 0 else '+'}{qs}"
        if den == 1:
            return body
        if Q == 0 or P == 0:
            return f"{body}/{den}"
        return f"({body})/{den}"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def same_field(x, y):
    if x.field != y.field:
        raise FieldMismatch(f"{x.field} vs {y.field}")


def normalize_associate(x):
    """Pick a deterministic representative among x times the roots of unity.

    The chosen associate has the lexicographically largest (a, b) among
    u*x with u a root of unity in K; for real fields this just fixes the sign.
    """
    return max((u * x for u in torsion_units(x.field)), key=lambda y: (y.a, y.b))


@lru_cache(maxsize=None)
def _torsion_coords(d):
    K = QuadraticField(d)
    if d == -1:
        return ((1, 0), (-1, 0), (0, 1), (0, -1))
    if d == -3:
        # w = (1+sqrt(-3))/2 is a primitive 6th root of unity
        out, u = [], K.one
        for _ in range(6):
            out.append((u.a, u.b))
            u = u * K.w
        return tuple(out)
    return ((1, 0), (-1, 0))


def torsion_units(K):
    return [K(a, b) for a, b in _torsion_coords(K.d)]


def is_irreducible(x):
    """True iff the nonzero non-unit integral x has no factorization into
    two non-units of O_K."""
    if not x.is_integral():
        raise NotIntegral(f"{x} is not integral")
    if not x:
        raise UnitInput("zero is not irreducible")
    N = abs(int(x.norm()))
    if N == 1:
        raise UnitInput(f"{x} is a unit")
    for m in divisors(N):
        if m == 1 or m == N:
            continue
        for y in elements_of_norm(x.field, m):
            if (x / y).is_integral():
                return False
    return True


def elements_of_norm(K, m):
    """Integral elements of norm +-m, one or more per associate class.

    Imaginary fields: every element of norm m (a finite set).
    Real fields: every element y with |N(y)| = m and
    sqrt(m) <= |y| < sqrt(m)*eps, which meets every associate class.
    """
    if m <= 0:
        raise ValueError("norm must be positive")
    D, t = K.D, K.t
    out = []
    if K.imaginary:
        # 4N = X^2 - D*b^2 with X = 2a + b*t
        bmax = isqrt(4 * m // -D)
        targets = (4 * m,)
    else:
        eps = fundamental_unit(K)
        trace = int(eps.trace())
        # |b|*sqrt(D) <= |y| + |y'| <= sqrt(m)*(eps + 1) < sqrt(m)*(trace + 2)
        bmax = isqrt(m * (trace + 2) ** 2 // D) + 1
        targets = (4 * m, -4 * m)
    for b in range(-bmax, bmax + 1):
        for T in targets:
            X2 = T + D * b * b
            if X2 < 0:
                continue
            X = isqrt(X2)
            if X * X != X2:
                continue
            for Xs in {X, -X}:
                if (Xs - b * t) % 2:
                    continue
                out.append(K((Xs - b * t) // 2, b))
    return out


@lru_cache(maxsize=None)
def _fundamental_unit_coords(d):
    K = QuadraticField(d)
    # Continued fraction of theta = w - t = (P + sqrt(d))/Q, with Q | d - P^2.
    # Units x + y*w > 1 have x/y among its convergents.
    P, Q = (-1, 2) if K.half else (0, 1)
    s = isqrt(d)
    p0, p1 = 1, None
    q0, q1 = 0, None
    first = True
    for _ in range(100000):
        a = (P + s) // Q if Q > 0 else (P + s + 1) // Q
        if first:
            p1, q1 = a, 1
            first = False
        else:
            p0, p1 = p1, a * p1 + p0
            q0, q1 = q1, a * q1 + q0
        x = K(p1, q1)
        if abs(x.norm()) == 1 and p1 >= 0:
            return (int(p1), int(q1))
        P = a * Q - P
        Q = (d - P * P) // Q
    raise RuntimeError(f"no unit found for d = {d}")


def fundamental_unit(K):
    """The fundamental unit eps > 1 of a real quadratic ring of integers."""
    if K.imaginary:
        raise ImaginaryField(f"{K} has no fundamental unit")
    a, b = _fundamental_unit_coords(K.d)
    return K(a, b)

"""Fractional ideals of a quadratic ring of integers as exact lattices.

A fractional ideal is stored as (1/den) * L where L is the integral lattice

    L = Z*a + Z*(b + c*w),   a, c > 0,  c | a,  c | b,  0 <= b < a

written as the upper-triangular matrix [a b; 0 c] whose columns are the
basis vectors in (1, w) coordinates. The triple (a, b, c) is the Hermite
normal form of L, and gcd(a, b, c, den) = 1, so equality of ideals is
equality of the stored integers.
"""
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import ConsistencyError, FieldMismatch, ParseError, ZeroIdeal
from .lattice import hnf
from .quadfield import FieldElement, QuadraticField, normalize_associate


def _lcm(a, b):
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class FractionalIdeal:
    field: QuadraticField
    a: int
    b: int
    c: int
    den: int = 1

    # -- construction -----------------------------------------------------

    @classmethod
    def _from_int_vectors(cls, K, vectors, den):
        """Ideal spanned over Z by integer (x, y) = x + y*w vectors, / den.

        The caller guarantees the span is an O_K-module.
        """
        # HNF on columns ordered (w, 1) gives rows (c, b) and (0, a).
        rows = hnf([(y, x) for x, y in vectors])
        if len(rows) < 2:
            raise ZeroIdeal("generators do not span a rank-2 lattice")
        (c, b), (_, a) = rows
        g = gcd(gcd(a, b), gcd(c, den))
        return cls(K, a // g, b // g, c // g, den // g)

    @classmethod
    def unit(cls, K):
        return cls(K, 1, 0, 1, 1)

    @classmethod
    def principal(cls, x):
        return from_generators(x.field, [x])

    # -- accessors --------------------------------------------------------

    @property
    def basis(self):
        return [[self.a, self.b], [0, self.c]]

    def zbasis(self):
        """The two Z-basis elements as field elements."""
        K = self.field
        return [K(Fraction(self.a, self.den)), K(Fraction(self.b, self.den), Fraction(self.c, self.den))]

    def numerator_vectors(self):
        return [(self.a, 0), (self.b, self.c)]

    def is_integral(self):
        return self.den == 1

    def norm(self):
        return Fraction(self.a * self.c, self.den * self.den)

    def __contains__(self, x):
        if x.field != self.field:
            raise FieldMismatch(f"{x.field} vs {self.field}")
        X, Y = x.a * self.den, x.b * self.den
        if X.denominator != 1 or Y.denominator != 1:
            return False
        X, Y = int(X), int(Y)
        if Y % self.c:
            return False
        return (X - (Y // self.c) * self.b) % self.a == 0

    def contains(self, other):
        """Ideal inclusion other <= self."""
        return all(g in self for g in other.zbasis())

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            other = FractionalIdeal.principal(other)
        if not isinstance(other, FractionalIdeal):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        return power(self, k)

    def conjugate(self):
        return galois_conjugate(self)

    def inverse(self):
        return dual(self)

    def __str__(self):
        g1, g2 = self.zbasis()
        if self.b == 0 and self.a == self.c:
            return f"({g1})"
        return f"({g1}, {g2})"

    def to_text(self):
        return f"[{self.a} {self.b}; 0 {self.c}]/{self.den} @ d={self.field.d}"

    def to_json(self):
        return {"d": self.field.d, "basis": self.basis, "den": self.den}


def canonical(K, a, b, c, den):
    """Build an ideal from a possibly unreduced triangular basis."""
    return FractionalIdeal._from_int_vectors(K, [(a, 0), (b, c)], den)


def from_generators(K, gens):
    """The O_K-module generated by the given field elements."""
    gens = [g if isinstance(g, FieldElement) else K(g) for g in gens]
    for g in gens:
        if g.field != K:
            raise FieldMismatch(f"{g.field} vs {K}")
    gens = [g for g in gens if g]
    if not gens:
        raise ZeroIdeal("all generators are zero")
    den = 1
    for g in gens:
        den = _lcm(den, _lcm(g.a.denominator, g.b.denominator))
    vecs = []
    for g in gens:
        h = g * den
        wh = h * K.w
        vecs.append((int(h.a), int(h.b)))
        vecs.append((int(wh.a), int(wh.b)))
    return FractionalIdeal._from_int_vectors(K, vecs, den)


def mul(I, J):
    I._check(J)
    K = I.field
    n, t = K.n, K.t
    gens = []
    # integer products of numerator vectors: w^2 = t*w - n
    for x1, y1 in I.numerator_vectors():
        for x2, y2 in J.numerator_vectors():
            gens.append((x1 * x2 - n * y1 * y2, x1 * y2 + x2 * y1 + t * y1 * y2))
    return FractionalIdeal._from_int_vectors(K, gens, I.den * J.den)


def _mult_matrix(K, x, y):
    """Integer matrix of multiplication by x + y*w on (1, w) coordinates."""
    n, t = K.n, K.t
    return [[x, -y * n], [y, x + y * t]]


def dual(I):
    """(O_K : I) = {z in K : z*I in O_K}.

    With I = (1/den) * span(v1, v2) the condition is M_vi z in den*Z^2 for
    the multiplication matrices M_vi. The set of such z is an intersection
    of lattices whose dual (for the dot product) is (1/den) times the
    integer span of the rows of M_v1 and M_v2. With H the HNF of those rows
    that span is H^T Z^2, so the quotient is den * H^{-1} Z^2, i.e. the
    columns of den * adj(H) over det H.
    """
    K = I.field
    rows = []
    for x, y in I.numerator_vectors():
        rows.extend(_mult_matrix(K, x, y))
    H = hnf(rows)
    if len(H) < 2:
        raise ZeroIdeal("zero ideal has no dual")
    (h11, h12), (_, h22) = H
    det = h11 * h22
    # columns of adj(H) = [[h22, -h12], [0, h11]]
    cols = [(h22, 0), (-h12, h11)]
    vecs = [(I.den * u, I.den * v) for u, v in cols]
    return FractionalIdeal._from_int_vectors(K, vecs, det)


def inverse_by_conjugate(I):
    """I^{-1} = sigma(I) / N(I); an independent route to ``dual``."""
    s = galois_conjugate(I)
    N = I.norm()
    return mul(s, FractionalIdeal.principal(I.field(1 / N)))


def power(I, k):
    if k < 0:
        return power(dual(I), -k)
    result = FractionalIdeal.unit(I.field)
    base = I
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def ideal_norm(I):
    return I.norm()


def galois_conjugate(I):
    K = I.field
    vecs = []
    for g in I.zbasis():
        s = g.conjugate() * I.den
        vecs.append((int(s.a), int(s.b)))
    return FractionalIdeal._from_int_vectors(K, vecs, I.den)


# -- principality -----------------------------------------------------------


def _primitive_part(I):
    """Write I = mu * [A, B + w] with [A, B + w] primitive integral.

    Returns (mu, A, B) with mu rational.
    """
    A = I.a // I.c
    B = I.b // I.c
    return Fraction(I.c, I.den), A, B


def _shortest_vector(K, A, B):
    """Lagrange-Gauss reduction of the lattice [A, B + w] for the (positive
    definite) norm form; returns a minimal-norm nonzero element."""
    n, t = K.n, K.t

    def N(x, y):
        return x * x + t * x * y + n * y * y

    def twice_B(u, v):
        # 2<u, v> = N(u + v) - N(u) - N(v) = Tr(u * conj(v))
        return 2 * u[0] * v[0] + t * (u[0] * v[1] + u[1] * v[0]) + 2 * n * u[1] * v[1]

    u, v = (A, 0), (B, 1)
    if N(*u) > N(*v):
        u, v = v, u
    while True:
        Qu = N(*u)
        # nearest integer to <u, v>/Qu
        m = (twice_B(u, v) + Qu) // (2 * Qu)
        v = (v[0] - m * u[0], v[1] - m * u[1])
        if N(*v) >= Qu:
            return K(*u)
        u, v = v, u


def _principal_imaginary(I):
    K = I.field
    mu, A, B = _primitive_part(I)
    gamma = _shortest_vector(K, A, B)
    # every nonzero element of a principal ideal has norm >= N(ideal), with
    # equality exactly for generators
    if gamma.norm() == A:
        return gamma * mu
    return None


def _principal_real(I):
    """Continued-fraction walk through the cycle of reduced ideals.

    [A, B + w] = A * [1, alpha] with alpha = (b + sqrt(D))/(2a), a = A,
    b = 2B + t. Each step [1, alpha] = (alpha - q) * [1, alpha'] with
    alpha' = 1/(alpha - q); when |a'| = 1 the lattice [1, alpha'] is O_K.
    """
    K = I.field
    D = K.D
    s = isqrt(D)
    mu, A, B = _primitive_part(I)
    a, b = A, 2 * B + K.t
    sqrtD = _sqrt_D(K)
    gen = K(mu * A)
    seen = set()
    while True:
        if abs(a) == 1:
            return gen
        if (a, b) in seen:
            return None
        seen.add((a, b))
        if a > 0:
            q = (b + s) // (2 * a)
        else:
            q = -((b + s) // (-2 * a)) - 1
        alpha = (sqrtD + b) / (2 * a)
        gen = gen * (alpha - q)
        bb = b - 2 * a * q
        cc = (bb * bb - D) // (4 * a)
        a, b = -cc, -bb


def _sqrt_D(K):
    # sqrt(D) = 2w - t
    return K.w * 2 - K.t


def is_principal(I):
    """A generator of I if I is principal, else None."""
    gen = _principal_imaginary(I) if I.field.imaginary else _principal_real(I)
    if gen is not None and FractionalIdeal.principal(gen) != I:
        raise ConsistencyError(f"bad generator {gen} for {I}")
    return gen


def generator(I):
    """Normalized generator (see ``normalize_associate``) or None."""
    g = is_principal(I)
    return None if g is None else normalize_associate(g)


def equivalent(I, J):
    return is_principal(mul(I, dual(J))) is not None


def class_order(I, cap=None):
    """Smallest n >= 1 with I^n principal.

    ``cap`` defaults to the class number; exceeding it is a bug.
    """
    if cap is None:
        from .classgroup import class_group
        cap = class_group(I.field).h
    P = I
    for n in range(1, cap + 1):
        if is_principal(P) is not None:
            return n
        P = mul(P, I)
    raise ConsistencyError(f"class order of {I} exceeds the class number {cap}")


@dataclass(frozen=True)
class IdealClass:
    representative: FractionalIdeal
    order: int


@dataclass(frozen=True)
class DescentReport:
    ideal: FractionalIdeal
    fixed_ideal: bool
    fixed_class: bool
    trivial_class: bool

    @property
    def counterexample(self):
        return self.fixed_class and not self.trivial_class

    def to_json(self):
        return {
            "ideal": self.ideal.to_json(),
            "fixed_ideal": self.fixed_ideal,
            "fixed_class": self.fixed_class,
            "trivial_class": self.trivial_class,
            "counterexample": self.counterexample,
        }


def descent_check(I):
    s = galois_conjugate(I)
    return DescentReport(
        ideal=I,
        fixed_ideal=s == I,
        fixed_class=equivalent(s, I),
        trivial_class=is_principal(I) is not None,
    )


# -- serialization ----------------------------------------------------------

_TEXT_RE = re.compile(
    r"^\s*\[\s*(-?\d+)\s+(-?\d+)\s*;\s*0\s+(-?\d+)\s*\]\s*/\s*(\d+)\s*@\s*d\s*=\s*(-?\d+)\s*$")


def from_text(s):
    m = _TEXT_RE.match(s)
    if not m:
        raise ParseError(f"cannot parse ideal {s!r}")
    a, b, c, den, d = map(int, m.groups())
    return canonical(QuadraticField(d), a, b, c, den)


def from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        (a, b), (z, c) = obj["basis"]
        den = obj["den"]
        d = obj["d"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad ideal record {obj!r}") from exc
    if z != 0:
        raise ParseError("basis must be upper triangular")
    return canonical(QuadraticField(d), a, b, c, den)

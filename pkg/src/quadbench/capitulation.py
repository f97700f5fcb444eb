"""Kummer-type orders that make a given ideal class principal.

For an ideal I of order n in Cl(K) with I^n = (alpha), put L = K[x]/(x^n - alpha)
and

    R = O_K + I^{-1} x + I^{-2} x^2 + ... + I^{-(n-1)} x^{n-1}.

R is closed under multiplication because I^{-i} I^{-j} alpha = I^{n-i-j}, and
it is integral over O_K since (m x^i)^n = m^n alpha^i lies in O_K. Inside R
the extension of I is principal: x R = I R, term by term.

Elements of L are tuples of n field elements (coefficients of 1, x, ...,
x^{n-1}); their rational Z-coordinates are (a_0, b_0, a_1, b_1, ...) in the
basis w^j x^i.
"""
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import FieldMismatch, GeneratorNotFound, TrivialClass
from .ideals import FractionalIdeal, from_json as ideal_from_json, generator, is_principal, power
from .lattice import det, hnf, int_matrix_with_den, solve_rational
from .outcome import FAILS, HOLDS, UNDECIDED, ClaimOutcome
from .quadfield import prime_factors

FOUND = "FOUND"
DEFAULT_BOUND = 50
DEFAULT_MAX_L1 = 4


# -- elements of K[x]/(x^n - alpha) -------------------------------------------

def l_mul(u, v, alpha):
    n = len(u)
    K = alpha.field
    out = [K(0)] * n
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if not b:
                continue
            k = i + j
            if k >= n:
                out[k - n] = out[k - n] + a * b * alpha
            else:
                out[k] = out[k] + a * b
    return tuple(out)


def l_pow(u, k, alpha):
    K = alpha.field
    result = tuple([K(1)] + [K(0)] * (len(u) - 1))
    for _ in range(k):
        result = l_mul(result, u, alpha)
    return result


def to_vector(u):
    out = []
    for c in u:
        out.extend((c.a, c.b))
    return out


def from_vector(K, vec):
    return tuple(K(vec[2 * i], vec[2 * i + 1]) for i in range(len(vec) // 2))


# -- lattices of rank 2n with a common denominator ----------------------------

@dataclass(frozen=True)
class Module:
    """Z-lattice (1/den) * span(rows) in Q^{2n}; rows in HNF, canonical."""
    rows: tuple
    den: int

    @classmethod
    def span(cls, vectors):
        ints, den = int_matrix_with_den(vectors)
        H = hnf(ints)
        g = den
        for r in H:
            for v in r:
                g = gcd(g, v)
        return cls(tuple(tuple(v // g for v in r) for r in H), den // g)

    @property
    def rank(self):
        return len(self.rows)

    def volume(self):
        """|det| of the basis, as a rational (full rank only)."""
        return abs(det(self.rows)) / Fraction(self.den) ** self.rank

    def basis_vectors(self):
        return [[Fraction(v, self.den) for v in r] for r in self.rows]

    def to_json(self):
        return {"rows": [list(r) for r in self.rows], "den": self.den}


@dataclass(frozen=True)
class RelativeOrder:
    field: object
    n: int
    alpha: object
    ideal: FractionalIdeal
    blocks: tuple

    def zbasis(self):
        """2n elements of L spanning the order over Z."""
        K = self.field
        out = []
        for i, B in enumerate(self.blocks):
            for g in B.zbasis():
                u = [K(0)] * self.n
                u[i] = g
                out.append(tuple(u))
        return out

    def lattice(self):
        return Module.span([to_vector(b) for b in self.zbasis()])

    def mul(self, u, v):
        return l_mul(u, v, self.alpha)

    def x(self):
        K = self.field
        u = [K(0)] * self.n
        u[1 % self.n] = K(1)
        return tuple(u)

    def embed(self, c):
        K = self.field
        return tuple([c] + [K(0)] * (self.n - 1))

    def principal(self, gamma):
        return Module.span([to_vector(self.mul(gamma, b)) for b in self.zbasis()])

    def is_closed(self):
        """The Z-span is closed under multiplication by x, by w, and by
        every basis element."""
        L = self.lattice()
        basis = self.zbasis()
        extra = [self.x(), self.embed(self.field.w)] + basis
        for e in extra:
            for b in basis:
                if not contains(L, to_vector(self.mul(e, b))):
                    return False
        return True

    def to_json(self):
        return {
            "d": self.field.d,
            "n": self.n,
            "alpha": [str(self.alpha.a), str(self.alpha.b)],
            "blocks": [B.to_json() for B in self.blocks],
        }


def contains(M, vec):
    coords = solve_rational(M.basis_vectors(), vec)
    return all(c.denominator == 1 for c in coords)


def kummer_blocks(I, n):
    return tuple(power(I, -i) for i in range(n))


def monogenic_blocks(I, n):
    """Coefficient modules of O_K[x]: all equal to O_K."""
    return tuple(FractionalIdeal.unit(I.field) for _ in range(n))


def build_order(K, I, blocks=kummer_blocks):
    from .ideals import class_order
    if I.field != K:
        raise FieldMismatch(f"{I.field} vs {K}")
    n = class_order(I)
    if n == 1:
        raise TrivialClass(f"{I} is principal")
    alpha = generator(power(I, n))
    if alpha is None:
        raise GeneratorNotFound(f"I^{n} should be principal")
    return RelativeOrder(K, n, alpha, I, blocks(I, n))


def genuine_degree(order):
    """x^n - alpha is irreducible over K: for every prime p | n, I^{n/p} is
    non-principal, so alpha is not a p-th power (nor -4 times a 4th power)."""
    n = order.n
    return all(is_principal(power(order.ideal, n // p)) is None for p in prime_factors(n))


def extend_ideal(order, I):
    if I.field != order.field:
        raise FieldMismatch(f"{I.field} vs {order.field}")
    vecs = []
    for g in I.zbasis():
        for b in order.zbasis():
            vecs.append(to_vector(order.mul(order.embed(g), b)))
    return Module.span(vecs)


@dataclass
class CapitulationCertificate:
    ideal: FractionalIdeal
    order: RelativeOrder
    gamma: tuple
    status: str
    checked: bool = False

    def gamma_coords(self):
        """(integer coordinate vector, denominator)."""
        if self.gamma is None:
            return None, None
        ints, den = int_matrix_with_den([to_vector(self.gamma)])
        return ints[0], den

    def to_json(self):
        coords, den = self.gamma_coords()
        out = {
            "d": self.ideal.field.d,
            "ideal": self.ideal.to_json(),
            "n": self.order.n if self.order else 1,
            "alpha": [str(self.order.alpha.a), str(self.order.alpha.b)] if self.order else None,
            "gamma": coords,
            "gamma_den": den,
            "verified": self.checked,
            "status": self.status,
        }
        return out


def _vectors_by_l1(dim, bound, max_l1):
    """Integer vectors with |v_i| <= bound ordered by L1 norm, then
    lexicographically; L1 norms from 1 to max_l1."""
    for s in range(1, max_l1 + 1):
        shell = []
        for support in range(1, min(dim, s) + 1):
            for pos in itertools.combinations(range(dim), support):
                for parts in _compositions(s, support):
                    if max(parts) > bound:
                        continue
                    for signs in itertools.product((1, -1), repeat=support):
                        v = [0] * dim
                        for p, c, sg in zip(pos, parts, signs):
                            v[p] = c * sg
                        shell.append(v)
        shell.sort(reverse=True)
        yield from shell


def _compositions(total, k):
    if k == 1:
        yield (total,)
        return
    for first in range(1, total - k + 2):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest


def find_capitulation_generator(order, I, bound=DEFAULT_BOUND, max_l1=DEFAULT_MAX_L1):
    """Search gamma in I*O with gamma*O = I*O.

    Candidates are integer combinations of the HNF basis of I*O with
    coefficients in [-bound, bound], by increasing L1 norm up to max_l1.
    Returns a certificate with status FOUND or UNDECIDED (never a negative
    verdict: the order need not be maximal).
    """
    if I.field != order.field:
        raise FieldMismatch(f"{I.field} vs {order.field}")
    g = is_principal(I)
    if g is not None:
        return CapitulationCertificate(I, order, order.embed(g), FOUND, True)
    target = extend_ideal(order, I)
    basis = target.basis_vectors()
    K = order.field
    for c in _vectors_by_l1(len(basis), bound, max_l1):
        vec = [sum(ci * b[k] for ci, b in zip(c, basis)) for k in range(len(basis))]
        gamma = from_vector(K, vec)
        if order.principal(gamma) == target:
            cert = CapitulationCertificate(I, order, gamma, FOUND)
            cert.checked = verify_certificate(cert)
            return cert
    return CapitulationCertificate(I, order, None, UNDECIDED)


def mult_matrix(order, gamma):
    """Rows: coordinates of gamma * b for b in the w^j x^i basis of L."""
    K = order.field
    rows = []
    for i in range(order.n):
        for e in (K(1), K.w):
            u = [K(0)] * order.n
            u[i] = e
            rows.append(to_vector(order.mul(gamma, tuple(u))))
    return rows


def verify_certificate(cert):
    """Independent re-check, without comparing HNFs:

    gamma lies in I*O (solved in a freshly built basis of I*O), and
    [O : gamma*O] = |N_{L/Q}(gamma)| equals [O : I*O].
    """
    if cert.gamma is None:
        return False
    order, I = cert.order, cert.ideal
    if order is None:
        return False
    vecs = []
    for g in I.zbasis():
        for b in order.zbasis():
            vecs.append(to_vector(order.mul(order.embed(g), b)))
    ints, den = int_matrix_with_den(vecs)
    basis = [[Fraction(v, den) for v in r] for r in hnf(ints)]
    coords = solve_rational(basis, to_vector(cert.gamma))
    if any(c.denominator != 1 for c in coords):
        return False
    O_vol = abs(det([to_vector(b) for b in order.zbasis()]))
    IO_vol = abs(det(basis))
    norm = abs(det(mult_matrix(order, cert.gamma)))
    return norm == IO_vol / O_vol


def verify_by_hnf(cert):
    """Second pass: rebuild gamma*O and I*O from generator lists fed in
    reverse order and compare the resulting HNFs."""
    if cert.gamma is None or cert.order is None:
        return False
    order, I = cert.order, cert.ideal
    basis = order.zbasis()[::-1]
    lhs = Module.span([to_vector(order.mul(cert.gamma, b)) for b in basis])
    rhs = Module.span([to_vector(order.mul(order.embed(g), b))
                       for g in I.zbasis()[::-1] for b in basis])
    return lhs == rhs


def flip(order, cert):
    """Image of a certificate under x -> -x (n = 2 only)."""
    g = cert.gamma
    flipped = (g[0], -g[1])
    return CapitulationCertificate(cert.ideal, order, flipped, cert.status)


@dataclass
class CompositeReport:
    field: object
    h: int
    divisors: list
    certificates: list

    @property
    def degree_product(self):
        r = 1
        for c in self.certificates:
            r *= c.order.n
        return r

    @property
    def degrees_match(self):
        return self.degree_product == self.h

    @property
    def all_found(self):
        return all(c.status == FOUND for c in self.certificates)

    def to_json(self):
        return {
            "d": self.field.d,
            "h": self.h,
            "divisors": self.divisors,
            "degrees": [c.order.n for c in self.certificates],
            "degree_product": self.degree_product,
            "degrees_match": self.degrees_match,
            "certificates": [c.to_json() for c in self.certificates],
        }


def capitulate(K, I, bound=DEFAULT_BOUND, max_l1=DEFAULT_MAX_L1):
    """Build the order for I and search for a certificate."""
    order = build_order(K, I)
    return find_capitulation_generator(order, I, bound, max_l1)


def composite_report(K, bound=DEFAULT_BOUND, max_l1=DEFAULT_MAX_L1):
    from .classgroup import class_group
    C = class_group(K)
    certs = [capitulate(K, G, bound, max_l1) for G in C.generators]
    return CompositeReport(K, C.h, list(C.divisors), certs)


def check_theorem_2_3(K, bound=DEFAULT_BOUND, max_l1=DEFAULT_MAX_L1):
    from .classgroup import class_group
    C = class_group(K)
    certs = [capitulate(K, R, bound, max_l1) for R in C.reps[1:]]
    witness = {"certificates": [c.to_json() for c in certs]}
    if all(c.status == FOUND and c.checked for c in certs):
        return ClaimOutcome("T2.3", K.d, HOLDS, witness)
    return ClaimOutcome("T2.3", K.d, UNDECIDED, witness)


def check_theorems_2_4_2_5(K, bound=DEFAULT_BOUND, max_l1=DEFAULT_MAX_L1):
    rep = composite_report(K, bound, max_l1)
    data = rep.to_json()
    t24 = ClaimOutcome("T2.4", K.d, HOLDS if rep.all_found else UNDECIDED,
                       {"degrees": data["degrees"], "all_found": rep.all_found})
    t25_witness = {"degrees": data["degrees"], "degree_product": rep.degree_product,
                   "h": rep.h, "scope": "degree bookkeeping only"}
    t25 = ClaimOutcome("T2.5", K.d, HOLDS if rep.degrees_match else FAILS, t25_witness)
    return t24, t25


def certificate_from_json(obj):
    """Rebuild and re-verify a certificate record."""
    I = ideal_from_json(obj["ideal"])
    K = I.field
    order = build_order(K, I)
    den = obj["gamma_den"]
    vec = [Fraction(v, den) for v in obj["gamma"]]
    cert = CapitulationCertificate(I, order, from_vector(K, vec), obj["status"])
    cert.checked = verify_certificate(cert)
    return cert

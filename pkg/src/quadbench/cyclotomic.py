"""Exact arithmetic in Z[zeta_n] and square roots of squarefree integers
built from Gauss sums."""
from dataclasses import dataclass
from functools import lru_cache

from .errors import DegenerateD, NotOddPrime
from .outcome import FAILS, HOLDS, OUT_OF_SCOPE, ClaimOutcome
from .quadfield import QuadraticField, is_prime, prime_factors


def _poly_divmod(num, den):
    """Exact division of integer polynomials (low degree first) by a monic
    divisor."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c:
            q[k] = c
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclo_poly(n):
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for k in range(1, n):
        if n % k == 0:
            num, rem = _poly_divmod(num, cyclo_poly(k))
            if any(rem):
                raise ArithmeticError(f"Phi_{k} does not divide x^{n} - 1")
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


def phi(n):
    return len(cyclo_poly(n)) - 1


def reduce_mod_phi(coeffs, n):
    P = cyclo_poly(n)
    deg = len(P) - 1
    c = list(coeffs) + [0] * max(0, deg - len(coeffs))
    for k in range(len(c) - 1, deg - 1, -1):
        top = c[k]
        if top:
            for j in range(deg + 1):
                c[k - deg + j] -= top * P[j]
    return tuple(c[:deg])


@dataclass(frozen=True)
class CyclotomicElement:
    n: int
    coeffs: tuple

    @classmethod
    def from_exponents(cls, n, terms):
        """Sum of c * zeta_n^k for (k, c) in terms."""
        c = [0] * n
        for k, v in terms:
            c[k % n] += v
        return cls(n, reduce_mod_phi(c, n))

    @classmethod
    def const(cls, n, v):
        return cls.from_exponents(n, [(0, v)])

    @classmethod
    def zeta(cls, n, k=1):
        return cls.from_exponents(n, [(k, 1)])

    def _check(self, other):
        if isinstance(other, int):
            return CyclotomicElement.const(self.n, other)
        if other.n != self.n:
            raise ValueError(f"conductors differ: {self.n} vs {other.n}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return CyclotomicElement(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        prod = [0] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CyclotomicElement(self.n, reduce_mod_phi(prod, self.n))

    __rmul__ = __mul__

    def __pow__(self, k):
        result = CyclotomicElement.const(self.n, 1)
        for _ in range(k):
            result = result * self
        return result

    def is_const(self, v=None):
        if any(self.coeffs[1:]):
            return False
        return v is None or self.coeffs[0] == v

    def embed(self, m):
        """Image in Z[zeta_m] under zeta_n -> zeta_m^(m/n); requires n | m."""
        if m % self.n:
            raise ValueError(f"{self.n} does not divide {m}")
        step = m // self.n
        return CyclotomicElement.from_exponents(m, [(k * step, c) for k, c in enumerate(self.coeffs)])

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if k == 0 else (f"ζ{self.n}" if k == 1 else f"ζ{self.n}^{k}")
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def legendre(a, p):
    r = pow(a % p, (p - 1) // 2, p)
    return 0 if r == 0 else (1 if r == 1 else -1)


def _check_odd_prime(p):
    if p == 2 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")


def gauss_sum(p):
    """g = sum over a of (a|p) zeta_p^a, reduced to the power basis."""
    _check_odd_prime(p)
    return CyclotomicElement.from_exponents(p, [(a, legendre(a, p)) for a in range(1, p)])


def verify_gauss_square(p):
    g = gauss_sum(p)
    sign = -1 if p % 4 == 3 else 1
    return (g * g).is_const(sign * p)


def sqrt_minus_one(n):
    return CyclotomicElement.zeta(4).embed(n)


def sqrt_two(n):
    """zeta_8 + zeta_8^-1, squaring to 2."""
    return CyclotomicElement.from_exponents(8, [(1, 1), (7, 1)]).embed(n)


def sqrt_minus_two(n):
    """zeta_8 + zeta_8^3, squaring to -2."""
    return CyclotomicElement.from_exponents(8, [(1, 1), (3, 1)]).embed(n)


def embed_sqrt(d):
    """(n, w) with n = |disc Q(sqrt d)| and w in Z[zeta_n], w^2 = d.

    The odd part m of |d| contributes the product of Gauss sums, whose square
    is e*m with e = +-1; the remaining factor d/(e*m) is one of 1, -1, 2, -2
    and is supplied by 1, zeta_4, zeta_8 + zeta_8^-1 or zeta_8 + zeta_8^3.
    """
    K = QuadraticField(d)  # validates d
    n = abs(K.D)
    odd = [p for p in prime_factors(d) if p != 2]
    w = CyclotomicElement.const(n, 1)
    e = 1
    for p in odd:
        w = w * gauss_sum(p).embed(n)
        if p % 4 == 3:
            e = -e
    m = 1
    for p in odd:
        m *= p
    rest = d // (e * m)
    if rest == -1:
        w = w * sqrt_minus_one(n)
    elif rest == 2:
        w = w * sqrt_two(n)
    elif rest == -2:
        w = w * sqrt_minus_two(n)
    elif rest != 1:
        raise DegenerateD(f"unexpected cofactor {rest} for d = {d}")
    return n, w


def witness_json(d, n, w):
    return {"d": d, "n": n, "coeffs": list(w.coeffs), "den": 1, "verified": (w * w).is_const(d)}


def check_theorem_3_1(d):
    """Q(sqrt d)/Q is abelian; exhibit sqrt d inside Q(zeta_n)."""
    from .splitting import ramified_set
    K = QuadraticField(d)
    n, w = embed_sqrt(d)
    ok = (w * w).is_const(d) and ramified_set(K) <= set(prime_factors(n))
    return ClaimOutcome("T3.1", d, HOLDS if ok else FAILS, witness_json(d, n, w))


def check_remark(d):
    """The remark that Q(sqrt p), p prime, is not obtained by adjoining a
    root of unity. Refuted for every prime p by the explicit embedding."""
    if not is_prime(d):
        return ClaimOutcome("REMARK", d, OUT_OF_SCOPE,
                            reason="remark concerns Q(sqrt p) with p a rational prime")
    n, w = embed_sqrt(d)
    if (w * w).is_const(d):
        return ClaimOutcome("REMARK", d, FAILS, witness_json(d, n, w))
    return ClaimOutcome("REMARK", d, HOLDS, None)


def verify_sqrt_witness(witness):
    w = CyclotomicElement(witness["n"], tuple(witness["coeffs"]))
    if len(w.coeffs) != phi(w.n):
        return False
    return (w * w).is_const(witness["d"])

"""Splitting of rational primes, ramified sets, and non-UFD witnesses."""
from dataclasses import dataclass

from .classgroup import class_group
from .errors import NotPrime
from .ideals import FractionalIdeal, from_generators, is_principal, mul, power
from .outcome import FAILS, HOLDS, ClaimOutcome
from .quadfield import is_irreducible, is_prime, normalize_associate, prime_factors

SPLIT = "SPLIT"
INERT = "INERT"
RAMIFIED = "RAMIFIED"

WITNESS_PRIME_BOUND = 50


def kronecker(D, p):
    """Kronecker symbol (D/p) for a prime p."""
    if p == 2:
        if D % 2 == 0:
            return 0
        return 1 if D % 8 in (1, 7) else -1
    r = pow(D % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


@dataclass(frozen=True)
class SplittingReport:
    p: int
    kind: str
    primes_above: tuple

    def product(self):
        """Product of the primes above p, with multiplicity 2 if ramified."""
        P = self.primes_above
        if self.kind == RAMIFIED:
            return mul(P[0], P[0])
        if self.kind == SPLIT:
            return mul(P[0], P[1])
        return P[0]

    def to_json(self):
        return {"p": self.p, "kind": self.kind,
                "primes_above": [P.to_json() for P in self.primes_above]}


def splitting_type(K, p):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    k = kronecker(K.D, p)
    if k == -1:
        return SplittingReport(p, INERT, (from_generators(K, [p]),))
    # roots of x^2 - t x + n mod p, the minimal polynomial of w
    roots = [r for r in range(p) if (r * r - K.t * r + K.n) % p == 0]
    primes = tuple(from_generators(K, [p, K.w - r]) for r in roots)
    if k == 0:
        return SplittingReport(p, RAMIFIED, primes[:1])
    return SplittingReport(p, SPLIT, primes)


def ramified_set(K):
    return set(prime_factors(K.D))


def _primes(bound):
    return [p for p in range(2, bound + 1) if is_prime(p)]


@dataclass(frozen=True)
class Witness:
    p1: object
    p2: object
    q1: object
    q2: object
    module_principal: bool

    @property
    def elements(self):
        return (self.p1, self.p2, self.q1, self.q2)

    def to_json(self):
        return {
            "d": self.p1.field.d,
            "p1": str(self.p1), "p2": str(self.p2),
            "q1": str(self.q1), "q2": str(self.q2),
            "coords": [[str(x.a), str(x.b)] for x in self.elements],
            "norms": [str(x.norm()) for x in self.elements],
            "module_principal": self.module_principal,
            "verified": verify_witness(self),
        }


def non_associate(x, y):
    return not (x / y).is_unit()


def verify_witness(w):
    xs = w.elements
    if w.p1 * w.p2 != w.q1 * w.q2:
        return False
    if not all(x.is_integral() and is_irreducible(x) for x in xs):
        return False
    return all(non_associate(xs[i], xs[j]) for i in range(4) for j in range(i + 1, 4))


def nonufd_witness(K, bound=WITNESS_PRIME_BOUND):
    """Irreducibles p1, p2, q1, q2, pairwise non-associate, p1 p2 = q1 q2.

    Take rational primes p < q with non-principal primes P | p and Q | q
    such that PQ is principal. Then p, q are irreducible (no element has
    norm +-p or +-q), PQ = (alpha) gives an irreducible of norm +-pq, and
    pq = alpha * (pq/alpha). Returns None if nothing is found below bound.
    """
    if class_group(K).h == 1:
        return None
    candidates = []
    for p in _primes(bound):
        for P in splitting_type(K, p).primes_above:
            if P.norm() == p and is_principal(P) is None:
                candidates.append((p, P))
    for i, (p, P) in enumerate(candidates):
        for q, Q in candidates[i + 1:]:
            if q == p:
                continue
            alpha = is_principal(mul(P, Q))
            if alpha is None:
                continue
            q1 = normalize_associate(alpha)
            q2 = K(p * q) / q1
            p1, p2 = K(p), K(q)
            M = from_generators(K, [1 / p1, 1 / q1])
            w = Witness(p1, p2, q1, q2, is_principal(M) is not None)
            if verify_witness(w):
                return w
    return None


def check_ufd_iff(K):
    """O_K is a UFD iff Cl(K) = 1, with both sides computed independently:
    a witness search on elements and the class number."""
    h = class_group(K).h
    w = nonufd_witness(K)
    holds = (w is None) == (h == 1)
    witness = {"h": h, "nonufd_witness": w.to_json() if w else None}
    return ClaimOutcome("UFD-IFF", K.d, HOLDS if holds else FAILS, witness)


def case_i_unramified(K, q):
    """For K ramified only at the odd prime p, q != p is unramified."""
    return splitting_type(K, q).kind != RAMIFIED

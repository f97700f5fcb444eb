"""Ideal class groups of quadratic fields.

Classes are found by listing every integral ideal of norm at most the
Minkowski bound and sorting them into equivalence classes with the
principality test from ``ideals``. The group law is read off a Cayley
table on those representatives and the structure comes from the Smith
form of the resulting relation matrix.
"""
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .errors import ConsistencyError
from .ideals import FractionalIdeal, canonical, dual, is_principal, mul
from .lattice import smith_invariants
from .outcome import FAILS, HOLDS, ClaimOutcome
from .quadfield import QuadraticField, is_squarefree, prime_factors

# 3.141592653589793 < pi < 3.141592653589794
PI_LOW = Fraction(3141592653589793, 10**15)
PI_HIGH = Fraction(3141592653589794, 10**15)
_SCALE = 10**15


def _sqrt_upper(m):
    """Rational r with sqrt(m) <= r < sqrt(m) + 1e-15."""
    return Fraction(isqrt(m * _SCALE * _SCALE) + 1, _SCALE)


def minkowski_bound(K):
    """Exact rational upper bound for the Minkowski constant of K,
    (2/pi) sqrt|D| or sqrt(D)/2, off by less than 1e-12."""
    if K.D < 0:
        return 2 * _sqrt_upper(-K.D) / PI_LOW
    return _sqrt_upper(K.D) / 2


def integral_ideals_up_to(K, bound):
    """Every integral ideal of norm <= bound, sorted by (norm, a, b, c)."""
    out = []
    bound = int(bound)
    for c in range(1, isqrt(bound) + 1):
        for A in range(1, bound // (c * c) + 1):
            for B in range(A):
                # [A, B + w] is an ideal iff A | N(B + w)
                if (B * B + B * K.t + K.n) % A == 0:
                    out.append(canonical(K, c * A, c * B, c, 1))
    out.sort(key=lambda I: (I.norm(), I.a, I.b, I.c))
    return out


class FiniteAbelianGroup:
    """A finite abelian group given by its Cayley table on 0..h-1, with 0
    the identity."""

    def __init__(self, table):
        self.table = table
        self.h = len(table)

    def mul(self, i, j):
        return self.table[i][j]

    def power(self, i, k):
        r = 0
        for _ in range(k):
            r = self.table[r][i]
        return r

    def order(self, i):
        k, r = 1, i
        while r != 0:
            r = self.table[r][i]
            k += 1
        return k

    def closure(self, gens):
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def generating_set(self):
        gens, span = [], {0}
        for i in range(self.h):
            if i not in span:
                gens.append(i)
                span = self.closure(gens)
        return gens

    def invariants(self, extra_relations=()):
        """Elementary divisors (all > 1) of the group modulo the subgroup
        generated by ``extra_relations``."""
        gens = self.generating_set()
        if not gens:
            return []
        # word[i]: exponent vector over gens of some path 0 -> i
        word = {0: [0] * len(gens)}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for k, g in enumerate(gens):
                    y = self.table[x][g]
                    if y not in word:
                        w = list(word[x])
                        w[k] += 1
                        word[y] = w
                        nxt.append(y)
            frontier = nxt
        rows = []
        for x in range(self.h):
            for k, g in enumerate(gens):
                r = list(word[x])
                r[k] += 1
                rows.append([u - v for u, v in zip(r, word[self.table[x][g]])])
        rows.extend(list(word[e]) for e in extra_relations)
        return [d for d in smith_invariants(rows) if d != 1]

    def generators_for(self, divisors, elements=None):
        """Elements g_1..g_k with ord(g_i) = divisors[i] generating the
        group (or the given element list); chosen depth-first in index order."""
        elements = list(range(self.h)) if elements is None else elements
        target = 1
        for d in divisors:
            target *= d
        orders = {i: self.order(i) for i in elements}

        def search(chosen, k):
            if k < 0:
                return chosen if len(self.closure(chosen)) == target else None
            span = self.closure(chosen)
            size = len(span)
            for i in elements:
                if orders[i] != divisors[k]:
                    continue
                if len(self.closure(chosen + [i])) != size * divisors[k]:
                    continue
                found = search(chosen + [i], k - 1)
                if found is not None:
                    return found
            return None

        found = search([], len(divisors) - 1)
        return list(reversed(found)) if found else []


@dataclass
class ClassGroup:
    field: QuadraticField
    h: int
    divisors: list
    reps: list
    generators: list
    table: list = dc_field(repr=False, default_factory=list)
    minkowski: Fraction = Fraction(0)

    def group(self):
        return FiniteAbelianGroup(self.table)

    def class_index(self, I):
        """Index of the representative equivalent to I."""
        for k, R in enumerate(self.reps):
            if is_principal(mul(I, dual(R))) is not None:
                return k
        raise LookupError(f"{I} matches no class representative")

    def structure_str(self):
        if not self.divisors:
            return "trivial"
        return " x ".join(f"C{d}" for d in self.divisors)

    def to_json(self):
        return {
            "d": self.field.d,
            "D": self.field.D,
            "h": self.h,
            "divisors": list(self.divisors),
            "reps": [R.to_json() for R in self.reps],
            "generators": [G.to_json() for G in self.generators],
            "minkowski": f"{self.minkowski.numerator}/{self.minkowski.denominator}",
        }


def _classify(K, ideals):
    reps = []
    for I in ideals:
        if all(is_principal(mul(I, dual(R))) is None for R in reps):
            reps.append(I)
    return reps


@lru_cache(maxsize=None)
def _class_group(d):
    K = QuadraticField(d)
    bound = minkowski_bound(K)
    candidates = integral_ideals_up_to(K, bound.__floor__())
    reps = _classify(K, candidates)
    if reps[0] != FractionalIdeal.unit(K):
        raise ConsistencyError("unit ideal must represent the trivial class")
    h = len(reps)
    inv = [dual(R) for R in reps]

    def index_of(I):
        for k in range(h):
            if is_principal(mul(I, inv[k])) is not None:
                return k
        raise ConsistencyError(f"{I} is in no known class")

    table = [[0] * h for _ in range(h)]
    for i in range(h):
        for j in range(i, h):
            table[i][j] = table[j][i] = index_of(mul(reps[i], reps[j]))
    G = FiniteAbelianGroup(table)
    divs = G.invariants()
    gens = G.generators_for(divs)
    return ClassGroup(K, h, divs, reps, [reps[g] for g in gens], table, bound)


def class_group(K):
    """Cl(K) with its class number, elementary divisors and representatives."""
    return _class_group(K.d)


def class_number(K):
    return class_group(K).h


def primes_above_set(K, S):
    from .splitting import splitting_type
    out = []
    for p in sorted(S):
        out.extend(splitting_type(K, p).primes_above)
    return out


def s_class_group(K, S):
    """Cl(K) modulo the subgroup generated by classes of primes above S."""
    C = class_group(K)
    G = C.group()
    sub_gens = sorted({C.class_index(P) for P in primes_above_set(K, S)})
    H = G.closure(sub_gens)
    # cosets, each labelled by its smallest member
    coset_of = {}
    labels = []
    for i in range(C.h):
        if i in coset_of:
            continue
        members = {G.mul(i, x) for x in H}
        for x in members:
            coset_of[x] = len(labels)
        labels.append(i)
    q = len(labels)
    qtable = [[coset_of[G.mul(labels[i], labels[j])] for j in range(q)] for i in range(q)]
    Q = FiniteAbelianGroup(qtable)
    divs = G.invariants(extra_relations=sub_gens)
    if q != _prod(divs):
        raise ConsistencyError("Smith form disagrees with the coset count")
    gens = Q.generators_for(divs)
    return ClassGroup(K, q, divs, [C.reps[i] for i in labels],
                      [C.reps[labels[g]] for g in gens], qtable, C.minkowski)


def _prod(xs):
    r = 1
    for x in xs:
        r *= x
    return r


def reduced_forms(D):
    """Reduced primitive positive definite forms (a, b, c) of discriminant
    D < 0: |b| <= a <= c, b >= 0 when |b| = a or a = c."""
    out = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if _gcd3(a, b, c) != 1:
                continue
            out.append((a, b, c))
        a += 1
    return out


def _gcd3(a, b, c):
    return gcd(gcd(a, b), c)


def fundamental_discriminants(lo, hi):
    """Fundamental discriminants D with lo < D < hi, D != 0, 1."""
    out = []
    for D in range(lo + 1, hi):
        if D in (0, 1):
            continue
        if D % 4 == 1:
            d = D
        elif D % 4 == 0 and (D // 4) % 4 in (2, 3):
            d = D // 4
        else:
            continue
        if is_squarefree(d):
            out.append(D)
    return out


def d_from_discriminant(D):
    return D if D % 4 == 1 else D // 4


def ramified_primes(K):
    return sorted(prime_factors(K.D))


def check_lemma_1_2(K):
    """Every class is supported on ramified primes, i.e. the class group
    of O_K with the ramified primes inverted is trivial."""
    S = ramified_primes(K)
    Q = s_class_group(K, S)
    if Q.h == 1:
        return ClaimOutcome("L1.2", K.d, HOLDS, {"ramified": S, "s_class_number": 1})
    C = class_group(K)
    G = C.group()
    H = G.closure(sorted({C.class_index(P) for P in primes_above_set(K, S)}))
    # the first representative outside the ramified subgroup
    k = next(i for i in range(C.h) if i not in H)
    # order of the witness modulo the ramified subgroup
    m, r = 1, k
    while r not in H:
        r = G.mul(r, k)
        m += 1
    return ClaimOutcome("L1.2", K.d, FAILS, {
        "ramified": S,
        "s_class_number": Q.h,
        "ideal": C.reps[k].to_json(),
        "order": m,
    })


def verify_lemma_1_2_witness(K, witness):
    """Re-check a FAILS witness: the ideal's class must lie outside the
    subgroup generated by primes above the ramified set, with the stated
    order modulo that subgroup."""
    from .ideals import from_json, power
    I = from_json(witness["ideal"])
    primes = primes_above_set(K, witness["ramified"])
    C = class_group(K)
    H = C.group().closure(sorted({C.class_index(P) for P in primes}))
    cls = C.class_index(I)
    if cls in H:
        return False
    m = witness["order"]
    return C.class_index(power(I, m)) in H and all(
        C.class_index(power(I, j)) not in H for j in range(1, m))


def check_finiteness(K):
    """Cl(K) is finite: every class has an integral ideal of norm at most
    the Minkowski bound, and there are finitely many such ideals."""
    C = class_group(K)
    ok = all(R.norm() <= C.minkowski for R in C.reps)
    return ClaimOutcome("L1.3", K.d, HOLDS if ok else FAILS, {
        "h": C.h,
        "minkowski": f"{C.minkowski.numerator}/{C.minkowski.denominator}",
        "max_rep_norm": str(max(R.norm() for R in C.reps)),
    })

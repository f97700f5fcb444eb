import itertools
from fractions import Fraction
from math import gcd

from hypothesis import given, strategies as st

from quadbench.lattice import det, hnf, in_lattice, smith_invariants, solve_rational, xgcd

ints = st.integers(-30, 30)


def rows(n_rows, n_cols):
    return st.lists(st.lists(ints, min_size=n_cols, max_size=n_cols), min_size=n_rows, max_size=n_rows)


def is_hnf(H):
    last = -1
    for r in H:
        piv = next(j for j, v in enumerate(r) if v)
        if piv <= last or r[piv] <= 0:
            return False
        for above in H[: H.index(r)]:
            if not 0 <= above[piv] < r[piv]:
                return False
        last = piv
    return True


@given(ints, ints)
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert g == gcd(a, b) and a * x + b * y == g


def test_hnf_frozen():
    assert hnf([[4, 2], [2, 6]]) == [[2, 6], [0, 10]]
    assert hnf([[0, 0], [3, 0]]) == [[3, 0]]
    assert hnf([]) == []


@given(rows(3, 2))
def test_hnf_shape(A):
    H = hnf(A)
    assert is_hnf(H)
    for r in A:
        assert in_lattice(H, r)
    for r in H:
        assert in_lattice(hnf(A) or [[0, 0]], r)


@given(rows(3, 3), st.permutations(range(3)), st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), ints), max_size=6))
def test_hnf_invariant_under_unimodular_changes(A, perm, ops):
    B = [list(A[i]) for i in perm]
    for i, j, k in ops:
        if i != j:
            B[i] = [u + k * v for u, v in zip(B[i], B[j])]
    assert hnf(A) == hnf(B)


def test_det():
    assert det([[2, 1], [1, 1]]) == 1
    assert det([[Fraction(1, 2), 0], [0, 4]]) == 2
    assert det([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 0


@given(rows(2, 2), st.lists(ints, min_size=2, max_size=2))
def test_solve_rational(B, v):
    if det(B) == 0:
        return
    c = solve_rational(B, v)
    assert [sum(ci * B[i][k] for i, ci in enumerate(c)) for k in range(2)] == v


def minors_gcd(M, k):
    g = 0
    n, m = len(M), len(M[0])
    for rs in itertools.combinations(range(n), k):
        for cs in itertools.combinations(range(m), k):
            g = gcd(g, int(det([[M[r][c] for c in cs] for r in rs])))
    return g


@given(rows(3, 3))
def test_smith_matches_determinantal_divisors(M):
    # oracle: d_k = gcd of k x k minors, invariant factors d_k / d_{k-1}
    inv = smith_invariants(M)
    expected = []
    prev = 1
    for k in range(1, 4):
        g = minors_gcd(M, k)
        if g == 0:
            break
        expected.append(g // prev)
        prev = g
    got = [x for x in inv if x != 0]
    assert [x for x in got] == [x for x in expected]
    for a, b in zip(got, got[1:]):
        assert b % a == 0

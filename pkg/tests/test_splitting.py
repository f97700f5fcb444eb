import pytest

from quadbench.errors import NotPrime
from quadbench.ideals import from_generators, is_principal
from quadbench.outcome import HOLDS
from quadbench.quadfield import QuadraticField, is_prime
from quadbench.splitting import (INERT, RAMIFIED, SPLIT, Witness, case_i_unramified, check_ufd_iff,
                                 kronecker, nonufd_witness, ramified_set, splitting_type, verify_witness)


def brute_kind(K, p):
    """Count roots of the minimal polynomial of w mod p, and whether p | D."""
    if K.D % p == 0:
        return RAMIFIED
    if p == 2:
        roots = [r for r in range(2) if (r * r - K.t * r + K.n) % 2 == 0]
    else:
        roots = [r for r in range(p) if (r * r - K.t * r + K.n) % p == 0]
    return SPLIT if len(roots) == 2 else INERT


@pytest.mark.parametrize("d", [-1, -2, -3, -5, -7, -23, 2, 3, 5, 10, 13, 17])
def test_kinds_and_products(d):
    K = QuadraticField(d)
    for p in (q for q in range(2, 60) if is_prime(q)):
        rep = splitting_type(K, p)
        assert rep.kind == brute_kind(K, p)
        assert rep.product() == from_generators(K, [K(p)])
        assert all(P.norm() in (p, p * p) for P in rep.primes_above)
        sign = {SPLIT: 1, INERT: -1, RAMIFIED: 0}[rep.kind]
        assert kronecker(K.D, p) == sign


def test_frozen_splitting():
    K = QuadraticField(-5)
    assert str(splitting_type(K, 2).primes_above[0]) == "(2, 1+√-5)"
    assert splitting_type(K, 3).kind == SPLIT
    assert splitting_type(K, 7).kind == SPLIT
    assert splitting_type(K, 11).kind == INERT
    assert ramified_set(K) == {2, 5}
    assert ramified_set(QuadraticField(-23)) == {23}
    with pytest.raises(NotPrime):
        splitting_type(K, 9)


def test_case_i_unramified():
    K = QuadraticField(-23)
    assert all(case_i_unramified(K, q) for q in (2, 3, 5, 7, 29))
    assert not case_i_unramified(K, 23)


@pytest.mark.parametrize("d,expected", [
    (-5, ("2", "3", "1+√-5", "1-√-5")),
    (-23, ("2", "3", "(1+√-23)/2", "(1-√-23)/2")),
    (10, ("2", "3", "2+√10", "-2+√10")),
])
def test_witness_frozen(d, expected):
    w = nonufd_witness(QuadraticField(d))
    assert {str(x) for x in w.elements} == set(expected)
    assert verify_witness(w)
    assert w.p1 * w.p2 == w.q1 * w.q2
    assert w.to_json()["verified"]


@pytest.mark.parametrize("d", [-1, -2, -3, -7, -11, 2, 3, 5, 13])
def test_no_witness_for_class_number_one(d):
    assert nonufd_witness(QuadraticField(d)) is None


def test_tampered_witness_rejected():
    K = QuadraticField(-5)
    w = nonufd_witness(K)
    assert not verify_witness(Witness(w.p1, w.p2, w.q1, w.q1, False))
    assert not verify_witness(Witness(K(2), K(3), K(6), K(1), False))
    # product -6 instead of 6
    assert not verify_witness(Witness(K(2), K(3), K(1, 1), -K(1, -1), False))
    assert not verify_witness(Witness(K(-2), K(-3), K(2), K(3), False))


def test_witness_module_principality():
    w = nonufd_witness(QuadraticField(-5))
    K = w.p1.field
    M = from_generators(K, [1 / w.p1, 1 / w.q1])
    assert w.module_principal == (is_principal(M) is not None)


@pytest.mark.parametrize("d", [-1, -5, -14, -21, -23, 10, 79])
def test_ufd_iff_holds(d):
    assert check_ufd_iff(QuadraticField(d)).status == HOLDS

import pytest
from hypothesis import given, settings, strategies as st

from quadbench.capitulation import (FOUND, UNDECIDED, Module, build_order, capitulate, certificate_from_json,
                                    composite_report, extend_ideal, find_capitulation_generator, flip,
                                    genuine_degree, l_pow, monogenic_blocks, to_vector, verify_by_hnf,
                                    verify_certificate)
from quadbench.classgroup import class_group
from quadbench.errors import FieldMismatch, TrivialClass
from quadbench.ideals import from_generators
from quadbench.outcome import HOLDS
from quadbench.quadfield import QuadraticField


def P(d, *gens):
    K = QuadraticField(d)
    return from_generators(K, [K(*g) if isinstance(g, tuple) else K(g) for g in gens])


NONTRIVIAL = [(d, k) for d in (-5, -6, -10, -14, -15, -21, -23, -26, -30, -47, 10, 15, 79)
              for k in range(1, min(class_group(QuadraticField(d)).h, 5))]


def test_minus_five_certificate_is_x():
    I = P(-5, 2, (1, 1))
    cert = capitulate(I.field, I)
    assert cert.status == FOUND and cert.checked
    assert cert.order.n == 2
    assert cert.gamma == cert.order.x()
    assert str(cert.order.alpha) == "2"


def test_order_is_ring_and_degree_genuine():
    for d in (-5, -23, -14, 10):
        K = QuadraticField(d)
        for R in class_group(K).reps[1:]:
            order = build_order(K, R)
            assert order.is_closed()
            assert genuine_degree(order)


@pytest.mark.parametrize("d,k", NONTRIVIAL)
def test_every_class_capitulates(d, k):
    K = QuadraticField(d)
    R = class_group(K).reps[k]
    cert = capitulate(K, R)
    assert cert.status == FOUND
    assert verify_certificate(cert) and verify_by_hnf(cert)


@pytest.mark.parametrize("d,k", NONTRIVIAL[:8])
def test_gamma_power_generates_alpha(d, k):
    # gamma^n O = I^n O = alpha O
    K = QuadraticField(d)
    R = class_group(K).reps[k]
    cert = capitulate(K, R)
    order = cert.order
    gn = l_pow(cert.gamma, order.n, order.alpha)
    assert order.principal(gn) == order.principal(order.embed(order.alpha))


def test_flip_preserves_certificates():
    for d in (-5, -6, -10, 10, 15):
        K = QuadraticField(d)
        cert = capitulate(K, class_group(K).reps[1])
        assert cert.order.n == 2
        f = flip(cert.order, cert)
        # x -> -x is the automorphism of the order fixing K
        assert verify_certificate(f) and verify_by_hnf(f)


def test_monogenic_order_is_undecided_for_minus_five():
    I = P(-5, 2, (1, 1))
    order = build_order(I.field, I, blocks=monogenic_blocks)
    assert find_capitulation_generator(order, I, max_l1=4).status == UNDECIDED


@settings(max_examples=20)
@given(st.sampled_from([(-5, 1), (-23, 1), (-14, 1), (-21, 2), (-47, 3)]), st.integers(1, 4), st.integers(0, 2))
def test_undecided_is_monotone(case, l1, extra):
    """FOUND at a smaller search box stays FOUND at a larger one; UNDECIDED at
    a larger box implies UNDECIDED at a smaller one."""
    d, k = case
    K = QuadraticField(d)
    R = class_group(K).reps[k]
    order = build_order(K, R)
    small = find_capitulation_generator(order, R, max_l1=l1).status
    big = find_capitulation_generator(order, R, max_l1=l1 + extra).status
    if small == FOUND:
        assert big == FOUND
    if big == UNDECIDED:
        assert small == UNDECIDED


def test_verify_rejects_bad_gamma():
    I = P(-5, 2, (1, 1))
    cert = capitulate(I.field, I)
    K = I.field
    for bad in [(K(2), K(0)), (K(1), K(0)), (K(0), K(2))]:
        cert.gamma = bad
        assert not (verify_certificate(cert) and verify_by_hnf(cert))


def test_json_round_trip():
    I = P(-23, 2, (0, 1))
    cert = capitulate(I.field, I)
    again = certificate_from_json(cert.to_json())
    assert again.checked and again.gamma == cert.gamma


def test_extend_ideal_index():
    I = P(-23, 2, (0, 1))
    order = build_order(I.field, I)
    IO = extend_ideal(order, I)
    assert IO.volume() / order.lattice().volume() == 8  # N(I)^n = 2^3


def test_errors():
    K = QuadraticField(-5)
    with pytest.raises(TrivialClass):
        build_order(K, P(-5, 2))
    I = P(-5, 2, (1, 1))
    order = build_order(K, I)
    with pytest.raises(FieldMismatch):
        find_capitulation_generator(order, P(-6, 2, (0, 1)))


@pytest.mark.parametrize("d", [-5, -14, -21, -23, -30, -47, 10, 82])
def test_composite_degrees(d):
    rep = composite_report(QuadraticField(d))
    assert rep.degrees_match and rep.all_found


def test_module_span_canonical():
    a = Module.span([[1, 0], [0, 2]])
    b = Module.span([[1, 2], [1, 0], [2, 2]])
    assert a == b


def test_extend_trivial_and_principal():
    I = P(-5, 2, (1, 1))
    K = I.field
    order = build_order(K, I)
    assert extend_ideal(order, P(-5, 1)) == order.lattice()
    g = K(3, 1)
    assert extend_ideal(order, P(-5, (3, 1))) == order.principal(order.embed(g))
    assert extend_ideal(order, I).volume() / order.lattice().volume() == 4


def test_principal_input_short_circuits():
    I = P(-5, 2, (1, 1))
    order = build_order(I.field, I)
    cert = find_capitulation_generator(order, P(-5, (1, 1)))
    assert cert.status == FOUND and cert.checked

import random

import pytest

from lrckit.field import (DivideByZero, NotPrime, ReducibleModulus,
                          field_make, field_of_size, prime_power,
                          subfield_embedding)

FIELDS = [field_make(2), field_make(3), field_make(7), field_make(2, 4),
          field_make(3, 2), field_make(2, 8), field_make(13)]


def test_prime_field_trivia():
    gf2 = field_make(2)
    assert gf2.q == 2 and gf2.modulus == ()
    assert gf2.add(1, 1) == 0
    gf7 = field_make(7)
    assert gf7.mul(3, 5) == 1


def test_gf16_default_modulus_and_generator_relation():
    gf = field_make(2, 4)
    # x^4 + x + 1, so the class of x satisfies alpha^4 = alpha + 1
    assert list(gf.modulus) == [1, 1, 0, 0, 1]
    alpha = 2
    assert gf.pow(alpha, 4) == gf.add(alpha, 1) == 0b0011


def test_explicit_modulus_matches_default():
    gf = field_make(2, 4, [1, 1, 0, 0, 1])
    assert gf == field_make(2, 4)


def test_gf9_multiplicative_group():
    gf = field_make(3, 2)
    orders = sorted(gf.order(a) for a in gf.nonzero_elements())
    assert max(orders) == 8
    assert orders.count(8) == 4  # phi(8) generators


def test_not_prime_rejected():
    with pytest.raises(NotPrime):
        field_make(6)


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulus):
        field_make(2, 4, [1, 0, 0, 0, 1])  # x^4 + 1 = (x+1)^4


def test_zero_inverse_raises():
    with pytest.raises(DivideByZero):
        field_make(5).inv(0)


@pytest.mark.parametrize("gf", FIELDS, ids=str)
def test_field_axioms_randomized(gf):
    rng = random.Random(1234)
    trials = 10_000
    q = gf.q
    for _ in range(trials):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert gf.add(a, b) == gf.add(b, a)
        assert gf.mul(a, b) == gf.mul(b, a)
        assert gf.add(gf.add(a, b), c) == gf.add(a, gf.add(b, c))
        assert gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c))
        assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))
        if a:
            assert gf.mul(a, gf.inv(a)) == 1
        # Frobenius endomorphism
        assert gf.pow(gf.add(a, b), gf.p) == gf.add(gf.pow(a, gf.p),
                                                    gf.pow(b, gf.p))


@pytest.mark.parametrize("gf", [field_make(2, 2), field_make(3, 2),
                                field_make(5)], ids=str)
def test_field_axioms_exhaustive_small(gf):
    els = list(gf.elements())
    for a in els:
        assert gf.add(a, 0) == a and gf.mul(a, 1) == a and gf.mul(a, 0) == 0
        assert gf.add(a, gf.neg(a)) == 0
        for b in els:
            assert gf.sub(a, b) == gf.add(a, gf.neg(b))


def test_primitive_generates():
    for gf in FIELDS:
        seen = set()
        x = 1
        for _ in range(gf.q - 1):
            seen.add(x)
            x = gf.mul(x, gf.primitive)
        assert len(seen) == gf.q - 1


def test_prime_power_detection():
    assert prime_power(16) == (2, 4)
    assert prime_power(13) == (13, 1)
    assert prime_power(12) is None
    assert field_of_size(9).q == 9


def test_subfield_embedding_homomorphism():
    sub, big = field_make(2, 4), field_make(2, 12)
    emb = subfield_embedding(sub, big)
    assert emb[0] == 0 and emb[1] == 1
    for a in range(16):
        for b in range(16):
            assert emb[sub.add(a, b)] == big.add(emb[a], emb[b])
            assert emb[sub.mul(a, b)] == big.mul(emb[a], emb[b])
    assert len(set(emb)) == 16


def test_poly_eval_horner():
    gf = field_make(7)
    # 3 + 2x + x^2 at x = 4 -> 3 + 8 + 16 = 27 = 6 mod 7
    assert gf.poly_eval([3, 2, 1], 4) == 6

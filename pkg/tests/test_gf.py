"""Finite-field arithmetic.

Moduli and product values were independently derived by
tools/oracle_fields.py (trial-division irreducibility, hand polynomial
products).
"""

import pytest

import quiverfold as qf
from quiverfold.errors import DegreeTooLarge, NotPrime, NotSubfield


def test_prime_field():
    f = qf.make_field(5)
    assert f.spec == "5"
    assert f.add(3, 4) == 2
    assert f.mul(3, 4) == 2
    assert f.inv(2) == 3
    assert f.neg(2) == 3
    assert f.sub(1, 3) == 3
    assert list(f.elements()) == [0, 1, 2, 3, 4]


def test_canonical_moduli():
    # tail coefficients (constant term first) of the canonical monic modulus
    assert qf.make_field(2, 2).modulus == (1, 1)
    assert qf.make_field(2, 3).modulus == (1, 0, 1)
    assert qf.make_field(3, 2).modulus == (1, 0)
    assert qf.make_field(5, 2).modulus == (1, 1)
    assert qf.make_field(2, 4).modulus == (1, 0, 0, 1)


def test_gf4_products():
    f4 = qf.make_field(2, 2)
    assert f4.mul(2, 2) == 3
    assert f4.mul(2, 3) == 1
    assert f4.mul(3, 3) == 2
    assert f4.add(2, 3) == 1
    assert f4.inv(2) == 3


def test_gf9_products():
    f9 = qf.make_field(3, 2)
    assert f9.mul(3, 3) == 2
    assert f9.spec == "3^2"


def test_field_factory_is_cached():
    assert qf.make_field(2, 2) is qf.make_field(2, 2)
    assert qf.field_from_spec("2^2") is qf.make_field(2, 2)
    assert qf.parse_field_spec(" 7 ") == (7, 1)
    assert qf.parse_field_spec("3^2") == (3, 2)


def test_field_validation():
    with pytest.raises(NotPrime):
        qf.make_field(4)
    with pytest.raises(NotPrime):
        qf.make_field(1)
    with pytest.raises(DegreeTooLarge):
        qf.make_field(2, 99)


def test_frobenius():
    f4 = qf.make_field(2, 2)
    for x in f4.elements():
        assert f4.frobenius(x) == f4.mul(x, x)
        assert qf.frobenius(f4, 2, x) == x
    f9 = qf.make_field(3, 2)
    for x in f9.elements():
        assert f9.frobenius(x) == f9.pow_(x, 3)


def test_generator():
    for p, m in [(2, 1), (3, 1), (2, 2), (3, 2), (5, 1)]:
        f = qf.make_field(p, m)
        g = f.generator()
        seen = {f.pow_(g, k) for k in range(p**m - 1)}
        assert seen == set(range(1, p**m))


def test_solve_univariate():
    F7 = qf.make_field(7)
    # t^2 - t + 1: coefficients constant first
    assert qf.solve_univariate(F7, (1, -1 % 7, 1)) == (3, 5)
    F5 = qf.make_field(5)
    assert qf.solve_univariate(F5, (0, -2 % 5, 1)) == (0, 2)
    F4 = qf.make_field(2, 2)
    # t^2 + t + 1 splits over GF(4) with roots 2 and 3
    assert qf.solve_univariate(F4, (1, 1, 1)) == (2, 3)


def test_subfield_embedding():
    F2, F4 = qf.make_field(2), qf.make_field(2, 2)
    emb = qf.subfield_embedding(F2, F4)
    assert emb(0) == 0 and emb(1) == 1
    F16 = qf.make_field(2, 4)
    emb2 = qf.subfield_embedding(F4, F16)
    xs = [emb2(x) for x in F4.elements()]
    assert len(set(xs)) == 4
    # homomorphism property
    for a in F4.elements():
        for b in F4.elements():
            assert emb2(F4.mul(a, b)) == F16.mul(emb2(a), emb2(b))
            assert emb2(F4.add(a, b)) == F16.add(emb2(a), emb2(b))
    with pytest.raises(NotSubfield):
        qf.subfield_embedding(F4, qf.make_field(2, 3))
    with pytest.raises(NotSubfield):
        qf.subfield_embedding(qf.make_field(3), F4)


def test_bulk_tables():
    f4 = qf.make_field(2, 2)
    add, mul = f4.tables()
    for a in range(4):
        for b in range(4):
            assert add[a, b] == f4.add(a, b)
            assert mul[a, b] == f4.mul(a, b)

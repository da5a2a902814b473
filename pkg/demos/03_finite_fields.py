#!/usr/bin/env python3
# Small finite fields with integer-coded elements.  Element i of GF(p^m)
# stands for the polynomial whose base-p digits are its coefficients, so
# arithmetic stays hashable and arrays stay dtype=int.

import quiverfold as qf

f4 = qf.make_field(2, 2)
print("field:", f4.spec, "with", f4.q, "elements")
print("modulus coefficients:", f4.modulus)

# 2 and 3 are the two elements outside the prime field.
a, b = 2, 3
print(f"{a} + {b} =", f4.add(a, b))
print(f"{a} * {b} =", f4.mul(a, b))
print(f"{a}^-1 =", f4.inv(a))
print("coeffs of 3:", f4.coeffs(3), "and back:", f4.element(f4.coeffs(3)))

g = f4.generator()
print("multiplicative generator:", g)
print("its powers:", [f4.pow_(g, e) for e in range(4)])

# Frobenius x -> x^p permutes the field and fixes exactly the prime field.
print("frobenius orbit of 2:", [qf.frobenius(f4, s, 2) for s in range(3)])

# Field specs are "p" or "p^m" strings; the extension degree is explicit.
print("parse '3^2':", qf.parse_field_spec("3^2"))
print("field_from_spec('3^2').q =", qf.field_from_spec("3^2").q)

# Subfield embeddings are computed by solving for a root of the small
# modulus inside the big field.
f16 = qf.make_field(2, 4)
emb = qf.subfield_embedding(f4, f16)
img = [emb(x) for x in f4.elements()]
print("GF(4) inside GF(16):", img)
# the image is closed under multiplication
assert emb(f4.mul(2, 3)) == f16.mul(emb(2), emb(3))

# Polynomial solving, low-degree and exhaustive by design.
roots = qf.solve_univariate(f4, [1, 1, 1])  # x^2 + x + 1
print("roots of x^2 + x + 1 over GF(4):", roots)

# tables() exposes dense numpy addition and multiplication tables for the
# batch kernels.
add_t, mul_t = f4.tables()
print("addition table:")
print(add_t)
print("multiplication table:")
print(mul_t)

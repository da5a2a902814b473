#!/usr/bin/env python3
"""Representations of a quiver over a small finite field: hom spaces,
decomposition into indecomposables, reflection functors, twists."""

import quiverfold as qf

a2 = qf.validate_quiver(["u", "v"], [("e", "u", "v")])
f3 = qf.make_field(3)

# A representation assigns a dimension to each vertex and one matrix
# (target_dim rows, source_dim columns) to each arrow.
x = qf.make_representation(a2, f3, (1, 1), {"e": ((1,),)})
y = qf.make_representation(a2, f3, (1, 1), {"e": ((0,),)})
print("x dims:", x.dims, " y dims:", y.dims)
print("x is indecomposable:", qf.is_indecomposable(x))
print("y is indecomposable:", qf.is_indecomposable(y))
print("x iso y:", qf.is_isomorphic(x, y))

# y has a zero arrow so it splits as S_u + S_v.
parts = qf.decompose(y)
print("y decomposes into", [p.dims for p in parts])

su = qf.simple_representation(a2, f3, "u")
print("first part is S_u:", qf.is_isomorphic(parts[0], su) or qf.is_isomorphic(parts[1], su))

# Hom and Ext dimensions satisfy the Euler form identity
# dim Hom(x, y) - dim Ext(x, y) = <dim x, dim y>.
h = len(qf.hom_space(x, y).basis)
e = qf.ext_dim(x, y)
print(f"dim Hom(x, y) = {h}, dim Ext(x, y) = {e}, euler = {qf.euler_form(a2, x.dims, y.dims)}")

# end_ring gives a basis of the endomorphism algebra; an indecomposable
# has a local one (here one-dimensional).
print("dim End(x):", len(qf.end_ring(x).basis))

# Reflection functors at a sink or source realise the simple reflections
# on dimension vectors, away from the simple at that vertex.
lat = qf.quiver_lattice(a2)
plus = qf.reflection_functor(x, "v", "+")
print("C_v^+ x has dims", plus.dims, "and reflect gives", qf.reflect(lat, "v", x.dims))
sv = qf.simple_representation(a2, f3, "v")
print("C_v^+ kills S_v:", qf.reflection_functor(sv, "v", "+").is_zero())

# Twisting by a quiver automorphism permutes the vertex spaces.
line, flip = qf.build_a3_flip()
z = qf.make_representation(line, f3, (1, 0, 0))
tz = qf.twist_auto(flip, z)
print("twist moves dims", z.dims, "->", tz.dims)

# Twisting by Frobenius raises all matrix entries to the p-th power; over
# the prime field it is the identity, over GF(9) usually not.
f9 = qf.make_field(3, 2)
w = qf.make_representation(a2, f9, (1, 1), {"e": ((3,),)})
fw = qf.twist_frobenius(w)
print("frobenius twist entry:", w.matrices[0][0][0], "->", fw.matrices[0][0][0])
print("but the twist is isomorphic to w:", qf.is_isomorphic(w, fw))

# Direct sums in both flavours.
both = qf.direct_sum(x, y)
print("x + y dims:", both.dims, "summands:", [p.dims for p in qf.decompose(both)])

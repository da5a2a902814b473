#!/usr/bin/env python3
# Exhaustive catalogs: every representation at a fixed dimension vector,
# grouped into isomorphism classes with numpy batch kernels.

import quiverfold as qf

a2 = qf.validate_quiver(["u", "v"], [("e", "u", "v")])
f2 = qf.make_field(2)

cat = qf.isoclasses(a2, (1, 1), f2)
print("dimension vector (1, 1) over GF(2):")
print("  states:", cat.space.size, " classes:", cat.n_classes)
for ci in range(cat.n_classes):
    rep = cat.representative(ci)
    flag = "indecomposable" if cat.indec_flags[ci] else "decomposable"
    print(f"  class {ci}: size {cat.sizes[ci]}, {flag}, matrix {rep.matrices[0]}")

# indecomposable_classes is the short way to the interesting rows.
line, flip = qf.build_a3_flip()
indecs = qf.indecomposable_classes(line, (1, 1, 1), f2)
print("indecomposables of the line at (1, 1, 1):", len(indecs))

# class_of finds the class of any concrete representation.
x = qf.make_representation(a2, f2, (1, 1), {"e": ((1,),)})
print("class of the nonzero-arrow rep:", cat.class_of(x))

# Catalogs memoise; asking twice returns the same object.
again = qf.isoclasses(a2, (1, 1), f2)
print("memoised:", cat is again)

# Frobenius period: how long a class takes to come back under entry-wise
# x -> x^p.  Over GF(4) the two Kronecker classes with slope outside the
# prime field swap, so their period is 2.
kron = qf.validate_quiver(["u", "v"], [("a", "u", "v"), ("b", "u", "v")])
f4 = qf.make_field(2, 2)
kcat = qf.isoclasses(kron, (1, 1), f4)
periods = sorted(qf.frobenius_period(kcat, ci) for ci in range(kcat.n_classes))
print("Kronecker (1, 1) frobenius periods over GF(4):", periods)

# auto_period does the same for a quiver automorphism, and
# twist_annotations bundles both.
lcat = qf.isoclasses(line, (1, 1, 1), f2)
rows = qf.twist_annotations(lcat, flip)
print("line (1, 1, 1) annotations:", rows)

# State spaces grow like q^(total matrix entries), so the enumerator
# refuses politely once the predicted size passes the cap.
try:
    qf.isoclasses(a2, (4, 4), qf.make_field(2), state_cap=1000)
except qf.BudgetExceeded as exc:
    print("refused:", exc, "(predicted", exc.predicted, "states)")

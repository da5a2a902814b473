#!/usr/bin/env python3
"""Desk-scale theorem checks: indecomposable counts against root systems,
twist-orbit classes at automorphism-fixed dimension vectors."""

import warnings

import quiverfold as qf

a2 = qf.validate_quiver(["u", "v"], [("e", "u", "v")])
f2 = qf.make_field(2)

# Indecomposable dimension vectors are exactly the positive roots, with a
# single class at each real root.  The report prints one row per vector.
rep = qf.verify_kac(a2, f2, height=4)
print(rep.title, "over", rep.field_spec, "up to height", rep.height)
for ln in rep.lines():
    print(" ", ln)
print("passed:", rep.passed)
print()

# Krull-Remak-Schmidt consistency: class counts at every vector match the
# multisets of indecomposables summing to it.
cross = qf.multiset_crosscheck(a2, f2, height=3)
print(cross.title + ":", "passed" if cross.passed else "FAILED")
print()

# Twist-orbit-sum classes.  At a flip-fixed vector of the line, each class
# is the sum of one automorphism orbit of indecomposables.
line, flip = qf.build_a3_flip()
f5 = qf.make_field(5)
for d in [(1, 1, 1), (1, 2, 1)]:
    classes = qf.ii_classes(flip, d, f5)
    for c in classes:
        print(f"d = {d}: period {c.period}, member dims {list(c.member_dims)}")
print()

# The full report over GF(2) for the flip.  The automorphism order shares a
# factor with the field characteristic, which the checker points out.
with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    main = qf.verify_main_theorem(flip, f2, height=3)
print("characteristic warning:", any(isinstance(w.message, qf.CharacteristicWarning) for w in caught))
for ln in main.lines():
    print(" ", ln)
print("passed:", main.passed)
print()

# The bipartite (3, 2) rotation is the boundary case.  The all-ones vector
# folds to the imaginary root (1, 1) of the rank-two Cartan matrix, yet the
# twist-orbit count does not grow: exactly one class, and it has period 1,
# a single twist-fixed indecomposable rather than a longer orbit.
bip, rot = qf.build_counterexample()
ones = (1, 1, 1, 1, 1)
classes = qf.ii_classes(rot, ones, f5)
print("bipartite rotation at", ones, "over GF(5):", len(classes), "class(es)")
for c in classes:
    print("  period", c.period, "member dims", list(c.member_dims))
fd = qf.fold(rot)
print("folded image", qf.f_map(rot, ones), "is",
      qf.classify(qf.folded_lattice(fd), qf.f_map(rot, ones)).kind)
print("upstairs", ones, "is", qf.classify(qf.quiver_lattice(bip), ones).kind)

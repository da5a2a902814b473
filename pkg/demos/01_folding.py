#!/usr/bin/env python3
"""Fold a quiver along an admissible automorphism and read off the
symmetrisable Cartan data that comes out."""

import quiverfold as qf

# A three-vertex line with both arrows pointing at the middle.  Swapping
# the two ends is admissible: no arrow connects two vertices of one orbit.
line = qf.validate_quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "3", "2")])
flip = qf.validate_automorphism(line, {"1": "3", "3": "1"})

fd = qf.fold(flip)
print("orbits:", fd.orbit_names)
print("symmetriser d:", fd.d)
print("B =", fd.b_matrix)
print("C = D^-1 B =", fd.c_matrix)

# The folded object also carries a valued quiver.  Its edge pairs are the
# familiar (number of arrows seen from each side) labels.
vq = fd.valued_quiver
for e in vq.edges:
    print(f"edge {e.source} - {e.target}: pair {vq.edge_pair(e)}")

# f_map compresses an automorphism-fixed dimension vector of the big quiver
# down to orbit coordinates and f_inverse goes back up.
up = (2, 1, 2)
down = qf.f_map(flip, up)
print("f_map", up, "->", down)
print("f_inverse", down, "->", qf.f_inverse(flip, down))

# sigma is the automorphism acting on arbitrary vectors upstairs; fixed
# vectors are exactly the ones f_map accepts.
print("sigma of (1, 0, 0):", qf.sigma(flip, (1, 0, 0)))

print()

# The four-subspace star has two interesting symmetries: a rotation of the
# four corners and a three-cycle that leaves one corner alone.
star, four, three = qf.build_dtilde4()

for label, a in [("corner 4-cycle", four), ("corner 3-cycle", three)]:
    fd = qf.fold(a)
    print(f"{label}: orbits {fd.orbit_names}, d = {fd.d}")
    print("  B =", fd.b_matrix)

# Folding the 4-cycle gives the affine rank-two matrix with off-diagonal
# entries -4 and -1; the 3-cycle keeps three orbits.

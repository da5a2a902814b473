#!/usr/bin/env python3
"""Root systems attached to quivers and to folded Cartan data: enumeration
by height, classification of single vectors, reflections."""

import quiverfold as qf

line = qf.validate_quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "3", "2")])
lat = qf.quiver_lattice(line)

roots = qf.positive_roots_up_to(lat, 3)
print("positive roots of the A3 line up to height 3:")
for rec in roots.records:
    print(" ", rec.vector, rec.kind)

# classify() answers for one vector without enumerating everything.
for v in [(1, 1, 0), (1, 0, 1), (2, 1, 2)]:
    c = qf.classify(lat, v)
    print(f"classify {v}: {c.kind}", end="")
    if c.kind == "real":
        print(f"  (word {list(c.word)} applied to simple {c.simple})", end="")
    print()

# Reflections act on the lattice; a simple reflection at a sink adds the
# neighbour contributions.
w = qf.reflect(lat, "3", (1, 1, 0))
print("reflect (1,1,0) at vertex 3:", w)
print("apply word 2,1:", qf.apply_reflections(lat, ["2", "1"], (0, 0, 1)))

print()

# The affine star has a null root; every multiple of it is imaginary.
star, four, _ = qf.build_dtilde4()
slat = qf.quiver_lattice(star)
delta = qf.null_root(slat)
print("null root of the four-subspace star:", delta)
print("classify delta:", qf.classify(slat, delta).kind)
print("classify 2*delta:", qf.classify(slat, tuple(2 * x for x in delta)).kind)
print("defect of (1, 0, 0, 0, 0):", qf.defect(star, (1, 0, 0, 0, 0)))

# Folded lattice: the same machinery runs on orbit coordinates.
fd = qf.fold(four)
flat = qf.folded_lattice(fd)
froots = qf.positive_roots_up_to(flat, 4)
print("folded (4-cycle) roots up to height 4:")
for rec in froots.records:
    print(" ", rec.vector, rec.kind, "length", qf.root_length(fd, rec.vector))

# s_fold reflects upstairs through a whole orbit at once and matches the
# downstairs simple reflection under f_map.
up = qf.f_inverse(four, (1, 1))
print("s_fold at the corner orbit:", qf.s_fold(four, 0, up))

# sigma_root_image compares the compressed images of the upstairs roots
# with the folded root system, one shift orbit per real root.
rep = qf.sigma_root_image(four, 4)
print("image matches folded roots up to height 4:", rep.matches)
print("each real folded root from a single orbit:", rep.real_single_orbit)

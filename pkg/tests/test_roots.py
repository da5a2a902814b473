"""Root classification and enumeration against independently derived sets.

The expected root sets below were produced by tools/oracle_roots.py, which
grows Weyl orbits by breadth-first closure without using any package code.
"""

import pytest

import quiverfold as qf
from quiverfold.errors import NoNullRoot, ZeroVector


def folded(a):
    return qf.folded_lattice(qf.fold(a))


def root_sets(lat, height):
    rs = qf.positive_roots_up_to(lat, height)
    real = {r.vector for r in rs.records if r.kind == "real"}
    imag = {r.vector for r in rs.records if r.kind == "imaginary"}
    return real, imag


def test_pair21_fold_roots(a3_flip):
    real, imag = root_sets(folded(a3_flip[1]), 4)
    assert real == {(1, 0), (0, 1), (1, 1), (1, 2)}
    assert imag == set()


def test_pair41_fold_roots(dtilde4):
    real, imag = root_sets(folded(dtilde4[1]), 4)
    assert real == {(1, 0), (0, 1), (1, 1), (1, 3)}
    assert imag == {(1, 2)}


def test_three_cycle_fold_roots(dtilde4):
    real, imag = root_sets(folded(dtilde4[2]), 4)
    assert real == {
        (0, 0, 1),
        (0, 1, 0),
        (1, 0, 0),
        (0, 1, 1),
        (1, 0, 1),
        (1, 0, 2),
        (1, 1, 1),
        (1, 0, 3),
    }
    assert imag == {(1, 1, 2)}


def test_counterexample_fold_roots(counterexample):
    real, imag = root_sets(folded(counterexample[1]), 4)
    assert real == {(1, 0), (0, 1), (2, 1), (1, 3)}
    assert imag == {(1, 1), (1, 2), (2, 2)}


def test_simply_laced_roots(a2, a3):
    real, imag = root_sets(qf.quiver_lattice(a2), 3)
    assert real == {(1, 0), (0, 1), (1, 1)} and not imag

    real3, imag3 = root_sets(qf.quiver_lattice(a3), 4)
    assert len(real3) == 6 and not imag3
    assert (1, 1, 1) in real3 and (1, 0, 1) not in real3


def test_star_quiver_roots(dtilde4):
    real, imag = root_sets(qf.quiver_lattice(dtilde4[0]), 6)
    assert len(real) == 24
    assert imag == {(1, 1, 1, 1, 2)}
    assert (1, 1, 1, 1, 1) in real


def test_classify_real_witness(a3_flip):
    lat = folded(a3_flip[1])
    c = qf.classify(lat, (1, 2))
    assert c.kind == "real" and c.sign == 1
    # the witness word really reflects the terminal simple back to the input
    simple = tuple(1 if n == c.simple else 0 for n in lat.names)
    assert qf.apply_reflections(lat, list(reversed(c.word)), simple) == (1, 2)


def test_classify_imaginary_and_nonroot(dtilde4):
    lat = folded(dtilde4[1])
    ci = qf.classify(lat, (1, 2))
    assert ci.kind == "imaginary"
    assert ci.fundamental == (1, 2)
    cn = qf.classify(lat, (2, 1))
    assert cn.kind == "nonroot"
    assert cn.reason
    with pytest.raises(ZeroVector):
        qf.classify(lat, (0, 0))


def test_classify_negative_root(a3_flip):
    lat = folded(a3_flip[1])
    c = qf.classify(lat, (-1, -2))
    assert c.kind == "real" and c.sign == -1


def test_null_root(dtilde4):
    lat4 = folded(dtilde4[1])
    assert qf.null_root(lat4) == (1, 2)
    star = qf.quiver_lattice(dtilde4[0])
    assert qf.null_root(star) == (1, 1, 1, 1, 2)
    a2lat = qf.quiver_lattice(qf.validate_quiver(["u", "v"], [("r", "u", "v")]))
    assert qf.null_root(a2lat) is None


def test_defect(dtilde4):
    q = dtilde4[0]
    # regular dimension vectors have defect zero
    assert qf.defect(q, (1, 1, 1, 1, 2)) == 0
    assert qf.defect(q, (1, 1, 0, 0, 1)) == 0
    assert qf.defect(q, (1, 1, 1, 1, 1)) != 0


def test_s_fold_composite(a3_flip):
    q, flip = a3_flip
    # reflecting at the folded orbit of 1 and 3 acts on fixed vectors
    assert qf.s_fold(flip, 0, (0, 1, 0)) == (1, 1, 1)
    assert qf.s_fold(flip, ["1", "3"], (0, 1, 0)) == (1, 1, 1)
    # intertwines with the single folded reflection through f
    fd = qf.fold(flip)
    lat = qf.folded_lattice(fd)
    for v in [(1, 2, 1), (0, 1, 0), (1, 1, 1), (2, 3, 2)]:
        assert qf.f_map(flip, qf.s_fold(flip, 0, v)) == qf.reflect(
            lat, 0, qf.f_map(flip, v)
        )


def test_sigma_root_image(a3_flip):
    rep = qf.sigma_root_image(a3_flip[1], 4)
    assert rep.matches
    assert set(rep.image) == {(1, 0), (0, 1), (1, 1), (1, 2)}
    assert set(rep.folded_roots) == set(rep.image)
    # each real folded root has exactly one preimage orbit
    assert rep.real_single_orbit
    assert all(n == 1 for n in rep.orbit_counts.values())


def test_reflect_by_name(a3_flip):
    lat = folded(a3_flip[1])
    assert qf.reflect(lat, "2", (1, 0)) == qf.reflect(lat, 1, (1, 0))

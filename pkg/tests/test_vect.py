import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from syscat import vect
from syscat.errors import MismatchError
from syscat.vect import LinMap, Subspace, VectObj

import oracles

Q1 = VectObj(("x",))
Q2 = VectObj(("x", "y"))
Q3 = VectObj(("x", "y", "z"))

SMALL_INT = st.integers(min_value=-3, max_value=3)


def rand_matrix(rng, rows, cols, span=3):
    return tuple(tuple(Fraction(rng.randint(-span, span)) for _ in range(cols)) for _ in range(rows))


def test_floats_are_rejected():
    with pytest.raises(MismatchError):
        LinMap(Q1, Q1, ((1.5,),))


def test_compose_matrix_product():
    f = LinMap(Q2, Q2, ((1, 0), (0, 2)))
    g = LinMap(Q2, Q1, ((1, 1),))
    assert vect.compose(g, f).matrix == ((Fraction(1), Fraction(2)),)


def test_compose_identity_and_zero_dims():
    f = LinMap(Q2, Q1, ((1, -1),))
    assert vect.compose(f, vect.identity(Q2)) == f
    assert vect.compose(vect.identity(Q1), f) == f
    z = vect.zero_map(Q2, vect.ZERO_SPACE)
    g = vect.zero_map(vect.ZERO_SPACE, Q3)
    gz = vect.compose(g, z)
    assert gz == vect.zero_map(Q2, Q3)


def test_product_tags_and_dims():
    obj, p1, p2 = vect.product(VectObj(("v", "i")), VectObj(("w",)))
    assert obj.vars == ("L.v", "L.i", "R.w")
    assert p1.matrix == ((1, 0, 0), (0, 1, 0))
    assert p2.matrix == ((0, 0, 1),)
    empty, _, _ = vect.product(vect.ZERO_SPACE, Q1)
    assert empty.dim == 1


def test_pullback_kernel_example():
    f1 = LinMap(Q2, Q1, ((1, 0),))
    f2 = LinMap(Q1, Q1, ((1,),))
    k, p1, p2 = vect.pullback(f1, f2)
    assert k.dim == 2  # frozen from the RREF oracle
    assert oracles.nullity([(1, 0, -1)], 3) == 2
    assert vect.compose(f1, p1) == vect.compose(f2, p2)
    # K = {(a, b, c) : a = c} inside Q^2 x Q^1
    emb = vect.pair_into_product(p1, p2)
    for j in range(k.dim):
        col = emb.column(j)
        assert col[0] == col[2]


def test_pullback_dimension_law_randomized():
    rng = random.Random(3)
    for _ in range(40):
        d1, d2, dz = rng.randint(0, 3), rng.randint(0, 3), rng.randint(1, 3)
        x1, x2, z = (
            VectObj(tuple(f"a{i}" for i in range(d1))),
            VectObj(tuple(f"b{i}" for i in range(d2))),
            VectObj(tuple(f"z{i}" for i in range(dz))),
        )
        f1 = LinMap(x1, z, rand_matrix(rng, dz, d1))
        f2 = LinMap(x2, z, rand_matrix(rng, dz, d2))
        k, p1, p2 = vect.pullback(f1, f2)
        stacked = [tuple(r1) + tuple(-x for x in r2) for r1, r2 in zip(f1.matrix, f2.matrix)]
        assert k.dim == d1 + d2 - oracles.rank(stacked, d1 + d2)
        assert vect.compose(f1, p1) == vect.compose(f2, p2)


def test_equalizer_symmetric_kernel():
    f = LinMap(Q2, Q1, ((1, -1),))
    g = vect.zero_map(Q2, Q1)
    e_obj, e = vect.equalizer(f, g)
    assert e_obj.dim == 1
    assert e.column(0) == (Fraction(1), Fraction(1))


def test_image_factorize_rank_one():
    f = LinMap(Q2, Q2, ((1, 2), (2, 4)))
    surj, inj = vect.image_factorize(f)
    assert inj.dom.dim == 1  # frozen: RREF rank oracle
    assert oracles.rank(f.matrix, 2) == 1
    assert inj.column(0) == (Fraction(1), Fraction(2))
    assert vect.compose(inj, surj) == f
    assert vect.is_epi(surj) and vect.is_mono(inj)


def test_classify_thin_column():
    f = LinMap(Q1, Q2, ((1,), (1,)))
    assert vect.is_mono(f) and not vect.is_epi(f)
    assert oracles.rank(f.matrix, 1) == 1


@settings(deadline=None, max_examples=40)
@given(st.lists(st.lists(SMALL_INT, min_size=3, max_size=3), min_size=1, max_size=4))
def test_rref_multiply_back(int_rows):
    rows = tuple(tuple(Fraction(x) for x in row) for row in int_rows)
    n = 3
    reduced, pivots = vect.rref(rows, n)
    # row-reduce [M | I]; the left block must be rref(M) and the right block
    # the witnessing transformation
    aug = [tuple(row) + tuple(Fraction(1 if i == j else 0) for j in range(len(rows)))
           for i, row in enumerate(rows)]
    full_red, _ = vect.rref(aug, n + len(rows))
    left = tuple(r[:n] for r in full_red if any(x != 0 for x in r[:n]))
    assert left == reduced
    transform = tuple(r[n:] for r in full_red[: len(reduced)])
    rebuilt = vect.mat_mul(transform, rows, len(rows)) if rows else ()
    assert rebuilt == reduced
    assert oracles.row_space_equal(rows, reduced, n)


@settings(deadline=None, max_examples=40)
@given(st.lists(st.lists(SMALL_INT, min_size=4, max_size=4), min_size=1, max_size=3))
def test_kernel_basis_matches_oracle(int_rows):
    rows = tuple(tuple(Fraction(x) for x in row) for row in int_rows)
    basis = vect.kernel_basis(rows, 4)
    assert len(basis) == oracles.nullity(rows, 4)
    for vec in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, vec)) == 0


def test_solve_matrix_recovers_unique_solution():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(1, 3)
        m = n + rng.randint(0, 2)
        while True:
            a = rand_matrix(rng, m, n)
            if vect.rank_of(a, n) == n:
                break
        x0 = rand_matrix(rng, n, 2)
        b = vect.mat_mul(a, x0, n)
        assert vect.solve_matrix(a, n, b, 2) == x0
    # inconsistent system
    assert vect.solve_matrix(((Fraction(1),), (Fraction(1),)), 1, ((Fraction(0),), (Fraction(1),)), 1) is None


def test_subspace_canonical_equality():
    s1 = Subspace(Q3, ((1, 1, 0), (0, 0, 1)))
    s2 = Subspace(Q3, ((2, 2, 2), (1, 1, -1)))
    assert s1 == s2
    assert s1.contains((5, 5, -3))
    assert not s1.contains((1, 0, 0))


def test_subspace_meet_join_examples():
    e1 = Subspace(Q3, ((1, 0, 0),))
    e2 = Subspace(Q3, ((0, 1, 0),))
    e12 = Subspace(Q3, ((1, 0, 0), (0, 1, 0)))
    e23 = Subspace(Q3, ((0, 1, 0), (0, 0, 1)))
    assert e12.intersect(e23) == e2
    assert e1.sum(e2) == e12
    assert e1.sum(e2).dim == 2


def test_subspace_modular_law_randomized():
    rng = random.Random(5)
    amb = VectObj(tuple(f"u{i}" for i in range(5)))
    for _ in range(50):
        a = Subspace(amb, rand_matrix(rng, rng.randint(0, 5), 5))
        b = Subspace(amb, rand_matrix(rng, rng.randint(0, 5), 5))
        assert a.dim + b.dim == a.sum(b).dim + a.intersect(b).dim


def test_exact_fractions_survive_reduction():
    f = LinMap(Q2, Q1, ((Fraction(1, 3), Fraction(1, 6)),))
    basis = vect.kernel_basis(f.matrix, 2)
    assert basis == ((Fraction(1), Fraction(-2)),)


def test_coordinate_map_and_projection():
    pi = vect.projection_onto(Q3, ("z", "x"))
    assert pi.cod.vars == ("z", "x")
    assert pi.apply((1, 2, 3)) == (Fraction(3), Fraction(1))
    with pytest.raises(MismatchError):
        vect.projection_onto(Q3, ("nope",))

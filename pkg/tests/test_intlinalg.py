"""Smith normal form, integer solves, and quotient lattices."""

import random
from fractions import Fraction as Q

from hypothesis import given, settings
from hypothesis import strategies as st

from tropgroups import intlinalg as la

small_mats = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m
        ).map(la.matrix)
    )
)


@given(small_mats)
@settings(max_examples=120)
def test_snf_properties(a):
    d, u, v = la.smith_normal_form(a)
    assert la.mat_mul(la.mat_mul(u, a), v) == d
    assert abs(la.int_det(u)) == 1
    assert abs(la.int_det(v)) == 1
    diag = la.diagonal_of(d)
    for i in range(len(d)):
        for j in range(len(d[0])):
            if i != j:
                assert d[i][j] == 0
    nonzero = [e for e in diag if e != 0]
    assert all(e > 0 for e in nonzero)
    for x, y in zip(nonzero, nonzero[1:]):
        assert y % x == 0
    # zero entries only after the nonzero ones
    seen_zero = False
    for e in diag:
        if e == 0:
            seen_zero = True
        else:
            assert not seen_zero


@given(small_mats, st.data())
@settings(max_examples=80)
def test_integer_solve(a, data):
    n = len(a[0])
    x = tuple(data.draw(st.integers(-5, 5)) for _ in range(n))
    b = la.mat_vec(a, x)
    sol = la.integer_solve(a, b)
    assert sol is not None
    x0, kernel = sol
    assert la.mat_vec(a, x0) == b
    for k in kernel:
        assert la.is_zero_vec(la.mat_vec(a, k))


def test_integer_solve_no_solution():
    assert la.integer_solve(((2,),), (1,)) is None
    assert la.integer_solve(((0,),), (1,)) is None


def test_quotient_lattice_projection_well_defined():
    rng = random.Random(0)
    for _ in range(40):
        n = rng.randint(1, 4)
        gens = [tuple(rng.randint(-4, 4) for _ in range(n)) for _ in range(rng.randint(0, 3))]
        quot = la.QuotientLattice(n, gens)
        x = tuple(rng.randint(-9, 9) for _ in range(n))
        for g in gens:
            assert quot.project(la.vec_add(x, g)) == quot.project(x)


def test_quotient_lattice_representatives():
    quot = la.QuotientLattice(2, [(2, 0), (0, 3)])
    assert quot.torsion == (1, 6) or quot.torsion == (6,) or set(quot.torsion) <= {2, 3, 6}
    reps = quot.representatives()
    assert len(reps) == 6
    assert len({quot.project(r) for r in reps}) == 6


def test_rational_solve_and_kernel():
    a = la.matrix([[1, 1, 0], [0, 1, 1]])
    x = la.rational_solve(a, (3, 5))
    assert x is not None and la.mat_vec(la.mat_frac(a), x) == (Q(3), Q(5))
    assert la.rational_solve(la.matrix([[1], [1]]), (0, 1)) is None
    ker = la.rational_kernel(a)
    assert len(ker) == 1
    assert la.mat_vec(la.mat_frac(a), ker[0]) == (Q(0), Q(0))


def test_averaging_projector():
    rot = la.matrix([[0, -1], [1, 0]])  # order 4, fixed space 0
    p = la.averaging_projector(rot)
    assert p == ((Q(0), Q(0)), (Q(0), Q(0)))
    swap = la.matrix([[0, 1], [1, 0]])
    p = la.averaging_projector(swap)
    assert la.mat_mul(p, p) == p
    assert la.mat_vec(p, (Q(1), Q(0))) == (Q(1, 2), Q(1, 2))


def test_lattice_index():
    assert la.lattice_index(((2, 0), (0, 3))) == 6
    assert la.lattice_index(((1, 0), (0, 1))) == 1

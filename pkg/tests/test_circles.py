"""Circle cocycles: gauge action, isomorphism, classification, multi-line bundles."""

import random
from fractions import Fraction as Q

import pytest

from tropgroups import circles as ci
from tropgroups import groups as gr
from tropgroups import verify
from tropgroups.groups import build_group


def rng_cocycle(rng, g, j=Q(1)):
    return verify.sample_gl_cocycle(rng, g, j)


def test_trivial_gauge_is_identity():
    g = build_group("GL", 2)
    c = ci.cocycle(g, (1, 0), (Q(1, 3), 0), 1, 1)
    assert ci.gauge_transform(c, (0, 0), (0, 0), g.weyl.identity_idx) == c


def test_gauge_example_permutation():
    g = build_group("GL", 2)
    swap = 1 - g.weyl.identity_idx
    c = ci.cocycle(g, (1, 0), (0, 0), g.weyl.identity_idx, 1)
    out = ci.gauge_transform(c, (0, 0), (0, 0), swap)
    assert out.slope == (0, 1) and out.offset == (Q(0), Q(0))
    assert out.mono_idx == g.weyl.identity_idx


def test_gauge_example_integral_shift():
    g = build_group("GL", 1)
    c = ci.cocycle(g, (1,), (0,), 0, 1)
    out = ci.gauge_transform(c, (1,), (0,), 0)
    assert out.slope == (1,) and out.offset == (Q(-1),)


def test_gauge_composition_law():
    rng = random.Random(0)
    for _ in range(500):
        n = rng.choice([1, 2, 3])
        g = build_group("GL", n)
        c = rng_cocycle(rng, g)
        triples = []
        for _ in range(2):
            triples.append(
                ci.GaugeTriple(
                    tuple(rng.randint(-3, 3) for _ in range(n)),
                    tuple(verify.random_rational(rng) for _ in range(n)),
                    rng.randrange(len(g.weyl)),
                )
            )
        first, second = triples
        step = ci.gauge_transform(c, first.k, first.beta, first.v_idx)
        two_steps = ci.gauge_transform(step, second.k, second.beta, second.v_idx)
        combined = ci.compose_gauges(c, second, first)
        assert ci.gauge_transform(c, combined.k, combined.beta, combined.v_idx) == two_steps


def test_degree_examples():
    g2 = build_group("GL", 2)
    assert ci.degree(ci.cocycle(g2, (1, 0), (0, 0), 0, 1)) == (1,)
    coroot = g2.datum.coroots[0]
    assert ci.degree(ci.cocycle(g2, coroot, (0, 0), 0, 1)) == (0,)
    pgl2 = build_group("PGL", 2)
    assert ci.degree(ci.cocycle(pgl2, (1,), (0,), 0, 1)) == (1,)


def test_degree_gauge_invariant():
    rng = random.Random(1)
    for _ in range(100):
        n = rng.choice([2, 3])
        g = build_group("GL", n)
        c = rng_cocycle(rng, g)
        d = ci.gauge_transform(
            c,
            [rng.randint(-4, 4) for _ in range(n)],
            [verify.random_rational(rng) for _ in range(n)],
            rng.randrange(len(g.weyl)),
        )
        assert ci.degree(c) == ci.degree(d)


def test_iso_jacobian_examples():
    g = build_group("GL", 1)
    base = ci.cocycle(g, (0,), (0,), 0, 1)
    assert not ci.are_isomorphic(base, ci.cocycle(g, (0,), (Q(1, 2),), 0, 1))
    witness = ci.isomorphism_witness(base, ci.cocycle(g, (0,), (1,), 0, 1))
    assert witness is not None and witness.k == (-1,)


def test_iso_requires_same_length_and_group():
    g = build_group("GL", 1)
    a = ci.cocycle(g, (0,), (0,), 0, 1)
    b = ci.cocycle(g, (0,), (0,), 0, 2)
    with pytest.raises(ValueError):
        ci.are_isomorphic(a, b)
    with pytest.raises(gr.ParentMismatchError):
        ci.are_isomorphic(a, ci.cocycle(build_group("GL", 2), (0, 0), (0, 0), 0, 1))


def test_iso_is_equivalence_on_gauge_orbits():
    rng = random.Random(2)
    for _ in range(25):
        n = rng.choice([2, 3])
        g = build_group("GL", n)
        c0 = rng_cocycle(rng, g)

        def rand_gauge(c):
            return ci.gauge_transform(
                c,
                [rng.randint(-3, 3) for _ in range(n)],
                [verify.random_rational(rng) for _ in range(n)],
                rng.randrange(len(g.weyl)),
            )

        c1, c2 = rand_gauge(c0), rand_gauge(rand_gauge(c0))
        assert ci.are_isomorphic(c0, c0)
        assert ci.are_isomorphic(c0, c1) and ci.are_isomorphic(c1, c0)
        assert ci.are_isomorphic(c1, c2) and ci.are_isomorphic(c0, c2)


def test_iso_on_gauge_orbits_across_families():
    rng = random.Random(7)
    for family, n in [("Sp", 2), ("SO_even", 3), ("G2", 0), ("SL", 3), ("PGL", 3)]:
        g = build_group(family, n)
        for _ in range(15):
            c = ci.cocycle(
                g,
                [rng.randint(-4, 4) for _ in range(g.rank)],
                [verify.random_rational(rng) for _ in range(g.rank)],
                rng.randrange(len(g.weyl)),
                Q(3, 2),
            )
            d = ci.gauge_transform(
                c,
                [rng.randint(-3, 3) for _ in range(g.rank)],
                [verify.random_rational(rng) for _ in range(g.rank)],
                rng.randrange(len(g.weyl)),
            )
            assert ci.are_isomorphic(c, d)
            assert ci.degree(c) == ci.degree(d)


def test_iso_negative_on_finite_sl_component():
    g = build_group("SL", 3)
    rep = _indecomposable_rep(g)
    residues = ci.slope_residues(g, rep)
    assert len(residues) == 3
    reps = [ci.cocycle(g, m, (0, 0), rep, 1) for m in residues]
    for i, a in enumerate(reps):
        for b in reps[i + 1 :]:
            assert not ci.are_isomorphic(a, b)


def _indecomposable_rep(g):
    return verify.indecomposable_class_rep(g)


def test_iso_agrees_with_bounded_gauge_search():
    """Independent oracle: try every v and every integral k in a box, asking
    only whether the offset equation admits a rational β; compare verdicts."""
    from tropgroups import intlinalg as la

    rng = random.Random(8)
    box = 3

    def brute_force(a, b):
        g = a.group
        w = g.weyl
        n = g.rank
        j = a.length
        ks = [()]
        for _ in range(n):
            ks = [k + (x,) for k in ks for x in range(-box, box + 1)]
        for v_idx in range(len(w)):
            w2 = w.mul(w.mul(v_idx, a.mono_idx), w.inv(v_idx))
            if w2 != b.mono_idx:
                continue
            vmat = w.element(v_idx).matrix
            w2mat = w.element(b.mono_idx).matrix
            amat = la.mat_sub(la.identity_matrix(n), w2mat)
            vm = la.mat_vec(vmat, a.slope)
            for k in ks:
                if la.vec_add(k, la.vec_sub(vm, la.mat_vec(w2mat, k))) != b.slope:
                    continue
                t = la.vec_sub(b.offset, la.mat_vec(la.mat_frac(vmat), a.offset))
                rhs = la.vec_add(t, la.vec_scale(j, la.mat_vec(la.mat_frac(w2mat), tuple(map(Q, k)))))
                beta = la.rational_solve(la.mat_frac(amat), rhs)
                if beta is not None:
                    assert ci.gauge_transform(a, k, beta, v_idx) == b
                    return True
        return False

    cases = [("GL", 1, 40), ("GL", 2, 40), ("GL", 3, 12), ("Sp", 1, 20), ("SL", 2, 20)]
    for family, n, trials in cases:
        g = build_group(family, n)
        for _ in range(trials):
            a = ci.cocycle(
                g,
                [rng.randint(-2, 2) for _ in range(g.rank)],
                [Q(rng.randint(-3, 3), rng.choice([1, 2, 3])) for _ in range(g.rank)],
                rng.randrange(len(g.weyl)),
                1,
            )
            b = ci.cocycle(
                g,
                [rng.randint(-2, 2) for _ in range(g.rank)],
                [Q(rng.randint(-3, 3), rng.choice([1, 2, 3])) for _ in range(g.rank)],
                rng.randrange(len(g.weyl)),
                1,
            )
            mine = ci.isomorphism_witness(a, b)
            brute = brute_force(a, b)
            if brute:
                assert mine is not None
            if mine is not None and all(abs(x) <= box for x in mine.k):
                assert brute
            if mine is None:
                assert not brute


def test_sp4_paired_divisor_instance():
    # degree pattern (3, 7, −3, −7) on the four sheets, paired by the involution
    g = build_group("Sp", 2)
    c = ci.cocycle(g, (3, 7), (0, 0), g.weyl.identity_idx, 1)
    mlb = ci.sp_structure(c)
    assert sorted(comp.line_degree for comp in mlb.components) == [-7, -3, 3, 7]
    assert mlb.trivialization_violations == ()


def test_iso_witness_is_deterministic_and_valid():
    rng = random.Random(3)
    g = build_group("GL", 2)
    c = ci.cocycle(g, (2, -1), (Q(1, 2), Q(1, 3)), 1, 1)
    d = ci.gauge_transform(c, (1, -2), (Q(2, 5), 0), 1)
    w1 = ci.isomorphism_witness(c, d)
    w2 = ci.isomorphism_witness(c, d)
    assert w1 == w2
    assert ci.gauge_transform(c, w1.k, w1.beta, w1.v_idx) == d


def test_classify_component_count_is_class_count():
    for family, n in [("GL", 3), ("SL", 3), ("Sp", 2), ("G2", 0)]:
        g = build_group(family, n)
        comps = ci.classify_components(g, Q(1))
        assert len(comps) == len(g.weyl.conjugacy_classes())


def test_classify_gl1():
    g = build_group("GL", 1)
    (comp,) = ci.classify_components(g, Q(1))
    assert comp.torus_rank == 1
    assert comp.invariant_factors == (0,)
    assert comp.centralizer_order == 1


def test_classify_trivial_class_matches_pic_tensor_cochar():
    g = build_group("GL", 3)
    comp = ci.component_for_class(g, Q(1), g.weyl.identity_idx)
    assert comp.torus_rank == 3
    assert comp.invariant_factors == (0, 0, 0)
    assert comp.centralizer_order == 6


def test_pushforward_det():
    rng = random.Random(4)
    det = gr.hom_det(3)
    g = build_group("GL", 3)
    for _ in range(20):
        c = rng_cocycle(rng, g)
        image = ci.pushforward(det, c)
        assert image.slope == (sum(c.slope),)
        assert image.offset == (sum(c.offset, Q(0)),)
        assert image.mono_idx == det.target.weyl.identity_idx


def test_pushforward_identity_and_sl_inclusion():
    g = build_group("SL", 2)
    inc = gr.hom_sl_to_gl(2)
    c = ci.cocycle(g, (1,), (0,), 0, 1)
    image = ci.pushforward(inc, c)
    assert image.slope == (1, -1)
    assert ci.degree(image) == (0,)


def test_multiline_cycle_example():
    g = build_group("GL", 2)
    swap = 1 - g.weyl.identity_idx
    mlb = ci.to_multiline(ci.cocycle(g, (1, 0), (0, 0), swap, 1))
    assert len(mlb.components) == 1
    comp = mlb.components[0]
    assert comp.length == 2 and comp.line_degree == 1 and comp.jacobian == 0


def test_multiline_trivial_cover():
    g = build_group("GL", 3)
    mlb = ci.to_multiline(ci.cocycle(g, (5, -1, 2), (0, 0, 0), g.weyl.identity_idx, 1))
    assert [c.line_degree for c in mlb.components] == [5, -1, 2]
    assert all(c.length == 1 for c in mlb.components)


def test_multiline_total_degree_is_degree():
    rng = random.Random(5)
    g = build_group("GL", 4)
    for _ in range(40):
        c = rng_cocycle(rng, g)
        mlb = ci.to_multiline(c)
        assert (mlb.total_degree,) == ci.degree(c)
        assert sum(len(comp.sheets) for comp in mlb.components) == 4
        assert all(comp.length == len(comp.sheets) * c.length for comp in mlb.components)


def test_sp_structure_trivialization_passes():
    rng = random.Random(6)
    for n in (1, 2, 3):
        g = build_group("Sp", n)
        for _ in range(15):
            c = ci.cocycle(
                g,
                [rng.randint(-4, 4) for _ in range(n)],
                [verify.random_rational(rng) for _ in range(n)],
                rng.randrange(len(g.weyl)),
                1,
            )
            mlb = ci.sp_structure(c)
            assert mlb.trivialization_violations == ()
            assert mlb.involution is not None
            assert sum(len(comp.sheets) for comp in mlb.components) == 2 * n


def test_sp_structure_pairs_degrees():
    g = build_group("Sp", 1)
    mlb = ci.sp_structure(ci.cocycle(g, (3,), (0,), g.weyl.identity_idx, 1))
    assert sorted(c.line_degree for c in mlb.components) == [-3, 3]


def test_sp_trivialization_violation_detected():
    violations = ci.check_sp_trivialization((1, 0, 0, 0), (0, 0, 0, 0), (0, 1, 2, 3), Q(1))
    assert violations and violations[0][1] == 1
    violations = ci.check_sp_trivialization((0, 0, 0, 0), (Q(1, 2), 0, 0, 0), (0, 1, 2, 3), Q(1))
    assert violations and violations[0][2] == Q(1, 2)


def test_sp_structure_family_check():
    g = build_group("GL", 2)
    with pytest.raises(ValueError):
        ci.sp_structure(ci.cocycle(g, (0, 0), (0, 0), 0, 1))


def test_cocycle_json_roundtrip():
    g = build_group("GL", 2)
    c = ci.cocycle(g, (1, -2), (Q(1, 3), Q(-2, 5)), 1, Q(3, 2))
    assert ci.cocycle_from_json(g, c.to_json()) == c

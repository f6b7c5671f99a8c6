"""Named verification suites over the circle-bundle classification.

Each suite recomputes a countable claim two independent ways where possible
(closed form vs. explicit enumeration with the isomorphism tester) and
returns a JSON-serializable report with one entry per case.
"""

from __future__ import annotations

import random
from fractions import Fraction as Q
from itertools import combinations
from typing import Optional

from . import circles, stability
from .groups import TropicalGroup, build_group
from .weyl import a_type_structure, relative_weyl_check


def indecomposable_class_rep(g: TropicalGroup) -> int:
    """Least element of the conjugacy class of full-cycle products."""
    structure = a_type_structure(g.weyl, range(len(g.datum.simple)))
    if structure is None:
        raise ValueError("group is not of product-A type")
    reps = structure.indecomposable_elements()
    cls = g.weyl.class_of(reps[0])
    assert all(r in cls for r in reps), "indecomposables form one conjugacy class"
    return cls[0]


def count_component_classes(g: TropicalGroup, j, w_idx: int) -> int:
    """Isomorphism classes with the given monodromy, by explicit enumeration.

    Only valid for finite components (no torus part): slope residues with
    offset zero hit every class, and the iso tester deduplicates them.
    """
    reps = [circles.cocycle(g, m, (0,) * g.rank, w_idx, j) for m in circles.slope_residues(g, w_idx)]
    distinct = []
    for c in reps:
        if not any(circles.are_isomorphic(c, d) for d in distinct):
            distinct.append(c)
    return len(distinct)


def sl_count(n: int, j=1) -> dict:
    g = build_group("SL", n)
    rep = indecomposable_class_rep(g)
    comp = circles.component_for_class(g, Q(j), rep)
    enumerated = count_component_classes(g, Q(j), rep)
    ok = comp.component_size == n and enumerated == n and comp.torus_rank == 0
    return {
        "suite": "sl-count",
        "n": n,
        "component_size": comp.component_size,
        "enumerated": enumerated,
        "invariant_factors": list(comp.invariant_factors),
        "pass": ok,
    }


def pgl_count(n: int, j=1) -> dict:
    g = build_group("PGL", n)
    rep = indecomposable_class_rep(g)
    comp = circles.component_for_class(g, Q(j), rep)
    enumerated = count_component_classes(g, Q(j), rep)
    ok = comp.invariant_factors == (n,) and enumerated == n and comp.torus_rank == 0
    return {
        "suite": "pgl-count",
        "n": n,
        "invariant_factors": list(comp.invariant_factors),
        "enumerated": enumerated,
        "pass": ok,
    }


def random_rational(rng: random.Random, denom_max: int = 6, num_max: int = 8) -> Q:
    return Q(rng.randint(-num_max, num_max), rng.randint(1, denom_max))


def sample_gl_cocycle(
    rng: random.Random,
    g: TropicalGroup,
    j,
    degree: Optional[int] = None,
    w_idx: Optional[int] = None,
) -> circles.CircleCocycle:
    """Random GL-family cocycle, optionally with prescribed degree and monodromy."""
    n = g.rank
    m = [rng.randint(-5, 5) for _ in range(n)]
    if degree is not None:
        m[-1] = degree - sum(m[:-1])
    alpha = [random_rational(rng) for _ in range(n)]
    if w_idx is None:
        w_idx = rng.randrange(len(g.weyl))
    return circles.cocycle(g, m, alpha, w_idx, j)


def det_homeo(n: int, d: int, samples: int = 100, seed: int = 0, j=1) -> dict:
    """Equal determinant ⟺ isomorphic, on the stable-degree indecomposable part."""
    g = build_group("GL", n)
    gl1 = build_group("GL", 1)
    jq = Q(j)
    if not stability.is_stable_degree(g, (d,) + (0,) * (n - 1)):
        raise ValueError("degree is not stable for this rank")
    rep = indecomposable_class_rep(g)
    cls = g.weyl.class_of(rep)
    rng = random.Random(seed)
    comp = circles.component_for_class(g, jq, rep)
    target = circles.component_for_class(gl1, jq, gl1.weyl.identity_idx)
    discrete_ok = (comp.torus_rank, comp.invariant_factors) == (
        target.torus_rank,
        target.invariant_factors,
    )

    def det_cocycle(c):
        return circles.cocycle(gl1, (sum(c.slope),), (sum(c.offset, Q(0)),), 0, jq)

    agree = 0
    for trial in range(samples):
        c1 = sample_gl_cocycle(rng, g, jq, degree=d, w_idx=rng.choice(cls))
        c2 = sample_gl_cocycle(rng, g, jq, degree=d, w_idx=rng.choice(cls))
        alpha = list(c2.offset)
        slope = list(c2.slope)
        # rebase the offset sum onto c1's, then shift it by a gauge period
        # (equal determinants), by a fractional period (unequal Jacobian),
        # or bump the degree (unequal determinant in the free part)
        alpha[-1] += sum(c1.offset, Q(0)) - sum(c2.offset, Q(0)) + jq * rng.randint(-2, 2)
        if trial % 2 == 1:
            if trial % 4 == 1:
                alpha[-1] += Q(1, 3) * jq
            else:
                slope[-1] += 1
        c2 = circles.cocycle(g, slope, alpha, c2.mono_idx, jq)
        dets_isomorphic = circles.are_isomorphic(det_cocycle(c1), det_cocycle(c2))
        full_isomorphic = circles.are_isomorphic(c1, c2)
        if dets_isomorphic == full_isomorphic and dets_isomorphic == (trial % 2 == 0):
            agree += 1
    ok = discrete_ok and agree == samples
    return {
        "suite": "det-homeo",
        "n": n,
        "d": d,
        "samples": samples,
        "agreeing": agree,
        "discrete_invariants_match": discrete_ok,
        "pass": ok,
    }


RELATIVE_WEYL_GROUPS = (("GL", 4), ("Sp", 2), ("Sp", 3), ("G2", 0))


def relative_weyl() -> dict:
    """The centralizer-quotient bijection over every type-A parabolic and
    every indecomposable element, for the fixed list of ambient groups."""
    cases = []
    for family, n in RELATIVE_WEYL_GROUPS:
        g = build_group(family, n)
        n_simple = len(g.datum.simple)
        for size in range(0, n_simple + 1):
            for positions in combinations(range(n_simple), size):
                structure = a_type_structure(g.weyl, positions)
                if structure is None:
                    continue
                for w_idx in structure.indecomposable_elements():
                    try:
                        result = relative_weyl_check(g.weyl, positions, w_idx)
                        ok = True
                        detail = {
                            "cosets": len(result.iso_witness),
                        }
                    except AssertionError as exc:
                        ok = False
                        detail = {"error": str(exc)}
                    cases.append(
                        {
                            "group": f"{family}{n or ''}",
                            "positions": list(positions),
                            "element": w_idx,
                            "pass": ok,
                            **detail,
                        }
                    )
    return {"suite": "relative-weyl", "cases": cases, "pass": all(c["pass"] for c in cases)}


def semistable_by_multiline(c: circles.CircleCocycle) -> bool:
    """Equal-slope criterion: every cover component has the same degree/length."""
    mlb = circles.to_multiline(c)
    slopes = {Q(comp.line_degree) / comp.length for comp in mlb.components}
    return len(slopes) <= 1


SUITES = {
    "sl-count": sl_count,
    "pgl-count": pgl_count,
    "det-homeo": det_homeo,
    "relative-weyl": relative_weyl,
}

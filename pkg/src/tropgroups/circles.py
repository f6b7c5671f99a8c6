"""Principal bundles on a metric circle ℝ/jℤ as Čech cocycles (m, α, w).

A cocycle is a slope m in the cocharacter lattice, a rational offset α, and a
monodromy w in the Weyl group, computed against the two-vertex cover of the
circle.  Two cocycles are equivalent iff they differ by a gauge
(k, β, v) ∈ (M̌ × M̌⊗ℚ) ⋊ W acting by

    (m, α, w) ↦ (k + v·m − vwv⁻¹·k,  β + v·α − vwv⁻¹·(β + jk),  vwv⁻¹).

The isomorphism test below decides this relation exactly: for each candidate
v the slope equation is an integer lattice solve for k (Smith normal form),
and the offset equation, projected to coker(1 − w₂) ⊗ ℚ (where the
β-ambiguity dies and w₂·k ≡ k), pins down the kernel component of k to a
single rational point whose integrality is the remaining condition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Optional, Sequence

from . import intlinalg as la
from . import semiring
from .groups import (
    ParentMismatchError,
    TropGroupHom,
    TropicalGroup,
    ambient_signed_group,
    hom_sp_to_ambient,
)
from .intlinalg import Vec
from .permutations import cycles_of
from .weyl import WeylElement


@dataclass(frozen=True)
class CircleCocycle:
    """A bundle on the circle of circumference length, over the given group."""

    group: TropicalGroup
    slope: tuple[int, ...]
    offset: tuple[Q, ...]
    mono_idx: int
    length: Q

    @property
    def mono(self) -> WeylElement:
        return self.group.weyl.element(self.mono_idx)

    def to_json(self):
        return {
            "m": list(self.slope),
            "alpha": [semiring.rational_to_str(x) for x in self.offset],
            "w": self.mono_idx,
            "j": semiring.rational_to_str(self.length),
        }


def cocycle(group: TropicalGroup, m: Sequence, alpha: Sequence, w, j) -> CircleCocycle:
    w_idx = w if isinstance(w, int) else group.weyl.idx(w)
    jq = Q(j)
    if jq <= 0:
        raise ValueError("circle length must be positive")
    return CircleCocycle(
        group, tuple(int(x) for x in m), tuple(Q(x) for x in alpha), w_idx, jq
    )


def cocycle_from_json(group: TropicalGroup, data) -> CircleCocycle:
    return cocycle(
        group,
        data["m"],
        [semiring.rational_from_str(s) for s in data["alpha"]],
        int(data["w"]),
        semiring.rational_from_str(data["j"]),
    )


@dataclass(frozen=True)
class GaugeTriple:
    """A gauge (k, β, v): integral k, rational β, and a Weyl element index."""

    k: tuple[int, ...]
    beta: tuple[Q, ...]
    v_idx: int

    def to_json(self):
        return {
            "k": list(self.k),
            "beta": [semiring.rational_to_str(x) for x in self.beta],
            "v": self.v_idx,
        }


def compose_gauges(c: CircleCocycle, second: GaugeTriple, first: GaugeTriple) -> GaugeTriple:
    """The single gauge equal to applying `first` then `second`.

    Gauge triples compose by the plain semidirect-product law of
    (M̌ × M̌⊗ℚ) ⋊ W; the j-twist enters only when a gauge acts on a cocycle.
    """
    w = c.group.weyl
    vmat = w.element(second.v_idx).matrix
    k = la.vec_add(second.k, la.mat_vec(vmat, first.k))
    beta = la.vec_add(second.beta, la.mat_vec(la.mat_frac(vmat), first.beta))
    return GaugeTriple(tuple(k), tuple(beta), w.mul(second.v_idx, first.v_idx))


def gauge_transform(c: CircleCocycle, k: Sequence[int], beta: Sequence, v) -> CircleCocycle:
    """Apply the gauge (k, β, v) to the cocycle."""
    w = c.group.weyl
    v_idx = v if isinstance(v, int) else w.idx(v)
    k = tuple(int(x) for x in k)
    beta = tuple(Q(x) for x in beta)
    w2_idx = w.mul(w.mul(v_idx, c.mono_idx), w.inv(v_idx))
    vmat = la.mat_frac(w.element(v_idx).matrix)
    w2mat = la.mat_frac(w.element(w2_idx).matrix)
    kq = tuple(Q(x) for x in k)
    m = la.vec_add(kq, la.vec_sub(la.mat_vec(vmat, tuple(map(Q, c.slope))), la.mat_vec(w2mat, kq)))
    shifted = la.vec_add(beta, la.vec_scale(c.length, kq))
    alpha = la.vec_add(beta, la.vec_sub(la.mat_vec(vmat, c.offset), la.mat_vec(w2mat, shifted)))
    assert all(x.denominator == 1 for x in m)
    return CircleCocycle(c.group, tuple(int(x) for x in m), tuple(alpha), w2_idx, c.length)


def degree(c: CircleCocycle) -> tuple[int, ...]:
    """Image of the slope in π₁ = M̌/⟨Ř⟩, in reduced SNF coordinates."""
    return c.group.pi1().project(c.slope)


def pushforward(f: TropGroupHom, c: CircleCocycle) -> CircleCocycle:
    """Componentwise image (f(m), f(α), φ(w)) of the cocycle."""
    if c.group is not f.source:
        raise ParentMismatchError("cocycle does not belong to the source group")
    fm = la.mat_vec(f.lattice_map, c.slope)
    fa = la.mat_vec(la.mat_frac(f.lattice_map), c.offset)
    return CircleCocycle(f.target, fm, fa, f.weyl_map[c.mono_idx], c.length)


def isomorphism_witness(a: CircleCocycle, b: CircleCocycle) -> Optional[GaugeTriple]:
    """A gauge carrying a to b, or None; deterministic (least v wins).

    For each v conjugating the monodromies, writing A = 1 − w₂:
      slope:  A·k = m_b − v·m_a                     (integer solve)
      offset: A·β = (α_b − v·α_a) + j·w₂·k          (rational solve)
    Projecting the offset equation by the averaging projector P onto ker A
    kills the β term, and P·w₂·k = P·k, so the kernel component of k is the
    single rational point −P((α_b − v·α_a) + j·k₀)/j, leaving only an
    integrality test in the kernel basis.
    """
    if a.group is not b.group:
        raise ParentMismatchError("cocycles belong to different groups")
    if a.length != b.length:
        raise ValueError("cocycles live on circles of different lengths")
    w = a.group.weyl
    j = a.length
    for v_idx in range(len(w)):
        if w.mul(w.mul(v_idx, a.mono_idx), w.inv(v_idx)) != b.mono_idx:
            continue
        w2mat = w.element(b.mono_idx).matrix
        amat = la.mat_sub(la.identity_matrix(len(w2mat)), w2mat)
        vmat = w.element(v_idx).matrix
        target = la.vec_sub(b.slope, la.mat_vec(vmat, a.slope))
        sol = la.integer_solve(amat, target)
        if sol is None:
            continue
        k0, kernel = sol
        t = la.vec_sub(b.offset, la.mat_vec(la.mat_frac(vmat), a.offset))
        proj = la.averaging_projector(w2mat)
        s0 = la.vec_add(t, la.vec_scale(j, tuple(map(Q, k0))))
        rhs = la.vec_scale(-1 / j, la.mat_vec(proj, s0))
        if kernel:
            basis = la.mat_frac(la.from_columns(kernel))
            y = la.rational_solve(basis, rhs)
            assert y is not None
            if any(x.denominator != 1 for x in y):
                continue
            shift = la.mat_vec(la.from_columns(kernel), tuple(int(x) for x in y))
            k = la.vec_add(k0, shift)
        else:
            if not la.is_zero_vec(rhs):
                continue
            k = k0
        w2q = la.mat_frac(w2mat)
        beta_rhs = la.vec_add(t, la.vec_scale(j, la.mat_vec(w2q, tuple(map(Q, k)))))
        beta = la.rational_solve(la.mat_frac(amat), beta_rhs)
        assert beta is not None
        witness = GaugeTriple(tuple(k), tuple(beta), v_idx)
        assert gauge_transform(a, witness.k, witness.beta, witness.v_idx) == b
        return witness
    return None


def are_isomorphic(a: CircleCocycle, b: CircleCocycle) -> bool:
    return isomorphism_witness(a, b) is not None


# ---------------------------------------------------------------------------
# component classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComponentDescription:
    """One connected component of the moduli space, indexed by a monodromy class."""

    class_rep: int
    class_size: int
    torus_rank: int
    invariant_factors: tuple[int, ...]
    centralizer_order: int
    degree_fiber: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @property
    def component_size(self) -> Optional[int]:
        """Number of points when finite (no torus part), else None."""
        if self.torus_rank:
            return None
        size = 1
        for d in self.invariant_factors:
            size *= d
        return size

    def to_json(self):
        return {
            "class_rep": self.class_rep,
            "class_size": self.class_size,
            "torus_rank": self.torus_rank,
            "invariant_factors": list(self.invariant_factors),
            "centralizer_order": self.centralizer_order,
            "degree_fiber": [
                {"residue": list(r), "degree": list(d)} for r, d in self.degree_fiber
            ],
        }


def classify_components(g: TropicalGroup, j) -> tuple[ComponentDescription, ...]:
    """One component per conjugacy class [w]: torus rank = rank ker(1 − w),
    discrete invariants = invariant factors of M̌/(1 − w)M̌, plus the residual
    centralizer order and the degree of each discrete residue."""
    w = g.weyl
    pi1 = g.pi1()
    out = []
    for cls in w.conjugacy_classes():
        rep = cls[0]
        mat = w.element(rep).matrix
        amat = la.mat_sub(la.identity_matrix(g.rank), mat)
        quotient = la.QuotientLattice(g.rank, la.columns(amat))
        torus_rank = len(la.integer_kernel(amat))
        fiber = []
        if quotient.order is not None:
            for lift in quotient.representatives():
                fiber.append((quotient.project(lift), pi1.project(lift)))
        out.append(
            ComponentDescription(
                class_rep=rep,
                class_size=len(cls),
                torus_rank=torus_rank,
                invariant_factors=quotient.invariant_factors,
                centralizer_order=len(w.centralizer(rep)),
                degree_fiber=tuple(fiber),
            )
        )
    return tuple(out)


def component_for_class(g: TropicalGroup, j, w_idx: int) -> ComponentDescription:
    cls = g.weyl.class_of(w_idx)
    for comp in classify_components(g, j):
        if comp.class_rep == cls[0]:
            return comp
    raise AssertionError("class not found")


def slope_residues(g: TropicalGroup, w_idx: int) -> tuple[Vec, ...]:
    """Integral slope representatives for M̌/(1 − w)M̌, one per class."""
    mat = g.weyl.element(w_idx).matrix
    amat = la.mat_sub(la.identity_matrix(g.rank), mat)
    return la.QuotientLattice(g.rank, la.columns(amat)).representatives()


# ---------------------------------------------------------------------------
# multi-line bundles for the general-linear and symplectic models
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoverComponent:
    """A circle component of the cover: the cycle of sheets it carries."""

    sheets: tuple[int, ...]
    length: Q
    line_degree: int
    jacobian: Q  # reduced mod length

    def to_json(self):
        return {
            "sheets": list(self.sheets),
            "length": semiring.rational_to_str(self.length),
            "degree": self.line_degree,
            "jacobian": semiring.rational_to_str(self.jacobian),
        }


@dataclass(frozen=True)
class MultiLineBundle:
    components: tuple[CoverComponent, ...]
    involution: Optional[tuple[int, ...]] = None
    trivialization_violations: tuple = ()

    @property
    def total_degree(self) -> int:
        return sum(c.line_degree for c in self.components)

    def to_json(self):
        data = {"components": [c.to_json() for c in self.components]}
        if self.involution is not None:
            data["involution"] = list(self.involution)
            data["violations"] = [list(map(str, v)) for v in self.trivialization_violations]
        return data


def _reduce_mod(x: Q, modulus: Q) -> Q:
    return x - math.floor(x / modulus) * modulus


def multiline_of(m: Sequence, alpha: Sequence, perm: Sequence[int], j: Q) -> tuple[CoverComponent, ...]:
    """Cover components from the cycles of the permutation: each cycle of
    length ℓ is a circle of length ℓ·j carrying the line bundle with degree
    the cycle sum of m and Jacobian coordinate the cycle sum of α mod ℓ·j."""
    comps = []
    for cyc in cycles_of(tuple(perm)):
        length = j * len(cyc)
        deg = sum(int(m[i]) for i in cyc)
        jac = _reduce_mod(sum((Q(alpha[i]) for i in cyc), Q(0)), length)
        comps.append(CoverComponent(cyc, length, deg, jac))
    return tuple(comps)


def to_multiline(c: CircleCocycle) -> MultiLineBundle:
    """Multi-line bundle of a cocycle over a general-linear family group."""
    family = c.group.family[0] if c.group.family else None
    if family not in ("GL", "SL", "PGL", "AmbientSp"):
        raise ValueError("multi-line decomposition needs a general-linear model")
    if family in ("SL", "PGL"):
        raise ValueError("use the standard inclusion into GL first")
    perm = c.group.weyl.perm(c.mono_idx)
    return MultiLineBundle(multiline_of(c.slope, c.offset, perm, c.length))


def check_sp_trivialization(m: Sequence, alpha: Sequence, perm: Sequence[int], j: Q):
    """Violations of the symplectic trivialization on the quotient cover.

    Sheets are labeled (1..n, −1..−n) by position; the involution pairs
    i ↔ −i.  On each component of the quotient cover the line bundle with
    fibers L_x ⊗ L_{ι x} must be trivial: degree 0 and Jacobian class 0.
    """
    n2 = len(perm)
    n = n2 // 2
    bar = tuple(perm[i] % n for i in range(n))
    violations = []
    for cyc in cycles_of(bar):
        length = j * len(cyc)
        sheets = [i for i in cyc] + [i + n for i in cyc]
        deg = sum(int(m[i]) for i in sheets)
        jac = _reduce_mod(sum((Q(alpha[i]) for i in sheets), Q(0)), length)
        if deg != 0 or jac != 0:
            violations.append((cyc, deg, jac))
    return tuple(violations)


def sp_structure(c: CircleCocycle) -> MultiLineBundle:
    """Multi-line bundle with involution of a symplectic-family cocycle.

    The cover is the cycle decomposition of the signed permutation on the
    2n sheets; the involution pairs opposite sheets, and the trivialization
    of the induced bundle on the quotient cover is checked per component.
    """
    if not c.group.family or c.group.family[0] != "Sp":
        raise ValueError("cocycle is not over a symplectic-family group")
    n = c.group.family[1]
    ambient = ambient_signed_group(n)
    lifted = pushforward(hom_sp_to_ambient(n, ambient), c)
    perm = ambient.weyl.perm(lifted.mono_idx)
    comps = multiline_of(lifted.slope, lifted.offset, perm, c.length)
    iota = tuple((i + n) % (2 * n) for i in range(2 * n))
    violations = check_sp_trivialization(lifted.slope, lifted.offset, perm, c.length)
    return MultiLineBundle(comps, involution=iota, trivialization_violations=violations)

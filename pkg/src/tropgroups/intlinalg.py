"""Exact integer and rational linear algebra on immutable tuples.

Vectors are tuples of ``int`` or ``Fraction``; matrices are tuples of row
tuples.  Everything here is deterministic and exact: Smith normal form with
unimodular transforms, integer and rational solves, kernels, and quotient
lattices ℤⁿ/L with mixed torsion/free coordinates.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Optional, Sequence

Vec = tuple
Mat = tuple


def vec(xs) -> Vec:
    return tuple(xs)


def zero_vec(n: int) -> Vec:
    return (0,) * n


def vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_neg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def vec_scale(c, a: Vec) -> Vec:
    return tuple(c * x for x in a)


def vec_dot(a: Vec, b: Vec):
    return sum(x * y for x, y in zip(a, b, strict=True))


def is_zero_vec(a: Vec) -> bool:
    return all(x == 0 for x in a)


def matrix(rows) -> Mat:
    return tuple(tuple(r) for r in rows)


def identity_matrix(n: int) -> Mat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zero_matrix(m: int, n: int) -> Mat:
    return tuple((0,) * n for _ in range(m))


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a)) if a else ()


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(vec_dot(row, col) for col in bt) for row in a)


def mat_vec(a: Mat, v: Vec) -> Vec:
    return tuple(vec_dot(row, v) for row in a)


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(vec_sub(ra, rb) for ra, rb in zip(a, b, strict=True))


def mat_scale(c, a: Mat) -> Mat:
    return tuple(vec_scale(c, row) for row in a)


def mat_frac(a: Mat) -> Mat:
    return tuple(tuple(Q(x) for x in row) for row in a)


def columns(a: Mat) -> tuple:
    return transpose(a)


def from_columns(cols: Sequence[Vec]) -> Mat:
    return transpose(tuple(cols))


def int_det(a: Mat) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rational_rref(a: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form over ℚ; returns (rref, pivot column indices)."""
    m = len(a)
    n = len(a[0]) if m else 0
    rows = [[Q(x) for x in row] for row in a]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return matrix(rows), tuple(pivots)


def rational_solve(a: Mat, b: Vec) -> Optional[Vec]:
    """One rational solution x of a·x = b, or None if inconsistent."""
    m = len(a)
    n = len(a[0]) if m else 0
    aug = tuple(tuple(list(row) + [bv]) for row, bv in zip(a, b, strict=True))
    rref, pivots = rational_rref(aug)
    x = [Q(0)] * n
    for i, pc in enumerate(pivots):
        if pc == n:
            return None
        x[pc] = rref[i][n]
    # rows beyond the pivots are zero rows of the rref, consistency is implied
    return tuple(x)


def rational_kernel(a: Mat) -> tuple[Vec, ...]:
    """Basis of the rational kernel of a (as row-operated echelon free columns)."""
    m = len(a)
    n = len(a[0]) if m else 0
    rref, pivots = rational_rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Q(0)] * n
        v[fc] = Q(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rref[i][fc]
        basis.append(tuple(v))
    return tuple(basis)


def rational_inverse(a: Mat) -> Mat:
    n = len(a)
    aug = tuple(tuple(list(map(Q, row)) + [Q(int(i == j)) for j in range(n)]) for i, row in enumerate(a))
    rref, pivots = rational_rref(aug)
    if len(pivots) != n or any(p >= n for p in pivots):
        raise ValueError("matrix is singular")
    return tuple(tuple(rref[i][n:]) for i in range(n))


def mat_is_integral(a: Mat) -> bool:
    return all(Q(x).denominator == 1 for row in a for x in row)


def mat_to_int(a: Mat) -> Mat:
    return tuple(tuple(int(x) for x in row) for row in a)


def smith_normal_form(a: Mat) -> tuple[Mat, Mat, Mat]:
    """Smith normal form: returns (d, u, v) with u·a·v = d.

    d is diagonal with nonnegative entries d₁ | d₂ | …, and u, v are
    unimodular integer matrices.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d = [list(row) for row in a]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_sub(i, k, q):
        d[i] = [x - q * y for x, y in zip(d[i], d[k])]
        u[i] = [x - q * y for x, y in zip(u[i], u[k])]

    def col_sub(j, k, q):
        for row in d:
            row[j] -= q * row[k]
        for row in v:
            row[j] -= q * row[k]

    def swap_rows(i, k):
        d[i], d[k] = d[k], d[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in d:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    t = 0
    while True:
        # locate the smallest nonzero entry of the trailing block
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                e = d[i][j]
                if e != 0 and (best is None or abs(e) < best):
                    best = abs(e)
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            moved = False
            for i in range(t + 1, m):
                if d[i][t] != 0:
                    q = d[i][t] // d[t][t]
                    row_sub(i, t, q)
                    if d[i][t] != 0:
                        swap_rows(t, i)
                        moved = True
            for j in range(t + 1, n):
                if d[t][j] != 0:
                    q = d[t][j] // d[t][t]
                    col_sub(j, t, q)
                    if d[t][j] != 0:
                        swap_cols(t, j)
                        moved = True
            if not moved and all(d[i][t] == 0 for i in range(t + 1, m)) and all(
                d[t][j] == 0 for j in range(t + 1, n)
            ):
                break
        # enforce divisibility of the trailing block by the pivot
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if d[i][j] % d[t][t] != 0:
                    bad = j
                    break
            if bad is not None:
                break
        if bad is not None:
            # mix the offending column into column t and redo this pivot
            col_sub(t, bad, -1)
            continue
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
        if t == min(m, n):
            break
    return matrix(d), matrix(u), matrix(v)


def diagonal_of(d: Mat) -> tuple[int, ...]:
    k = min(len(d), len(d[0]) if d else 0)
    return tuple(d[i][i] for i in range(k))


def integer_solve(a: Mat, b: Vec) -> Optional[tuple[Vec, tuple[Vec, ...]]]:
    """Solve a·x = b over ℤ.

    Returns (particular solution, basis of the integer kernel of a), or
    None when no integer solution exists.  The kernel basis spans the full
    (saturated) kernel lattice.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d, u, v = smith_normal_form(a)
    diag = diagonal_of(d)
    c = mat_vec(u, b)
    y = [0] * n
    rank = sum(1 for e in diag if e != 0)
    for i in range(m):
        di = diag[i] if i < len(diag) else 0
        if di == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % di != 0:
                return None
            y[i] = c[i] // di
    x0 = mat_vec(v, tuple(y))
    cols = columns(v)
    kernel = tuple(cols[i] for i in range(rank, n))
    return x0, kernel


def integer_kernel(a: Mat) -> tuple[Vec, ...]:
    n = len(a[0]) if a else 0
    sol = integer_solve(a, zero_vec(len(a)))
    assert sol is not None
    if n == 0:
        return ()
    return sol[1]


def lattice_index(a: Mat) -> int:
    """Index of the image lattice of a full-column-rank integer map, 0 if rank-deficient."""
    d, _, _ = smith_normal_form(a)
    diag = [e for e in diagonal_of(d) if e != 0]
    if len(diag) < (len(a[0]) if a else 0):
        return 0
    prod = 1
    for e in diag:
        prod *= e
    return prod


class QuotientLattice:
    """The quotient ℤⁿ/L for L spanned by given integer generators.

    Provides invariant factors (torsion entries > 1 plus the free rank) and a
    projection sending any vector to reduced coordinates: torsion coordinates
    mod their invariant factor, followed by the free coordinates.
    """

    def __init__(self, ambient_rank: int, generators: Sequence[Vec]):
        self.rank = ambient_rank
        gens = [vec(g) for g in generators if not is_zero_vec(g)]
        b = from_columns(gens) if gens else zero_matrix(ambient_rank, 1)
        if ambient_rank == 0:
            self._u = ()
            self.torsion = ()
            self._torsion_rows = ()
            self._free_rows = ()
            self.free_rank = 0
            return
        d, u, _ = smith_normal_form(b)
        diag = list(diagonal_of(d)) + [0] * (ambient_rank - min(len(b), len(b[0])))
        diag = diag[:ambient_rank]
        # normalize the sign of free rows for a deterministic projection
        urows = [list(r) for r in u]
        for i, e in enumerate(diag):
            if e == 0:
                lead = next((x for x in urows[i] if x != 0), 1)
                if lead < 0:
                    urows[i] = [-x for x in urows[i]]
        self._u = matrix(urows)
        self._torsion_rows = tuple(i for i, e in enumerate(diag) if e > 1)
        self._free_rows = tuple(i for i, e in enumerate(diag) if e == 0)
        self.torsion = tuple(diag[i] for i in self._torsion_rows)
        self.free_rank = len(self._free_rows)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Torsion factors followed by one 0 per free summand."""
        return self.torsion + (0,) * self.free_rank

    @property
    def order(self) -> Optional[int]:
        """Number of elements, or None when the quotient is infinite."""
        if self.free_rank:
            return None
        prod = 1
        for e in self.torsion:
            prod *= e
        return prod

    def project(self, x: Vec) -> Vec:
        """Reduced coordinates of x in the quotient (torsion mod d, then free)."""
        z = mat_vec(self._u, x)
        tor = tuple(z[i] % d for i, d in zip(self._torsion_rows, self.torsion))
        return tor + tuple(z[i] for i in self._free_rows)

    def free_part(self, x: Vec) -> Vec:
        """Free coordinates of a rational vector under the induced ℚ-projection."""
        z = mat_vec(mat_frac(self._u), tuple(Q(t) for t in x))
        return tuple(z[i] for i in self._free_rows)

    def representatives(self):
        """One integral lift per element; only for finite quotients."""
        if self.free_rank:
            raise ValueError("quotient is infinite")
        uinv = mat_to_int(rational_inverse(self._u))
        reps = []
        idx = [0] * len(self.torsion)
        while True:
            z = [0] * self.rank
            for pos, row in enumerate(self._torsion_rows):
                z[row] = idx[pos]
            reps.append(mat_vec(uinv, tuple(z)))
            for pos in range(len(idx) - 1, -1, -1):
                idx[pos] += 1
                if idx[pos] < self.torsion[pos]:
                    break
                idx[pos] = 0
            else:
                break
        return tuple(reps)


def matrix_order(a: Mat, cap: int = 10_000) -> int:
    """Multiplicative order of an integer matrix of finite order."""
    n = len(a)
    ident = identity_matrix(n)
    p = a
    for k in range(1, cap + 1):
        if p == ident:
            return k
        p = mat_mul(p, a)
    raise ValueError("matrix order exceeds cap")


def averaging_projector(a: Mat) -> Mat:
    """Rational projector onto ker(1 − a) along im(1 − a), for finite-order a."""
    n = len(a)
    order = matrix_order(a)
    acc = mat_frac(identity_matrix(n))
    p = a
    for _ in range(order - 1):
        acc = tuple(tuple(x + Q(y) for x, y in zip(ra, rp)) for ra, rp in zip(acc, p))
        p = mat_mul(p, a)
    return mat_scale(Q(1, order), acc)

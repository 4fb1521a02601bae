"""Morse bookkeeping for critical points of e_1 on a deformed hypersurface.

A critical point with coincidence pattern pi is solved in class variables
(one Z per part).  This module builds the per-partition critical system,
restricts the ambient Hessian to the tangent hyperplane {sum X_i = 0}, and
classifies each solved point: orientation sign, Morse index of e_1 restricted
to the hypersurface, and whether the negative eigenspace sits inside the
pattern-fixed subspace.  The index is read off exactly through characteristic
polynomial coefficient signs, never through numeric eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateCritical, DegeneratePattern, DimensionMismatch
from .field import QQ
from .mpoly import MPoly
from .partitions import orbit_weight
from .sympoly import substitute_partition


@dataclass(frozen=True)
class CriticalRecord:
    point: object
    partition: tuple
    orientation: int
    index_minus: int
    neg_in_fixed: bool
    orbit_weight: int

    def __post_init__(self):
        length = sum(len(pi) for pi in self.partition)
        assert self.orientation in (-1, 0, 1)
        assert self.index_minus >= 0
        if self.neg_in_fixed:
            # dim of the fixed subspace of {sum X = 0} is length(pi) - 1
            assert self.index_minus <= length - 1

    @property
    def table_row(self):
        return (self.partition, self.index_minus, self.orientation,
                self.neg_in_fixed)


def _flat_parts(mp):
    return [part for pi in mp for part in pi]


def critical_system(qpi, mp):
    """Sum-of-squares critical system for Q restricted to the pattern pi.

    With Z_j standing for a class of pi_j equal coordinates, the chain rule
    gives dQpi/dZ_j = pi_j * g_j where g_j is the common coordinate partial.
    Criticality of e_1 means all g_j agree, so each pair is weighted by the
    opposite part size:

        Qbar = Qpi^2 + sum_{j<j'} (pi_j' dQpi/dZ_j - pi_j dQpi/dZ_j')^2
    """
    parts = _flat_parts(mp)
    m = len(parts)
    if qpi.nvars < m:
        raise DimensionMismatch("Qpi has %d variables, pattern needs %d"
                                % (qpi.nvars, m))
    grads = [qpi.derivative(j) for j in range(m)]
    qbar = qpi * qpi
    for j in range(m):
        for jp in range(j + 1, m):
            diff = grads[j] * QQ(parts[jp]) - grads[jp] * QQ(parts[j])
            qbar = qbar + diff * diff
    return qbar


def critical_parts(qpi, mp):
    """The same conditions as separate generators: Qpi together with the
    consecutive weighted gradient differences (equality is transitive)."""
    parts = _flat_parts(mp)
    m = len(parts)
    grads = [qpi.derivative(j) for j in range(m)]
    gens = [qpi]
    for j in range(m - 1):
        gens.append(grads[j] * QQ(parts[j + 1]) - grads[j + 1] * QQ(parts[j]))
    return gens


def orientation_poly(qpi, mp):
    """sum_j dQpi/dZ_j, whose value at the point equals sum_a dQ/dX_a."""
    m = len(_flat_parts(mp))
    acc = MPoly.zero(qpi.field, qpi.nvars)
    for j in range(m):
        acc = acc + qpi.derivative(j)
    return acc


# ---------------------------------------------------------------------------
# Hessian restricted to the tangent hyperplane
# ---------------------------------------------------------------------------

def hessian_form(Q, blocks=None, mp=None):
    """Matrix of (d_1 - d_i)(d_1 - d_j) Q for i, j in [2, k].

    The vectors e_1 - e_i span {sum X = 0}, so this is the ambient Hessian
    form restricted to the tangent hyperplane at a critical point.  Entries
    are polynomials in the X variables, or in the class variables when a
    partition is supplied.
    """
    k = Q.nvars if blocks is None else sum(blocks)
    firsts = [Q.derivative(0).derivative(b) for b in range(k)]
    entries = []
    for i in range(1, k):
        di = Q.derivative(i)
        row = []
        for j in range(1, k):
            h = firsts[0] - firsts[i] - firsts[j] + di.derivative(j)
            row.append(h)
        entries.append(row)
    if mp is not None:
        entries = [[substitute_partition(h, blocks, mp) for h in row]
                   for row in entries]
    return entries


def _charpoly_generic(mat, zero, one, half_scale):
    """Faddeev-LeVerrier char poly coefficients c_0..c_n of det(tI - M) for a
    matrix over any commutative Q-algebra; half_scale(x, m) must return x/m."""
    n = len(mat)
    A = [[one if i == j else zero for j in range(n)] for i in range(n)]
    cs = [one]
    for m in range(1, n + 1):
        N = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for t in range(n):
                    acc = acc + mat[i][t] * A[t][j]
                row.append(acc)
            N.append(row)
        tr = zero
        for i in range(n):
            tr = tr + N[i][i]
        c = half_scale(-tr, m)
        cs.append(c)
        for i in range(n):
            N[i][i] = N[i][i] + c
        A = N
    cs.reverse()
    return cs


def charpoly_mpoly(mat, field, nvars):
    """Characteristic polynomial coefficients for a matrix of MPoly entries."""
    zero = MPoly.zero(field, nvars)
    one = MPoly.const(field, nvars, 1)
    return _charpoly_generic(
        mat, zero, one, lambda x, m: x * field.from_rat(QQ(1, m)))


def morse_index(mat, signer=None, charcoeffs=None):
    """Number of negative eigenvalues of a symmetric matrix.

    The characteristic polynomial is real-rooted, so Descartes' rule applied
    to chi(-t) is exact: count sign variations of the coefficient sequence,
    skipping zeros.  ``signer`` maps an entry-domain value to its sign; it
    defaults to reading int/QQ scalars directly.
    """
    if charcoeffs is None:
        if len(mat) == 0:
            return 0
        charcoeffs = _scalar_charpoly(mat)
    if signer is None:
        signer = lambda c: (c > 0) - (c < 0)
    variations = 0
    prev = 0
    for i, c in enumerate(charcoeffs):
        s = signer(c)
        if s == 0:
            continue
        s = s if i % 2 == 0 else -s  # coefficient of chi(-t)
        if prev != 0 and s != prev:
            variations += 1
        prev = s
    return variations


def _scalar_charpoly(mat):
    n = len(mat)
    if n == 0:
        return [1]
    from fractions import Fraction
    zero, one = Fraction(0), Fraction(1)
    m2 = [[Fraction(x) for x in row] for row in mat]
    return _charpoly_generic(m2, zero, one, lambda x, m: x / m)


def index_of_form(mat, point, field, nvars):
    """Morse index of a symmetric matrix of class-variable polynomials,
    evaluated at an algebraic point."""
    if len(mat) == 0:
        return 0
    cs = charpoly_mpoly(mat, field, nvars)
    return morse_index(mat, signer=point.sign_of_mpoly, charcoeffs=cs)


def form_is_singular(mat, point, field, nvars):
    if len(mat) == 0:
        return False
    cs = charpoly_mpoly(mat, field, nvars)
    return point.sign_of_mpoly(cs[0]) == 0  # chi(0) = +-det


# ---------------------------------------------------------------------------
# Isotypic splitting of the restricted Hessian
# ---------------------------------------------------------------------------

def _class_layout(blocks, mp):
    """(block index, part size, first X index) per class, block-major."""
    layout = []
    x = 0
    for i, pi in enumerate(mp):
        for part in pi:
            layout.append((i, part, x))
            x += part
    if sum(blocks) != x:
        raise DimensionMismatch("partition does not cover the blocks")
    return layout


def check_exact_pattern(blocks, mp, point):
    """The solved class values must be pairwise distinct within each block;
    a coincidence means the point belongs to a coarser pattern."""
    layout = _class_layout(blocks, mp)
    m = len(layout)
    f = point.field
    for a in range(m):
        for b in range(a + 1, m):
            if layout[a][0] != layout[b][0]:
                continue
            za = MPoly.var(f, point.nvars, a)
            zb = MPoly.var(f, point.nvars, b)
            if point.sign_of_mpoly(za - zb) == 0:
                return False
    return True


def isotypic_split(Q, blocks, mp, point):
    """Split the restricted Hessian at a pattern point along the symmetry.

    Returns (fixed, scalars): ``fixed`` is the (length(pi)-1)-square matrix of
    the form on the fixed subspace in the basis pi_{r+1} u_r - pi_r u_{r+1}
    (u_r the indicator of class r), as class-variable polynomials; ``scalars``
    lists (class index, part size, sign) for every part of size >= 2, where
    the sign is that of B(w, w) with w = e_a - e_b inside the part.  The
    stabilizer acts irreducibly there, so one sign decides the whole isotypic
    summand.
    """
    if not check_exact_pattern(blocks, mp, point):
        raise DegeneratePattern("point does not realize %r exactly" % (mp,))
    layout = _class_layout(blocks, mp)
    m = len(layout)
    field = Q.field

    # representative second partials per class pair
    grads = [Q.derivative(layout[a][2]) for a in range(m)]
    diag = []    # d^2 Q / dX_a dX_a, a in class
    cross = []   # d^2 Q / dX_a dX_b, a != b (same class needs size >= 2)
    for a in range(m):
        row = []
        xa = layout[a][2]
        diag.append(substitute_partition(
            grads[a].derivative(xa), blocks, mp))
        for b in range(m):
            if b < a:
                row.append(cross[b][a])
            elif b == a:
                if layout[a][1] >= 2:
                    row.append(substitute_partition(
                        grads[a].derivative(xa + 1), blocks, mp))
                else:
                    row.append(None)
            else:
                row.append(substitute_partition(
                    grads[a].derivative(layout[b][2]), blocks, mp))
        cross.append(row)

    # S[a][b] = B(u_a, u_b) summed over coordinates
    S = []
    for a in range(m):
        row = []
        na = layout[a][1]
        for b in range(m):
            nb = layout[b][1]
            if a == b:
                v = diag[a] * QQ(na)
                if na >= 2:
                    v = v + cross[a][a] * QQ(na * (na - 1))
            else:
                v = cross[a][b] * QQ(na * nb)
            row.append(v)
        S.append(row)

    sizes = [layout[a][1] for a in range(m)]
    fixed = []
    for r in range(m - 1):
        row = []
        for s in range(m - 1):
            v = (S[r][s] * QQ(sizes[r + 1] * sizes[s + 1])
                 - S[r][s + 1] * QQ(sizes[r + 1] * sizes[s])
                 - S[r + 1][s] * QQ(sizes[r] * sizes[s + 1])
                 + S[r + 1][s + 1] * QQ(sizes[r] * sizes[s]))
            row.append(v)
        fixed.append(row)

    scalars = []
    for a in range(m):
        if layout[a][1] >= 2:
            mu = (diag[a] - cross[a][a]) * QQ(2)
            scalars.append((a, layout[a][1], point.sign_of_mpoly(mu)))
    return fixed, scalars


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

def classify(Q, blocks, mp, point, qpi=None, cross_check=True):
    """Assemble the CriticalRecord of a solved pattern point.

    The Morse index reported is that of e_1 restricted to the hypersurface.
    At a critical point the gradient of Q is g*(1,..,1), and the restricted
    Hessian of e_1 equals -(1/g) times the Hessian form of Q on the tangent
    hyperplane, so for orientation +1 the form is negated before counting.
    """
    if qpi is None:
        qpi = substitute_partition(Q, blocks, mp)
    field = Q.field
    nz = point.nvars

    orientation = point.sign_of_mpoly(orientation_poly(qpi, mp))
    if orientation == 0:
        raise DegenerateCritical("zero orientation; hypersurface singular "
                                 "at a critical point")

    fixed, scalars = isotypic_split(Q, blocks, mp, point)
    if orientation > 0:
        fixed = [[-v for v in row] for row in fixed]
        scalars = [(a, size, -s) for (a, size, s) in scalars]

    for _, _, s in scalars:
        if s == 0:
            raise DegenerateCritical("singular isotypic scalar")
    idx = index_of_form(fixed, point, field, nz)
    if form_is_singular(fixed, point, field, nz):
        raise DegenerateCritical("singular fixed-space Hessian block")
    index_minus = idx + sum(size - 1 for (_, size, s) in scalars if s < 0)
    neg_in_fixed = all(s >= 0 for (_, _, s) in scalars)

    if cross_check:
        full = hessian_form(Q, blocks, mp)
        if orientation > 0:
            full = [[-v for v in row] for row in full]
        if form_is_singular(full, point, field, nz):
            raise DegenerateCritical("singular restricted Hessian")
        full_idx = index_of_form(full, point, field, nz)
        assert full_idx == index_minus, \
            "isotypic index %d != full Hessian index %d" % (index_minus,
                                                            full_idx)

    return CriticalRecord(
        point=point,
        partition=tuple(tuple(pi) for pi in mp),
        orientation=orientation,
        index_minus=index_minus,
        neg_in_fixed=neg_in_fixed,
        orbit_weight=orbit_weight(blocks, mp),
    )

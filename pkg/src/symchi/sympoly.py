"""Block-symmetric polynomial toolkit.

Variables split into blocks (k_1,...,k_w); the group is the product of the
symmetric groups of the blocks.  This module provides symmetry checks and
symmetrization, the Newton-identity g-polynomials, the Hankel matrix for the
power-sum orbit-space description, the coincidence substitution used by the
deformation algorithm, and the deformation operator itself.
"""

from __future__ import annotations

from itertools import permutations, product
from math import factorial

from .errors import (
    DimensionMismatch,
    GroupTooLarge,
    IncompatiblePartition,
    OddDegree,
)
from .field import QQ
from .mpoly import MPoly
from .upoly import UPoly, count_real_roots

DEFAULT_GROUP_CAP = 40320  # 8!


def block_ranges(blocks):
    """Half-open variable index ranges, one per block."""
    out = []
    start = 0
    for k in blocks:
        out.append(range(start, start + k))
        start += k
    return out


def is_block_symmetric(P, blocks):
    """True iff P is invariant under every adjacent transposition inside
    each block (those transpositions generate the product group)."""
    assert sum(blocks) <= P.nvars
    for rng in block_ranges(blocks):
        for i in rng[:-1]:
            perm = list(range(P.nvars))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if P.permute_vars(perm) != P:
                return False
    return True


def symmetrize(P, blocks, cap=DEFAULT_GROUP_CAP):
    """Orbit sum of P over the full block-permutation group."""
    order = 1
    for k in blocks:
        order *= factorial(k)
    if order > cap:
        raise GroupTooLarge("group order %d exceeds cap %d" % (order, cap))
    total = MPoly.zero(P.field, P.nvars)
    rngs = block_ranges(blocks)
    for sigmas in product(*[permutations(rng) for rng in rngs]):
        perm = list(range(P.nvars))
        for rng, sig in zip(rngs, sigmas):
            for src, dst in zip(rng, sig):
                perm[src] = dst
        total = total + P.permute_vars(perm)
    return total


def g_polys(k, jmax, field):
    """g_0..g_jmax for k variables: g_j expresses the power sum p_j through
    p_1..p_k (stand-ins Z_1..Z_k), via the Newton identities."""
    assert k >= 1 and jmax >= 0
    gs = [MPoly.const(field, k, k)]
    for j in range(1, min(k, jmax) + 1):
        gs.append(MPoly.var(field, k, j - 1))
    if jmax <= k:
        return gs[: jmax + 1]
    # elementary symmetrics in terms of the Z's: i*e_i = sum (-1)^(t-1) e_(i-t) p_t
    es = [MPoly.const(field, k, 1)]
    for i in range(1, k + 1):
        acc = MPoly.zero(field, k)
        for t in range(1, i + 1):
            term = es[i - t] * MPoly.var(field, k, t - 1)
            acc = acc + (term if t % 2 == 1 else -term)
        es.append(acc * field.from_rat(QQ(1, i)))
    # p_j = sum (-1)^(i-1) e_i p_(j-i) for j > k
    for j in range(k + 1, jmax + 1):
        acc = MPoly.zero(field, k)
        for i in range(1, k + 1):
            term = es[i] * gs[j - i]
            acc = acc + (term if i % 2 == 1 else -term)
        gs.append(acc)
    return gs


def g_poly(k, j, field):
    return g_polys(k, j, field)[j]


def hankel(k, field, scaled=False):
    """k x k matrix with entry (i,j) = g_(i+j-2), optionally scaled by i*j.

    The two forms are diagonally congruent, so they agree on semidefiniteness.
    """
    gs = g_polys(k, 2 * k - 2, field)
    out = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            entry = gs[i + j - 2]
            if scaled:
                entry = entry * (i * j)
            row.append(entry)
        out.append(row)
    return out


def orbit_map(x, blocks, field, basis="power"):
    """Blockwise symmetric-function coordinates of a point: power sums
    p_1..p_k per block, or elementary symmetrics with basis='elementary'."""
    assert basis in ("power", "elementary")
    if len(x) != sum(blocks):
        raise DimensionMismatch("point length %d, blocks sum %d"
                                % (len(x), sum(blocks)))
    pt = [xi if not isinstance(xi, int) else field.from_rat(xi) for xi in x]
    out = []
    for rng in block_ranges(blocks):
        vals = [pt[i] for i in rng]
        k = len(vals)
        if basis == "power":
            for t in range(1, k + 1):
                acc = field.zero()
                for v in vals:
                    acc = acc + v ** t
                out.append(acc)
        else:
            rows = [field.one()] + [field.zero()] * k
            for v in vals:
                for j in range(k, 0, -1):
                    rows[j] = rows[j] + rows[j - 1] * v
            out.extend(rows[1:])
    return tuple(out)


def charpoly_coeffs(mat, field):
    """Characteristic polynomial of a symmetric matrix of field elements by
    the Faddeev-LeVerrier recursion; returns [c_0..c_n] with
    det(t*I - M) = sum c_i t^i, c_n = 1."""
    n = len(mat)
    M = [[mat[i][j] for j in range(n)] for i in range(n)]
    A = [[field.zero() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        A[i][i] = field.one()
    cs = [field.one()]  # leading
    N = [row[:] for row in A]
    for m in range(1, n + 1):
        # N = M * previous adjusted
        N = [[sum_field(field, (M[i][t] * A[t][j] for t in range(n)))
              for j in range(n)] for i in range(n)]
        tr = sum_field(field, (N[i][i] for i in range(n)))
        c = -(tr * field.from_rat(QQ(1, m)))
        cs.append(c)
        for i in range(n):
            N[i][i] = N[i][i] + c
        A = N
    cs.reverse()  # now c_0..c_n
    return cs


def sum_field(field, it):
    acc = field.zero()
    for v in it:
        acc = acc + v
    return acc


def psd_via_charpoly(mat, field):
    """PSD test for a symmetric field matrix: all eigenvalues are real, so
    nonnegativity is equivalent to the coefficient signs of det(tI-M)
    alternating as (-1)^(n-i) c_i >= 0."""
    n = len(mat)
    cs = charpoly_coeffs(mat, field)
    for i in range(n + 1):
        s = field.sign(cs[i])
        if s != 0 and s != (1 if (n - i) % 2 == 0 else -1):
            return False
    return True


def count_negative_eigenvalues(mat, field):
    """Number of negative eigenvalues of a symmetric field matrix, via the
    real roots of the characteristic polynomial restricted to t < 0."""
    cs = charpoly_coeffs(mat, field)
    f = UPoly(cs, field)
    x = UPoly.x(field)
    from .upoly import RootFinder
    rf = RootFinder(f)
    total = 0
    for pt in rf.thom_roots():
        if pt.sign_of(x) < 0:
            # multiplicity of this root of the (non-squarefree) charpoly
            total += _root_multiplicity(f, rf, pt)
    return total


def _root_multiplicity(f, rf, pt):
    m = 0
    d = f
    while True:
        m += 1
        d = d.derivative()
        if d.is_zero() or pt.sign_of(d) != 0:
            return m


def orbit_membership(z, F, blocks, field, scaled=False):
    """Procesi-Schwarz test: does z lie in the image of R^k under the
    blockwise power-sum map, inside the zero set of F?

    F is the power-sum rewrite of the defining polynomial (or None for the
    whole image).  The image is cut out by F(z)=0 together with positive
    semidefiniteness of the per-block Hankel matrices.
    """
    if len(z) != sum(blocks):
        raise DimensionMismatch("point length %d, blocks sum %d"
                                % (len(z), sum(blocks)))
    pt = [v if not isinstance(v, int) else field.from_rat(v) for v in z]
    if F is not None and not F.is_zero():
        if not field.is_zero(F.eval(pt)):
            return False
    pos = 0
    for k, rng in zip(blocks, block_ranges(blocks)):
        H = hankel(k, field, scaled=scaled)
        vals = {i - pos: pt[i] for i in rng}
        num = [[H[i][j].eval([vals[t] for t in range(k)])
                for j in range(k)] for i in range(k)]
        if not psd_via_charpoly(num, field):
            return False
        pos += k
    return True


def substitute_partition(P, blocks, mp):
    """Coincidence substitution: in block i, the first pi_1 variables become
    Z_1, the next pi_2 become Z_2, and so on; returns an MPoly in
    length(mp) variables (class variables, blocks kept in order)."""
    if len(mp) != len(blocks):
        raise IncompatiblePartition("expected %d component partitions"
                                    % len(blocks))
    for k, pi in zip(blocks, mp):
        if sum(pi) != k or any(p <= 0 for p in pi):
            raise IncompatiblePartition("partition %r does not sum to %d"
                                        % (pi, k))
        if list(pi) != sorted(pi, reverse=True):
            raise IncompatiblePartition("parts must be nonincreasing")
    nz = sum(len(pi) for pi in mp)
    mapping = {}
    zpos = 0
    xpos = 0
    for pi in mp:
        for part in pi:
            for _ in range(part):
                mapping[xpos] = zpos
                xpos += 1
            zpos += 1
    # auxiliary variables (beyond the blocks) keep their own slots
    extra = P.nvars - sum(blocks)
    for t in range(extra):
        mapping[sum(blocks) + t] = nz + t
    return P.rename_vars(mapping, nz + extra)


def deform(P, d, zeta, k=None):
    """Def(P, zeta, d) = P - zeta*(1 + sum_{i<=k} X_i^d); d must be even.

    k defaults to all variables of P; pass the block total explicitly when P
    carries auxiliary variables that must stay out of the deformation term.
    """
    if d % 2:
        raise OddDegree("deformation degree must be even, got %d" % d)
    if k is None:
        k = P.nvars
    acc = MPoly.const(P.field, P.nvars, 1)
    for i in range(k):
        acc = acc + MPoly.var(P.field, P.nvars, i) ** d
    return P - acc * zeta

"""Independent tiny-scale ground truth for generalized Euler characteristics.

Everything here is deliberately self-contained: dense Fraction polynomials,
Sturm sequences, interval isolation, and a minimal two-variable cylindrical
decomposition.  Nothing is shared with the main engine, so agreement between
the two is meaningful evidence.

chi denotes the Borel-Moore style generalized Euler characteristic: an open
d-cell contributes (-1)^d, so chi(R) = -1 and chi of a point is 1.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product

from .errors import NonDelineable, NotClosedUnderAction


def _frac(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    return Fraction(int(v.numerator), int(v.denominator))


# ---------------------------------------------------------------------------
# dense univariate polynomials over Fraction
# ---------------------------------------------------------------------------

def u_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def u_add(a, b):
    n = max(len(a), len(b))
    return u_trim([
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
        for i in range(n)
    ])


def u_neg(a):
    return [-c for c in a]


def u_sub(a, b):
    return u_add(a, u_neg(b))


def u_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return u_trim(out)


def u_scale(a, c):
    return [] if c == 0 else [x * c for x in a]


def u_divmod(a, b):
    assert b
    d = len(b) - 1
    if len(a) - 1 < d:
        return [], list(a)
    r = list(a)
    q = [Fraction(0)] * (len(a) - d)
    inv = 1 / b[-1]
    for i in range(len(a) - 1 - d, -1, -1):
        c = r[i + d] * inv
        if c:
            q[i] = c
            for j in range(d + 1):
                r[i + j] -= c * b[j]
    return u_trim(q), u_trim(r[:d])


def u_rem(a, b):
    return u_divmod(a, b)[1]


def u_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, u_rem(a, b)
    if not a:
        return []
    inv = 1 / a[-1]
    return [c * inv for c in a]


def u_deriv(a):
    return [c * i for i, c in enumerate(a)][1:]


def u_eval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def u_sqfree(a):
    assert a
    if len(a) <= 2:
        inv = 1 / a[-1]
        return [c * inv for c in a]
    g = u_gcd(a, u_deriv(a))
    if len(g) == 1:
        inv = 1 / a[-1]
        return [c * inv for c in a]
    q, r = u_divmod(a, g)
    assert not r
    inv = 1 / q[-1]
    return [c * inv for c in q]


def _sgn(x):
    return (x > 0) - (x < 0)


def u_var_at(chain, x):
    n, prev = 0, 0
    for f in chain:
        s = _sgn(u_eval(f, x))
        if s and prev and s != prev:
            n += 1
        if s:
            prev = s
    return n


def u_var_inf(chain, positive):
    n, prev = 0, 0
    for f in chain:
        s = _sgn(f[-1])
        if not positive and (len(f) - 1) % 2:
            s = -s
        if s and prev and s != prev:
            n += 1
        if s:
            prev = s
    return n


def u_srs(p, q):
    chain = [list(p)]
    if q:
        chain.append(list(q))
        while True:
            r = u_rem(chain[-2], chain[-1])
            if not r:
                break
            chain.append(u_neg(r))
    return chain


def u_count_roots(f, a=None, b=None):
    """Distinct real roots of f in (a, b); None means unbounded side."""
    f = u_sqfree(f)
    if len(f) <= 1:
        return 0
    chain = u_srs(f, u_deriv(f))
    va = u_var_inf(chain, False) if a is None else u_var_at(chain, a)
    vb = u_var_inf(chain, True) if b is None else u_var_at(chain, b)
    return va - vb


def u_root_bound(f):
    lc = abs(f[-1])
    return 1 + max(abs(c) / lc for c in f)


def u_isolate(f):
    """Disjoint open intervals with rational non-root endpoints, one root
    each, for squarefree f, in increasing order."""
    f = u_sqfree(f)
    if len(f) <= 1:
        return []
    chain = u_srs(f, u_deriv(f))

    def count(a, b):
        return u_var_at(chain, a) - u_var_at(chain, b)

    B = u_root_bound(f)
    while u_eval(f, -B) == 0 or u_eval(f, B) == 0:
        B += 1
    out = []
    stack = [(-B, B)]
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        m = (a + b) / 2
        while u_eval(f, m) == 0:
            m = (a + 2 * m) / 3  # nudge off the root, stay inside
            if u_eval(f, m) == 0:
                m = (m + b) / 2
        stack.append((a, m))
        stack.append((m, b))
    out.sort()
    return out


def u_sign_at_root(g, f, a, b):
    """Sign of g at the unique root of squarefree f in (a, b)."""
    chain = u_srs(f, u_rem(u_mul(u_deriv(f), g), f))
    return u_var_at(chain, a) - u_var_at(chain, b)


# ---------------------------------------------------------------------------
# one-variable decomposition
# ---------------------------------------------------------------------------

def _coeff_list(poly):
    """Adapt an engine UPoly / coefficient sequence to a Fraction list."""
    if hasattr(poly, "coeffs"):
        return u_trim([_frac(c) for c in poly.coeffs])
    return u_trim([_frac(c) for c in poly])


def cells_1d(family):
    """Sign-invariant cells of the line for a family of Fraction polys.

    Returns (point_cells, interval_cells): each point cell is a sign tuple,
    one per family member; interval cells likewise (intervals include the two
    unbounded rays).
    """
    nz = [f for f in family if f and len(f) > 1]
    if not nz:
        sig = tuple(_sgn(f[0]) if f else 0 for f in family)
        return [], [sig]
    P = u_sqfree(_product(nz))
    roots = u_isolate(P)
    pts = []
    for (a, b) in roots:
        sig = []
        for f in family:
            if not f:
                sig.append(0)
            elif len(f) == 1:
                sig.append(_sgn(f[0]))
            else:
                sig.append(u_sign_at_root(f, P, a, b))
        pts.append(tuple(sig))
    samples = []
    if roots:
        samples.append(roots[0][0] - 1)
        for i in range(len(roots) - 1):
            samples.append((roots[i][1] + roots[i + 1][0]) / 2)
        samples.append(roots[-1][1] + 1)
    else:
        samples.append(Fraction(0))
    ivs = []
    for s in samples:
        ivs.append(tuple(_sgn(u_eval(f, s)) if f else 0 for f in family))
    return pts, ivs


def _product(polys):
    out = [Fraction(1)]
    for p in polys:
        out = u_mul(out, p)
    return out


def chi_oracle_1d(family, predicate):
    """chi of the subset of R selected by predicate(sign vector)."""
    fam = [_coeff_list(f) for f in family]
    pts, ivs = cells_1d(fam)
    chi = 0
    for sig in pts:
        if predicate(sig):
            chi += 1
    for sig in ivs:
        if predicate(sig):
            chi -= 1
    return chi


# ---------------------------------------------------------------------------
# residue arithmetic at one algebraic point (dynamic evaluation)
# ---------------------------------------------------------------------------

class PointCtx:
    """The field Q(alpha) for the unique root alpha of `modulus` in (a, b).

    The modulus may shrink when a zero test splits it; previously reduced
    representatives stay valid modulo any divisor.
    """

    def __init__(self, modulus, a, b):
        self.m = list(modulus)
        self.a = a
        self.b = b
        assert u_count_roots(self.m, a, b) == 1

    def reduce(self, g):
        return u_rem(g, self.m)

    def is_zero(self, g):
        g = self.reduce(g)
        if not g:
            return True
        h = u_gcd(g, self.m)
        if len(h) == 1:
            return False
        if u_count_roots(h, self.a, self.b) == 1:
            self.m = h
            return True
        q, r = u_divmod(self.m, h)
        assert not r
        self.m = q
        return False

    def sign(self, g):
        if self.is_zero(g):
            return 0
        return u_sign_at_root(self.reduce(g), self.m, self.a, self.b)

    def inv(self, g):
        assert not self.is_zero(g)
        g = self.reduce(g)
        # extended euclid: u*g + v*m = 1
        r0, r1 = list(self.m), list(g)
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = u_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, u_sub(s0, u_mul(q, s1))
        assert len(r0) == 1, "element not invertible after zero test"
        return self.reduce(u_scale(s0, 1 / r0[0]))


# polynomials in y over Q(alpha): lists of residue representatives

def y_trim(ctx, p):
    while p and ctx.is_zero(p[-1]):
        p.pop()
    return p


def y_deriv(p):
    return [u_scale(c, i) for i, c in enumerate(p)][1:]


def y_rem(ctx, a, b):
    b = y_trim(ctx, list(b))
    assert b
    d = len(b) - 1
    r = [ctx.reduce(c) for c in a]
    r = y_trim(ctx, r)
    if len(r) - 1 < d:
        return r
    inv = ctx.inv(b[-1])
    for i in range(len(r) - 1 - d, -1, -1):
        c = ctx.reduce(u_mul(r[i + d], inv))
        if not ctx.is_zero(c):
            for j in range(d + 1):
                r[i + j] = ctx.reduce(u_sub(r[i + j], u_mul(c, b[j])))
    return y_trim(ctx, r[:d])


def y_gcd(ctx, a, b):
    a = y_trim(ctx, list(a))
    b = y_trim(ctx, list(b))
    while b:
        a, b = b, y_rem(ctx, a, b)
    if not a:
        return []
    inv = ctx.inv(a[-1])
    return y_trim(ctx, [ctx.reduce(u_mul(c, inv)) for c in a])


def y_quo(ctx, a, b):
    """Exact quotient a/b over Q(alpha)."""
    a = y_trim(ctx, list(a))
    b = y_trim(ctx, list(b))
    assert b
    d = len(b) - 1
    out = []
    r = [ctx.reduce(c) for c in a]
    r = y_trim(ctx, r)
    inv = ctx.inv(b[-1])
    for i in range(len(r) - 1 - d, -1, -1):
        c = ctx.reduce(u_mul(r[i + d], inv))
        out.append(c)
        for j in range(d + 1):
            r[i + j] = ctx.reduce(u_sub(r[i + j], u_mul(c, b[j])))
    out.reverse()
    return y_trim(ctx, out)


def y_eval(ctx, p, yval):
    acc = []
    for c in reversed(p):
        acc = u_add(u_scale(acc, yval), c)
        acc = ctx.reduce(acc)
    return acc


def y_srs(ctx, p, q):
    chain = [y_trim(ctx, list(p))]
    q = y_trim(ctx, list(q))
    if q:
        chain.append(q)
        while True:
            r = y_rem(ctx, chain[-2], chain[-1])
            if not r:
                break
            chain.append([u_neg(c) for c in r])
    return chain


def y_var_at(ctx, chain, yval):
    n, prev = 0, 0
    for f in chain:
        s = ctx.sign(y_eval(ctx, f, yval))
        if s and prev and s != prev:
            n += 1
        if s:
            prev = s
    return n


def y_var_inf(ctx, chain, positive):
    n, prev = 0, 0
    for f in chain:
        s = ctx.sign(f[-1])
        if not positive and (len(f) - 1) % 2:
            s = -s
        if s and prev and s != prev:
            n += 1
        if s:
            prev = s
    return n


def y_count_roots(ctx, f, chain, a=None, b=None):
    va = y_var_inf(ctx, chain, False) if a is None else y_var_at(ctx, chain, a)
    vb = y_var_inf(ctx, chain, True) if b is None else y_var_at(ctx, chain, b)
    return va - vb


def y_isolate(ctx, f):
    """Isolating rational intervals for the roots of squarefree f over
    Q(alpha), in increasing order."""
    f = y_trim(ctx, list(f))
    if len(f) <= 1:
        return []
    chain = y_srs(ctx, f, y_deriv(f))
    total = y_count_roots(ctx, f, chain)
    if total == 0:
        return []
    B = Fraction(1)
    while y_count_roots(ctx, f, chain, -B, B) < total or \
            ctx.is_zero(y_eval(ctx, f, -B)) or ctx.is_zero(y_eval(ctx, f, B)):
        B *= 2
    out = []
    stack = [(-B, B)]
    while stack:
        a, b = stack.pop()
        n = y_count_roots(ctx, f, chain, a, b)
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        m = (a + b) / 2
        while ctx.is_zero(y_eval(ctx, f, m)):
            m = (a + 2 * m) / 3
            if ctx.is_zero(y_eval(ctx, f, m)):
                m = (m + b) / 2
        stack.append((a, m))
        stack.append((m, b))
    out.sort()
    return out


def y_sign_at_root(ctx, g, f, a, b):
    """Sign of g(alpha, beta) for the unique root beta of f over Q(alpha)
    in (a, b)."""
    prod = _y_mul(ctx, y_deriv(f), g)
    chain = y_srs(ctx, f, y_rem(ctx, prod, f))
    return y_var_at(ctx, chain, a) - y_var_at(ctx, chain, b)


def _y_mul(ctx, a, b):
    if not a or not b:
        return []
    out = [[] for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = u_add(out[i + j], u_mul(x, y))
    return y_trim(ctx, [ctx.reduce(c) for c in out])


# ---------------------------------------------------------------------------
# bivariate polynomials over Fraction: dict {(ex, ey): coeff}
# ---------------------------------------------------------------------------

def b_from_terms(terms):
    return {k: _frac(v) for k, v in terms.items() if v != 0}


def b_is_zero(f):
    return not f


def b_mul(f, g):
    out = {}
    for (i, j), a in f.items():
        for (k, l), b in g.items():
            key = (i + k, j + l)
            out[key] = out.get(key, Fraction(0)) + a * b
    return {k: v for k, v in out.items() if v != 0}


def b_deg_y(f):
    return max((j for (_, j) in f), default=-1)


def b_to_ylist(f):
    """Dense in y; coefficients are Fraction lists in x."""
    d = b_deg_y(f)
    out = [[] for _ in range(d + 1)]
    for (i, j), c in f.items():
        col = out[j]
        while len(col) <= i:
            col.append(Fraction(0))
        col[i] += c
    return [u_trim(c) for c in out]


def b_from_ylist(cols):
    out = {}
    for j, col in enumerate(cols):
        for i, c in enumerate(col):
            if c:
                out[(i, j)] = c
    return out


def b_deriv_y(f):
    return {(i, j - 1): c * j for (i, j), c in f.items() if j}


def b_shear(f, c):
    """Substitute x -> x + c*y."""
    out = {}
    for (i, j), v in f.items():
        # (x + c y)^i expanded
        from math import comb
        for t in range(i + 1):
            key = (i - t, j + t)
            out[key] = out.get(key, Fraction(0)) + v * comb(i, t) * (Fraction(c) ** t)
    return {k: v for k, v in out.items() if v != 0}


def b_eval_x(f, a):
    """Specialize x = a; returns a Fraction list in y."""
    d = b_deg_y(f)
    out = [Fraction(0)] * (d + 1)
    for (i, j), c in f.items():
        out[j] += c * a ** i
    return u_trim(out)


def b_specialize_ctx(ctx, f):
    """Specialize x = alpha; returns a y-poly over Q(alpha)."""
    d = b_deg_y(f)
    out = [[] for _ in range(d + 1)]
    for (i, j), c in f.items():
        mono = [Fraction(0)] * i + [c]
        out[j] = u_add(out[j], mono)
    return y_trim(ctx, [ctx.reduce(c) for c in out])


# subresultant PRS in y over Q[x]: used for resultant and psc projection

def _x_content(col):
    g = []
    for c in col:
        g = u_gcd(g, c) if g else u_sqmonic(c)
        if len(g) == 1:
            break
    return g


def u_sqmonic(c):
    if not c:
        return []
    inv = 1 / c[-1]
    return [v * inv for v in c]


def _ylist_primitive(cols):
    """Strip the x-content; returns (primitive columns, content)."""
    polys = [c for c in cols if c]
    if not polys:
        return cols, []
    g = []
    for c in polys:
        g = u_gcd(g, c) if g else u_sqmonic(c)
        if len(g) == 1:
            break
    if len(g) <= 1:
        return cols, g
    out = []
    for c in cols:
        if not c:
            out.append(c)
        else:
            q, r = u_divmod(c, g)
            assert not r
            out.append(q)
    return out, g


def _ylist_prem(A, B):
    dB = len(B) - 1
    lb = B[-1]
    R = [list(c) for c in A]
    while len(R) - 1 >= dB and R:
        cr = R[-1]
        off = len(R) - 1 - dB
        newR = [u_mul(lb, c) for c in R[:-1]]
        for j in range(dB):
            newR[off + j] = u_sub(newR[off + j], u_mul(cr, B[j]))
        R = newR
        while R and not R[-1]:
            R.pop()
    return R


def b_prs_projection(f, g):
    """Primitive PRS of f, g in y over Q[x]; returns (factors, last):
    factors are the x-polynomials whose roots bound the cells where the pair
    can degenerate (leading coefficients and stripped contents of all
    members, plus the final member when it drops to an x-polynomial), last
    is the final nonzero member (gcd-carrier)."""
    A = [c for c in b_to_ylist(f)]
    B = [c for c in b_to_ylist(g)]
    while A and not A[-1]:
        A.pop()
    while B and not B[-1]:
        B.pop()
    if len(A) < len(B):
        A, B = B, A
    factors = []
    last = A
    while B:
        factors.append(B[-1])
        R = _ylist_prem(A, B)
        R, cont = _ylist_primitive(R)
        if len(cont) > 1:
            factors.append(cont)
        A, B = B, R
        last = A
    if len(last) == 1:
        factors.append(last[0])
    return factors, last


def b_gcd(f, g):
    """Primitive gcd of two bivariate polynomials."""
    if b_is_zero(f):
        return dict(g)
    if b_is_zero(g):
        return dict(f)
    fy = b_to_ylist(f)
    gy = b_to_ylist(g)
    contf = _x_content([c for c in fy if c]) or []
    contg = _x_content([c for c in gy if c]) or []
    cont = u_gcd(contf, contg)
    _, last = b_prs_projection(f, g)
    if len(last) == 1:
        core = [[Fraction(1)]]
    else:
        core, _ = _ylist_primitive(last)
    out = b_from_ylist(core)
    if len(cont) > 1:
        out = b_mul(out, b_from_ylist([cont]))
    # normalize sign/scale lightly
    return out


def b_exact_quo(f, g):
    """Exact quotient of bivariate polynomials (f divisible by g)."""
    fy = b_to_ylist(f)
    gy = b_to_ylist(g)
    while fy and not fy[-1]:
        fy.pop()
    while gy and not gy[-1]:
        gy.pop()
    assert gy
    d = len(gy) - 1
    out = [[] for _ in range(max(len(fy) - d, 0))]
    R = [list(c) for c in fy]
    while len(R) - 1 >= d and any(R):
        while R and not R[-1]:
            R.pop()
        if len(R) - 1 < d:
            break
        # leading y-coefficients must divide exactly in Q[x]
        q, r = _udiv_exact(R[-1], gy[-1])
        out[len(R) - 1 - d] = q
        shift = len(R) - 1 - d
        for j in range(d + 1):
            R[shift + j] = u_sub(R[shift + j], u_mul(q, gy[j]))
    assert not any(u_trim(c) for c in R), "division was not exact"
    return b_from_ylist(out)


def _udiv_exact(a, b):
    q, r = u_divmod(a, b)
    assert not r, "x-coefficient division not exact"
    return q, r


def b_sqfree(f):
    """Squarefree part, handling x-only content separately."""
    if b_is_zero(f):
        return {}
    fy = b_to_ylist(f)
    cols = [c for c in fy if c]
    cont = _x_content(cols)
    prim = _ylist_primitive(fy)[0] if len(cont) > 1 else fy
    fp = b_from_ylist(prim)
    if b_deg_y(fp) > 0:
        g = b_gcd(fp, b_deriv_y(fp))
        if b_deg_y(g) > 0 or any(i for (i, j) in g):
            fp = b_exact_quo(fp, g)
    out = fp
    if len(cont) > 1:
        sc = u_sqfree(cont)
        out = b_mul(out, b_from_ylist([sc]))
    return out


# ---------------------------------------------------------------------------
# two-variable decomposition
# ---------------------------------------------------------------------------

def _pairwise_coprime_basis(polys):
    """Squarefree pairwise-coprime basis generating the same sign loci."""
    basis = []
    queue = [b_sqfree(p) for p in polys if not b_is_zero(p)]
    queue = [p for p in queue if _b_degree(p) > 0]
    while queue:
        f = queue.pop()
        if _b_degree(f) == 0:
            continue
        placed = False
        for i, g in enumerate(basis):
            h = b_gcd(f, g)
            if _b_degree(h) > 0:
                # split both against the common factor
                basis.pop(i)
                queue.extend([h, b_exact_quo(g, h), b_exact_quo(f, h)])
                placed = True
                break
        if not placed:
            basis.append(f)
    return [b for b in basis if _b_degree(b) > 0]


def _b_degree(f):
    return max((i + j for (i, j) in f), default=-1)


def _projection_polys(basis):
    proj = []
    for g in basis:
        ylist = b_to_ylist(g)
        if len(ylist) - 1 <= 0:
            # y-free curve: vertical lines at its roots
            if ylist:
                proj.append(ylist[0])
            continue
        proj.append(ylist[-1])  # leading coefficient in y
        lcs, _ = b_prs_projection(g, b_deriv_y(g))
        proj.extend(lcs)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if b_deg_y(basis[i]) > 0 and b_deg_y(basis[j]) > 0:
                lcs, _ = b_prs_projection(basis[i], basis[j])
                proj.extend(lcs)
    return [p for p in proj if p and len(p) > 1]


def chi_oracle_2d(family, predicate, _shear=0, _depth=0):
    """chi of the subset of R^2 selected by predicate over the sign vectors
    of the family (MPoly in two variables, or {(ex,ey): coeff} dicts)."""
    fam = [_b_adapt(f) for f in family]
    if _shear:
        fam = [b_shear(f, _shear) for f in fam]
    try:
        return _chi_2d_core(fam, predicate)
    except NonDelineable:
        if _depth >= 3:
            raise
        return chi_oracle_2d(family, predicate, _shear=_shear + _depth + 1,
                             _depth=_depth + 1)


def _b_adapt(f):
    if isinstance(f, dict):
        return b_from_terms(f)
    # engine MPoly with two variables
    assert getattr(f, "nvars", None) == 2, "oracle needs two-variable input"
    out = {}
    for k, v in f.terms.items():
        out[(k[0], k[1])] = _frac(_to_rat(v))
    return out


def _to_rat(v):
    if hasattr(v, "numerator"):
        return Fraction(int(v.numerator), int(v.denominator))
    raise TypeError("oracle inputs must have rational coefficients")


def _chi_2d_core(fam, predicate):
    basis = _pairwise_coprime_basis(fam)
    proj = _projection_polys(basis)
    if proj:
        P = u_sqfree(_product(proj))
        roots = u_isolate(P)
    else:
        P, roots = [Fraction(1)], []
    samples = []
    if roots:
        samples.append(roots[0][0] - 1)
        for i in range(len(roots) - 1):
            samples.append((roots[i][1] + roots[i + 1][0]) / 2)
        samples.append(roots[-1][1] + 1)
    else:
        samples.append(Fraction(0))
    chi = 0
    # interval cells of the base line
    counts = []
    for s in samples:
        fibers = [b_eval_x(f, s) for f in fam]
        pts, ivs = cells_1d(fibers)
        counts.append(len(pts))
        for sig in pts:
            if predicate(sig):
                chi -= 1  # 1-cell: interval x point
        for sig in ivs:
            if predicate(sig):
                chi += 1  # 2-cell
    # cheap delineability insurance: root counts constant on each interval
    for idx in range(len(samples)):
        lo = roots[idx - 1][1] if idx > 0 else samples[0] - 2
        hi = roots[idx][0] if idx < len(roots) else samples[-1] + 2
        for frac_pos in (Fraction(1, 3), Fraction(2, 3)):
            s2 = lo + (hi - lo) * frac_pos
            if u_eval(P, s2) == 0:
                continue
            base = _stack_count_at(fam, s2)
            if base != counts[idx]:
                raise NonDelineable("fiber root count varies over a cell")
    # point cells of the base line
    for (a, b) in roots:
        ctx = PointCtx(P, a, b)
        chi += _chi_over_point(ctx, fam, predicate)
    return chi


def _stack_count_at(fam, s):
    fibers = [b_eval_x(f, s) for f in fam]
    pts, _ = cells_1d(fibers)
    return len(pts)


def _chi_over_point(ctx, fam, predicate):
    spec = [b_specialize_ctx(ctx, f) for f in fam]
    nz = [p for p in spec if len(p) > 1]
    chi = 0
    if not nz:
        sig = tuple(ctx.sign(p[0]) if p else 0 for p in spec)
        return -1 if predicate(sig) else 0
    S = nz[0]
    for p in nz[1:]:
        S = _y_mul(ctx, S, p)
    g = y_gcd(ctx, S, y_deriv(S))
    if len(g) > 1:
        S = y_quo(ctx, S, g)
    roots = y_isolate(ctx, S)
    # fiber point cells
    for (c, d) in roots:
        sig = []
        for p in spec:
            if not p:
                sig.append(0)
            elif len(p) == 1:
                sig.append(ctx.sign(p[0]))
            else:
                sig.append(y_sign_at_root(ctx, p, S, c, d))
        if predicate(tuple(sig)):
            chi += 1  # 0-cell
    # fiber interval cells
    ys = []
    if roots:
        ys.append(roots[0][0] - 1)
        for i in range(len(roots) - 1):
            ys.append((roots[i][1] + roots[i + 1][0]) / 2)
        ys.append(roots[-1][1] + 1)
    else:
        ys.append(Fraction(0))
    for yv in ys:
        sig = tuple(ctx.sign(y_eval(ctx, p, yv)) if p else 0 for p in spec)
        if predicate(sig):
            chi -= 1  # 1-cell
    return chi


# ---------------------------------------------------------------------------
# finite orbit enumeration
# ---------------------------------------------------------------------------

def orbit_enumerate(points, blocks):
    """(cardinality, number of block-action orbits) of a finite point set."""
    k = sum(blocks)
    pts = set()
    for p in points:
        p = tuple(_frac(v) for v in p)
        assert len(p) == k
        pts.add(p)

    starts = []
    s = 0
    for b in blocks:
        starts.append(s)
        s += b

    def canonical(p):
        out = []
        for st, b in zip(starts, blocks):
            out.extend(sorted(p[st:st + b]))
        return tuple(out)

    # closure check: every block permutation stays inside
    for p in pts:
        for sigmas in product(*[permutations(range(b)) for b in blocks]):
            q = list(p)
            for st, b, sig in zip(starts, blocks, sigmas):
                for off in range(b):
                    q[st + off] = p[st + sig[off]]
            if tuple(q) not in pts:
                raise NotClosedUnderAction("point %r escapes the set" % (p,))
    orbits = {canonical(p) for p in pts}
    return len(pts), len(orbits)

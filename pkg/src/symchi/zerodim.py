"""Real solving of zero-dimensional systems over an exact ordered field.

The solver eliminates variables with subresultant-based resultants against a
seeded separating form T = Z1 + u2*Z2 + ... and recovers the remaining
coordinates as rational functions of T by running a parametric Euclidean
algorithm whose zero tests are answered by the Thom-encoded root.  Every
candidate is residual-checked against the full input system, so spurious
resultant roots are harmless; genuine ambiguity (two solutions sharing a
T-value) triggers a retry with a fresh separating form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    PositiveDimensionSuspected,
    SeparationFailure,
    VariableCapExceeded,
)
from .field import (
    QQ,
    _list_scalar_content,
    ep_add,
    ep_const,
    ep_divexact,
    ep_eval,
    ep_mul,
    ep_neg,
    ep_sign,
)
from .mpoly import MPoly, det_bareiss
from .upoly import (
    RootFinder,
    UPoly,
    _ep_lcm,
    _int_gcd,
    _nst_from_coeff,
    _nz_add,
    _nz_divexact_scal,
    _nz_list_mul,
    _nz_list_pmod,
    _nz_mul,
    _nz_neg,
    _nz_one,
    _nz_scal,
    _nz_sign,
    _nzl_from_eplist_scaled,
    _nzl_to_eplist,
    gcd_poly,
)


@dataclass(frozen=True)
class SampleConfig:
    max_vars: int = 4
    seed: int = 0
    retry_limit: int = 8

    def __post_init__(self):
        assert self.max_vars >= 1


class _Retry(Exception):
    def __init__(self, reason):
        self.reason = reason


# ---------------------------------------------------------------------------
# Resultants over the multivariate coefficient ring
# ---------------------------------------------------------------------------

def _m_prem(a, b):
    """Pseudo-remainder of dense MPoly coefficient lists, scaled by exactly
    lc(b)^(deg a - deg b + 1) so that subresultant divisions stay exact."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    r = list(a)
    e = 0
    while len(r) - 1 >= db:
        top = r[-1]
        r = [c * lb for c in r[:-1]]
        e += 1
        off = len(r) - db
        for t in range(db):
            r[off + t] = r[off + t] - top * b[t]
        while r and r[-1].is_zero():
            r.pop()
        if not r:
            break
    need = da - db + 1 - e
    if r and need > 0:
        f = lb ** need
        r = [c * f for c in r]
    return r


def resultant(A, B, var):
    """Res_var(A, B) via the subresultant PRS (Collins bookkeeping)."""
    field, nvars = A.field, A.nvars
    zero = MPoly.zero(field, nvars)
    if A.is_zero() or B.is_zero():
        return zero
    a = A.coeffs_in_var(var)
    b = B.coeffs_in_var(var)
    sgn = 1
    if len(a) < len(b):
        if ((len(a) - 1) * (len(b) - 1)) % 2:
            sgn = -sgn
        a, b = b, a
    if len(b) == 1:
        if len(a) == 1:
            return MPoly.const(field, nvars, 1)
        res = b[0] ** (len(a) - 1)
        return res if sgn > 0 else -res
    one = MPoly.const(field, nvars, 1)
    g = h = one
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if (da % 2) and (db % 2):
            sgn = -sgn
        R = _m_prem(a, b)
        a = b
        divisor = g * h ** delta
        b = [c.exact_div(divisor) for c in R]
        if not b:
            return zero
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = (g ** delta).exact_div(h ** (delta - 1))
        if len(b) == 1:
            break
    da = len(a) - 1
    num = b[0] ** da
    res = num.exact_div(h ** (da - 1)) if da > 1 else num
    return res if sgn > 0 else -res


def resultant_sylvester(A, B, var):
    """Same resultant as a Sylvester determinant; kept as a cross-check."""
    field, nvars = A.field, A.nvars
    if A.is_zero() or B.is_zero():
        return MPoly.zero(field, nvars)
    a = A.coeffs_in_var(var)
    b = B.coeffs_in_var(var)
    da, db = len(a) - 1, len(b) - 1
    if da == 0 and db == 0:
        return MPoly.const(field, nvars, 1)
    n = da + db
    zero = MPoly.zero(field, nvars)
    M = [[zero] * n for _ in range(n)]
    for i in range(db):
        for t in range(da + 1):
            M[i][i + t] = a[da - t]
    for i in range(da):
        for t in range(db + 1):
            M[db + i][i + t] = b[db - t]
    return det_bareiss(M)


# ---------------------------------------------------------------------------
# Separating substitution and parametric specialization
# ---------------------------------------------------------------------------

def _sub_linear_t(P, u):
    """Substitute Z1 = T - sum_{i>=2} u_i Z_i; variable 0 becomes T."""
    n = P.nvars
    field = P.field
    lin = MPoly.var(field, n, 0)
    for i in range(1, n):
        if u[i]:
            lin = lin - MPoly.const(field, n, u[i]) * MPoly.var(field, n, i)
    cs = P.coeffs_in_var(0)
    out = cs[-1]
    for c in reversed(cs[:-1]):
        out = out * lin + c
    return out


def _flat_ints(a, m):
    if m == 0:
        yield a
        return
    for x in a:
        if x:
            yield from _flat_ints(x, m - 1)


def _nzl_content(N, m):
    """Positive integer content of a list of nested int coefficients."""
    g = 0
    for c in N:
        if not c:
            continue
        for x in _flat_ints(c, m):
            g = _int_gcd(g, x)
            if g == 1:
                return 1
    return int(g) if g else 1


class _Loc:
    """Arithmetic in field[T]/(f), localized at the leading coefficient.

    Elements are triples (N, q, t) standing for q * N / lc^t, with N a dense
    list of nested integer coefficients kept reduced modulo the minimal
    polynomial and primitive (scalar content folded into the positive
    rational q).  Tracking both factors keeps every value exact, so recovered
    coordinate ratios are true equalities, not sign-faithful stand-ins."""

    __slots__ = ("fep", "m", "lc", "slc", "_pows", "comp", "powc")

    def __init__(self, finder):
        self.m = finder.m
        fep, _ = _nzl_from_eplist_scaled(finder.fep, self.m)
        g = _nzl_content(fep, self.m)
        if g > 1:
            fep = [_nz_divexact_scal(c, g, self.m) for c in fep]
        self.fep = fep
        self.lc = self.fep[-1]
        self.slc = _nz_sign(self.lc, self.m)
        self._pows = [_nz_one(self.m), self.lc]
        self.comp = {}
        self.powc = {}

    def zero(self):
        return ([], QQ(1), 0)

    def one(self):
        return ([_nz_one(self.m)], QQ(1), 0)

    def lcpow(self, j):
        while len(self._pows) <= j:
            self._pows.append(_nz_mul(self._pows[-1], self.lc, self.m))
        return self._pows[j]

    def _strip(self, N, q, t):
        g = _nzl_content(N, self.m)
        if g > 1:
            N = [_nz_divexact_scal(c, g, self.m) for c in N]
            q = q * g
        return (N, q, t)

    def embed(self, A):
        """A dense ep-coefficient list as an element (no reduction)."""
        N, L = _nzl_from_eplist_scaled(A, self.m)
        return self._strip(N, QQ(1, L), 0)

    def reduce(self, A, t=0):
        N, L = _nzl_from_eplist_scaled(A, self.m)
        R, s = _nz_list_pmod(N, self.fep, self.m)
        return self._strip(R, QQ(1, L), t + s)

    def mul(self, a, b):
        if not a[0] or not b[0]:
            return self.zero()
        R, s = _nz_list_pmod(_nz_list_mul(a[0], b[0], self.m),
                             self.fep, self.m)
        return self._strip(R, a[1] * b[1], a[2] + b[2] + s)

    def scale(self, a, c):
        """Multiply by a plain tower polynomial (degree zero in T)."""
        if not a[0] or not c:
            return self.zero()
        L = 1
        for v in c.values():
            den = int(v.denominator)
            if den != 1:
                L = L * den // _int_gcd(L, den)
        nc = _nst_from_coeff(c, self.m, L)
        return self._strip(
            [_nz_mul(x, nc, self.m) if x else x for x in a[0]],
            a[1] / L, a[2])

    def _align(self, a, b):
        t = max(a[2], b[2])
        A, B = a[0], b[0]
        if a[2] != t:
            p = self.lcpow(t - a[2])
            A = [_nz_mul(x, p, self.m) if x else x for x in A]
        if b[2] != t:
            p = self.lcpow(t - b[2])
            B = [_nz_mul(x, p, self.m) if x else x for x in B]
        r = a[1] / b[1]
        rn, rd = int(r.numerator), int(r.denominator)
        if rn != 1:
            A = [_nz_scal(x, rn, self.m) for x in A]
        if rd != 1:
            B = [_nz_scal(x, rd, self.m) for x in B]
        return A, B, a[1] / rn, t

    def add(self, a, b):
        if not a[0]:
            return b
        if not b[0]:
            return a
        A, B, q, t = self._align(a, b)
        if len(A) < len(B):
            A, B = B, A
        out = list(A)
        for i, y in enumerate(B):
            if y:
                out[i] = _nz_add(out[i], y, self.m)
        while out and not out[-1]:
            out.pop()
        return self._strip(out, q, t)

    def neg(self, a):
        return ([_nz_neg(c, self.m) if c else c for c in a[0]], a[1], a[2])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def pow(self, a, e):
        r = self.one()
        b = a
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def sign_at(self, a, root):
        if not a[0]:
            return 0
        s = root.sign_of_ep(_nzl_to_eplist(a[0], self.m))
        if s and (a[2] & 1) and self.slc < 0:
            s = -s
        return s


def _tower_m(field):
    return len(getattr(field, "tower", ()))


def _cleared_terms(P):
    """Terms of P with tower-polynomial coefficients, cleared by one common
    positive denominator (harmless for zero sets and sign patterns)."""
    field = P.field
    m = _tower_m(field)
    if field.mode == "rational":
        return {k: ep_const(QQ(c), m) for k, c in P.terms.items()}
    den = ep_const(1, m)
    for c in P.terms.values():
        den = _ep_lcm(den, c.den, m)
    return {k: ep_mul(c.num, ep_divexact(den, c.den))
            for k, c in P.terms.items()}


def _trunc(lst, tau, loc):
    """Drop leading coefficients that vanish at the root tau."""
    out = list(lst)
    while out and loc.sign_at(out[-1], tau) == 0:
        out.pop()
    return out


def _spec_coeffs(P, prefix, active, loc, powers):
    """Dense coefficient lists of P in the active variable after substituting
    the already-recovered coordinates (ratios cleared by their denominators;
    one full denominator power per variable keeps all terms on one scale)."""
    degs = {v: P.deg_in(v) for v in prefix}
    out = [loc.zero() for _ in range(P.deg_in(active) + 1)]

    def power(pair, e, tag):
        key = (tag, e)
        if key not in powers:
            powers[key] = loc.pow(pair, e)
        return powers[key]

    for k, c in _cleared_terms(P).items():
        u = loc.reduce([{}] * k[0] + [c])
        for v, (num, den) in prefix.items():
            if k[v]:
                u = loc.mul(u, power(num, k[v], ("n", v)))
            rest = degs[v] - k[v]
            if rest:
                u = loc.mul(u, power(den, rest, ("d", v)))
        out[k[active]] = loc.add(out[k[active]], u)
    return out


def _plist_prem(a, b, tau, loc):
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db:
        top = r[-1]
        r = [loc.mul(c, lb) for c in r[:-1]]
        off = len(r) - db
        for t in range(db):
            r[off + t] = loc.sub(r[off + t], loc.mul(top, b[t]))
        r = _trunc(r, tau, loc)
        if not r:
            break
    return r


def _param_gcd(a, b, tau, loc):
    """gcd of two specialized polynomials at tau, as a coefficient list."""
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _plist_prem(a, b, tau, loc)
        a, b = b, _trunc(r, tau, loc)
    return a


def _joint_strip(A, B, m):
    """One positive scalar/monomial factor divided out of both lists."""
    cells = [c for c in A if c] + [c for c in B if c]
    if not cells:
        return A, B
    s = _list_scalar_content(cells)
    inv = None if s == 1 else 1 / s
    mins = [min(min(k[i] for k in c) for c in cells) for i in range(m)]
    if inv is None and not any(mins):
        return A, B

    def fix(c):
        if not c:
            return c
        if any(mins):
            c = {tuple(e - g for e, g in zip(k, mins)): v
                 for k, v in c.items()}
        if inv is not None:
            c = {k: v * inv for k, v in c.items()}
        return c

    return [fix(c) for c in A], [fix(c) for c in B]


def _plain_pair(numl, denl, loc):
    """Localized coordinate to a cleared (num, den) pair, ratio preserved."""
    A, qn, tn = numl
    B, qd, td = denl
    m = loc.m
    if tn > td:
        p = loc.lcpow(tn - td)
        B = [_nz_mul(c, p, m) if c else c for c in B]
    elif td > tn:
        p = loc.lcpow(td - tn)
        A = [_nz_mul(c, p, m) if c else c for c in A]
    r = qn / qd
    rn, rd = int(r.numerator), int(r.denominator)
    if rn != 1:
        A = [_nz_scal(c, rn, m) for c in A]
    if rd != 1:
        B = [_nz_scal(c, rd, m) for c in B]
    return _joint_strip(_nzl_to_eplist(A, m), _nzl_to_eplist(B, m), m)


# ---------------------------------------------------------------------------
# Algebraic points
# ---------------------------------------------------------------------------

def _eplist_key(L):
    return tuple(tuple(sorted(c.items())) if c else () for c in L)


def _mpoly_key(G):
    return tuple(sorted(
        (k, tuple(sorted(c.items())))
        for k, c in _cleared_terms(G).items()))


class AlgebraicPoint:
    """A point with real algebraic coordinates, all rational functions of a
    single Thom-encoded root; signs of arbitrary polynomials at the point are
    exact sign queries against that root.

    Each coordinate is a cleared (numerator, denominator) pair of dense
    tower-polynomial coefficient lists, both sides on one positive scale.
    Points produced by one solver run share a localization and with it every
    root-independent composition, so signing one polynomial at many conjugate
    points costs one composition plus a sign query per point."""

    __slots__ = ("field", "nvars", "root", "coords", "den_signs", "_loc",
                 "_ckey")

    def __init__(self, field, nvars, root, coords, loc=None):
        self.field = field
        self.nvars = nvars
        self.root = root
        self.coords = list(coords)
        self._loc = loc if loc is not None else _Loc(root.finder)
        self._ckey = tuple(
            (_eplist_key(num), _eplist_key(den)) for num, den in self.coords)
        self.den_signs = []
        for _, den in self.coords:
            s = ep_sign(den[0]) if len(den) == 1 else root.sign_of_ep(den)
            assert s != 0, "coordinate denominator vanishes at the root"
            self.den_signs.append(s)

    @property
    def min_poly(self):
        return self.root.min_poly

    @property
    def encoding(self):
        return self.root.encoding

    def _power(self, v, kind, e):
        loc = self._loc
        key = (self._ckey, v, kind, e)
        val = loc.powc.get(key)
        if val is None:
            side = self.coords[v][0 if kind == "n" else 1]
            val = loc.pow(loc.embed(side), e)
            loc.powc[key] = val
        return val

    def sign_of_mpoly(self, G):
        assert G.nvars == self.nvars
        if G.is_zero():
            return 0
        loc = self._loc
        sig = (self._ckey, _mpoly_key(G))
        hit = loc.comp.get(sig)
        if hit is None:
            degs = [G.deg_in(v) for v in range(self.nvars)]
            acc = loc.zero()
            for k, c in _cleared_terms(G).items():
                u = loc.reduce([c])
                for v, e in enumerate(k):
                    if e:
                        u = loc.mul(u, self._power(v, "n", e))
                    rest = degs[v] - e
                    if rest:
                        u = loc.mul(u, self._power(v, "d", rest))
                acc = loc.add(acc, u)
            ep = _nzl_to_eplist(acc[0], loc.m) if acc[0] else None
            hit = (ep, acc[2] & 1, degs)
            loc.comp[sig] = hit
        ep, tpar, degs = hit
        if ep is None:
            return 0
        s = self.root.sign_of_ep(ep)
        if s == 0:
            return 0
        if tpar and loc.slc < 0:
            s = -s
        for v in range(self.nvars):
            if self.den_signs[v] < 0 and degs[v] % 2:
                s = -s
        return s

    def coord_sign(self, i):
        num, _ = self.coords[i]
        if not num:
            return 0
        s = self.root.sign_of_ep(num)
        return s * self.den_signs[i] if s else 0

    def approx_coords(self, digits=8):
        """Rational approximations of the coordinates (rational mode only)."""
        if self.field.mode != "rational":
            raise ValueError("approximation requires the rational field mode")
        lo, hi = _isolate_root(self.root)
        width = _QFRAC(1, 10 ** digits)
        f = self.min_poly
        while hi - lo > width:
            mid = (lo + hi) / 2
            if f.eval(lo) * f.eval(mid) <= 0:
                hi = mid
            else:
                lo = mid
        mid = (lo + hi) / 2
        chain = tuple(self.field.values[n] for n in self.field.tower.names)
        out = []
        for num, den in self.coords:
            nv = _eplist_eval(num, chain, mid)
            dv = _eplist_eval(den, chain, mid)
            out.append(nv / dv)
        return out

    def __repr__(self):
        return "AlgebraicPoint(%d vars, min poly deg %d)" % (
            self.nvars, self.min_poly.degree())


def _eplist_eval(L, chain, x):
    total = QQ(0)
    p = QQ(1)
    for c in L:
        if c:
            total = total + ep_eval(c, chain) * p
        p = p * x
    return total


def _QFRAC(a, b):
    from .field import rat
    return rat(a, b)


def _sturm_chain(f):
    chain = [f, f.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree() > 0:
        chain.append(-(chain[-2].rem(chain[-1])))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _sturm_var(chain, x, field):
    signs = [field.sign(g.eval(x)) for g in chain]
    n, prev = 0, 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            n += 1
        prev = s
    return n


def _isolate_root(root):
    """Isolating rational interval for a Thom root, via Sturm bisection."""
    finder = root.finder
    field = finder.field
    f = finder.f
    idx = finder.thom_roots().index(root)
    bound = field.one()
    lc = f.lc()
    for c in f.coeffs[:-1]:
        q = abs(c / lc) if c else field.zero()
        if q > bound:
            bound = q
    B = bound + field.one()
    chain = _sturm_chain(f)

    def count(lo, hi):
        return _sturm_var(chain, lo, field) - _sturm_var(chain, hi, field)

    intervals = [(-B, B)]
    done = []
    while intervals:
        lo, hi = intervals.pop()
        c = count(lo, hi)
        if c == 0:
            continue
        if c == 1:
            done.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        while field.is_zero(f.eval(mid)):
            mid = mid + (hi - lo) / 64
        intervals.append((lo, mid))
        intervals.append((mid, hi))
    done.sort()
    return done[idx]


def rational_point(field, values):
    """The point with the given exact field coordinates."""
    x = UPoly.x(field)
    finder = RootFinder(x)
    root = finder.thom_roots()[0]
    m = _tower_m(field)
    coords = []
    for v in values:
        if field.is_zero(v):
            coords.append(([], [ep_const(1, m)]))
        elif field.mode == "rational":
            coords.append(([ep_const(QQ(v), m)], [ep_const(1, m)]))
        else:
            coords.append(([dict(v.num)], [dict(v.den)]))
    return AlgebraicPoint(field, len(values), root, coords)


# ---------------------------------------------------------------------------
# The solver core
# ---------------------------------------------------------------------------

def _solve_univariate(polys, field):
    f = None
    for p in polys:
        g = p.to_upoly(0)
        f = g if f is None else gcd_poly(f, g)
    if f.degree() <= 0:
        return []
    finder = RootFinder(f)
    m = _tower_m(field)
    return [AlgebraicPoint(field, 1, r,
                           [([{}, ep_const(1, m)], [ep_const(1, m)])])
            for r in finder.thom_roots()]


def _recover_root(tau, bearing, n, field, u, loc):
    """Coordinates over one root of the eliminant, or None when spurious."""
    prefix = {}
    powers = {}
    for idx in range(1, n):
        lists = []
        for p in bearing[idx]:
            L = _trunc(_spec_coeffs(p, prefix, idx, loc, powers), tau, loc)
            if not L:
                continue
            if len(L) == 1:
                return None
            lists.append(L)
        if not lists:
            raise _Retry("ambiguous")
        cand = None
        if len(lists) == 1:
            if len(lists[0]) == 2:
                cand = (loc.neg(lists[0][0]), lists[0][1])
            else:
                raise _Retry("ambiguous")
        else:
            ambiguous = False
            for i in range(len(lists)):
                for j in range(i + 1, len(lists)):
                    g = _param_gcd(lists[i], lists[j], tau, loc)
                    if len(g) == 1:
                        return None
                    if len(g) == 2:
                        cand = (loc.neg(g[0]), g[1])
                        break
                    ambiguous = True
                if cand:
                    break
            if cand is None:
                raise _Retry("ambiguous" if ambiguous else "posdim")
        prefix[idx] = cand
    dens = [prefix[idx][1] for idx in range(1, n)]
    pre = [loc.one()]
    for d in dens:
        pre.append(loc.mul(pre[-1], d))
    suf = [loc.one()]
    for d in reversed(dens):
        suf.append(loc.mul(suf[-1], d))
    suf.reverse()
    D = pre[-1]
    num1 = loc.mul(loc.reduce([{}, ep_const(1, loc.m)]), D)
    for idx in range(1, n):
        if u[idx]:
            others = loc.mul(pre[idx - 1], suf[idx])
            term = loc.mul(prefix[idx][0], others)
            num1 = loc.sub(num1, loc.scale(term, ep_const(QQ(u[idx]), loc.m)))
    pairs = [(num1, D)] + [prefix[idx] for idx in range(1, n)]
    return [_plain_pair(p, q, loc) for p, q in pairs]


def _residual_ok(point, polys):
    return all(point.sign_of_mpoly(p) == 0 for p in polys)


def _solve_with_u(polys, u, field, n):
    subbed = [_sub_linear_t(p, u) for p in polys]
    bearing = {}
    cur = subbed
    for idx in range(n - 1, 0, -1):
        bear = [p for p in cur if p.deg_in(idx) > 0]
        free = [p for p in cur if p.deg_in(idx) == 0]
        if len(bear) < 2:
            raise _Retry("posdim")
        bearing[idx] = bear
        bear.sort(key=lambda p: (p.deg_in(idx), len(p.terms)))
        pivot = bear[0]
        outs = []
        for other in bear[1:]:
            r = resultant(pivot, other, idx)
            if r.is_zero():
                continue
            outs.append(r)
        if not outs:
            for i in range(1, len(bear)):
                for j in range(i + 1, len(bear)):
                    r = resultant(bear[i], bear[j], idx)
                    if not r.is_zero():
                        outs.append(r)
                if outs:
                    break
            if not outs:
                raise _Retry("posdim")
        cur = free + outs
    f = None
    for p in cur:
        g = p.to_upoly(0)
        if g.is_zero():
            continue
        f = g if f is None else gcd_poly(f, g)
    if f is None:
        raise _Retry("posdim")
    if f.degree() <= 0:
        return []
    finder = RootFinder(f)
    loc = _Loc(finder)
    points = []
    for tau in finder.thom_roots():
        coords = _recover_root(tau, bearing, n, field, u, loc)
        if coords is None:
            continue
        pt = AlgebraicPoint(field, n, tau, coords, loc=loc)
        if _residual_ok(pt, polys):
            points.append(pt)
    return points


def solve_system(polys, cfg=None):
    """All real solutions of a finite system, one AlgebraicPoint each."""
    cfg = cfg or SampleConfig()
    polys = [p for p in polys if not p.is_zero()]
    assert polys, "empty system"
    field = polys[0].field
    n = polys[0].nvars
    if n > cfg.max_vars:
        raise VariableCapExceeded("%d variables exceed the cap %d"
                                  % (n, cfg.max_vars))
    if any(p.is_constant() for p in polys):
        return []
    if n == 1:
        return _solve_univariate(polys, field)
    rng = random.Random(cfg.seed)
    tried = set()
    reasons = set()
    for attempt in range(cfg.retry_limit):
        if attempt == 0:
            u = (1,) + (0,) * (n - 1)
        else:
            while True:
                u = (1,) + tuple(rng.choice([-5, -3, -2, -1, 1, 2, 3, 5, 7])
                                 for _ in range(n - 1))
                if u not in tried:
                    break
        tried.add(u)
        try:
            return _solve_with_u(polys, u, field, n)
        except _Retry as e:
            reasons.add(e.reason)
    if reasons == {"posdim"}:
        raise PositiveDimensionSuspected(
            "system does not look zero-dimensional")
    raise SeparationFailure(
        "no separating form found in %d attempts" % cfg.retry_limit)


# ---------------------------------------------------------------------------
# Public entry points
# ---------------------------------------------------------------------------

def _hessian_det(Q):
    n = Q.nvars
    grads = [Q.derivative(i) for i in range(n)]
    H = [[grads[i].derivative(j) for j in range(n)] for i in range(n)]
    return det_bareiss(H)


def solve_zero_dim_critical(qbar, cfg=None, parts=None, certify=True):
    """All real zeros of a sum-of-squares polynomial with finite zero set.

    When the squared parts are known they form the system to solve; otherwise
    the zeros are recovered from the critical system of qbar (every isolated
    zero of a nonnegative polynomial is a critical point) and filtered by the
    residual qbar = 0.  Each accepted point must pass the isolated-zero
    certificate: a nonzero Hessian determinant of qbar at the point.
    """
    cfg = cfg or SampleConfig()
    field = qbar.field
    n = qbar.nvars
    if n > cfg.max_vars:
        raise VariableCapExceeded("%d variables exceed the cap %d"
                                  % (n, cfg.max_vars))
    if qbar.is_zero():
        raise PositiveDimensionSuspected("zero polynomial")
    if parts is not None:
        # solutions satisfy every part exactly, so qbar = sum of squares
        # vanishes identically on them; no residual check needed
        system = [p for p in parts if not p.is_zero()]
        points = solve_system(system, cfg)
    elif n == 1:
        points = solve_system([qbar], cfg)
    else:
        grads = [qbar.derivative(i) for i in range(n)]
        points = solve_system(grads, cfg)
        points = [p for p in points if p.sign_of_mpoly(qbar) == 0]
    if certify and points:
        det = _hessian_det(qbar)
        for p in points:
            if p.sign_of_mpoly(det) == 0:
                raise PositiveDimensionSuspected(
                    "zero fails the isolated-zero certificate")
    return points


def algebraic_sample(Q, cfg=None):
    """Points meeting every semi-algebraically connected component of Zer(Q).

    Every component of a real zero set is closed, so it attains its distance
    to a generic rational center; the Lagrange system of that distance (rank
    condition on the gradient against Z - c, plus Q = 0) therefore meets every
    component, and equals Zer(Q) exactly when the latter is finite.
    """
    cfg = cfg or SampleConfig()
    field = Q.field
    n = Q.nvars
    if n > cfg.max_vars:
        raise VariableCapExceeded("%d variables exceed the cap %d"
                                  % (n, cfg.max_vars))
    if Q.is_zero():
        return [rational_point(field, [field.zero()] * n)]
    if Q.is_constant():
        return []
    if n == 1:
        return solve_system([Q], cfg)
    rng = random.Random(cfg.seed ^ 0x5A11)
    last = None
    for attempt in range(cfg.retry_limit):
        if attempt == 0:
            c = list(range(1, n + 1))
        else:
            c = [rng.randint(1, 97) for _ in range(n)]
        grads = [Q.derivative(i) for i in range(n)]
        diffs = [MPoly.var(field, n, i) - MPoly.const(field, n, c[i])
                 for i in range(n)]
        system = [Q]
        for i in range(n):
            for j in range(i + 1, n):
                m = grads[i] * diffs[j] - grads[j] * diffs[i]
                if not m.is_zero():
                    system.append(m)
        try:
            points = solve_system(system, cfg)
        except (SeparationFailure, PositiveDimensionSuspected) as e:
            last = e
            continue
        assert all(p.sign_of_mpoly(Q) == 0 for p in points)
        return points
    raise last

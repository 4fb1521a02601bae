"""Univariate polynomials over an exact ordered field, and real root queries.

Polynomials are dense coefficient tuples (index = degree) over a field handle
(SymbolicField or RationalField).  Root machinery is query based:

  * signed remainder sequences give Tarski queries
    TaQ(Q, P) = sum of sign(Q(x)) over the real roots x of P,
  * incremental sign determination recovers the realized sign vectors of a
    polynomial family at the roots of P from Tarski queries alone,
  * Thom encodings (signs of the derivatives of P at a root) name and order
    individual roots exactly, with no numeric approximation.

Internally every query runs fraction free: coefficients are cleared to
polynomials in the tower symbols and remainders are positively rescaled and
stripped of content, which keeps the symbolic mode affordable.
"""

from __future__ import annotations

from .field import (
    QQ,
    ep_add,
    ep_const,
    ep_content_scalar,
    ep_deg,
    ep_divexact,
    ep_gcd,
    ep_mul,
    ep_neg,
    ep_scale,
    ep_sign,
    ep_sub,
    InfElem,
    sign_rat,
)

try:
    from gmpy2 import mpz as _mpz
    from gmpy2 import gcd as _int_gcd
    from gmpy2 import pack as _gpack
    from gmpy2 import unpack as _gunpack
except ImportError:
    from math import gcd as _int_gcd
    _mpz = int
    _gpack = _gunpack = None


class UPoly:
    """Dense univariate polynomial; coefficients live in the handle's field."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field):
        coeffs = list(coeffs)
        while coeffs and field.is_zero(coeffs[-1]):
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.field = field

    @classmethod
    def from_rats(cls, field, rats):
        return cls([field.from_rat(q) for q in rats], field)

    @classmethod
    def const(cls, field, q):
        return cls([field.from_rat(q)], field)

    @classmethod
    def x(cls, field):
        return cls([field.zero(), field.one()], field)

    # basic queries
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        assert self.coeffs, "zero polynomial has no leading coefficient"
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, UPoly)
            and len(self.coeffs) == len(other.coeffs)
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    __hash__ = None

    # arithmetic
    def _coerce_scalar(self, c):
        if isinstance(c, (int, QQ(0).__class__)):
            return self.field.from_rat(c)
        return c

    def __neg__(self):
        return UPoly([-c for c in self.coeffs], self.field)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(out, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            c = self._coerce_scalar(other)
            return UPoly([x * c for x in self.coeffs], self.field)
        if self.is_zero() or other.is_zero():
            return UPoly([], self.field)
        z = self.field.zero()
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, e):
        assert e >= 0
        r = UPoly.const(self.field, 1)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def shift_mul_x(self, k):
        """Multiply by X^k."""
        if self.is_zero():
            return self
        z = self.field.zero()
        return UPoly([z] * k + list(self.coeffs), self.field)

    def eval(self, x):
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return UPoly(
            [c * i for i, c in enumerate(self.coeffs)][1:], self.field
        )

    def monic(self):
        if self.is_zero():
            return self
        inv = self.field.one() / self.lc()
        return UPoly([c * inv for c in self.coeffs], self.field)

    def divmod(self, other):
        assert not other.is_zero(), "division by zero polynomial"
        d = other.degree()
        n = self.degree()
        if n < d:
            return UPoly([], self.field), self
        r = list(self.coeffs)
        z = self.field.zero()
        q = [z] * (n - d + 1)
        inv = self.field.one() / other.lc()
        for i in range(n - d, -1, -1):
            c = r[i + d] * inv
            if not self.field.is_zero(c):
                q[i] = c
                for j in range(d + 1):
                    r[i + j] = r[i + j] - c * other.coeffs[j]
        return UPoly(q, self.field), UPoly(r[:d], self.field)

    def rem(self, other):
        return self.divmod(other)[1]

    def quo(self, other):
        return self.divmod(other)[0]

    def __repr__(self):
        if self.is_zero():
            return "UPoly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if self.field.is_zero(c):
                continue
            if i == 0:
                parts.append(repr(c))
            elif i == 1:
                parts.append("(%r)*X" % (c,))
            else:
                parts.append("(%r)*X^%d" % (c, i))
        return " + ".join(parts)


def gcd_poly(a, b):
    """Monic gcd over the coefficient field.

    Runs fraction free on cleared coefficients; Euclid over the symbolic
    field would reduce a tower-polynomial gcd at every intermediate step.
    """
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    m = _tower_size(a.field)
    A = _strip_content(_to_ep(a), m)
    B = _strip_content(_to_ep(b), m)
    return _from_ep(_ep_prs_gcd(A, B, m), a.field).monic()


def square_free(f):
    """Monic squarefree part f / gcd(f, f')."""
    assert not f.is_zero(), "zero polynomial has no squarefree part"
    if f.degree() == 0:
        return f.monic()
    m = _tower_size(f.field)
    A = _strip_content(_to_ep(f), m)
    g = _ep_prs_gcd(A, _ep_list_deriv(A), m)
    if len(g) == 1:
        return f.monic()
    return _from_ep(_ep_list_divexact(A, g), f.field).monic()


# ---------------------------------------------------------------------------
# fraction-free layer: coefficient lists of polynomials in the tower symbols
# ---------------------------------------------------------------------------

def _tower_size(field):
    return len(getattr(field, "tower", ()))


def _ep_lcm(a, b, m):
    g = ep_gcd(a, b)
    return ep_mul(a, ep_divexact(b, g))


def _to_ep(f):
    """Coefficients as symbol-polynomials after clearing a positive common
    denominator; rescaling by a positive element never disturbs root signs."""
    m = _tower_size(f.field)
    if f.field.mode == "rational":
        return [{(0,) * m: QQ(c)} if c != 0 else {} for c in f.coeffs]
    den = ep_const(1, m)
    for c in f.coeffs:
        den = _ep_lcm(den, c.den, m)
    return [ep_mul(c.num, ep_divexact(den, c.den)) for c in f.coeffs]


def _ep_trim(A):
    while A and not A[-1]:
        A.pop()
    return A


def _ep_list_mul(A, B):
    if not A or not B:
        return []
    out = [dict() for _ in range(len(A) + len(B) - 1)]
    for i, a in enumerate(A):
        if not a:
            continue
        for j, b in enumerate(B):
            if b:
                out[i + j] = ep_add(out[i + j], ep_mul(a, b))
    return _ep_trim(out)


def _ep_list_deriv(A):
    return _ep_trim([ep_scale(c, i) for i, c in enumerate(A)][1:])


def _strip_content(A, m):
    """Divide out the positive polynomial/scalar content; signs unchanged."""
    A = _ep_trim(list(A))
    if not A:
        return A
    g = {}
    one = ep_const(1, m)
    for c in A:
        if c:
            g = ep_gcd(g, c) if g else ep_gcd(c, {})
            if g == one:
                break
    if g and g != one:
        A = [ep_divexact(c, g) if c else c for c in A]
    s = None
    for c in A:
        if c:
            cs = ep_content_scalar(c)
            s = cs if s is None else _scalar_gcd(s, cs)
    if s is not None and s != 1:
        inv = 1 / s
        A = [ep_scale(c, inv) for c in A]
    return A


def _scalar_gcd(a, b):
    from math import gcd, lcm
    return QQ(
        gcd(int(a.numerator), int(b.numerator)),
        lcm(int(a.denominator), int(b.denominator)),
    )


# ---------------------------------------------------------------------------
# Dense integer kernels for remainder sequences
#
# Remainder sequences spend all their time on coefficient arithmetic, and the
# sparse dict representation is a poor fit there.  Coefficients are converted
# to nested dense integer lists (depth = number of tower symbols, plain int at
# depth 0) and the sequence is computed by the subresultant algorithm, whose
# divisions are exact with known divisors, so no content gcds are needed.
# ---------------------------------------------------------------------------

def _nz_zero(d):
    return 0 if d == 0 else []


def _nz_one(d):
    return 1 if d == 0 else [_nz_one(d - 1)]


def _nz_neg(a, d):
    if d == 0:
        return -a
    return [_nz_neg(c, d - 1) for c in a]


def _nz_add(a, b, d):
    if d == 0:
        return a + b
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    if d == 1:
        for i, c in enumerate(b):
            if c:
                out[i] += c
    else:
        for i, c in enumerate(b):
            if c:
                out[i] = _nz_add(out[i], c, d - 1)
    while out and not out[-1]:
        out.pop()
    return out


def _nz_sub(a, b, d):
    if d == 0:
        return a - b
    out = list(a)
    if len(out) < len(b):
        out.extend(_nz_zero(d - 1) for _ in range(len(b) - len(out)))
    if d == 1:
        for i, c in enumerate(b):
            if c:
                out[i] -= c
    else:
        for i, c in enumerate(b):
            if c:
                out[i] = _nz_sub(out[i], c, d - 1)
    while out and not out[-1]:
        out.pop()
    return out


def _pack_split(flat, w):
    """Sign-split packing of an int sequence into two non-negative packed
    integers at bit width w (a multiple of 8)."""
    if _gpack is not None:
        return (_mpz(_gpack([x if x > 0 else 0 for x in flat], w)),
                _mpz(_gpack([-x if x < 0 else 0 for x in flat], w)))
    wb = w // 8
    p = bytearray(len(flat) * wb)
    n = bytearray(len(flat) * wb)
    off = 0
    for x in flat:
        if x > 0:
            p[off:off + wb] = int(x).to_bytes(wb, "little")
        elif x:
            n[off:off + wb] = int(-x).to_bytes(wb, "little")
        off += wb
    return (_mpz(int.from_bytes(p, "little")),
            _mpz(int.from_bytes(n, "little")))


def _unpack_diff(pos, neg, count, w):
    """Per-slot differences of two packed non-negative integers."""
    if _gunpack is not None:
        up = _gunpack(pos, w)
        un = _gunpack(neg, w)
        if len(up) < count:
            up.extend([0] * (count - len(up)))
        if len(un) < count:
            un.extend([0] * (count - len(un)))
        return [x - y for x, y in zip(up[:count], un[:count])]
    wb = w // 8
    pb = int(pos).to_bytes(count * wb + wb, "little")
    nb = int(neg).to_bytes(count * wb + wb, "little")
    return [
        int.from_bytes(pb[i * wb:(i + 1) * wb], "little")
        - int.from_bytes(nb[i * wb:(i + 1) * wb], "little")
        for i in range(count)
    ]


def _nz_mul1(a, b):
    """Product of dense int lists; long operands go through one big-int
    multiply with sign-split packing."""
    la, lb = len(a), len(b)
    if la > lb:
        a, b, la, lb = b, a, lb, la
    n = la + lb - 1
    if la >= 10 and la * lb >= 400:
        ha = max(abs(x) for x in a)
        hb = max(abs(x) for x in b)
        w = (int(ha).bit_length() + int(hb).bit_length()
             + int(la).bit_length() + 2 + 7) & ~7
        ap, an = _pack_split(a, w)
        bp, bn = _pack_split(b, w)
        out = _unpack_diff(ap * bp + an * bn, ap * bn + an * bp, n, w)
    else:
        out = [0] * n
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
    while out and not out[-1]:
        out.pop()
    return out


def _nz_div1(a, b):
    """Exact quotient of dense int lists by one big-int division.

    Both sides are evaluated at 2^t; the polynomial identity a = q*b makes
    the integer division exact, and t is past the divisor height bound so
    the balanced digits of the quotient value are the coefficients of q.
    Returns None when the divisor evaluates to zero."""
    from math import isqrt
    nq = len(a) - len(b) + 1
    s2 = isqrt(sum(x * x for x in a)) + 1
    tb = (nq + int(s2).bit_length() + 4 + 7) & ~7
    ap, an = _pack_split(a, tb)
    bp, bn = _pack_split(b, tb)
    eb = bp - bn
    if not eb:
        return None
    q, r = divmod(ap - an, eb)
    assert not r, "inexact polynomial division"
    out = _nz1_digits(q, tb)
    assert len(out) <= nq, "quotient reconstruction overflow"
    return out


def _nz_mul(a, b, d):
    if d == 0:
        return a * b
    if not a or not b:
        return []
    if d == 1:
        return _nz_mul1(a, b)
    out = [_nz_zero(d - 1) for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = _nz_add(out[i + j], _nz_mul(x, y, d - 1), d - 1)
    while out and not out[-1]:
        out.pop()
    return out


def _nz_pow(a, e, d):
    out = _nz_one(d)
    for _ in range(e):
        out = _nz_mul(out, a, d)
    return out


def _nz_divexact(a, b, d):
    if d == 0:
        q, r = divmod(a, b)
        assert not r, "inexact integer division"
        return q
    if not a:
        return []
    db = len(b) - 1
    if d == 1:
        if db and (len(a) - db) * db >= 200:
            q = _nz_div1(a, b)
            if q is not None:
                return q
        lb = b[-1]
        r = list(a)
        q = [0] * (len(a) - db)
        for pos in range(len(a) - 1, db - 1, -1):
            top = r[pos]
            if top:
                c, rem = divmod(top, lb)
                assert not rem, "inexact integer division"
                q[pos - db] = c
                off = pos - db
                for i in range(db):
                    y = b[i]
                    if y:
                        r[off + i] -= c * y
        assert not any(r[:db]), "inexact polynomial division"
        while q and not q[-1]:
            q.pop()
        return q
    lb = b[-1]
    r = list(a)
    q = [_nz_zero(d - 1)] * (len(a) - db)
    for pos in range(len(a) - 1, db - 1, -1):
        top = r[pos]
        if top:
            c = _nz_divexact(top, lb, d - 1)
            q[pos - db] = c
            off = pos - db
            for i in range(db):
                y = b[i]
                if y:
                    r[off + i] = _nz_sub(r[off + i], _nz_mul(c, y, d - 1), d - 1)
    assert all(not x for x in r[:db]), "inexact polynomial division"
    while q and not q[-1]:
        q.pop()
    return q


def _nst_from_coeff(c, m, L):
    """One ep coefficient dict as a nested dense int structure, scaled by L."""
    if m == 0:
        q = c.get((), None) if c else None
        return int(q * L) if q else 0
    if not c:
        return []
    size = max(k[0] for k in c) + 1
    if m == 1:
        out = [0] * size
        for k, v in c.items():
            out[k[0]] = int(v * L)
    else:
        buckets = [dict() for _ in range(size)]
        for k, v in c.items():
            buckets[k[0]][k[1:]] = v
        out = [_nst_from_coeff(b, m - 1, L) for b in buckets]
    while out and not out[-1]:
        out.pop()
    return out


def _nst_to_coeff(a, m):
    if m == 0:
        return {(): QQ(a)} if a else {}
    out = {}
    if m == 1:
        for e, v in enumerate(a):
            if v:
                out[(e,)] = QQ(v)
        return out
    for e, sub in enumerate(a):
        if sub:
            for k, v in _nst_to_coeff(sub, m - 1).items():
                out[(e,) + k] = v
    return out


def _nzl_from_eplist_scaled(A, m):
    """(scaled list, L): the ep-list times its positive denominator lcm L,
    as a T-dense list of nested int coefficients."""
    from math import gcd
    L = 1
    for c in A:
        for v in c.values():
            den = int(v.denominator)
            if den != 1:
                L = L * den // gcd(L, den)
    return [_nst_from_coeff(c, m, L) for c in A], L


def _nzl_from_eplist(A, m):
    """Dense ep-list to a T-dense list of nested int coefficients.

    The whole polynomial is scaled by one positive denominator, which leaves
    root structure and signs alone."""
    return _nzl_from_eplist_scaled(A, m)[0]


def _nzl_to_eplist(A, m):
    return [_nst_to_coeff(c, m) for c in A]


def _nz_scal(a, c, d):
    """Nested list times an integer scalar."""
    if c == 1 or not a:
        return a
    if d == 0:
        return a * c
    if d == 1:
        return [x * c if x else x for x in a]
    return [_nz_scal(x, c, d - 1) for x in a]


def _nz_divexact_scal(a, g, d):
    """Nested list divided by an integer scalar that divides every entry."""
    if g == 1 or not a:
        return a
    if d == 0:
        return a // g
    if d == 1:
        return [x // g if x else x for x in a]
    return [_nz_divexact_scal(x, g, d - 1) for x in a]


def _nzl1_mul(A, B):
    """Bivariate product of T-lists of dense int coefficients in one packed
    integer multiplication; the slot width bounds every product coefficient,
    so T cells never carry into each other."""
    za = max(len(c) for c in A if c)
    zb = max(len(c) for c in B if c)
    ha = max(abs(x) for c in A if c for x in c)
    hb = max(abs(x) for c in B if c for x in c)
    zs = za + zb - 1
    terms = min(za, zb) * min(len(A), len(B))
    w = (int(ha).bit_length() + int(hb).bit_length()
         + int(terms).bit_length() + 2 + 7) & ~7
    tcells = len(A) + len(B) - 1

    def pack(L):
        flat = [0] * (len(L) * zs)
        for i, c in enumerate(L):
            if c:
                base = i * zs
                flat[base:base + len(c)] = c
        return _pack_split(flat, w)

    ap, an = pack(A)
    bp, bn = pack(B)
    vals = _unpack_diff(ap * bp + an * bn, ap * bn + an * bp,
                        tcells * zs, w)
    out = []
    for i in range(tcells):
        cell = vals[i * zs:(i + 1) * zs]
        while cell and not cell[-1]:
            cell.pop()
        out.append(cell)
    while out and not out[-1]:
        out.pop()
    return out


def _nz_list_mul(A, B, m):
    """T-level convolution of two lists of nested int coefficients."""
    if m == 1 and len(A) > 1 and len(B) > 1:
        za = zb = 0
        for c in A:
            if len(c) > za:
                za = len(c)
        for c in B:
            if len(c) > zb:
                zb = len(c)
        if za and zb and len(A) * len(B) * za * zb >= 600:
            return _nzl1_mul(A, B)
    out = [_nz_zero(m) for _ in range(len(A) + len(B) - 1)]
    for i, x in enumerate(A):
        if not x:
            continue
        for j, y in enumerate(B):
            if y:
                out[i + j] = _nz_add(out[i + j], _nz_mul(x, y, m), m)
    while out and not out[-1]:
        out.pop()
    return out


def _nz_list_pmod(A, F, m):
    """Exact pseudo-remainder on nested-int lists: (R, t) with
    lc(F)^t * (A mod F) == R."""
    dF = len(F) - 1
    lb = F[-1]
    t = 0
    R = list(A)
    while R and not R[-1]:
        R.pop()
    while len(R) > dF:
        top = R[-1]
        if not top:
            R.pop()
            continue
        del R[-1]
        R = [_nz_mul(lb, c, m) if c else c for c in R]
        t += 1
        off = len(R) - dF
        for i in range(dF):
            y = F[i]
            if y:
                R[off + i] = _nz_sub(R[off + i], _nz_mul(top, y, m), m)
        while R and not R[-1]:
            R.pop()
    return R, t


def _nz_sign(a, m):
    return ep_sign(_nst_to_coeff(a, m))


def _nz_prem(A, B, m):
    """lc(B)^(deg A - deg B + 1) * (A mod B) on nested-int lists."""
    db = len(B) - 1
    lb = B[-1]
    need = len(A) - len(B) + 1
    used = 0
    R = list(A)
    while len(R) > db:
        top = R[-1]
        if not top:
            R.pop()
            continue
        del R[-1]
        R = [_nz_mul(lb, c, m) if c else c for c in R]
        used += 1
        off = len(R) - db
        for i in range(db):
            y = B[i]
            if y:
                R[off + i] = _nz_sub(R[off + i], _nz_mul(top, y, m), m)
        while R and not R[-1]:
            R.pop()
    if R:
        for _ in range(need - used):
            R = [_nz_mul(lb, c, m) if c else c for c in R]
    return R


def _nz1_inf_sign(a, d):
    """Sign under the infinitesimal order: the lowest power dominates."""
    if d == 0:
        return (a > 0) - (a < 0)
    for x in a:
        if x:
            s = _nz1_inf_sign(x, d - 1)
            if s:
                return s
    return 0


def _nz1_eval2(a, tb):
    """Value of a dense int list at 2^tb."""
    if _gpack is not None and a and max(map(abs, a)).bit_length() < tb:
        p, n = _pack_split(a, tb)
        return p - n
    v = _mpz(0)
    for x in reversed(a):
        v = (v << tb) + x
    return v


def _nz1_digits(g, tb):
    """Balanced base-2^tb digits of an integer."""
    if _gunpack is not None:
        count = (int(g).bit_length() + 2 * tb) // tb
        half = _mpz(1) << (tb - 1)
        bias = (((_mpz(1) << (count * tb)) - 1) // ((_mpz(1) << tb) - 1)
                * half)
        digs = [x - half for x in _gunpack(g + bias, tb)]
        digs.extend([-half] * (count - len(digs)))
    else:
        base = _mpz(1) << tb
        half = base >> 1
        mask = base - 1
        digs = []
        while g:
            dd = g & mask
            if dd >= half:
                dd -= base
            digs.append(int(dd))
            g = (g - dd) >> tb
    while digs and not digs[-1]:
        digs.pop()
    return digs


def _nz1_trial_div(a, b):
    """Quotient of dense int lists, or None when the division is inexact."""
    db = len(b) - 1
    if len(a) < len(b):
        return None
    lq = len(a) - db
    if lq * len(b) >= 64:
        # quotients of exact divisions obey the divisor height bound, so the
        # balanced digits of the integer quotient at that scale are the
        # candidate; agreement at a second point past the height of the
        # difference polynomial keeps inexact inputs out
        from math import isqrt
        tb = lq + int(isqrt(sum(x * x for x in a)) + 1).bit_length() + 2
        vb = _nz1_eval2(b, tb)
        if vb:
            q, r = divmod(_nz1_eval2(a, tb), vb)
            if r:
                return None
            cand = _nz1_digits(q, tb)
            if len(cand) != lq:
                return None
            ha = max(abs(x) for x in a)
            hb = max(abs(x) for x in b)
            hq = max(abs(x) for x in cand)
            s = int(ha + min(lq, len(b)) * hq * hb).bit_length() + 2
            if _nz1_eval2(a, s) == _nz1_eval2(cand, s) * _nz1_eval2(b, s):
                return cand
            return None
    lb = b[-1]
    r = list(a)
    q = [0] * lq
    for pos in range(len(a) - 1, db - 1, -1):
        top = r[pos]
        if top:
            c, rem = divmod(top, lb)
            if rem:
                return None
            q[pos - db] = c
            off = pos - db
            for i in range(db):
                y = b[i]
                if y:
                    r[off + i] -= c * y
    if any(r[:db]):
        return None
    return q


def _nz1_pair_gcd(a, b):
    """Gcd of two dense int lists, normalized to positive lowest coefficient.

    An integer gcd of the two values at a point past the divisor height bound
    certifies coprimality outright; otherwise the balanced digits of that
    integer gcd give a candidate that trial division verifies, with a
    subresultant run as the last resort."""
    from math import isqrt
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        return [1]
    bits = min(
        len(a) + int(isqrt(sum(x * x for x in a)) + 1).bit_length(),
        len(b) + int(isqrt(sum(x * x for x in b)) + 1).bit_length(),
    ) + 2
    for tb in (bits, bits + 24):
        va = _nz1_eval2(a, tb)
        vb = _nz1_eval2(b, tb)
        if not va or not vb:
            continue
        g = _int_gcd(va, vb)
        if g == 1:
            return [1]
        digs = _nz1_digits(g, tb)
        if not digs:
            continue
        ig = 0
        for x in digs:
            ig = _int_gcd(ig, x)
        if ig > 1:
            digs = [x // ig for x in digs]
        while digs and not digs[-1]:
            digs.pop()
        if digs and _nz1_trial_div(a, digs) is not None \
                and _nz1_trial_div(b, digs) is not None:
            if _nz1_inf_sign(digs, 1) < 0:
                digs = [-x for x in digs]
            return digs
    seq = _nz_subres(a, b, 0)
    g = list(seq[-1][0])
    ig = 0
    for x in g:
        ig = _int_gcd(ig, x)
    if ig > 1:
        g = [int(x // ig) for x in g]
    if _nz1_inf_sign(g, 1) < 0:
        g = [-x for x in g]
    return g


def _nz1_strip(A, m):
    """Positive content (integer, monomial and polynomial) divided out of a
    T-dense list of nested int coefficients; signs unchanged."""
    while A and not A[-1]:
        A.pop()
    if not A:
        return A
    if m == 0:
        ig = 0
        for x in A:
            ig = _int_gcd(ig, x)
        ig = int(ig)
        if ig > 1:
            A = [int(x // ig) for x in A]
        return A
    # the first nonzero entry of each cell already witnesses coprimality
    # and the lowest power most of the time, saving the full scan
    ig = 0
    low = None
    for c in A:
        for j, x in enumerate(c):
            if x:
                ig = _int_gcd(ig, x)
                if low is None or j < low:
                    low = j
                break
    if ig != 1 or low:
        ig = 0
        low = None
        for c in A:
            for j, x in enumerate(c):
                if x:
                    ig = _int_gcd(ig, x)
                    if low is None or j < low:
                        low = j
        ig = int(ig)
        if ig > 1 or low:
            A = [
                [int(x // ig) for x in c[low:]] if c else c
                for c in A
            ]
    g = None
    for c in A:
        if c:
            g = list(c) if g is None else _nz1_pair_gcd(g, c)
            if len(g) == 1:
                g = None
                break
    if g is not None and len(g) > 1:
        if _nz1_inf_sign(g, 1) < 0:
            g = [-x for x in g]
        out = []
        for c in A:
            if c:
                q = _nz1_trial_div(c, g)
                assert q is not None, "content must divide every coefficient"
                while q and not q[-1]:
                    q.pop()
                out.append(q)
            else:
                out.append(c)
        A = out
    return A


def _nz1_prs_seq(A, B, m):
    """Primitive signed remainder sequence on nested int lists (m <= 1).

    Every element equals minus the remainder of its two predecessors up to a
    positive factor, content stripped, so the sequence is Sturm-correct and
    coefficients stay near their primitive size."""
    seq = [A, B]
    while True:
        A, B = seq[-2], seq[-1]
        if len(B) == 1:
            return seq
        db = len(B) - 1
        lb = B[-1]
        R = list(A)
        t = 0
        while len(R) > db:
            top = R[-1]
            if not top:
                R.pop()
                continue
            del R[-1]
            R = [_nz_mul(lb, c, m) if c else c for c in R]
            t += 1
            off = len(R) - db
            for i in range(db):
                y = B[i]
                if y:
                    R[off + i] = _nz_sub(R[off + i], _nz_mul(top, y, m), m)
            while R and not R[-1]:
                R.pop()
        if not R:
            return seq
        if not (_nz1_inf_sign(lb, m) < 0 and t % 2 == 1):
            R = [_nz_neg(c, m) if c else c for c in R]
        seq.append(_nz1_strip(R, m))


def _nz_subres(A, B, m):
    """Subresultant remainder sequence with Sturm sign multipliers.

    Returns [(poly, sigma), ...] starting with (A, 1), (B, 1); sigma * poly
    equals minus the Euclidean remainder of the two predecessors up to a
    positive factor of the coefficient order, so variation counts along the
    sequence behave like a signed remainder sequence.  Divisions follow the
    subresultant recurrence and are exact, no content is computed."""
    out = [(A, 1), (B, 1)]
    delta = len(A) - len(B)
    beta_poly = None  # None: beta is the scalar beta_sign
    beta_sign = -1 if delta % 2 == 0 else 1
    psi_poly = None  # None: psi is the scalar -1
    while True:
        raw = _nz_prem(A, B, m)
        if not raw:
            return out
        lb = B[-1]
        slb = _nz_sign(lb, m)
        if beta_poly is None:
            R = raw if beta_sign > 0 else [_nz_neg(c, m) for c in raw]
        else:
            R = [_nz_divexact(c, beta_poly, m) if c else c for c in raw]
        # sigma * R must be minus the remainder of the signed predecessors
        # up to a positive factor: rem = R * beta / lb^(delta+1)
        srem = beta_sign * (slb if (delta + 1) % 2 else 1)
        out.append((R, -out[-2][1] * srem))
        if psi_poly is None:
            if delta:
                psi_poly = _nz_neg(_nz_pow(lb, delta, m), m)
        elif delta == 1:
            psi_poly = _nz_neg(lb, m)
        elif delta:
            psi_poly = _nz_divexact(
                _nz_pow(_nz_neg(lb, m), delta, m),
                _nz_pow(psi_poly, delta - 1, m),
                m,
            )
        delta = len(B) - len(raw)
        if psi_poly is None:
            beta_poly = lb if delta % 2 else _nz_neg(lb, m)
            beta_sign = slb if delta % 2 else -slb
        else:
            beta_poly = _nz_neg(
                _nz_mul(lb, _nz_pow(psi_poly, delta, m), m), m
            )
            beta_sign = _nz_sign(beta_poly, m)
        A, B = B, R


def _prem_signed(A, B, m):
    """Minus the remainder of A by B, up to a positive rescale, content
    stripped.  A and B are nonzero ep-coefficient lists."""
    dB = len(B) - 1
    assert dB >= 0
    lb = B[-1]
    R = list(A)
    t = 0
    while len(R) - 1 >= dB and R:
        cr = R[-1]
        off = len(R) - 1 - dB
        t += 1
        newR = [ep_mul(lb, c) if c else c for c in R[:-1]]
        for j in range(dB):
            if B[j]:
                newR[off + j] = ep_sub(newR[off + j], ep_mul(cr, B[j]))
        R = _ep_trim(newR)
    # R = lb^t * rem(A, B); flip once more unless lb^t already negative
    if not (ep_sign(lb) < 0 and t % 2 == 1):
        R = [ep_neg(c) for c in R]
    return _strip_content(R, m)


def _ep_mod(A, F, m):
    """Remainder of A modulo F up to a positive rescale."""
    A = _ep_trim(list(A))
    if len(A) < len(F):
        return _strip_content(A, m)
    R = _prem_signed(A, F, m)
    return [ep_neg(c) for c in R]


def _ep_list_pmod(A, F):
    """Exact pseudo-remainder: (R, t) with lc(F)^t * (A mod F) == R.

    No content is stripped; callers that track the exponent keep exact
    values in the localization at lc(F)."""
    R = _ep_trim(list(A))
    dF = len(F) - 1
    lb = F[-1]
    t = 0
    while len(R) - 1 >= dF:
        cr = R[-1]
        R = [ep_mul(lb, c) if c else c for c in R[:-1]]
        t += 1
        off = len(R) - dF
        for j in range(dF):
            if F[j]:
                R[off + j] = ep_sub(R[off + j], ep_mul(cr, F[j]))
        R = _ep_trim(R)
    return R, t


def _from_ep(A, field):
    """Dense ep-list back to a UPoly over the given field handle."""
    m = _tower_size(field)
    if field.mode == "rational":
        zero = (0,) * m
        return UPoly([c.get(zero, QQ(0)) for c in A], field)
    one = ep_const(1, m)
    return UPoly(
        [InfElem(c, one, field.tower, reduce=False) for c in A], field
    )


def _ep_prs_gcd(A, B, m):
    """Primitive gcd of content-stripped ep-lists by remainder sequences."""
    if len(A) < len(B):
        A, B = B, A
    if not B:
        return A
    if len(B) == 1:
        return [ep_const(1, m)]
    if m <= 1:
        G = _nz1_prs_seq(
            _nzl_from_eplist(A, m), _nzl_from_eplist(B, m), m
        )[-1]
    else:
        G = _nz_subres(_nzl_from_eplist(A, m), _nzl_from_eplist(B, m), m)[-1][0]
    if len(G) == 1:
        return [ep_const(1, m)]
    return _strip_content([_nst_to_coeff(c, m) for c in G], m)


def _ep_list_divexact(A, B):
    """Exact quotient of dense ep-lists; the division must come out even."""
    A = list(A)
    dB = len(B) - 1
    lb = B[-1]
    out = []
    for i in range(len(A) - 1 - dB, -1, -1):
        top = A[dB + i]
        c = ep_divexact(top, lb) if top else {}
        assert c is not None, "inexact list division"
        out.append(c)
        if c:
            for j in range(dB):
                if B[j]:
                    A[i + j] = ep_sub(A[i + j], ep_mul(c, B[j]))
    out.reverse()
    return _ep_trim(out)


def _srs_var_diff(P, G, m):
    """Var(-inf) - Var(+inf) along the signed remainder sequence of (P, G)."""
    if not G:
        return 0
    if m <= 1:
        seq = _nz1_prs_seq(
            _nzl_from_eplist(P, m), _nzl_from_eplist(G, m), m
        )
        pairs = [(A, 1) for A in seq]
    else:
        pairs = _nz_subres(_nzl_from_eplist(P, m), _nzl_from_eplist(G, m), m)
    sm = []
    sp = []
    for A, sigma in pairs:
        s = sigma * _nz_sign(A[-1], m)
        d = len(A) - 1
        sp.append(s)
        sm.append(s if d % 2 == 0 else -s)
    return _var(sm) - _var(sp)


def _var(signs):
    n = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            n += 1
        prev = s
    return n


def _ep_key(A):
    return tuple(tuple(sorted(c.items())) for c in A)


# ---------------------------------------------------------------------------
# Tarski queries and sign determination
# ---------------------------------------------------------------------------

def tarski_query(Q, P):
    """Sum of sign(Q(x)) over the distinct real roots x of P."""
    assert Q.field is P.field or Q.field == P.field
    if P.degree() <= 0:
        assert not P.is_zero(), "Tarski query against the zero polynomial"
        return 0
    m = _tower_size(P.field)
    Pep = _strip_content(_to_ep(P), m)
    Qep = _to_ep(Q)
    G = _ep_mod(_ep_list_mul(_ep_list_deriv(Pep), Qep), Pep, m)
    return _srs_var_diff(Pep, G, m)


# all three signs a polynomial can take at a root; candidate order matters
# for reproducible adapted families
_SIGNS = (0, 1, -1)


class _SignState:
    __slots__ = ("conds", "counts", "ada", "prods", "mat")

    def __init__(self, conds, counts, ada, prods, mat):
        self.conds = conds      # realized sign vectors, processing order
        self.counts = counts    # positive root counts per vector
        self.ada = ada          # adapted exponent vectors, one per cond
        self.prods = prods      # product polynomials mod f, per ada row
        self.mat = mat          # mat[i][j] = conds[j] ** ada[i]


def _solve_rational(A, b):
    """Solve the square system A x = b exactly; A invertible by construction."""
    n = len(A)
    M = [[QQ(x) for x in row] + [QQ(y)] for row, y in zip(A, b)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


class RootFinder:
    """Root bookkeeping for one polynomial: counts, Thom encodings, signs.

    The polynomial is replaced by its squarefree part, so roots are the
    distinct real zeros.  States are extended one polynomial at a time; the
    state reached after processing all derivatives of f doubles as the Thom
    encoding table and is cached for repeated sign queries.
    """

    def __init__(self, f):
        assert not f.is_zero()
        self.field = f.field
        self.f = square_free(f)
        self.m = _tower_size(f.field)
        self.fep = _strip_content(_to_ep(self.f), self.m)
        self.fdep = _ep_list_deriv(self.fep)
        self._taq_cache = {}
        self._sign_cache = {}
        self._roots = None
        self._dstate = None
        one = ep_const(1, self.m)
        r = self._taq([one])
        self.count = r
        if r == 0:
            self._state0 = _SignState([], [], [], [], [])
        else:
            self._state0 = _SignState([()], [r], [()], [[one]], [[1]])

    # Tarski query of an ep-list against f
    def _taq(self, A):
        A = _ep_trim(list(A))
        if not A:
            return 0
        key = _ep_key(A)
        hit = self._taq_cache.get(key)
        if hit is not None:
            return hit
        if len(self.fep) - 1 <= 0:
            val = 0
        else:
            G = _ep_mod(_ep_list_mul(self.fdep, A), self.fep, self.m)
            val = _srs_var_diff(self.fep, G, self.m)
        self._taq_cache[key] = val
        return val

    def _extend(self, st, Aep):
        """Sign determination state extended by one more polynomial."""
        if not st.conds:
            return st
        A = _ep_mod(Aep, self.fep, self.m)
        A2 = _ep_mod(_ep_list_mul(A, A), self.fep, self.m)
        t = len(st.conds)
        powers = {0: [ep_const(1, self.m)], 1: A, 2: A2}
        rows = [(i, e) for i in range(t) for e in (0, 1, 2)]
        prods = {}
        b = []
        for i, e in rows:
            if e == 0:
                pr = st.prods[i]
            else:
                pr = _ep_mod(_ep_list_mul(st.prods[i], powers[e]), self.fep, self.m)
            prods[(i, e)] = pr
            b.append(self._taq(pr))
        cands = [(j, s) for j in range(t) for s in _SIGNS]
        A_mat = [
            [st.mat[i][j] * (s ** e if e else 1) for (j, s) in cands]
            for (i, e) in rows
        ]
        x = _solve_rational(A_mat, b)
        realized = []
        counts = []
        for (j, s), c in zip(cands, x):
            assert c.denominator == 1 and c >= 0, "sign counts must be whole"
            if c > 0:
                realized.append((j, s))
                counts.append(int(c))
        # compress: greedily keep an invertible square submatrix, low
        # exponents first
        cols = [cands.index(js) for js in realized]
        order = sorted(range(len(rows)), key=lambda r: (rows[r][1], rows[r][0]))
        chosen = []
        basis = []
        for r in order:
            v = [QQ(A_mat[r][c]) for c in cols]
            w = list(v)
            for bv in basis:
                piv = next(i for i, y in enumerate(bv) if y != 0)
                if w[piv] != 0:
                    f = w[piv] / bv[piv]
                    w = [a - f * bx for a, bx in zip(w, bv)]
            if any(y != 0 for y in w):
                basis.append(w)
                chosen.append(r)
            if len(chosen) == len(realized):
                break
        assert len(chosen) == len(realized)
        chosen.sort()
        new_conds = [st.conds[j] + (s,) for (j, s) in realized]
        new_ada = [st.ada[rows[r][0]] + (rows[r][1],) for r in chosen]
        new_prods = [prods[rows[r]] for r in chosen]
        new_mat = [[A_mat[r][c] for c in cols] for r in chosen]
        return _SignState(new_conds, counts, new_ada, new_prods, new_mat)

    def _derived_state(self):
        if self._dstate is None:
            st = self._state0
            d = len(self.fep) - 1
            D = self.fdep
            for _ in range(1, d):
                st = self._extend(st, D)
                D = _ep_list_deriv(D)
            self._dstate = st
        return self._dstate

    def thom_roots(self):
        """All real roots as RealPoints, in increasing order."""
        if self._roots is None:
            st = self._derived_state()
            pts = [RealPoint(self, enc) for enc in st.conds]
            pts.sort()
            self._roots = pts
        return self._roots

    def sign_at(self, point, g):
        """Sign of the polynomial g at the given root of f."""
        return self.sign_at_ep(point, _to_ep(g))

    def sign_at_ep(self, point, gep):
        """Sign at a root of a polynomial given as an ep-coefficient list."""
        gep = _ep_mod(gep, self.fep, self.m)
        key = _ep_key(gep)
        table = self._sign_cache.get(key)
        if table is None:
            st = self._extend(self._derived_state(), gep)
            table = {cond[:-1]: cond[-1] for cond in st.conds}
            self._sign_cache[key] = table
        return table[point.encoding]


class RealPoint:
    """A real algebraic number: a root of a squarefree polynomial, named by
    the signs of the derivatives at the root (its Thom encoding)."""

    __slots__ = ("finder", "encoding")

    def __init__(self, finder, encoding):
        self.finder = finder
        self.encoding = tuple(encoding)

    @property
    def min_poly(self):
        return self.finder.f

    def sign_of(self, g):
        return self.finder.sign_at(self, g)

    def sign_of_ep(self, A):
        return self.finder.sign_at_ep(self, A)

    def __eq__(self, other):
        return (
            isinstance(other, RealPoint)
            and self.finder is other.finder
            and self.encoding == other.encoding
        )

    def __hash__(self):
        return hash((id(self.finder), self.encoding))

    def __lt__(self, other):
        assert self.finder is other.finder, "roots of different polynomials"
        a, b = self.encoding, other.encoding
        if a == b:
            return False
        i = max(j for j in range(len(a)) if a[j] != b[j])
        if i + 1 < len(a):
            s = a[i + 1]
        else:
            s = self.finder.field.sign(self.finder.f.lc())
        assert s != 0
        return (a[i] < b[i]) if s > 0 else (a[i] > b[i])

    def __repr__(self):
        return "RealPoint(deg %d, thom %s)" % (
            self.finder.f.degree(),
            self.encoding,
        )


def thom_roots(f):
    """Increasingly ordered real roots of f as Thom-encoded points."""
    return RootFinder(f).thom_roots()


def count_real_roots(f):
    return RootFinder(f).count


def sign_determination(family, f):
    """Sorted list of the sign vectors the family realizes at roots of f."""
    rf = RootFinder(f)
    st = rf._state0
    for g in family:
        st = rf._extend(st, _to_ep(g))
    return sorted(st.conds)


def sign_at_point(g, point):
    return point.sign_of(g)

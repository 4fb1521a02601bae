"""Exact ordered fields: rationals and infinitesimal towers.

An InfTower declares symbols eps_0 >> eps_1 >> ... >> eps_{m-1}, every one of
them positive and infinitesimal, each infinitesimal with respect to all powers
of the previous ones:

    0 < eps_{m-1} << ... << eps_1 << eps_0 << 1.

Elements of the field Q(eps_0,...,eps_{m-1}) are ratios of sparse polynomials
in the symbols (InfElem).  The sign of a nonzero polynomial is the sign of its
dominant term, the term of largest magnitude: comparing exponent tuples from
the smallest symbol backwards, fewer factors of a smaller infinitesimal always
win, so the dominant term is the one whose reversed exponent tuple is
lexicographically least.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as QQ
    from gmpy2 import gcd as _int_gcd
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 present in normal installs
    from math import gcd as _int_gcd
    QQ = Fraction
    _mpz = int

QQ0 = QQ(0)
QQ1 = QQ(1)


def rat(a, b=1):
    """Exact rational from ints, strings or another rational."""
    if isinstance(a, float) or isinstance(b, float):
        raise TypeError("floats are not exact; pass ints, strings or rationals")
    return QQ(a) / QQ(b) if b != 1 else QQ(a)


def sign_rat(q):
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


# ---------------------------------------------------------------------------
# sparse polynomials in the tower symbols: dict[exponent tuple] -> QQ
# ---------------------------------------------------------------------------

def ep_zero():
    return {}


def ep_const(q, m):
    q = QQ(q)
    return {} if q == 0 else {(0,) * m: q}


def ep_sym(i, m):
    e = [0] * m
    e[i] = 1
    return {tuple(e): QQ1}


def ep_add(a, b):
    c = dict(a)
    for k, v in b.items():
        w = c.get(k)
        if w is None:
            c[k] = v
        else:
            w = w + v
            if w == 0:
                del c[k]
            else:
                c[k] = w
    return c


def ep_neg(a):
    return {k: -v for k, v in a.items()}


def ep_sub(a, b):
    return ep_add(a, ep_neg(b))


def ep_mul(a, b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    if len(a) * len(b) >= _KRON_MUL_MIN:
        c = _kron_mul(a, b)
        if c is not None:
            return c
    c = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            w = c.get(k)
            if w is None:
                c[k] = va * vb
            else:
                w = w + va * vb
                if w == 0:
                    del c[k]
                else:
                    c[k] = w
    return c


# ---------------------------------------------------------------------------
# Kronecker fast paths: big products and gcds ride on integer arithmetic
# ---------------------------------------------------------------------------

_KRON_MUL_MIN = 48


def _ep_int_scaled(a):
    """(integer-coefficient copy, positive scale): a == scale * copy."""
    c = ep_content_scalar(a)
    if c == 1:
        return {k: int(v) for k, v in a.items()}, c
    return {k: int(v / c) for k, v in a.items()}, c


def _kron_layout(degs):
    """Strides packing bounded exponent tuples into one flat index."""
    strides = []
    s = 1
    for d in degs:
        strides.append(s)
        s *= d + 1
    return strides, s


def _kron_flat(k, strides):
    f = 0
    for e, s in zip(k, strides):
        if e:
            f += e * s
    return f


def _kron_mul(a, b):
    """Product via packed integers; None when the dense range is wasteful."""
    m = len(next(iter(a)))
    degs = [ep_deg(a, i) + ep_deg(b, i) for i in range(m)]
    strides, dense = _kron_layout(degs)
    if dense > 4 * len(a) * len(b) + 2048:
        return None
    ai, ca = _ep_int_scaled(a)
    bi, cb = _ep_int_scaled(b)
    ha = max(abs(v) for v in ai.values())
    hb = max(abs(v) for v in bi.values())
    bound = 2 * ha * hb * min(len(ai), len(bi))
    w = (bound.bit_length() + 8) // 8
    apb = bytearray(dense * w)
    anb = bytearray(dense * w)
    for k, v in ai.items():
        off = w * _kron_flat(k, strides)
        if v > 0:
            apb[off:off + w] = v.to_bytes(w, "little")
        else:
            anb[off:off + w] = (-v).to_bytes(w, "little")
    bpb = bytearray(dense * w)
    bnb = bytearray(dense * w)
    for k, v in bi.items():
        off = w * _kron_flat(k, strides)
        if v > 0:
            bpb[off:off + w] = v.to_bytes(w, "little")
        else:
            bnb[off:off + w] = (-v).to_bytes(w, "little")
    ap = _mpz(int.from_bytes(apb, "little"))
    an = _mpz(int.from_bytes(anb, "little"))
    bp = _mpz(int.from_bytes(bpb, "little"))
    bn = _mpz(int.from_bytes(bnb, "little"))
    pos = ap * bp + an * bn
    neg = ap * bn + an * bp
    nbytes = dense * w
    pos = int(pos).to_bytes(nbytes, "little")
    neg = int(neg).to_bytes(nbytes, "little")
    scale = ca * cb
    out = {}
    for f in range(dense):
        coeff = int.from_bytes(pos[f * w:(f + 1) * w], "little") - \
            int.from_bytes(neg[f * w:(f + 1) * w], "little")
        if not coeff:
            continue
        k = []
        r = f
        for d in degs:
            r, e = divmod(r, d + 1)
            k.append(e)
        out[tuple(k)] = scale * coeff
    return out


def ep_scale(a, q):
    if q == 0:
        return {}
    return {k: v * q for k, v in a.items()}


def ep_dom(a):
    """Dominant (largest-magnitude) term: key with lex-least reversed tuple."""
    k = min(a, key=lambda t: t[::-1])
    return k, a[k]


def ep_sign(a):
    if not a:
        return 0
    return sign_rat(ep_dom(a)[1])


def ep_eval(a, vals):
    """Evaluate at rational symbol values (tuple, one per position)."""
    total = QQ0
    for k, v in a.items():
        t = v
        for e, x in zip(k, vals):
            if e:
                t = t * x ** e
        total = total + t
    return total


def ep_deg(a, i):
    return max((k[i] for k in a), default=-1)


def ep_mondiv(a, i, e):
    """Divide by symbol i to the power e (assumed exact)."""
    if e == 0:
        return a
    out = {}
    for k, v in a.items():
        kk = list(k)
        kk[i] -= e
        assert kk[i] >= 0
        out[tuple(kk)] = v
    return out


def ep_content_scalar(a):
    """Positive rational c with a/c integer-primitive; 1 for the zero poly."""
    if not a:
        return QQ1
    from math import gcd, lcm
    nums = [abs(int(v.numerator)) for v in a.values()]
    dens = [int(v.denominator) for v in a.values()]
    g = 0
    for n in nums:
        g = gcd(g, n)
    l = 1
    for d in dens:
        l = lcm(l, d)
    return QQ(g, l)


# exact multivariate division and gcd (primitive PRS), used to keep InfElem
# representations reduced

def ep_divexact(a, b):
    """a // b when the division is exact, else None."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    m = len(next(iter(b)))
    kb, cb = max(b.items(), key=lambda kv: kv[0])  # plain lex leading term
    q = {}
    r = dict(a)
    while r:
        ka, ca = max(r.items(), key=lambda kv: kv[0])
        ke = tuple(x - y for x, y in zip(ka, kb))
        if any(e < 0 for e in ke):
            return None
        cq = ca / cb
        q[ke] = cq
        r = ep_sub(r, ep_mul({ke: cq}, b))
    return q


def _to_main(a, i, m):
    """Dense list in symbol i, coefficients are polys in the other symbols."""
    d = ep_deg(a, i)
    out = [dict() for _ in range(d + 1)]
    for k, v in a.items():
        kk = list(k)
        e = kk[i]
        kk[i] = 0
        out[e][tuple(kk)] = v
    while out and not out[-1]:
        out.pop()
    return out


def _from_main(coeffs, i):
    out = {}
    for e, c in enumerate(coeffs):
        for k, v in c.items():
            kk = list(k)
            kk[i] = e
            out[tuple(kk)] = v
    return out


def ep_gcd(a, b):
    """gcd in Q[eps_*], primitive with positive dominant coefficient."""
    if not a:
        return _pnormalize_unit(b)
    if not b:
        return _pnormalize_unit(a)
    m = len(next(iter(a)))
    used = [i for i in range(m) if ep_deg(a, i) > 0 or ep_deg(b, i) > 0]
    if not used:
        return ep_const(1, m)
    g = _ep_gcd_heu(a, b, m)
    if g is not None:
        return g
    i = used[-1]
    A = _to_main(a, i, m)
    B = _to_main(b, i, m)
    g = _pgcd_main(A, B, i, m)
    return _pnormalize_unit(g)


def _ep_min_strip(a, m):
    """(copy with per-symbol minimum exponents removed, the exponents)."""
    mins = [min(k[i] for k in a) for i in range(m)]
    if not any(mins):
        return a, mins
    out = {tuple(e - s for e, s in zip(k, mins)): v for k, v in a.items()}
    return out, mins


def _mignotte_bits(ai, m):
    """Bits bounding the height of any divisor of the integer poly ai."""
    from math import isqrt
    n2 = isqrt(sum(int(v) * int(v) for v in ai.values())) + 1
    return sum(ep_deg(ai, i) for i in range(m)) + n2.bit_length() + 1


def _kron_eval(ai, strides, t):
    """Integer value at eps_i = 2^(t * strides[i])."""
    v = 0
    for k, c in ai.items():
        v += int(c) << (t * _kron_flat(k, strides))
    return v


def _dense_divexact(A, B):
    """A // B for dense int lists, or None when the division is not exact."""
    dB = len(B) - 1
    if len(A) < len(B):
        return None
    R = list(A)
    lb = B[-1]
    out = [0] * (len(A) - len(B) + 1)
    for idx in range(len(out) - 1, -1, -1):
        t = R[dB + idx]
        if t % lb:
            return None
        c = t // lb
        out[idx] = c
        if c:
            for j in range(dB + 1):
                R[idx + j] -= c * B[j]
    if any(R):
        return None
    return out


def _ep_gcd_heu(a, b, m):
    """Heuristic gcd certificate over the packed integers, None if unsure.

    Evaluating at eps_i = 2^(t * stride) with t past the Mignotte height of
    any candidate divisor makes a unit integer gcd a proof of coprimality;
    in one symbol the divisor itself is read back from the balanced base-2^t
    digits and checked by exact division.
    """
    a, sa = _ep_min_strip(a, m)
    b, sb = _ep_min_strip(b, m)
    shift = [min(x, y) for x, y in zip(sa, sb)]
    mono = {tuple(shift): QQ1}
    if len(a) == 1 or len(b) == 1:
        return _pnormalize_unit(mono)
    ai, _ = _ep_int_scaled(a)
    bi, _ = _ep_int_scaled(b)
    degs = [min(ep_deg(a, i), ep_deg(b, i)) for i in range(m)]
    strides, dense = _kron_layout(degs)
    bits = min(_mignotte_bits(ai, m), _mignotte_bits(bi, m))
    uni = [i for i in range(m) if degs[i] > 0]
    for t in (bits + 3, bits + 19, bits + 40):
        g = int(_int_gcd(_kron_eval(ai, strides, t),
                         _kron_eval(bi, strides, t)))
        if g == 1:
            return _pnormalize_unit(mono)
        if len(uni) != 1:
            return None
        u = uni[0]
        if any(ep_deg(ai, i) or ep_deg(bi, i)
               for i in range(m) if i != u):
            return None
        base = 1 << t
        half = base >> 1
        digs = []
        while g:
            r = g & (base - 1)
            if r > half:
                r -= base
            digs.append(r)
            g = (g - r) >> t
        cont = 0
        for d in digs:
            cont = int(_int_gcd(cont, d))
        if cont > 1:
            digs = [d // cont for d in digs]
        DA = [0] * (ep_deg(ai, u) + 1)
        for k, v in ai.items():
            DA[k[u]] = int(v)
        DB = [0] * (ep_deg(bi, u) + 1)
        for k, v in bi.items():
            DB[k[u]] = int(v)
        if _dense_divexact(DA, digs) is not None and \
                _dense_divexact(DB, digs) is not None:
            out = {}
            for e, c in enumerate(digs):
                if c:
                    k = list(shift)
                    k[u] += e
                    out[tuple(k)] = QQ(c)
            return _pnormalize_unit(out)
    return None


def _pnormalize_unit(a):
    if not a:
        return a
    c = ep_content_scalar(a)
    if ep_sign(a) < 0:
        c = -c
    return ep_scale(a, 1 / c)


def _list_content(A):
    g = {}
    for c in A:
        g = _pgcd_nounit(g, c)
        if len(g) == 1 and not any(next(iter(g))):
            break
    return g


def _pgcd_nounit(a, b):
    return ep_gcd(a, b) if (a or b) else {}


def _list_scalar_content(A):
    """Positive rational content across every term of every coefficient."""
    from math import gcd, lcm
    g = 0
    l = 1
    for c in A:
        for v in c.values():
            g = gcd(g, abs(int(v.numerator)))
            l = lcm(l, int(v.denominator))
    return QQ(g, l) if g else QQ1


def _list_primitive(A):
    g = _list_content(A)
    m = len(next(iter(g))) if g else 0
    if g != ep_const(1, m) and g:
        A = [ep_divexact(c, g) for c in A]
    # without the scalar strip, pseudo-remainder bitsizes double every step
    s = _list_scalar_content(A)
    if s != 1:
        inv = 1 / s
        A = [ep_scale(c, inv) for c in A]
    return A, g


def _pseudo_rem(A, B):
    """Pseudo-remainder of dense main-variable lists (coefficients: polys)."""
    dA, dB = len(A) - 1, len(B) - 1
    lb = B[-1]
    R = list(A)
    for _ in range(dA - dB + 1):
        if len(R) - 1 < dB:
            break
        lr = R[-1]
        R = [ep_mul(c, lb) for c in R[:-1]]
        shift = len(R) - dB
        for j, c in enumerate(B[:-1]):
            R[shift + j] = ep_sub(R[shift + j], ep_mul(c, lr))
        while R and not R[-1]:
            R.pop()
    return R


def _pgcd_main(A, B, i, m):
    if len(A) < len(B):
        A, B = B, A
    A, ca = _list_primitive(A)
    B, cb = _list_primitive(B)
    cont = ep_gcd(ca, cb)
    while True:
        if not B:
            g = A
            break
        if len(B) == 1:
            g = [ep_const(1, m)]
            break
        R = _pseudo_rem(A, B)
        if not R:
            g = B
            break
        R, _ = _list_primitive(R)
        A, B = B, R
    g = _from_main(g, i)
    return ep_mul(cont, g)


def ep_str(a, names):
    if not a:
        return "0"
    parts = []
    for k in sorted(a, key=lambda t: t[::-1]):
        v = a[k]
        factors = []
        for e, n in zip(k, names):
            if e == 1:
                factors.append(n)
            elif e > 1:
                factors.append("%s^%d" % (n, e))
        if not factors:
            parts.append(str(v))
        elif v == 1:
            parts.append("*".join(factors))
        elif v == -1:
            parts.append("-" + "*".join(factors))
        else:
            parts.append(str(v) + "*" + "*".join(factors))
    s = " + ".join(parts)
    return s.replace("+ -", "- ")


# ---------------------------------------------------------------------------
# towers and field elements
# ---------------------------------------------------------------------------

class InfTower:
    """Ordered symbols, position 0 the largest infinitesimal."""

    __slots__ = ("names",)

    def __init__(self, names=()):
        names = tuple(names)
        assert len(set(names)) == len(names), "tower symbols must be distinct"
        self.names = names

    def __len__(self):
        return len(self.names)

    def index(self, name):
        return self.names.index(name)

    def extend(self, name):
        """New tower with `name` appended as the smallest infinitesimal."""
        return InfTower(self.names + (name,))

    def __repr__(self):
        return "InfTower(%s)" % (", ".join(self.names) or "-")

    def __eq__(self, other):
        return isinstance(other, InfTower) and self.names == other.names

    def __hash__(self):
        return hash(self.names)


class UnboundedElement(ArithmeticError):
    """lim requested at a pole."""


class InfElem:
    """Element of Q(eps_0,...,eps_{m-1}) as a reduced ratio of polynomials.

    Immutable.  Arithmetic keeps the denominator positive and strips scalar
    and monomial content eagerly; full polynomial gcd reduction runs for
    univariate towers and, for larger towers, once the representation grows
    past a small threshold.
    """

    __slots__ = ("num", "den", "tower", "_key")

    def __init__(self, num, den, tower, reduce=True):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if reduce:
            num, den = _reduce(num, den, len(tower))
        self.num = num
        self.den = den
        self.tower = tower
        self._key = None

    # construction helpers
    @classmethod
    def from_rat(cls, q, tower):
        m = len(tower)
        return cls(ep_const(q, m), ep_const(1, m), tower, reduce=False)

    @classmethod
    def symbol(cls, name, tower):
        m = len(tower)
        return cls(ep_sym(tower.index(name), m), ep_const(1, m), tower, reduce=False)

    def _coerce(self, other):
        if isinstance(other, InfElem):
            assert other.tower == self.tower, "mixed towers"
            return other
        if isinstance(other, (int, Fraction)) or type(other) is type(QQ0):
            return InfElem.from_rat(QQ(other), self.tower)
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return InfElem(ep_add(self.num, o.num), self.den, self.tower)
        n = ep_add(ep_mul(self.num, o.den), ep_mul(o.num, self.den))
        return InfElem(n, ep_mul(self.den, o.den), self.tower)

    __radd__ = __add__

    def __neg__(self):
        return InfElem(ep_neg(self.num), self.den, self.tower, reduce=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return InfElem(ep_mul(self.num, o.num), ep_mul(self.den, o.den), self.tower)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.num:
            raise ZeroDivisionError("division by zero element")
        return InfElem(ep_mul(self.num, o.den), ep_mul(self.den, o.num), self.tower)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __pow__(self, e):
        assert e >= 0
        r = InfElem.from_rat(QQ1, self.tower)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    # predicates
    def is_zero(self):
        return not self.num

    def sign(self):
        return ep_sign(self.num) * ep_sign(self.den)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ep_mul(self.num, o.den) == ep_mul(o.num, self.den)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    __hash__ = None

    def key(self):
        """Hashable canonical form (full gcd reduction), for caches."""
        if self._key is None:
            n, d = _reduce(self.num, self.den, len(self.tower), full=True)
            self._key = (
                tuple(sorted(n.items())),
                tuple(sorted(d.items())),
            )
        return self._key

    def lim(self, name):
        """Image under the symbol -> 0 specialization.

        Raises UnboundedElement at a pole.
        """
        i = self.tower.index(name)
        n, d = _reduce(self.num, self.den, len(self.tower), full=True)
        if not n:
            return InfElem(n, d, self.tower, reduce=False)
        a = min(k[i] for k in n)
        b = min(k[i] for k in d)
        if a < b:
            raise UnboundedElement("pole at %s -> 0" % name)
        n = ep_mondiv(n, i, b)
        d = ep_mondiv(d, i, b)
        n0 = {k: v for k, v in n.items() if k[i] == 0}
        d0 = {k: v for k, v in d.items() if k[i] == 0}
        assert d0, "reduced denominator must survive the limit"
        return InfElem(n0, d0, self.tower)

    def eval_rat(self, vals):
        """Exact value with every symbol replaced by the given rationals."""
        d = ep_eval(self.den, vals)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the given chain")
        return ep_eval(self.num, vals) / d

    def __repr__(self):
        names = self.tower.names
        if self.den == ep_const(1, len(self.tower)):
            return ep_str(self.num, names)
        return "(%s)/(%s)" % (ep_str(self.num, names), ep_str(self.den, names))


_FULL_REDUCE_TERMS = 40


def _reduce(num, den, m, full=False):
    if not num:
        return {}, ep_const(1, m)
    # monomial content
    for i in range(m):
        e = min(min(k[i] for k in num), min(k[i] for k in den))
        if e:
            num = ep_mondiv(num, i, e)
            den = ep_mondiv(den, i, e)
    # polynomial gcd: always for small towers, lazily for big representations
    if den != ep_const(1, m):
        if full or m <= 1 or len(num) + len(den) > _FULL_REDUCE_TERMS:
            g = ep_gcd(num, den)
            if g != ep_const(1, m):
                num = ep_divexact(num, g)
                den = ep_divexact(den, g)
    # scalar content, positive denominator
    c = ep_content_scalar(den)
    if ep_sign(den) < 0:
        c = -c
    if c != 1:
        den = ep_scale(den, 1 / c)
        num = ep_scale(num, 1 / c)
    return num, den


# ---------------------------------------------------------------------------
# field handles: SYMBOLIC (real tower) and RATIONAL (instantiated chain)
# ---------------------------------------------------------------------------

class SymbolicField:
    """Arithmetic in Q(eps_*) with the genuine infinitesimal order."""

    mode = "symbolic"

    def __init__(self, names=()):
        self.tower = InfTower(names)

    def zero(self):
        return InfElem.from_rat(QQ0, self.tower)

    def one(self):
        return InfElem.from_rat(QQ1, self.tower)

    def from_rat(self, q):
        return InfElem.from_rat(QQ(q), self.tower)

    def inf(self, name):
        return InfElem.symbol(name, self.tower)

    @staticmethod
    def sign(x):
        return x.sign()

    @staticmethod
    def is_zero(x):
        return x.is_zero()

    @staticmethod
    def key(x):
        return x.key()


class RationalField:
    """The same tower instantiated at a concrete descending rational chain.

    chain(k, B) assigns eps_i = 10^(-k * B^i); with B larger than every
    epsilon-degree in play this realizes the lexicographic order, and the
    engine cross-checks two values of k.
    """

    mode = "rational"

    def __init__(self, names=(), base=6, growth=8):
        self.tower = InfTower(names)
        self.base = base
        self.growth = growth
        self.values = {
            n: QQ(1, 10 ** (base * growth ** i))
            for i, n in enumerate(self.tower.names)
        }

    def zero(self):
        return QQ0

    def one(self):
        return QQ1

    def from_rat(self, q):
        return QQ(q)

    def inf(self, name):
        return self.values[name]

    @staticmethod
    def sign(x):
        return sign_rat(x)

    @staticmethod
    def is_zero(x):
        return x == 0

    @staticmethod
    def key(x):
        return x


def make_field(names, mode="symbolic", base=6, growth=8):
    if mode == "symbolic":
        return SymbolicField(names)
    if mode == "rational":
        return RationalField(names, base=base, growth=growth)
    raise ValueError("unknown mode %r" % (mode,))

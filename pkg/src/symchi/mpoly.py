"""Sparse multivariate polynomials over an exact ordered field.

Terms map exponent tuples to nonzero field coefficients.  The variable list
is positional; block structure and variable naming live one layer up.
"""

from __future__ import annotations

from .upoly import UPoly


class MPoly:
    __slots__ = ("terms", "nvars", "field")

    def __init__(self, terms, nvars, field):
        clean = {}
        for k, v in terms.items():
            if not field.is_zero(v):
                assert len(k) == nvars
                clean[k] = v
        self.terms = clean
        self.nvars = nvars
        self.field = field

    @classmethod
    def zero(cls, field, nvars):
        return cls({}, nvars, field)

    @classmethod
    def const(cls, field, nvars, q):
        return cls({(0,) * nvars: field.from_rat(q)}, nvars, field)

    @classmethod
    def from_scalar(cls, field, nvars, c):
        """Constant polynomial from an existing field element."""
        return cls({(0,) * nvars: c}, nvars, field)

    @classmethod
    def var(cls, field, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): field.one()}, nvars, field)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in k) for k in self.terms)

    def constant_value(self):
        assert self.is_constant()
        return self.terms.get((0,) * self.nvars, self.field.zero())

    def total_degree(self):
        return max((sum(k) for k in self.terms), default=-1)

    def deg_in(self, i):
        return max((k[i] for k in self.terms), default=-1)

    def uses_var(self, i):
        return any(k[i] for k in self.terms)

    def __eq__(self, other):
        if not isinstance(other, MPoly) or self.nvars != other.nvars:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            if k in t:
                w = t[k] + v
                if self.field.is_zero(w):
                    del t[k]
                else:
                    t[k] = w
            else:
                t[k] = v
        return MPoly(t, self.nvars, self.field)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({k: -v for k, v in self.terms.items()}, self.nvars, self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = other if self._is_field_elem(other) else self.field.from_rat(other)
            if self.field.is_zero(c):
                return MPoly.zero(self.field, self.nvars)
            return MPoly(
                {k: v * c for k, v in self.terms.items()}, self.nvars, self.field
            )
        assert self.nvars == other.nvars
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        fz = self.field.is_zero
        for ka, va in a.items():
            for kb, vb in b.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                if k in out:
                    w = out[k] + va * vb
                    if fz(w):
                        del out[k]
                    else:
                        out[k] = w
                else:
                    out[k] = va * vb
        return MPoly(out, self.nvars, self.field)

    __rmul__ = __mul__

    def __pow__(self, e):
        assert e >= 0
        r = MPoly.const(self.field, self.nvars, 1)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def _is_field_elem(self, c):
        return not isinstance(c, (int,)) and not hasattr(c, "denominator")

    def _coerce(self, other):
        if isinstance(other, MPoly):
            assert other.nvars == self.nvars
            return other
        if self._is_field_elem(other):
            return MPoly.from_scalar(self.field, self.nvars, other)
        return MPoly.const(self.field, self.nvars, other)

    def derivative(self, i):
        out = {}
        for k, v in self.terms.items():
            if k[i]:
                kk = list(k)
                kk[i] -= 1
                out[tuple(kk)] = v * k[i]
        return MPoly(out, self.nvars, self.field)

    def eval(self, point):
        """Full evaluation at field elements."""
        assert len(point) == self.nvars
        total = self.field.zero()
        for k, v in self.terms.items():
            t = v
            for e, x in zip(k, point):
                if e:
                    t = t * x ** e
            total = total + t
        return total

    def subs_scalars(self, assign):
        """Partial evaluation: assign[i] = field element for some variables."""
        out = MPoly.zero(self.field, self.nvars)
        for k, v in self.terms.items():
            c = v
            kk = list(k)
            for i, x in assign.items():
                if k[i]:
                    c = c * x ** k[i]
                    kk[i] = 0
            out = out + MPoly({tuple(kk): c}, self.nvars, self.field)
        return out

    def rename_vars(self, mapping, new_nvars):
        """Send variable i to variable mapping[i]; exponents on collided
        targets add up (used for coincidence substitutions)."""
        out = {}
        fz = self.field.is_zero
        for k, v in self.terms.items():
            kk = [0] * new_nvars
            for i, e in enumerate(k):
                if e:
                    kk[mapping[i]] += e
            key = tuple(kk)
            if key in out:
                w = out[key] + v
                if fz(w):
                    del out[key]
                else:
                    out[key] = w
            else:
                out[key] = v
        return MPoly(out, new_nvars, self.field)

    def permute_vars(self, perm):
        """perm[i] = new position of variable i."""
        return self.rename_vars(perm, self.nvars)

    def extend_vars(self, new_nvars, offset=0):
        """Embed into a larger variable list, shifting by offset."""
        assert offset + self.nvars <= new_nvars
        out = {}
        for k, v in self.terms.items():
            kk = [0] * new_nvars
            kk[offset:offset + self.nvars] = k
            out[tuple(kk)] = v
        return MPoly(out, new_nvars, self.field)

    def to_upoly(self, i):
        """View as univariate in variable i; other variables must be absent."""
        coeffs = [self.field.zero()] * (self.deg_in(i) + 1)
        for k, v in self.terms.items():
            assert all(e == 0 for j, e in enumerate(k) if j != i), (
                "polynomial is not univariate in the requested variable")
            coeffs[k[i]] = v
        return UPoly(coeffs, self.field)

    def compose_upolys(self, coords):
        """Substitute UPoly expressions (all in one parameter) for variables."""
        assert len(coords) == self.nvars
        field = self.field
        out = UPoly([], field)
        cache = {}

        def power(i, e):
            if (i, e) not in cache:
                cache[(i, e)] = coords[i] ** e
            return cache[(i, e)]

        for k, v in self.terms.items():
            t = UPoly([v], field)
            for i, e in enumerate(k):
                if e:
                    t = t * power(i, e)
            out = out + t
        return out

    def coeffs_in_var(self, i):
        """Dense coefficient list in variable i; entries are MPolys without i."""
        d = self.deg_in(i)
        out = [MPoly.zero(self.field, self.nvars) for _ in range(d + 1)]
        for k, v in self.terms.items():
            kk = list(k)
            e = kk[i]
            kk[i] = 0
            out[e] = out[e] + MPoly({tuple(kk): v}, self.nvars, self.field)
        return out

    @classmethod
    def from_coeffs_in_var(cls, coeffs, i):
        assert coeffs
        first = coeffs[0]
        out = cls.zero(first.field, first.nvars)
        for e, c in enumerate(coeffs):
            if c.is_zero():
                continue
            t = {}
            for k, v in c.terms.items():
                kk = list(k)
                assert kk[i] == 0
                kk[i] = e
                t[tuple(kk)] = v
            out = out + cls(t, first.nvars, first.field)
        return out

    # lex-order leading data, used by exact division and symmetric reduction
    def lead(self):
        assert self.terms, "zero polynomial has no leading term"
        k = max(self.terms)
        return k, self.terms[k]

    def exact_div(self, other):
        """Quotient self/other, asserting divisibility."""
        assert not other.is_zero()
        if self.is_zero():
            return self
        kb, cb = other.lead()
        q = {}
        r = self
        while not r.is_zero():
            ka, ca = r.lead()
            ke = tuple(x - y for x, y in zip(ka, kb))
            assert all(e >= 0 for e in ke), "division is not exact"
            cq = ca / cb
            q[ke] = cq
            r = r - MPoly({ke: cq}, self.nvars, self.field) * other
        return MPoly(q, self.nvars, self.field)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            v = self.terms[k]
            factors = []
            for i, e in enumerate(k):
                if e == 1:
                    factors.append("x%d" % i)
                elif e > 1:
                    factors.append("x%d^%d" % (i, e))
            body = "*".join(factors)
            parts.append("(%r)%s" % (v, "*" + body if body else ""))
        return " + ".join(parts)


def elementary_symmetric(field, nvars, subset, t):
    """e_t of the given variable subset, as an MPoly."""
    assert 0 <= t <= len(subset)
    out = MPoly.const(field, nvars, 1)
    if t == 0:
        return out
    # dynamic program over the subset
    rows = [MPoly.const(field, nvars, 1)] + [
        MPoly.zero(field, nvars) for _ in range(t)
    ]
    for i in subset:
        xi = MPoly.var(field, nvars, i)
        for j in range(min(t, len(rows) - 1), 0, -1):
            rows[j] = rows[j] + rows[j - 1] * xi
    return rows[t]


def power_sum(field, nvars, subset, t):
    """p_t of the given variable subset."""
    assert t >= 1
    out = MPoly.zero(field, nvars)
    for i in subset:
        out = out + MPoly.var(field, nvars, i) ** t
    return out


def det_bareiss(mat):
    """Exact determinant of a square MPoly matrix (fraction-free)."""
    n = len(mat)
    if n == 0:
        return None
    field = mat[0][0].field
    nvars = mat[0][0].nvars
    if n == 1:
        return mat[0][0]
    M = [row[:] for row in mat]
    sign = 1
    prev = MPoly.const(field, nvars, 1)
    for k in range(n - 1):
        if M[k][k].is_zero():
            piv = next((r for r in range(k + 1, n) if not M[r][k].is_zero()), None)
            if piv is None:
                return MPoly.zero(field, nvars)
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = num.exact_div(prev)
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign > 0 else -d


def symmetric_reduce_class(P, ys, evars):
    """Rewrite P, symmetric in the variables ys, in terms of the elementary
    symmetric polynomials of ys, placed at positions evars (|evars| = |ys|).

    Other variables pass through untouched.  Standard leading-term descent:
    for lex-leading exponent pattern l1 >= l2 >= ... on the ys, subtract
    coeff * e1^(l1-l2) * e2^(l2-l3) * ... and repeat.
    """
    field = P.field
    nvars = P.nvars
    c = len(ys)
    assert len(evars) == c
    es = [elementary_symmetric(field, nvars, ys, t + 1) for t in range(c)]
    others = [i for i in range(nvars) if i not in ys]
    result = MPoly.zero(field, nvars)
    work = P

    def lead_key(k):
        return (tuple(k[i] for i in ys), tuple(k[i] for i in others))

    while not work.is_zero():
        ka = max(work.terms, key=lead_key)
        lam = [ka[i] for i in ys]
        assert all(lam[t] >= lam[t + 1] for t in range(c - 1)), (
            "polynomial is not symmetric in the given class")
        coeff = work.terms[ka]
        rest = list(ka)
        for i in ys:
            rest[i] = 0
        ee = [lam[t] - (lam[t + 1] if t + 1 < c else 0) for t in range(c)]
        mono = list(rest)
        for t in range(c):
            mono[evars[t]] += ee[t]
        result = result + MPoly({tuple(mono): coeff}, nvars, field)
        back = MPoly({tuple(rest): coeff}, nvars, field)
        for t in range(c):
            if ee[t]:
                back = back * es[t] ** ee[t]
        work = work - back
    return result

"""Exact bivariate polynomials and fractions in (q, t).

Only the Macdonald corner of the package needs two formal variables; this
ring is deliberately small. Fractions compare by cross-multiplication and
reduce to canonical form on demand via a primitive PRS gcd over Z[q][t].
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .qrational import poly_gcd


class QTPoly:
    """Polynomial in q and t: dict (i, j) -> integer coefficient of q^i t^j."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for (i, j), c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    key = (int(i), int(j))
                    s = self.terms.get(key, 0) + c
                    if s:
                        self.terms[key] = s
                    else:
                        self.terms.pop(key, None)

    @staticmethod
    def const(c: int) -> "QTPoly":
        return QTPoly({(0, 0): c})

    @staticmethod
    def one() -> "QTPoly":
        return QTPoly.const(1)

    @staticmethod
    def monomial(i: int, j: int, c: int = 1) -> "QTPoly":
        return QTPoly({(i, j): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other)
        out = QTPoly(self.terms)
        for k, c in other.terms.items():
            s = out.terms.get(k, 0) + c
            if s:
                out.terms[k] = s
            else:
                out.terms.pop(k, None)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = QTPoly()
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            out = QTPoly()
            if other:
                out.terms = {k: c * other for k, c in self.terms.items()}
            return out
        out = QTPoly()
        acc = out.terms
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                s = acc.get(k, 0) + c1 * c2
                if s:
                    acc[k] = s
                else:
                    acc.pop(k, None)
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def subs_q_zero(self):
        """Set q = 0, returning a univariate polynomial in t as a dict j -> c."""
        return {j: c for (i, j), c in self.terms.items() if i == 0}

    def evaluate(self, q: Fraction, t: Fraction) -> Fraction:
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * q ** i * t ** j
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (i, j), c in sorted(self.terms.items()):
            mon = "".join(
                (f"q^{i}" if i > 1 else "q" if i == 1 else "",
                 f"t^{j}" if j > 1 else "t" if j == 1 else "")
            ) or "1"
            bits.append(f"{c}*{mon}")
        return " + ".join(bits)

    # dense t-major representation: list over t-degree of q-coefficient lists
    def _to_tdense(self):
        if not self.terms:
            return []
        tmax = max(j for _, j in self.terms)
        qmax = max(i for i, _ in self.terms)
        rows = [[0] * (qmax + 1) for _ in range(tmax + 1)]
        for (i, j), c in self.terms.items():
            rows[j][i] = c
        for r in rows:
            while r and r[-1] == 0:
                r.pop()
        while rows and not rows[-1]:
            rows.pop()
        return rows

    @staticmethod
    def _from_tdense(rows) -> "QTPoly":
        out = QTPoly()
        for j, r in enumerate(rows):
            for i, c in enumerate(r):
                if c:
                    out.terms[(i, j)] = c
        return out


def qt_gcd(a: QTPoly, b: QTPoly) -> QTPoly:
    """gcd over Z[q][t] by a primitive PRS in t with Z[q] coefficient gcds."""
    ra, rb = a._to_tdense(), b._to_tdense()
    if not ra:
        return _qt_normalize(rb)
    if not rb:
        return _qt_normalize(ra)
    ca, rpa = _t_content_prim(ra)
    cb, rpb = _t_content_prim(rb)
    if len(rpa) < len(rpb):
        rpa, rpb = rpb, rpa
    while True:
        r = _t_pseudo_rem(rpa, rpb)
        if not r:
            break
        rpa, rpb = rpb, _t_content_prim(r)[1]
    cg = poly_gcd(ca, cb)
    g = [_q_mul(row, cg) for row in rpb]
    return _qt_normalize(g)


def _qt_normalize(rows) -> QTPoly:
    p = QTPoly._from_tdense(rows)
    if p.terms:
        lead = p.terms[max(p.terms, key=lambda k: (k[1], k[0]))]
        if lead < 0:
            p = -p
    return p


def _q_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def _q_sub(a, b):
    out = list(a) + [0] * (len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    while out and out[-1] == 0:
        out.pop()
    return out


def _t_trim(rows):
    rows = [list(r) for r in rows]
    while rows and not rows[-1]:
        rows.pop()
    return rows


def _t_content_prim(rows):
    rows = _t_trim(rows)
    content = []
    for r in rows:
        content = poly_gcd(content, r) if content else [x for x in r]
    if not rows:
        return [1], []
    if content == [1]:
        return [1], rows
    prim = []
    for r in rows:
        qr, rem = _q_divmod(r, content)
        prim.append(qr)
    return content, prim


def _q_divmod(a, b):
    """Exact-oriented division in Z[q]; remainder swallowed by PRS callers."""
    a = list(a)
    out = [0] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        if c == 0 or c % lead:
            continue
        c //= lead
        out[i] = c
        for j in range(len(b)):
            a[i + j] -= c * b[j]
    while a and a[-1] == 0:
        a.pop()
    return out, a


def _t_pseudo_rem(a, b):
    a = _t_trim(a)
    b = _t_trim(b)
    lead = b[-1]
    while len(a) >= len(b):
        if not a[-1]:
            a.pop()
            continue
        c = a[-1]
        a = [_q_mul(r, lead) for r in a]
        shift = len(a) - len(b)
        for j in range(len(b)):
            a[shift + j] = _q_sub(a[shift + j], _q_mul(c, b[j]))
        a = _t_trim(a)
        if not a:
            break
    return a


class QTFraction:
    """Ratio of two QTPoly values; reduction is lazy."""

    __slots__ = ("num", "den")

    def __init__(self, num: QTPoly, den: QTPoly = None):
        if isinstance(num, int):
            num = QTPoly.const(num)
        if den is None:
            den = QTPoly.one()
        elif isinstance(den, int):
            den = QTPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @staticmethod
    def one() -> "QTFraction":
        return QTFraction(QTPoly.one())

    def __add__(self, other):
        if isinstance(other, int):
            other = QTFraction(QTPoly.const(other))
        return QTFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        f = QTFraction(-self.num, self.den)
        return f

    def __sub__(self, other):
        if isinstance(other, int):
            other = QTFraction(QTPoly.const(other))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, QTPoly)):
            other = QTFraction(other if isinstance(other, QTPoly) else QTPoly.const(other))
        return QTFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, QTPoly)):
            other = QTFraction(other if isinstance(other, QTPoly) else QTPoly.const(other))
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero fraction")
        return QTFraction(self.num * other.den, self.den * other.num)

    def equals(self, other: "QTFraction") -> bool:
        """Exact equality by cross-multiplication (no gcd needed)."""
        return self.num * other.den == other.num * self.den

    __eq__ = equals

    def __hash__(self):
        c = self.canonical()
        return hash((frozenset(c.num.terms.items()), frozenset(c.den.terms.items())))

    def canonical(self) -> "QTFraction":
        """Fully reduced form with a sign-normalized denominator."""
        if self.num.is_zero():
            return QTFraction(QTPoly(), QTPoly.one())
        g = qt_gcd(self.num, self.den)
        num, den = self.num, self.den
        if g.terms and g != QTPoly.one():
            num = _qt_exact_div(num, g)
            den = _qt_exact_div(den, g)
        lead = den.terms[max(den.terms, key=lambda k: (k[1], k[0]))]
        if lead < 0:
            num, den = -num, -den
        return QTFraction(num, den)

    def evaluate(self, q: Fraction, t: Fraction) -> Fraction:
        d = self.den.evaluate(q, t)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at (q,t)=({q},{t})")
        return self.num.evaluate(q, t) / d

    def __repr__(self):
        return f"({self.num!r}) / ({self.den!r})"


def _qt_exact_div(a: QTPoly, g: QTPoly) -> QTPoly:
    """Exact division a / g via t-major long division over Z[q]."""
    ra = a._to_tdense()
    rg = g._to_tdense()
    glead = rg[-1]
    out_rows = [[] for _ in range(len(ra) - len(rg) + 1)]
    while True:
        ra = _t_trim(ra)
        if len(ra) < len(rg):
            break
        qr, rem = _q_divmod(ra[-1], glead)
        if rem:
            raise ArithmeticError("bivariate division left a remainder")
        shift = len(ra) - len(rg)
        out_rows[shift] = qr
        for j in range(len(rg)):
            ra[shift + j] = _q_sub(ra[shift + j], _q_mul(qr, rg[j]))
    if any(any(r) for r in ra):
        raise ArithmeticError("bivariate division left a remainder")
    return QTPoly._from_tdense(out_rows)

"""Total-degree-truncated multivariate polynomials with LaurentQ coefficients.

A cutoff of None means the value is exact (all omitted monomials are zero);
an integer cutoff D means monomials of total degree > D are unknown and have
been discarded. Products and sums propagate the tighter cutoff.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .laurent import LaurentQ


def _min_cutoff(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class MultiSeries:
    __slots__ = ("num_vars", "cutoff", "terms", "q_window")

    def __init__(self, num_vars: int, cutoff=None, terms=None, q_window=None):
        self.num_vars = num_vars
        self.cutoff = cutoff
        self.terms = {}
        self.q_window = q_window
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                e = tuple(e)
                if len(e) != num_vars:
                    raise ValueError("exponent arity mismatch")
                if cutoff is not None and sum(e) > cutoff:
                    continue
                if isinstance(c, int):
                    c = LaurentQ.from_int(c)
                if c:
                    prev = self.terms.get(e)
                    c = c if prev is None else prev + c
                    if c:
                        self.terms[e] = c
                    else:
                        self.terms.pop(e, None)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(num_vars: int, coeff, cutoff=None) -> "MultiSeries":
        if isinstance(coeff, int):
            coeff = LaurentQ.from_int(coeff)
        return MultiSeries(num_vars, cutoff, {(0,) * num_vars: coeff})

    @staticmethod
    def one(num_vars: int, cutoff=None) -> "MultiSeries":
        return MultiSeries.constant(num_vars, 1, cutoff)

    @staticmethod
    def zero(num_vars: int, cutoff=None) -> "MultiSeries":
        return MultiSeries(num_vars, cutoff)

    @staticmethod
    def monomial(num_vars: int, exps, coeff=1, cutoff=None) -> "MultiSeries":
        return MultiSeries(num_vars, cutoff, {tuple(exps): coeff})

    @staticmethod
    def variable(num_vars: int, index: int, cutoff=None) -> "MultiSeries":
        e = [0] * num_vars
        e[index] = 1
        return MultiSeries.monomial(num_vars, e, 1, cutoff)

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps) -> LaurentQ:
        return self.terms.get(tuple(exps), LaurentQ.zero())

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def sorted_terms(self):
        """Terms in (total degree, exponent vector) order, for determinism."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.num_vars != other.num_vars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        if isinstance(other, (int, LaurentQ)):
            other = MultiSeries.constant(self.num_vars, other)
        self._check(other)
        cut = _min_cutoff(self.cutoff, other.cutoff)
        out = MultiSeries(self.num_vars, cut)
        for src in (self, other):
            for e, c in src.terms.items():
                if cut is not None and sum(e) > cut:
                    continue
                prev = out.terms.get(e)
                s = c if prev is None else prev + c
                if s:
                    out.terms[e] = s
                else:
                    out.terms.pop(e, None)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiSeries(self.num_vars, self.cutoff)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, LaurentQ)):
            other = MultiSeries.constant(self.num_vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, LaurentQ)):
            return self.scale(other)
        self._check(other)
        return self.mul(other)

    __rmul__ = __mul__

    def scale(self, coeff) -> "MultiSeries":
        if isinstance(coeff, int):
            coeff = LaurentQ.from_int(coeff)
        out = MultiSeries(self.num_vars, self.cutoff)
        if not coeff:
            return out
        for e, c in self.terms.items():
            p = c * coeff
            if p:
                out.terms[e] = p
        return out

    def mul(self, other: "MultiSeries", q_max: Optional[int] = None) -> "MultiSeries":
        """Product, discarding total degree above the cutoff and (optionally)
        q-exponents above q_max."""
        self._check(other)
        cut = _min_cutoff(self.cutoff, other.cutoff)
        out = MultiSeries(self.num_vars, cut)
        if not self.terms or not other.terms:
            return out
        small, large = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        acc = out.terms
        for e1, c1 in small.terms.items():
            d1 = sum(e1)
            for e2, c2 in large.terms.items():
                if cut is not None and d1 + sum(e2) > cut:
                    continue
                if q_max is not None:
                    p = c1.mul_trunc(c2, q_max)
                else:
                    p = c1 * c2
                if not p:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                prev = acc.get(e)
                s = p if prev is None else prev + p
                if s:
                    acc[e] = s
                else:
                    acc.pop(e, None)
        return out

    def shift_q(self, k: int) -> "MultiSeries":
        """Multiply every coefficient by q**k."""
        out = MultiSeries(self.num_vars, self.cutoff)
        out.terms = {e: c.shift(k) for e, c in self.terms.items()}
        return out

    def scale_q_by_degree(self, k: int) -> "MultiSeries":
        """Substitute x_i -> x_i * q**k for every variable simultaneously.

        Each monomial of total degree d picks up a factor q**(k*d); k = -1
        realizes the argument x/q.
        """
        out = MultiSeries(self.num_vars, self.cutoff)
        out.terms = {e: c.shift(k * sum(e)) for e, c in self.terms.items()}
        return out

    def clip_q(self, q_max: int) -> "MultiSeries":
        out = MultiSeries(self.num_vars, self.cutoff)
        for e, c in self.terms.items():
            c = c.truncate(q_max)
            if c:
                out.terms[e] = c
        return out

    def truncate_degree(self, cutoff: int) -> "MultiSeries":
        out = MultiSeries(self.num_vars, _min_cutoff(self.cutoff, cutoff))
        for e, c in self.terms.items():
            if sum(e) <= cutoff:
                out.terms[e] = c
        return out

    def embed(self, num_vars: int, offset: int) -> "MultiSeries":
        """View this series inside a larger variable space at index offset."""
        if offset + self.num_vars > num_vars:
            raise ValueError("embedding does not fit")
        pre = (0,) * offset
        post = (0,) * (num_vars - offset - self.num_vars)
        out = MultiSeries(num_vars, self.cutoff)
        out.terms = {pre + e + post: c for e, c in self.terms.items()}
        return out

    def set_last_var_zero(self) -> "MultiSeries":
        out = MultiSeries(self.num_vars - 1, self.cutoff)
        for e, c in self.terms.items():
            if e[-1] == 0:
                out.terms[e[:-1]] = c
        return out

    def evaluate(self, values, q: Fraction) -> Fraction:
        """Exact value at rational points; requires an exact series."""
        if self.cutoff is not None:
            raise ValueError("refusing to evaluate a truncated series")
        total = Fraction(0)
        for e, c in self.terms.items():
            m = c.evaluate(q)
            for v, k in zip(values, e):
                if k:
                    m *= Fraction(v) ** k
            total += m
        return total

    def __eq__(self, other):
        if isinstance(other, (int, LaurentQ)):
            other = MultiSeries.constant(self.num_vars, other)
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "MultiSeries(0)"
        bits = []
        for e, c in self.sorted_terms()[:12]:
            mon = "*".join(f"x{i}^{k}" for i, k in enumerate(e) if k) or "1"
            bits.append(f"({c!r})*{mon}")
        more = "" if len(self.terms) <= 12 else f" ... ({len(self.terms)} terms)"
        return " + ".join(bits) + more

    def to_json(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "cutoff": self.cutoff,
            "terms": [
                {"exps": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()
            ],
        }


def geometric_inverse(
    num_vars: int, cutoff: int, exps, coeff=1
) -> MultiSeries:
    """The series 1/(1 - coeff * x^exps) up to the total-degree cutoff."""
    exps = tuple(exps)
    step = sum(exps)
    if step <= 0:
        raise ValueError("geometric factor needs a nonconstant monomial")
    if isinstance(coeff, int):
        coeff = LaurentQ.from_int(coeff)
    out = MultiSeries(num_vars, cutoff)
    e = (0,) * num_vars
    c = LaurentQ.one()
    d = 0
    while d <= cutoff:
        out.terms[e] = c
        d += step
        if d > cutoff:
            break
        e = tuple(a + b for a, b in zip(e, exps))
        c = c * coeff
    return out


def one_minus(num_vars: int, exps, coeff=1, cutoff=None) -> MultiSeries:
    """The polynomial 1 - coeff * x^exps."""
    if isinstance(coeff, int):
        coeff = LaurentQ.from_int(coeff)
    return MultiSeries(
        num_vars, cutoff, {(0,) * num_vars: LaurentQ.one(), tuple(exps): -coeff}
    )


def series_inverse(f, cutoff: int):
    """Multiplicative inverse up to the cutoff.

    Accepts a MultiSeries (total-degree cutoff) or a LaurentQ (q-degree
    cutoff). The lowest term must be a unit, i.e. +-q^k.
    """
    if isinstance(f, LaurentQ):
        return _laurent_inverse(f, cutoff)
    const = f.terms.get((0,) * f.num_vars)
    if const is None or len(const.coeffs) != 1 or const.coeffs[0] not in (1, -1):
        raise ValueError("constant term must be a unit (+-q^k) to invert")
    c0_inv = LaurentQ.q_power(-const.min_exp, const.coeffs[0])
    # peel the constant: f = c0 * (1 - g) with g of positive total degree
    by_deg = {}
    for e, c in f.terms.items():
        d = sum(e)
        if d == 0:
            continue
        by_deg.setdefault(d, {})[e] = -(c * c0_inv)
    out = MultiSeries.one(f.num_vars, cutoff)
    layers = {0: {(0,) * f.num_vars: LaurentQ.one()}}
    for d in range(1, cutoff + 1):
        layer = {}
        for dg, g in by_deg.items():
            if dg > d:
                continue
            prev = layers.get(d - dg)
            if not prev:
                continue
            for e1, c1 in g.items():
                for e2, c2 in prev.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    p = c1 * c2
                    prevc = layer.get(e)
                    s = p if prevc is None else prevc + p
                    if s:
                        layer[e] = s
                    else:
                        layer.pop(e, None)
        layers[d] = layer
        for e, c in layer.items():
            if c:
                out.terms[e] = c
    return out.scale(c0_inv)


def _laurent_inverse(f: LaurentQ, q_max: int) -> LaurentQ:
    if f.is_zero() or f.coeffs[0] not in (1, -1):
        raise ValueError("lowest coefficient must be +-1 to invert as a series")
    u = f.coeffs[0]
    n = q_max + f.min_exp + 1  # number of coefficients of the inverse
    if n <= 0:
        return LaurentQ.zero()
    a = f.coeffs
    la = len(a)
    out = [0] * n
    out[0] = u
    for i in range(1, n):
        s = 0
        for j in range(1, min(i, la - 1) + 1):
            aj = a[j]
            if aj:
                s += aj * out[i - j]
        out[i] = -u * s
    return LaurentQ(-f.min_exp, out)


def exact_div(f: MultiSeries, g: MultiSeries) -> MultiSeries:
    """Exact multivariate division f / g for exact (cutoff-free) operands.

    The divisor's lex-leading coefficient must be a unit. Raises ValueError
    when the division leaves a remainder.
    """
    if f.cutoff is not None or g.cutoff is not None:
        raise ValueError("exact division requires exact operands")
    if g.is_zero():
        raise ZeroDivisionError("division by zero series")
    glead = max(g.terms)
    gc = g.terms[glead]
    if len(gc.coeffs) != 1 or gc.coeffs[0] not in (1, -1):
        raise ValueError("divisor leading coefficient must be a unit")
    gc_inv = LaurentQ.q_power(-gc.min_exp, gc.coeffs[0])
    rem = dict(f.terms)
    quot = {}
    while rem:
        e = max(rem)
        c = rem.pop(e)
        m = tuple(a - b for a, b in zip(e, glead))
        if any(x < 0 for x in m):
            raise ValueError("non-exact division: remainder left")
        qc = c * gc_inv
        quot[m] = quot.get(m, LaurentQ.zero()) + qc
        for ge, gcoef in g.terms.items():
            if ge == glead:
                continue
            ee = tuple(a + b for a, b in zip(m, ge))
            s = rem.get(ee, LaurentQ.zero()) - qc * gcoef
            if s:
                rem[ee] = s
            else:
                rem.pop(ee, None)
    out = MultiSeries(f.num_vars, None)
    out.terms = {e: c for e, c in quot.items() if c}
    return out

"""Exact polynomials: univariate over Q, the field Q(alpha), and sparse multivariate polynomials.

``SparsePoly`` coefficients may be ``Fraction`` or ``RatFunc``; both support
the field operations and comparison with integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence


def _fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class UPoly:
    """Univariate polynomial over Q, coefficients from the constant term up."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_fr(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def x(cls) -> "UPoly":
        return cls((0, 1))

    @property
    def deg(self) -> int:
        return len(self.c) - 1  # -1 for the zero polynomial

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly((other,))
        return isinstance(other, UPoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        other = _upoly(other)
        n = max(len(self.c), len(other.c))
        a = self.c + (Fraction(0),) * (n - len(self.c))
        b = other.c + (Fraction(0),) * (n - len(other.c))
        return UPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UPoly(-x for x in self.c)

    def __sub__(self, other):
        return self + (-_upoly(other))

    def __rsub__(self, other):
        return _upoly(other) - self

    def __mul__(self, other):
        other = _upoly(other)
        if not self.c or not other.c:
            return UPoly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    out[i + j] += x * y
        return UPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        q = [Fraction(0)] * max(len(r) - len(other.c) + 1, 0)
        lead = other.c[-1]
        while len(r) >= len(other.c) and any(r):
            shift = len(r) - len(other.c)
            f = r[-1] / lead
            q[shift] = f
            for i, y in enumerate(other.c):
                r[shift + i] -= f * y
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return UPoly(q), UPoly(r)

    def monic(self) -> "UPoly":
        if not self.c:
            return self
        lead = self.c[-1]
        return UPoly(x / lead for x in self.c)

    def __call__(self, t):
        out = Fraction(0) if isinstance(t, (int, Fraction)) else 0
        for x in reversed(self.c):
            out = out * t + x
        return out

    def __repr__(self):
        return f"UPoly({[str(x) for x in self.c]})"


def _upoly(x) -> UPoly:
    if isinstance(x, UPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return UPoly((x,))
    raise TypeError(f"cannot coerce {type(x).__name__} to UPoly")


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic()


class RatFunc:
    """An element num/den of Q(alpha), gcd-reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = _upoly(num), _upoly(den)
        if not den:
            raise ZeroDivisionError("zero denominator in Q(alpha)")
        g = poly_gcd(num, den)
        if g.deg > 0:
            num, den = num.divmod(g)[0], den.divmod(g)[0]
        lead = den.c[-1]
        self.num = UPoly(x / lead for x in num.c)
        self.den = UPoly(x / lead for x in den.c)

    @classmethod
    def alpha(cls) -> "RatFunc":
        return cls(UPoly.x())

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, UPoly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _rat(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = _rat(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _rat(other) - self

    def __mul__(self, other):
        other = _rat(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rat(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("division by zero in Q(alpha)")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _rat(other) / self

    def __pow__(self, n: int):
        out = RatFunc(1)
        base = self if n >= 0 else RatFunc(1) / self
        for _ in range(abs(n)):
            out = out * base
        return out

    def evaluate(self, t) -> Fraction:
        d = self.den(_fr(t))
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {t}")
        return self.num(_fr(t)) / d

    def to_json(self) -> dict:
        """Integer coefficient lists, cleared of denominators and content."""
        den = lcm(*(x.denominator for x in self.num.c + self.den.c))
        num_i = [int(x * den) for x in self.num.c]
        den_i = [int(x * den) for x in self.den.c]
        g = 0
        for v in num_i + den_i:
            g = gcd(g, v)
        g = g or 1
        return {"num": [v // g for v in num_i], "den": [v // g for v in den_i]}

    def __repr__(self):
        return f"RatFunc({self.to_json()})"


def _rat(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction, UPoly)):
        return RatFunc(x)
    return NotImplemented


def coeff_json(c):
    if isinstance(c, RatFunc):
        return c.to_json()
    c = _fr(c)
    return f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------


Exp = tuple[int, ...]


class SparsePoly:
    """A polynomial in n variables stored as {exponent tuple: nonzero coefficient}."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exp, object] | None = None):
        self.n = n
        out = {}
        for e, c in (terms or {}).items():
            if len(e) != n:
                raise ValueError("exponent length does not match the number of variables")
            if c != 0:
                out[tuple(e)] = c
        self.terms = out

    @classmethod
    def var(cls, n: int, i: int, coeff=1) -> "SparsePoly":
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): _coerce_coeff(coeff)})

    @classmethod
    def const(cls, n: int, c) -> "SparsePoly":
        return cls(n, {(0,) * n: _coerce_coeff(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.n == other.n and (self - other).is_zero()

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return SparsePoly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            c0 = _coerce_coeff(other)
            return SparsePoly(self.n, {e: c * c0 for e, c in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return SparsePoly(self.n, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        out = SparsePoly.const(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def _lift(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            if other.n != self.n:
                raise ValueError("polynomials in different numbers of variables")
            return other
        return SparsePoly.const(self.n, other)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "SparsePoly":
        return SparsePoly(self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def diff(self, i: int) -> "SparsePoly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return SparsePoly(self.n, out)

    def evaluate(self, point: Sequence):
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x ** k
            total = total + t
        return total

    def substitute(self, images: Sequence["SparsePoly"]) -> "SparsePoly":
        """Replace variable i by ``images[i]`` (all in the same ring)."""
        if len(images) != self.n:
            raise ValueError("need one image per variable")
        m = images[0].n
        out = SparsePoly(m)
        cache: dict[tuple[int, int], SparsePoly] = {}
        for e, c in self.terms.items():
            t = SparsePoly.const(m, c)
            for i, k in enumerate(e):
                if k:
                    if (i, k) not in cache:
                        cache[(i, k)] = images[i] ** k
                    t = t * cache[(i, k)]
            out = out + t
        return out

    def permute(self, perm: Sequence[int]) -> "SparsePoly":
        """Substitute x_i -> x_perm[i]."""
        return self.substitute([SparsePoly.var(self.n, perm[i]) for i in range(self.n)])

    def map_coeffs(self, f) -> "SparsePoly":
        return SparsePoly(self.n, {e: f(c) for e, c in self.terms.items()})

    def coeff(self, e: Exp):
        return self.terms.get(tuple(e), 0)

    def to_json(self) -> list[dict]:
        return [{"exp": list(e), "coeff": coeff_json(c)} for e, c in sorted(self.terms.items())]

    def __repr__(self):
        return f"SparsePoly(n={self.n}, terms={len(self.terms)})"


def _coerce_coeff(c):
    if isinstance(c, (RatFunc, Fraction)):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def linear_form(n: int, coeffs: Sequence) -> SparsePoly:
    out = SparsePoly(n)
    for i, c in enumerate(coeffs):
        if c != 0:
            out = out + SparsePoly.var(n, i, c)
    return out

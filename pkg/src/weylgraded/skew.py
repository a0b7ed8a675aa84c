"""Exact arithmetic in D = k(z)[x, x^{-1}; sigma] with sigma(z) = z + 1.

Normal form: coefficients from k(z) on the left, x-powers on the right, so the
single transport rule is x^m f(z) = f(z+m) x^m.  The Weyl algebra sits inside D
via x and y = (z-1) x^{-1}; then x*y = z and x*y - y*x = 1.

The ground field is Q: every computation in this library is integrally
supported, so exact rational coefficients suffice and nothing is ever floated.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction, str]

# Dense polynomial coefficients, ascending degree, no trailing zeros.
_Coeffs = tuple

_ZERO: _Coeffs = ()
_ONE: _Coeffs = (Fraction(1),)


def _coeffs(values: Iterable[Scalar]) -> _Coeffs:
    cs = [Fraction(v) for v in values]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(a: _Coeffs, b: _Coeffs) -> _Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _pneg(a: _Coeffs) -> _Coeffs:
    return tuple(-c for c in a)


def _pmul(a: _Coeffs, b: _Coeffs) -> _Coeffs:
    if not a or not b:
        return _ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _pdivmod(a: _Coeffs, b: _Coeffs) -> tuple[_Coeffs, _Coeffs]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while len(r) >= len(b):
        c = r[-1] / b[-1]
        d = len(r) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            r[i + d] -= c * y
        while r and r[-1] == 0:
            r.pop()
    return tuple(q), tuple(r)


def _pgcd(a: _Coeffs, b: _Coeffs) -> _Coeffs:
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return _ZERO
    lc = a[-1]
    return tuple(c / lc for c in a)


def _plcm(a: _Coeffs, b: _Coeffs) -> _Coeffs:
    if not a or not b:
        return _ZERO
    g = _pgcd(a, b)
    q, _ = _pdivmod(_pmul(a, b), g)
    lc = q[-1]
    return tuple(c / lc for c in q)


def _pshift(a: _Coeffs, m: int) -> _Coeffs:
    """Taylor shift: coefficients of f(z + m), by Horner in (z + m)."""
    zm = (Fraction(m), Fraction(1))
    res: _Coeffs = _ZERO
    for c in reversed(a):
        res = _padd(_pmul(res, zm), (c,))
    return res


class RationalPoly:
    """A rational function num/den over Q, reduced, with monic denominator.

    Most values in practice are plain polynomials (den == 1); genuinely
    fractional values arise from inverse involutions, which scale by
    1/prod(z+j).
    """

    __slots__ = ("_num", "_den")

    def __init__(
        self,
        num: Iterable[Scalar] = (),
        den: Iterable[Scalar] = (1,),
    ) -> None:
        n, d = _coeffs(num), _coeffs(den)
        if not d:
            raise ZeroDivisionError("zero denominator")
        if not n:
            object.__setattr__(self, "_num", _ZERO)
            object.__setattr__(self, "_den", _ONE)
            return
        g = _pgcd(n, d)
        if len(g) > 1:
            n = _pdivmod(n, g)[0]
            d = _pdivmod(d, g)[0]
        lc = d[-1]
        if lc != 1:
            n = tuple(c / lc for c in n)
            d = tuple(c / lc for c in d)
        object.__setattr__(self, "_num", n)
        object.__setattr__(self, "_den", d)

    # construction helpers -------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RationalPoly":
        return cls((1,))

    @classmethod
    def constant(cls, c: Scalar) -> "RationalPoly":
        return cls((Fraction(c),))

    @classmethod
    def z(cls) -> "RationalPoly":
        return cls((0, 1))

    @classmethod
    def linear(cls, j: Scalar) -> "RationalPoly":
        """z + j."""
        return cls((Fraction(j), Fraction(1)))

    @classmethod
    def linear_product(cls, js: Iterable[Scalar]) -> "RationalPoly":
        """prod over js of (z + j); empty product is 1."""
        out = cls.one()
        for j in js:
            out = out * cls.linear(j)
        return out

    @classmethod
    def rising(cls, d: int) -> "RationalPoly":
        """z (z+1) ... (z+d-1)."""
        return cls.linear_product(range(d))

    @classmethod
    def falling(cls, r: int) -> "RationalPoly":
        """(z-1) (z-2) ... (z-r)."""
        return cls.linear_product(-t for t in range(1, r + 1))

    # structure -------------------------------------------------------------

    @property
    def num(self) -> _Coeffs:
        return self._num

    @property
    def den(self) -> _Coeffs:
        return self._den

    def is_zero(self) -> bool:
        return not self._num

    def is_polynomial(self) -> bool:
        return self._den == _ONE

    def is_constant(self) -> bool:
        return len(self._num) <= 1 and self._den == _ONE

    def is_one(self) -> bool:
        return self._num == _ONE and self._den == _ONE

    def degree(self) -> int:
        """Degree of a polynomial value; zero has degree -1 by convention."""
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return len(self._num) - 1

    def leading_coefficient(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        return self._num[-1] / self._den[-1]

    def monic(self) -> "RationalPoly":
        if self.is_zero():
            return self
        lc = self._num[-1]
        if lc == 1:
            return self
        out = RationalPoly.__new__(RationalPoly)
        object.__setattr__(out, "_num", tuple(c / lc for c in self._num))
        object.__setattr__(out, "_den", self._den)
        return out

    # arithmetic ------------------------------------------------------------

    def _wrap(self, other) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPoly.constant(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return NotImplemented
        return RationalPoly(
            _padd(_pmul(self._num, o._den), _pmul(o._num, self._den)),
            _pmul(self._den, o._den),
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        out = RationalPoly.__new__(RationalPoly)
        object.__setattr__(out, "_num", _pneg(self._num))
        object.__setattr__(out, "_den", self._den)
        return out

    def __sub__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return NotImplemented
        return RationalPoly(_pmul(self._num, o._num), _pmul(self._den, o._den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalPoly(_pmul(self._num, o._den), _pmul(self._den, o._num))

    def __rtruediv__(self, other):
        o = self._wrap(other)
        return o / self

    def __pow__(self, k: int) -> "RationalPoly":
        if k < 0:
            return (RationalPoly.one() / self) ** (-k)
        out, base = RationalPoly.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, m: int) -> "RationalPoly":
        """The conjugate f(z + m) = x^m f x^{-m}."""
        return RationalPoly(_pshift(self._num, m), _pshift(self._den, m))

    def divides(self, other: "RationalPoly") -> bool:
        """True when other / self lies in k[z]."""
        if self.is_zero():
            return other.is_zero()
        return (other / self).is_polynomial()

    def multiplicity(self, j: Scalar) -> int:
        """Order of (z + j) as a factor; negative when it divides the denominator."""
        lin = (Fraction(j), Fraction(1))
        count = 0
        n = self._num
        while n:
            q, r = _pdivmod(n, lin)
            if r:
                break
            count += 1
            n = q
        d = self._den
        while len(d) > 1:
            q, r = _pdivmod(d, lin)
            if r:
                break
            count -= 1
            d = q
        return count

    def evaluate(self, x: Scalar) -> Fraction:
        v = Fraction(x)
        num = sum((c * v ** i for i, c in enumerate(self._num)), Fraction(0))
        den = sum((c * v ** i for i, c in enumerate(self._den)), Fraction(0))
        return num / den

    # comparison / presentation ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalPoly.constant(other)
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __repr__(self) -> str:
        return f"RationalPoly({self})"

    def __str__(self) -> str:
        if self.is_polynomial():
            return _poly_str(self._num)
        return f"({_poly_str(self._num)})/({_poly_str(self._den)})"

    def to_json(self) -> dict:
        return {
            "num": [str(c) for c in self._num],
            "den": [str(c) for c in self._den],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RationalPoly":
        return cls(data.get("num", ()), data.get("den", (1,)))


def _poly_str(cs: _Coeffs) -> str:
    if not cs:
        return "0"
    parts = []
    for k in range(len(cs) - 1, -1, -1):
        c = cs[k]
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            zk = "z" if k == 1 else f"z^{k}"
            body = zk if abs(c) == 1 else f"{abs(c)} {zk}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def poly_gcd(f: RationalPoly, g: RationalPoly) -> RationalPoly:
    if not (f.is_polynomial() and g.is_polynomial()):
        raise ValueError("gcd is defined for polynomial values")
    return RationalPoly(_pgcd(f.num, g.num))


def poly_lcm(f: RationalPoly, g: RationalPoly) -> RationalPoly:
    if not (f.is_polynomial() and g.is_polynomial()):
        raise ValueError("lcm is defined for polynomial values")
    return RationalPoly(_plcm(f.num, g.num))


def fractional_lcm(values: Iterable[RationalPoly]) -> RationalPoly:
    """Generator of the intersection of the cyclic modules v k[z].

    For fractions, put over a common denominator and lcm the numerators; this
    is the factor-wise max of (possibly negative) exponents.
    """
    out: RationalPoly | None = None
    for v in values:
        if out is None:
            out = v
            continue
        den = _plcm(out.den, v.den)
        a = _pmul(out.num, _pdivmod(den, out.den)[0])
        b = _pmul(v.num, _pdivmod(den, v.den)[0])
        out = RationalPoly(_plcm(a, b), den)
    if out is None:
        raise ValueError("lcm of an empty family")
    return out


class SkewElement:
    """Finite sum of terms c_m(z) x^m with c_m in k(z)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, RationalPoly] | None = None) -> None:
        clean: dict[int, RationalPoly] = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(c, RationalPoly):
                    c = RationalPoly.constant(c)
                if not c.is_zero():
                    clean[int(m)] = c
        object.__setattr__(self, "_terms", clean)

    # constructors ----------------------------------------------------------

    @classmethod
    def zero(cls) -> "SkewElement":
        return cls()

    @classmethod
    def one(cls) -> "SkewElement":
        return cls({0: RationalPoly.one()})

    @classmethod
    def from_poly(cls, f: RationalPoly) -> "SkewElement":
        return cls({0: f})

    @classmethod
    def monomial(cls, c: RationalPoly, m: int) -> "SkewElement":
        return cls({m: c})

    @classmethod
    def x_power(cls, m: int) -> "SkewElement":
        return cls({m: RationalPoly.one()})

    @classmethod
    def y_power(cls, r: int) -> "SkewElement":
        """y^r for any integer r, where y = (z-1) x^{-1}.

        y^r = (z-1)...(z-r) x^{-r} for r >= 0, and
        y^{-n} = (z (z+1) ... (z+n-1))^{-1} x^n for n > 0.
        """
        if r >= 0:
            return cls({-r: RationalPoly.falling(r)})
        n = -r
        return cls({n: RationalPoly.one() / RationalPoly.rising(n)})

    # structure -------------------------------------------------------------

    @property
    def terms(self) -> dict[int, RationalPoly]:
        return dict(self._terms)

    def coefficient(self, m: int) -> RationalPoly:
        return self._terms.get(m, RationalPoly.zero())

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    def is_zero(self) -> bool:
        return not self._terms

    def is_single_term(self) -> bool:
        return len(self._terms) == 1

    # arithmetic ------------------------------------------------------------

    def __add__(self, other: "SkewElement") -> "SkewElement":
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, RationalPoly.zero()) + c
        return SkewElement(out)

    def __neg__(self) -> "SkewElement":
        return SkewElement({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "SkewElement") -> "SkewElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RationalPoly)):
            f = other if isinstance(other, RationalPoly) else RationalPoly.constant(other)
            return SkewElement({m: c * f for m, c in self._terms.items()})
        if not isinstance(other, SkewElement):
            return NotImplemented
        out: dict[int, RationalPoly] = {}
        for m, f in self._terms.items():
            for n, g in other._terms.items():
                # (f x^m)(g x^n) = f * g(z+m) x^{m+n}
                c = f * g.shift(m)
                d = m + n
                out[d] = out.get(d, RationalPoly.zero()) + c
        return SkewElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RationalPoly)):
            f = other if isinstance(other, RationalPoly) else RationalPoly.constant(other)
            return SkewElement({m: f * c for m, c in self._terms.items()})
        return NotImplemented

    def __pow__(self, k: int) -> "SkewElement":
        if k < 0:
            raise ValueError("negative powers of general skew elements are not defined")
        out = SkewElement.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SkewElement) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted((m, c) for m, c in self._terms.items())))

    def __repr__(self) -> str:
        return f"SkewElement({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m in sorted(self._terms, reverse=True):
            c = self._terms[m]
            cs = str(c)
            if m == 0:
                parts.append(cs)
            else:
                xp = "x" if m == 1 else f"x^{m}"
                parts.append(xp if c.is_one() else f"({cs}) {xp}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {str(m): c.to_json() for m, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, dict]) -> "SkewElement":
        return cls({int(m): RationalPoly.from_json(c) for m, c in data.items()})


def x() -> SkewElement:
    return SkewElement.x_power(1)


def y() -> SkewElement:
    return SkewElement.y_power(1)


def skew_multiply(u: SkewElement, v: SkewElement) -> SkewElement:
    """Product in D; bilinear extension of (f x^m)(g x^n) = f g(z+m) x^{m+n}."""
    return u * v


def conjugate_by_power(f: RationalPoly, m: int) -> RationalPoly:
    """Coefficient transport: x^m f(z) = f(z+m) x^m."""
    return f.shift(m)


def weyl_membership(u: SkewElement) -> bool:
    """True when u lies in the Weyl algebra A inside D.

    Degree m >= 0 needs a polynomial coefficient; degree -r < 0 needs the
    coefficient divisible by (z-1)...(z-r), since y^r = (z-1)...(z-r) x^{-r}.
    """
    for m, c in u._terms.items():
        if m >= 0:
            if not c.is_polynomial():
                return False
        else:
            if not (c / RationalPoly.falling(-m)).is_polynomial():
                return False
    return True

"""Exact arithmetic: rationals, dense univariate polynomials over a field,
and the rational function field Q(q).

Rationals are :class:`fractions.Fraction`.  Integer polynomials in ``q`` are
plain tuples of ints, lowest degree first; they are only used as the
numerator/denominator storage of :class:`RatFuncQ`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence

ExactRational = Fraction

ZPoly = tuple  # tuple[int, ...], ascending powers, no trailing zeros


class ExactAlgebraError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# integer polynomials (ascending coefficient tuples)


def _ztrim(c: Sequence[int]) -> ZPoly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _zadd(a: ZPoly, b: ZPoly) -> ZPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _ztrim(out)


def _zneg(a: ZPoly) -> ZPoly:
    return tuple(-x for x in a)


def _zmul(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return ()
    if len(a) == 1:
        return tuple(a[0] * x for x in b)
    if len(b) == 1:
        return tuple(b[0] * x for x in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _zcontent(a: ZPoly) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def _zscale_div(a: ZPoly, d: int) -> ZPoly:
    return tuple(x // d for x in a)


def _zprimitive(a: ZPoly) -> ZPoly:
    if not a:
        return a
    c = _zcontent(a)
    if a[-1] < 0:
        c = -c
    return a if c == 1 else _zscale_div(a, c)


def _zprem(a: ZPoly, b: ZPoly) -> ZPoly:
    """Pseudo-remainder of a by b (b nonzero)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        dr = len(r) - 1
        lr = r[-1]
        shift = dr - db
        r = [x * lb for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lr * y
        r = list(_ztrim(r))
    return tuple(r)


def _zgcd_primitive(a: ZPoly, b: ZPoly) -> ZPoly:
    """Primitive gcd (positive leading coefficient) of two integer polynomials."""
    if not a:
        return _zprimitive(b)
    if not b:
        return _zprimitive(a)
    a, b = _zprimitive(a), _zprimitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return (1,)
        a, b = b, _zprimitive(_zprem(a, b))
    return a


def _zexact_div(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a:
        return ()
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        raise ExactAlgebraError("inexact integer polynomial division")
    quo = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c, m = divmod(r[k + db], lb)
        if m:
            raise ExactAlgebraError("inexact integer polynomial division")
        quo[k] = c
        if c:
            for i, y in enumerate(b):
                r[k + i] -= c * y
    if any(r[:db]):
        raise ExactAlgebraError("inexact integer polynomial division")
    return tuple(quo)


def _zstr(a: ZPoly, var: str = "q") -> str:
    return _render([Fraction(x) for x in a], var)


# ---------------------------------------------------------------------------
# Q(q)


class RatFuncQ:
    """Reduced quotient of integer polynomials in ``q``.

    The numerator and denominator share no nonconstant factor and no integer
    content, and the denominator has a positive leading coefficient, so two
    equal values always have identical ``(num, den)``.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Iterable[int] = (), den: Iterable[int] = (1,), *, _reduced=False):
        num, den = _ztrim(num), _ztrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = _canonical(num, den)
        self.num: ZPoly = num
        self.den: ZPoly = den
        self._hash = None

    @classmethod
    def from_int(cls, k: int) -> "RatFuncQ":
        return cls((k,) if k else (), (1,), _reduced=True)

    @classmethod
    def from_fraction(cls, x: Fraction) -> "RatFuncQ":
        x = Fraction(x)
        return cls((x.numerator,) if x else (), (x.denominator,), _reduced=True)

    @classmethod
    def q_power(cls, k: int) -> "RatFuncQ":
        """q**k for any integer k."""
        if k >= 0:
            return cls((0,) * k + (1,), (1,), _reduced=True)
        return cls((1,), (0,) * (-k) + (1,), _reduced=True)

    @classmethod
    def coerce(cls, x) -> "RatFuncQ":
        if isinstance(x, RatFuncQ):
            return x
        if isinstance(x, int):
            return cls.from_int(x)
        if isinstance(x, Fraction):
            return cls.from_fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFuncQ")

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == (1,)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFuncQ.coerce(other)
        if not isinstance(other, RatFuncQ):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self) -> "RatFuncQ":
        return RatFuncQ(_zneg(self.num), self.den, _reduced=True)

    def __add__(self, other) -> "RatFuncQ":
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RatFuncQ(_zadd(self.num, other.num), self.den)
        if self.den == (1,):
            return RatFuncQ(_zadd(_zmul(self.num, other.den), other.num), other.den, _reduced=True)
        if other.den == (1,):
            return RatFuncQ(_zadd(self.num, _zmul(other.num, self.den)), self.den, _reduced=True)
        g = _zgcd_primitive(self.den, other.den)
        if g == (1,):
            num = _zadd(_zmul(self.num, other.den), _zmul(other.num, self.den))
            return RatFuncQ(num, _zmul(self.den, other.den))
        b1 = _zexact_div(self.den, g)
        d1 = _zexact_div(other.den, g)
        num = _zadd(_zmul(self.num, d1), _zmul(other.num, b1))
        return RatFuncQ(num, _zmul(_zmul(b1, d1), g))

    __radd__ = __add__

    def __sub__(self, other) -> "RatFuncQ":
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RatFuncQ":
        return (-self) + other

    def __mul__(self, other) -> "RatFuncQ":
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO_Q
        if self.is_one():
            return other
        if other.is_one():
            return self
        # cross-cancel so the product is already reduced
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = _zgcd_primitive(a, d) if len(d) > 1 and len(a) > 1 else (1,)
        g2 = _zgcd_primitive(c, b) if len(b) > 1 and len(c) > 1 else (1,)
        if g1 != (1,):
            a, d = _zexact_div(a, g1), _zexact_div(d, g1)
        if g2 != (1,):
            c, b = _zexact_div(c, g2), _zexact_div(b, g2)
        num, den = _zmul(a, c), _zmul(b, d)
        k = gcd(_zcontent(num), _zcontent(den))
        if den[-1] < 0:
            k = -k
        if k != 1:
            num, den = _zscale_div(num, k), _zscale_div(den, k)
        return RatFuncQ(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFuncQ":
        if not self.num:
            raise ZeroDivisionError("division by zero in Q(q)")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = _zneg(num), _zneg(den)
        return RatFuncQ(num, den, _reduced=True)

    def __truediv__(self, other) -> "RatFuncQ":
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RatFuncQ":
        return _as_rf(other) * self.inverse()

    def __pow__(self, e: int) -> "RatFuncQ":
        if e < 0:
            return self.inverse() ** (-e)
        out = ONE_Q
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def evaluate(self, q) -> Fraction:
        """Value at a rational point ``q``; raises if the denominator vanishes."""
        q = Fraction(q)
        d = _horner(self.den, q)
        if d == 0:
            raise ZeroDivisionError("pole of rational function")
        return _horner(self.num, q) / d

    def __repr__(self) -> str:
        return f"RatFuncQ({self.num}, {self.den})"

    def __str__(self) -> str:
        if self.den == (1,):
            return _zstr(self.num)
        return f"({_zstr(self.num)})/({_zstr(self.den)})"


def _horner(c: ZPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for a in reversed(c):
        acc = acc * x + a
    return acc


def _canonical(num: ZPoly, den: ZPoly) -> tuple[ZPoly, ZPoly]:
    if not num:
        return (), (1,)
    if len(den) > 1 and len(num) > 1:
        g = _zgcd_primitive(num, den)
        if g != (1,):
            num, den = _zexact_div(num, g), _zexact_div(den, g)
    k = gcd(_zcontent(num), _zcontent(den))
    if den[-1] < 0:
        k = -k
    if k != 1:
        num, den = _zscale_div(num, k), _zscale_div(den, k)
    return num, den


def _as_rf(x):
    if isinstance(x, RatFuncQ):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFuncQ.coerce(x)
    return NotImplemented


ZERO_Q = RatFuncQ.from_int(0)
ONE_Q = RatFuncQ.from_int(1)
Q = RatFuncQ((0, 1))


def ratfunc_arith(a: RatFuncQ, b: RatFuncQ, op: str) -> RatFuncQ:
    """Apply one of ``+ - * /`` to two elements of Q(q)."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op in ("*", "x", "×"):
        return a * b
    if op in ("/", "÷"):
        if not b:
            raise ZeroDivisionError("division by zero in Q(q)")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# coefficient fields


@dataclass(frozen=True)
class Field:
    name: str
    zero: object
    one: object
    convert: Callable

    def __repr__(self) -> str:
        return self.name

    def __reduce__(self):
        # fields are compared by identity; unpickle to the module singleton
        return (_field_named, (self.name,))


QQ = Field("QQ", Fraction(0), Fraction(1), Fraction)
QQ_q = Field("QQ(q)", ZERO_Q, ONE_Q, RatFuncQ.coerce)


def _field_named(name: str) -> Field:
    return {QQ.name: QQ, QQ_q.name: QQ_q}[name]


def _coef_str(c) -> str:
    if isinstance(c, RatFuncQ):
        return str(c)
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _render(coeffs: Sequence, var: str) -> str:
    """Descending-power rendering, e.g. ``n^3 - n`` or ``1/3*n^2 + 2``."""
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        s = _coef_str(c)
        simple = isinstance(c, Fraction) or (isinstance(c, RatFuncQ) and c.den == (1,) and len(
            [x for x in c.num if x]) == 1)
        if simple:
            neg = s.startswith("-")
            body = s[1:] if neg else s
            if mono and body == "1":
                body = mono
            elif mono:
                body = f"{body}*{mono}"
        else:
            neg = False
            if c.den == (1,):
                body = f"({s})*{mono}" if mono else f"({s})"
            else:
                body = f"({s})*{mono}" if mono else s
        terms.append((neg, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] else "") + terms[0][1]
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


# ---------------------------------------------------------------------------
# univariate polynomials over a field


class UniPoly:
    """Dense polynomial in one variable over ``QQ`` or ``QQ(q)``.

    ``coeffs[i]`` is the coefficient of ``var**i``; the zero polynomial has
    no coefficients.  Instances are immutable.
    """

    __slots__ = ("var", "field", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable = (), var: str = "n", field: Field = QQ):
        cs = [field.convert(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.var = var
        self.field = field
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list, var: str, field: Field) -> "UniPoly":
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = object.__new__(cls)
        p.var = var
        p.field = field
        p.coeffs = tuple(coeffs)
        p._hash = None
        return p

    @classmethod
    def constant(cls, c, var: str = "n", field: Field = QQ) -> "UniPoly":
        return cls((c,), var, field)

    @classmethod
    def gen(cls, var: str = "n", field: Field = QQ) -> "UniPoly":
        return cls((field.zero, field.one), var, field)

    def zero(self) -> "UniPoly":
        return UniPoly._raw([], self.var, self.field)

    def one(self) -> "UniPoly":
        return UniPoly._raw([self.field.one], self.var, self.field)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            if other.var != self.var or other.field is not self.field:
                raise ExactAlgebraError(
                    f"ring mismatch: {self.field}[{self.var}] vs {other.field}[{other.var}]")
            return other
        return UniPoly._raw([self.field.convert(other)], self.var, self.field)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.var == other.var and self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, RatFuncQ)):
            return self.coeffs == self._coerce(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.var, self.field.name, self.coeffs))
        return self._hash

    def __neg__(self) -> "UniPoly":
        return UniPoly._raw([-c for c in self.coeffs], self.var, self.field)

    def __add__(self, other) -> "UniPoly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly._raw(out, self.var, self.field)

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = self.field.convert(other)
            if not c:
                return self.zero()
            return UniPoly._raw([x * c for x in self.coeffs], self.var, self.field)
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.zero()
        zero = self.field.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return UniPoly._raw(out, self.var, self.field)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        out = self.one()
        for _ in range(e):
            out = out * self
        return out

    def scale(self, c) -> "UniPoly":
        return self * c

    def __divmod__(self, other) -> tuple["UniPoly", "UniPoly"]:
        return poly_divrem(self, self._coerce(other))

    def __floordiv__(self, other) -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "UniPoly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        quo, rem = divmod(self, other)
        if rem:
            raise ExactAlgebraError(f"{other} does not divide {self}")
        return quo

    def divides(self, other: "UniPoly") -> bool:
        """True when ``self`` divides ``other``."""
        if not self:
            return not other
        return not (other % self)

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def derivative(self) -> "UniPoly":
        return UniPoly._raw([c * i for i, c in enumerate(self.coeffs)][1:], self.var, self.field)

    def monic(self) -> "UniPoly":
        if not self:
            return self
        return make_monic(self)[1]

    def __repr__(self) -> str:
        return f"UniPoly({self}, {self.field}[{self.var}])"

    def __str__(self) -> str:
        return _render(self.coeffs, self.var)


def poly_divrem(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Euclidean division ``a = quo*b + rem`` with ``deg rem < deg b``."""
    if not b:
        raise ZeroDivisionError("zero divisor")
    if a.var != b.var or a.field is not b.field:
        raise ExactAlgebraError("operands live in different rings")
    db = b.degree
    if a.degree < db:
        return a.zero(), a
    field = a.field
    r = list(a.coeffs)
    lb = b.coeffs[-1]
    inv = None if lb == field.one else field.one / lb
    quo = [field.zero] * (len(r) - db)
    bc = b.coeffs
    for k in range(len(r) - 1 - db, -1, -1):
        top = r[k + db]
        if not top:
            continue
        c = top if inv is None else top * inv
        quo[k] = c
        for i in range(db):
            if bc[i]:
                r[k + i] = r[k + i] - c * bc[i]
        r[k + db] = field.zero
    return UniPoly._raw(quo, a.var, field), UniPoly._raw(r[:db], a.var, field)


def make_monic(a: UniPoly) -> tuple[object, UniPoly]:
    """Split ``a`` as ``unit * monic``."""
    if not a:
        raise ExactAlgebraError("cannot normalise the zero polynomial")
    u = a.lc
    if u == a.field.one:
        return u, a
    inv = a.field.one / u
    return u, UniPoly._raw([c * inv for c in a.coeffs], a.var, a.field)


def poly_gcd_euclid(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the plain Euclidean algorithm over the coefficient field."""
    if not a and not b:
        raise ExactAlgebraError("undefined gcd")
    while b:
        a, b = b, a % b
        if b:
            b = b.monic()
    return a.monic()


def _clear_denominators(p: UniPoly) -> ZPoly:
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    return tuple(int(c * den) for c in p.coeffs)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd of two polynomials, not both zero.

    Over QQ the inputs are cleared to primitive integer polynomials and the
    gcd is taken with the primitive remainder sequence; over QQ(q) the plain
    Euclidean algorithm is used.
    """
    if a.var != b.var or a.field is not b.field:
        raise ExactAlgebraError("operands live in different rings")
    if not a and not b:
        raise ExactAlgebraError("undefined gcd")
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return a.one()
    if a.field is not QQ:
        return poly_gcd_euclid(a, b)
    g = _zgcd_primitive(_clear_denominators(a), _clear_denominators(b))
    return UniPoly([Fraction(c, g[-1]) for c in g], a.var, QQ)


def poly_from_roots(roots: Iterable, var: str = "n", field: Field = QQ) -> UniPoly:
    """Monic product of (var - r)."""
    out = UniPoly.constant(field.one, var, field)
    x = UniPoly.gen(var, field)
    for r in roots:
        out = out * (x - r)
    return out

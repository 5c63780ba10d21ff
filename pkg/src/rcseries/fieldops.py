"""Coefficient domains and the tiny dispatch layer the polynomial code uses.

Every exact scalar the library computes with is either a ``Fraction``, an
element of an ordered extension field (``algebraic.AlgebraicElement``), or a
complex pair over one of those.  Code that has to act on "any coefficient"
goes through the helpers here instead of isinstance-chains at every call
site.  Field *handles* (``QQ`` and friends) supply zero/one/coercion; they
follow the convention of passing the domain explicitly alongside dense
coefficient lists.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PrecisionError

Q = Fraction


def sign_of(x) -> int:
    """Exact sign (-1, 0, +1) of an element of an ordered coefficient domain."""
    if isinstance(x, (int, Fraction)):
        return (x > 0) - (x < 0)
    if hasattr(x, "exact_sign"):
        return x.exact_sign()
    raise TypeError(f"no exact sign for {type(x).__name__}")


def is_zero(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 0
    if hasattr(x, "is_zero_element"):
        return x.is_zero_element()
    raise TypeError(f"no zero test for {type(x).__name__}")


def bounds_of(x) -> tuple[Fraction, Fraction]:
    """Rational lower/upper bounds enclosing a real coefficient."""
    if isinstance(x, int):
        return Q(x), Q(x)
    if isinstance(x, Fraction):
        return x, x
    if hasattr(x, "bounds"):
        return x.bounds()
    raise TypeError(f"no rational bounds for {type(x).__name__}")


def tighten(x, width: Fraction) -> None:
    """Refine the enclosure of ``x`` until it is narrower than ``width``."""
    if isinstance(x, (int, Fraction)):
        return
    x.refine_to(width)


class RationalField:
    """Handle for the exact rationals."""

    is_real = True

    def __init__(self):
        self.zero = Q(0)
        self.one = Q(1)

    def from_int(self, n: int) -> Fraction:
        return Q(n)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)):
            return Q(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")


QQ = RationalField()


class ComplexElement:
    """A complex scalar over a real coefficient domain, stored as (re, im).

    Supports ring operations and exact division; there is no order.  Used for
    Gaussian rationals and for complexified extension fields.
    """

    __slots__ = ("re", "im", "field")

    def __init__(self, re, im, field):
        self.re = re
        self.im = im
        self.field = field

    def _lift(self, other):
        base = self.field.base
        if isinstance(other, ComplexElement):
            return other
        if isinstance(other, int):
            return ComplexElement(base.from_int(other), base.zero, self.field)
        return ComplexElement(base.coerce(other), base.zero, self.field)

    def __add__(self, other):
        o = self._lift(other)
        return ComplexElement(self.re + o.re, self.im + o.im, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return ComplexElement(self.re - o.re, self.im - o.im, self.field)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return ComplexElement(-self.re, -self.im, self.field)

    def __mul__(self, other):
        o = self._lift(other)
        return ComplexElement(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
            self.field,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        n2 = o.re * o.re + o.im * o.im
        if is_zero(n2):
            raise ZeroDivisionError("division by zero complex element")
        return ComplexElement(
            (self.re * o.re + self.im * o.im) / n2,
            (self.im * o.re - self.re * o.im) / n2,
            self.field,
        )

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def conjugate(self):
        return ComplexElement(self.re, -self.im, self.field)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def is_zero_element(self) -> bool:
        return is_zero(self.re) and is_zero(self.im)

    def __bool__(self):
        return not self.is_zero_element()

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return is_zero(self.re - o.re) and is_zero(self.im - o.im)

    def __repr__(self):
        return f"({self.re}+{self.im}i)"


class ComplexField:
    """Complexification of a real coefficient domain."""

    is_real = False

    def __init__(self, base):
        self.base = base
        self.zero = ComplexElement(base.zero, base.zero, self)
        self.one = ComplexElement(base.one, base.zero, self)
        self.i = ComplexElement(base.zero, base.one, self)

    def from_int(self, n: int):
        return ComplexElement(self.base.from_int(n), self.base.zero, self)

    def coerce(self, x):
        if isinstance(x, ComplexElement):
            return x
        return ComplexElement(self.base.coerce(x), self.base.zero, self)

    def make(self, re, im):
        return ComplexElement(self.base.coerce(re), self.base.coerce(im), self)

    def __repr__(self):
        return f"ComplexField({self.base!r})"

    def __eq__(self, other):
        return isinstance(other, ComplexField) and self.base == other.base

    def __hash__(self):
        return hash(("ComplexField", self.base))


QQ_I = ComplexField(QQ)


def require_decided(condition: bool, message: str) -> None:
    if not condition:
        raise PrecisionError(message)

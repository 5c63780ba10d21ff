"""Truncated Hahn series: exact arithmetic in fields of generalized power series.

A :class:`HahnSeries` stores finitely many leading terms ``coeff * t**exp``
with strictly increasing exponents from a rank-m group, together with a
truncation marker: ``trunc=None`` means the element is known exactly (finite
support), otherwise every exponent at or above ``trunc`` is unknown and the
series stands for its coset ``+ O(t**trunc)``.  Every operation propagates
the largest window it can certify, and order/sign questions that the window
cannot settle raise :class:`~rcseries.errors.PrecisionError` rather than
guess.

The field order is the real-closed one: the sign of a nonzero series is the
sign of its leading coefficient (smaller exponents dominate).  The t-adic
valuation ``val`` is the leading exponent; ``norm`` comparisons invert
exponent comparisons.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import DomainError, PrecisionError, StructuralError
from .exponents import Exponent, ExponentGroup
from .fieldops import QQ, is_zero, sign_of

Q = Fraction

GEOMETRIC_CAP = 512  # terms allowed while expanding geometric series


def _multiple_reaches(step: Exponent, target: Exponent) -> bool:
    """Whether k*step >= target (lex) for some natural k, given step > 0.

    In rank >= 2 a positive step whose leading support starts later than the
    target's can never reach it; detecting that up front keeps geometric
    expansions from spinning against an unreachable window.
    """
    zero_like = [c == 0 for c in step.coords]
    i = zero_like.index(False)
    j = None
    for idx, c in enumerate(target.coords):
        if c != 0:
            j = idx
            break
    if j is None:
        return True  # target <= 0
    if target.coords[j] < 0 and all(c == 0 for c in target.coords[:j]):
        return True
    return i <= j


def _min_trunc(a: Exponent | None, b: Exponent | None) -> Exponent | None:
    if a is None:
        return b
    if b is None:
        return a
    return a if a <= b else b


def _add_trunc(a: Exponent | None, b: Exponent) -> Exponent | None:
    return None if a is None else a + b


class HahnSeries:
    """A truncated element of the Hahn series field over exact coefficients.

    >>> G = ExponentGroup(1)
    >>> t = HahnSeries.t_power(G, Fraction(1))
    >>> ((1 + t) * (1 - t)).terms
    ((Exponent(0), Fraction(1, 1)), (Exponent(2), Fraction(-1, 1)))
    """

    __slots__ = ("group", "terms", "trunc")

    def __init__(self, group: ExponentGroup, terms, trunc: Exponent | None):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "terms", tuple(terms))
        object.__setattr__(self, "trunc", trunc)

    def __setattr__(self, name, value):
        raise AttributeError("HahnSeries is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def make(
        cls,
        group: ExponentGroup,
        terms: Iterable[tuple[Exponent, object]],
        trunc: Exponent | None = None,
    ) -> "HahnSeries":
        """Normalize arbitrary (exponent, coeff) data into a series."""
        acc: dict = {}
        order: list[Exponent] = []
        for e, c in terms:
            if e.rank != group.rank:
                raise StructuralError("exponent rank does not match group")
            if e in acc:
                acc[e] = acc[e] + c
            else:
                acc[e] = c
                order.append(e)
        out = []
        for e in sorted(acc.keys()):
            c = acc[e]
            if is_zero(c):
                continue
            if trunc is not None and not (e < trunc):
                continue
            out.append((e, c))
        return cls(group, out, trunc)

    @classmethod
    def zero(cls, group: ExponentGroup) -> "HahnSeries":
        return cls(group, (), None)

    @classmethod
    def from_scalar(cls, group: ExponentGroup, c, trunc: Exponent | None = None) -> "HahnSeries":
        c = Q(c) if isinstance(c, (int, str)) else c
        return cls.make(group, [(group.zero(), c)], trunc)

    @classmethod
    def t_power(cls, group: ExponentGroup, exp, coeff=1) -> "HahnSeries":
        """The monomial coeff * t**exp; ``exp`` may be a rational for rank 1."""
        if not isinstance(exp, Exponent):
            exp = group.scalar(exp)
        coeff = Q(coeff) if isinstance(coeff, (int, str)) else coeff
        return cls.make(group, [(exp, coeff)])

    # -- structure ---------------------------------------------------------

    def is_exact(self) -> bool:
        return self.trunc is None

    def is_zero_exact(self) -> bool:
        return not self.terms and self.trunc is None

    # fieldops protocol: lets the generic polynomial kernel run over K.
    # Only an exactly-zero series counts as zero; a series that merely
    # vanishes through its window is conservatively kept.
    def is_zero_element(self) -> bool:
        return self.is_zero_exact()

    def exact_sign(self) -> int:
        return self.sign()

    def __bool__(self):
        return not self.is_zero_exact()

    def vanishes_at_window(self) -> bool:
        """No represented terms (the element may still have a hidden tail)."""
        return not self.terms

    def leading(self) -> tuple[Exponent, object]:
        if not self.terms:
            if self.trunc is None:
                raise ZeroDivisionError("leading term of the zero series")
            raise PrecisionError(
                "series vanishes through its window; leading term unknown"
            )
        return self.terms[0]

    def val(self) -> Exponent | None:
        """Leading exponent; None for the exact zero series (val = +infinity)."""
        if self.terms:
            return self.terms[0][0]
        if self.trunc is None:
            return None
        raise PrecisionError("valuation undecidable: series vanishes through window")

    def val_lower_bound(self) -> Exponent | None:
        """An exponent <= val (None meaning +infinity); never raises."""
        if self.terms:
            return self.terms[0][0]
        return self.trunc

    def coeff_at(self, e: Exponent):
        for e1, c in self.terms:
            if e1 == e:
                return c
        if self.trunc is not None and not (e < self.trunc):
            raise PrecisionError("coefficient outside certified window")
        return Q(0)

    def truncate(self, order: Exponent | None) -> "HahnSeries":
        new_trunc = _min_trunc(self.trunc, order)
        if new_trunc == self.trunc:
            return self
        return HahnSeries(
            self.group,
            tuple((e, c) for e, c in self.terms if e < new_trunc),
            new_trunc,
        )

    def map_coeffs(self, fn) -> "HahnSeries":
        return HahnSeries.make(
            self.group, [(e, fn(c)) for e, c in self.terms], self.trunc
        )

    def shift(self, e: Exponent) -> "HahnSeries":
        """Multiply by the monomial t**e."""
        if not isinstance(e, Exponent):
            e = self.group.scalar(e)
        return HahnSeries(
            self.group,
            tuple((e1 + e, c) for e1, c in self.terms),
            _add_trunc(self.trunc, e),
        )

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "HahnSeries":
        if isinstance(other, HahnSeries):
            if other.group != self.group:
                raise StructuralError("series from different exponent groups")
            return other
        if isinstance(other, Exponent):
            raise TypeError("cannot mix exponents and series")
        return HahnSeries.from_scalar(self.group, other)

    def __add__(self, other):
        o = self._coerce(other)
        return HahnSeries.make(
            self.group,
            list(self.terms) + list(o.terms),
            _min_trunc(self.trunc, o.trunc),
        )

    __radd__ = __add__

    def __neg__(self):
        return HahnSeries(self.group, tuple((e, -c) for e, c in self.terms), self.trunc)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, HahnSeries) and not isinstance(other, Exponent):
            # scalar fast path
            if isinstance(other, (int, str)):
                other = Q(other)
            if is_zero(other):
                return HahnSeries(self.group, (), self.trunc)
            return HahnSeries(
                self.group, tuple((e, c * other) for e, c in self.terms), self.trunc
            )
        o = self._coerce(other)
        va, vb = self.val_lower_bound(), o.val_lower_bound()
        trunc = _min_trunc(
            _add_trunc(o.trunc, va) if va is not None else None,
            _add_trunc(self.trunc, vb) if vb is not None else None,
        )
        if self.is_zero_exact() or o.is_zero_exact():
            return HahnSeries(self.group, (), None)
        terms = []
        for e1, c1 in self.terms:
            for e2, c2 in o.terms:
                terms.append((e1 + e2, c1 * c2))
        return HahnSeries.make(self.group, terms, trunc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = HahnSeries.from_scalar(self.group, 1)
        acc = self
        while n:
            if n & 1:
                out = out * acc
            n >>= 1
            if n:
                acc = acc * acc
        return out

    def inverse(self, order: Exponent | None = None) -> "HahnSeries":
        """The inverse, correct so that ``self * result - 1`` has val >= order.

        With ``order=None`` the order is inferred from the truncation window;
        an exact series with a non-monomial support needs an explicit order.
        """
        v, c = self.leading()
        if isinstance(c, (int, str)):
            c = Q(c)
        lead_inv = HahnSeries.t_power(self.group, -v, 1) * (1 / c)
        u = lead_inv * self - 1  # val(u) > 0
        if order is None:
            if self.trunc is not None:
                order = self.trunc - v  # uncertainty of self caps the defect order
            elif u.is_zero_exact():
                return lead_inv
            else:
                raise PrecisionError(
                    "inverting an exact non-monomial series needs an explicit order"
                )
        elif not isinstance(order, Exponent):
            order = self.group.scalar(order)
        # geometric series: result = lead_inv * sum_k (-u)^k; then
        # self * result - 1 = -(-u)^{K+1}, so K+1 powers of val(u) must reach order
        acc = HahnSeries.from_scalar(self.group, 1)
        out = HahnSeries.from_scalar(self.group, 1)
        if not u.is_zero_exact():
            uv = u.val_lower_bound()
            if not _multiple_reaches(uv, order):
                raise PrecisionError(
                    "geometric inversion cannot reach the requested window: "
                    "the correction valuation never accumulates past it"
                )
            k = 0
            power_val = uv
            while power_val < order:
                k += 1
                if k > GEOMETRIC_CAP:
                    raise PrecisionError(
                        "geometric inversion needs more than %d terms; "
                        "the requested window is unreachable" % GEOMETRIC_CAP
                    )
                acc = ((-1) * acc * u).truncate(order)
                out = out + acc
                if acc.is_zero_exact():
                    break
                power_val = power_val + uv
        own_cap = _add_trunc(self.trunc, -v - v) if self.trunc is not None else None
        return (lead_inv * out).truncate(_min_trunc(order - v, own_cap))

    def divide(self, other, order: Exponent | None = None) -> "HahnSeries":
        o = self._coerce(other)
        if order is None and o.is_exact() and len(o.terms) == 1:
            e, c = o.terms[0]
            if isinstance(c, (int, str)):
                c = Q(c)
            return self.shift(-e) * (1 / c)
        inv = o.inverse(order)
        return self * inv

    def __truediv__(self, other):
        if not isinstance(other, HahnSeries):
            if isinstance(other, (int, str)):
                other = Q(other)
            return self * (1 / other)
        return self.divide(other)

    def __rtruediv__(self, other):
        return self._coerce(other).divide(self)

    # -- order, absolute value, standard part ------------------------------

    def sign(self) -> int:
        """Sign in the real-closed order; raises PrecisionError if unknowable."""
        if self.terms:
            return sign_of(self.terms[0][1])
        if self.trunc is None:
            return 0
        raise PrecisionError("sign undecidable: series vanishes through window")

    def cmp(self, other) -> int:
        return (self - self._coerce(other)).sign()

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __le__(self, other):
        return self.cmp(other) <= 0

    def __gt__(self, other):
        return self.cmp(other) > 0

    def __ge__(self, other):
        return self.cmp(other) >= 0

    def __abs__(self):
        s = self.sign()
        return self if s >= 0 else -self

    def is_finite(self) -> bool:
        """val >= 0: the element lies in the valuation ring."""
        zero = self.group.zero()
        if self.terms:
            return not (self.terms[0][0] < zero)
        if self.trunc is None or not (self.trunc < zero):
            return True  # hidden tail has val >= trunc >= 0
        raise PrecisionError("finiteness undecidable at truncation")

    def is_infinitesimal(self) -> bool:
        """val > 0: the element lies in the maximal ideal."""
        zero = self.group.zero()
        if self.terms:
            return zero < self.terms[0][0]
        if self.trunc is None or zero < self.trunc:
            return True
        raise PrecisionError("infinitesimality undecidable at truncation")

    def much_smaller_than(self, other) -> bool:
        """Strict domination |self| << |other|: val(self) > val(other)."""
        o = self._coerce(other)
        return (self.divide(o)).is_infinitesimal()

    def standard_part(self):
        """The coefficient of t^0; requires the element to be finite."""
        if not self.is_finite():
            raise DomainError("standard part of an infinite element")
        zero = self.group.zero()
        return self.coeff_at(zero)

    # -- comparisons of representations -------------------------------------

    def agrees_mod(self, other, order: Exponent) -> bool:
        """Whether self - other certifiably vanishes below the given order."""
        d = (self - self._coerce(other)).truncate(order)
        return not d.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HahnSeries.from_scalar(self.group, other)
        if not isinstance(other, HahnSeries):
            return NotImplemented
        if self.group != other.group or self.trunc != other.trunc:
            return False
        if len(self.terms) != len(other.terms):
            return False
        for (e1, c1), (e2, c2) in zip(self.terms, other.terms):
            if e1 != e2 or not is_zero(c1 - c2):
                return False
        return True

    __hash__ = None

    def __repr__(self):
        if not self.terms and self.trunc is None:
            return "0"
        bits = []
        for e, c in self.terms:
            ec = "(" + ",".join(str(x) for x in e.coords) + ")"
            if e.rank == 1:
                ec = str(e.coords[0])
            bits.append(f"{c}*t^{ec}")
        if self.trunc is not None:
            tc = (
                str(self.trunc.coords[0])
                if self.trunc.rank == 1
                else "(" + ",".join(str(x) for x in self.trunc.coords) + ")"
            )
            bits.append(f"O(t^{tc})")
        return " + ".join(bits) if bits else "O(t^%s)" % tc


class ComplexHahnSeries:
    """An element of the complexified field, stored as a pair of real series."""

    __slots__ = ("re", "im")

    def __init__(self, re: HahnSeries, im: HahnSeries):
        if re.group != im.group:
            raise StructuralError("components from different groups")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexHahnSeries is immutable")

    @classmethod
    def from_real(cls, re: HahnSeries) -> "ComplexHahnSeries":
        return cls(re, HahnSeries(re.group, (), re.trunc))

    @property
    def group(self):
        return self.re.group

    def _coerce(self, other) -> "ComplexHahnSeries":
        if isinstance(other, ComplexHahnSeries):
            return other
        if isinstance(other, HahnSeries):
            return ComplexHahnSeries.from_real(other)
        return ComplexHahnSeries.from_real(HahnSeries.from_scalar(self.group, other))

    def __add__(self, other):
        o = self._coerce(other)
        return ComplexHahnSeries(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexHahnSeries(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return ComplexHahnSeries(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def conjugate(self) -> "ComplexHahnSeries":
        return ComplexHahnSeries(self.re, -self.im)

    def is_real(self) -> bool:
        return not self.im.terms

    def standard_part(self):
        return (self.re.standard_part(), self.im.standard_part())

    def agrees_mod(self, other, order: Exponent) -> bool:
        o = self._coerce(other)
        return self.re.agrees_mod(o.re, order) and self.im.agrees_mod(o.im, order)

    def __eq__(self, other):
        o = self._coerce(other)
        return self.re == o.re and self.im == o.im

    __hash__ = None

    def __repr__(self):
        return f"({self.re!r}) + ({self.im!r})*i"


def hs_arith(op: str, a: HahnSeries, b: HahnSeries) -> HahnSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise DomainError(f"unknown operation {op!r}")


def hs_val(a: HahnSeries):
    return a.val()


def hs_standard_part(a):
    return a.standard_part()

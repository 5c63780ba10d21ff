"""Exact real and complex algebraic scalars via dynamic evaluation.

An :class:`AlgebraicExtension` adjoins one real root of a square-free
polynomial, identified by an isolating interval with rational endpoints.
Elements are polynomial expressions in the generator, reduced modulo the
defining polynomial.  Nothing is ever factored: when a gcd with the defining
polynomial turns out to be proper, the field discards the half that does not
contain its root (which half is decided by an exact Sturm count on the
isolating interval).  Signs and zero tests are therefore always exact, and
towers of extensions work with no extra machinery because the base field is
only accessed through the same generic operations.

Non-real scalars are represented as (re, im) pairs over a real tower when
the defining polynomial is quadratic, and otherwise by adjoining the root
directly with an isolating disc (:class:`ComplexAlgebraicExtension`).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, PrecisionError
from .fieldops import QQ, ComplexElement, ComplexField, bounds_of, is_zero, sign_of
from .polys import (
    count_real_roots,
    count_roots_open_unit_disc,
    pconst,
    pdeg,
    peval,
    pgcd,
    pmonic,
    pmul,
    pnormalize,
    pquo_exact,
    prem,
    pscale,
    pscale_arg,
    pshift,
    pxgcd,
    refine_isolating_interval,
    squarefree_part,
)

Q = Fraction


def _iv_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _iv_mul(a, b):
    xs = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(xs), max(xs))


def _iv_poly_eval(coeff_bounds, x_iv):
    acc = (Q(0), Q(0))
    for cb in reversed(coeff_bounds):
        acc = _iv_add(_iv_mul(acc, x_iv), cb)
    return acc


class AlgebraicExtension:
    """A real field ``base(c)``, c the root of ``minpoly`` isolated by (lo, hi).

    The defining polynomial must be square-free over the base with
    ``minpoly(lo) != 0 != minpoly(hi)`` (or lo == hi for a degenerate rational
    generator, which callers normally avoid).  The isolating interval and the
    defining polynomial shrink in place as refinements and splits happen; all
    elements of the field share that state.
    """

    is_real = True

    def __init__(self, base, minpoly: list, lo: Fraction, hi: Fraction):
        if pdeg(minpoly) < 1:
            raise DomainError("defining polynomial must be nonconstant")
        self.base = base
        self.minpoly = pmonic([base.coerce(c) if isinstance(c, (int, Fraction)) else c
                               for c in minpoly])
        self.lo = Q(lo)
        self.hi = Q(hi)
        self.zero = AlgebraicElement(self, [])
        self.one = AlgebraicElement(self, [base.one])

    def gen(self) -> "AlgebraicElement":
        return AlgebraicElement(self, [self.base.zero, self.base.one])

    def from_int(self, n: int):
        return AlgebraicElement(self, pconst(self.base.from_int(n), self.base))

    def coerce(self, x):
        if isinstance(x, AlgebraicElement) and x.field is self:
            return x
        # anything else must embed through the base chain
        return AlgebraicElement(self, pconst(self.base.coerce(x), self.base))

    def refine(self) -> None:
        """One bisection step on the isolating interval of the generator."""
        self.lo, self.hi = refine_isolating_interval(
            self.minpoly, self.lo, self.hi, self.base
        )

    def _contains_root(self, f: list) -> bool:
        """Whether the generator is a root of f (f divides into minpoly factors)."""
        if self.lo == self.hi:
            return is_zero(peval(f, self.lo))
        return count_real_roots(f, self.lo, self.hi, self.base) == 1

    def _split_against(self, f: list) -> list:
        """gcd-split of the defining polynomial against f.

        Returns the gcd d; afterwards the defining polynomial has been
        replaced by whichever of d, minpoly/d has the generator as a root,
        so f(c) == 0 iff the returned d kept the root.
        """
        d = pgcd(f, self.minpoly, self.base)
        if pdeg(d) < 1:
            return d
        if pdeg(d) == pdeg(self.minpoly):
            return d
        if self._contains_root(d):
            self.minpoly = d
        else:
            self.minpoly = pquo_exact(self.minpoly, d)
        return d

    def __repr__(self):
        return f"{self.base!r}(c|deg {pdeg(self.minpoly)} in [{self.lo},{self.hi}])"


class AlgebraicElement:
    """An element of an :class:`AlgebraicExtension`, as a reduced polynomial in c."""

    __slots__ = ("field", "rep")

    def __init__(self, field: AlgebraicExtension, rep: list):
        self.field = field
        self.rep = prem(rep, field.minpoly) if pdeg(rep) >= pdeg(field.minpoly) else list(rep)
        pnormalize(self.rep)

    def _lift(self, other):
        if isinstance(other, AlgebraicElement) and other.field is self.field:
            return other
        return self.field.coerce(other)

    def __add__(self, other):
        o = self._lift(other)
        out = list(self.rep)
        for k, c in enumerate(o.rep):
            if k < len(out):
                out[k] = out[k] + c
            else:
                out.append(c)
        return AlgebraicElement(self.field, pnormalize(out))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicElement(self.field, [-c for c in self.rep])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return AlgebraicElement(self.field, pmul(self.rep, o.rep))

    __rmul__ = __mul__

    def inverse(self):
        f = self.field
        rep = list(self.rep)
        while True:
            rep = prem(rep, f.minpoly) if pdeg(rep) >= pdeg(f.minpoly) else rep
            pnormalize(rep)
            if not rep:
                raise ZeroDivisionError("inverse of zero algebraic element")
            if pdeg(rep) == 0:
                return AlgebraicElement(f, [f.base.one / rep[0]])
            h, s, _ = pxgcd(rep, f.minpoly, f.base)
            if pdeg(h) == 0:
                return AlgebraicElement(f, s)
            # proper gcd: split the defining polynomial and retry on the half
            # that still contains the generator
            f._split_against(rep)
            if AlgebraicElement(f, rep).is_zero_element():
                raise ZeroDivisionError("inverse of zero algebraic element")

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def is_zero_element(self) -> bool:
        f = self.field
        rep = prem(self.rep, f.minpoly) if pdeg(self.rep) >= pdeg(f.minpoly) else self.rep
        rep = pnormalize(list(rep))
        if not rep:
            return True
        if pdeg(rep) == 0:
            return is_zero(rep[0])
        d = pgcd(rep, f.minpoly, f.base)
        if pdeg(d) < 1:
            return False
        zero = f._contains_root(d)
        f._split_against(rep)
        return zero

    def __bool__(self):
        return not self.is_zero_element()

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return (self - o).is_zero_element()

    def exact_sign(self) -> int:
        if self.is_zero_element():
            return 0
        f = self.field
        rep = prem(self.rep, f.minpoly) if pdeg(self.rep) >= pdeg(f.minpoly) else self.rep
        width = None
        while True:
            lo, hi = self._bounds_once(rep)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            width = (hi - lo) / 4 if width is None else width / 4
            self._refine_pass(rep, width)

    def _refine_pass(self, rep, width: Fraction) -> None:
        f = self.field
        f.refine()
        m = max(Q(1), abs(f.lo), abs(f.hi))
        scale = 4 * max(1, len(rep)) * m ** max(0, len(rep) - 1)
        sub = width / scale
        for c in rep:
            if not isinstance(c, (int, Fraction)):
                c.refine_to(sub)

    def _bounds_once(self, rep=None) -> tuple[Fraction, Fraction]:
        f = self.field
        rep = self.rep if rep is None else rep
        coeff_bounds = [bounds_of(c) for c in rep]
        return _iv_poly_eval(coeff_bounds, (f.lo, f.hi))

    def bounds(self) -> tuple[Fraction, Fraction]:
        return self._bounds_once()

    def refine_to(self, width: Fraction) -> None:
        while True:
            lo, hi = self._bounds_once()
            if hi - lo < width:
                return
            self._refine_pass(self.rep, width)

    def __lt__(self, other):
        return (self - self._lift(other)).exact_sign() < 0

    def __le__(self, other):
        return (self - self._lift(other)).exact_sign() <= 0

    def __gt__(self, other):
        return (self - self._lift(other)).exact_sign() > 0

    def __ge__(self, other):
        return (self - self._lift(other)).exact_sign() >= 0

    def __repr__(self):
        lo, hi = self.bounds()
        mid = (lo + hi) / 2
        return f"~{float(mid):.6g}"


def real_algebraic(minpoly_q: list, lo, hi, base=QQ) -> AlgebraicElement:
    """The real root of ``minpoly_q`` isolated by [lo, hi], as a field element.

    The polynomial is replaced by its square-free part; a degenerate interval
    (or one that pins a rational root) yields a plain base element.
    """
    g = squarefree_part([base.coerce(c) for c in minpoly_q], base)
    lo, hi = Q(lo), Q(hi)
    if lo == hi:
        return base.coerce(lo)
    if is_zero(peval(g, lo)):
        return base.coerce(lo)
    if is_zero(peval(g, hi)):
        return base.coerce(hi)
    if count_real_roots(g, lo, hi, base) != 1:
        raise DomainError("interval does not isolate one root")
    if pdeg(g) == 1:
        return -g[0] / g[1]
    ext = AlgebraicExtension(base, g, lo, hi)
    return ext.gen()


def sqrt_positive(d, base=QQ):
    """The positive square root of a positive element of a real domain."""
    if sign_of(d) <= 0:
        raise DomainError("sqrt of a non-positive element")
    if isinstance(d, Fraction):
        num, den = d.numerator, d.denominator
        rn, rd = _isqrt_exact(num), _isqrt_exact(den)
        if rn is not None and rd is not None:
            return Q(rn, rd)
    from .polys import bounds_of_abs

    _, hi = bounds_of_abs(d)
    bound = hi + 1
    coeffs = [-d, _zero(d), _one(d)]
    return real_algebraic(coeffs, Q(0), bound, base=_field_of(d, base))


def _isqrt_exact(n: int):
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def _zero(like):
    return like - like


def _one(like):
    if isinstance(like, Fraction):
        return Q(1)
    return like.field.one if isinstance(like, AlgebraicElement) else like / like


def _field_of(x, default=QQ):
    if isinstance(x, AlgebraicElement):
        return x.field
    return default


# ---------------------------------------------------------------------------
# complex algebraic scalars


class ComplexAlgebraicExtension:
    """``base(z)`` for a non-real root z of a square-free polynomial over a
    real base, isolated by a disc with Gaussian-rational center.

    Ring and field operations follow the same dynamic-evaluation scheme as
    the real case; root membership questions are settled by exact counts of
    roots in the isolating disc.  There is no order.

    The constructor expects (and ``refine`` preserves) the separation
    invariant that the three-times-larger concentric disc still contains
    exactly one root: every shrunken candidate disc then keeps strangers out.
    """

    is_real = False

    def __init__(self, base, minpoly: list, center: tuple[Fraction, Fraction], radius: Fraction):
        if pdeg(minpoly) < 1:
            raise DomainError("defining polynomial must be nonconstant")
        self.base = base
        self.minpoly = pmonic(list(minpoly))
        self.center = (Q(center[0]), Q(center[1]))
        self.radius = Q(radius)
        self.zero = ComplexAlgebraicElement(self, [])
        self.one = ComplexAlgebraicElement(self, [base.one])
        self._conj: ComplexAlgebraicExtension | None = None

    def conjugate_field(self) -> "ComplexAlgebraicExtension":
        if self._conj is None:
            cx, cy = self.center
            self._conj = ComplexAlgebraicExtension(
                self.base, self.minpoly, (cx, -cy), self.radius
            )
            self._conj._conj = self
        return self._conj

    def gen(self):
        return ComplexAlgebraicElement(self, [self.base.zero, self.base.one])

    def from_int(self, n: int):
        return ComplexAlgebraicElement(self, pconst(self.base.from_int(n), self.base))

    def coerce(self, x):
        if isinstance(x, ComplexAlgebraicElement) and x.field is self:
            return x
        return ComplexAlgebraicElement(self, pconst(self.base.coerce(x), self.base))

    def _count_in_disc(self, f: list, center, radius) -> int:
        """Roots of f (over the real base) in the open disc, exact."""
        CK = ComplexField(self.base)
        c = CK.make(center[0], center[1])
        shifted = pshift([CK.coerce(x) for x in f], c)
        scaled = pscale_arg(shifted, CK.coerce(radius))
        return count_roots_open_unit_disc(scaled, CK)

    def _count_in_disc_safe(self, f: list, center, radius) -> int:
        r = Q(radius)
        for num, den in ((1, 1), (9, 10), (11, 10), (13, 14), (15, 14)):
            try:
                return self._count_in_disc(f, center, r * num / den)
            except DomainError:
                continue
        raise PrecisionError("could not find a root-free circle for disc count")

    def _contains_root(self, f: list) -> bool:
        return self._count_in_disc_safe(f, self.center, self.radius) >= 1

    def _split_against(self, f: list) -> list:
        d = pgcd(f, self.minpoly, self.base)
        if pdeg(d) < 1 or pdeg(d) == pdeg(self.minpoly):
            return d
        if self._contains_root(d):
            self.minpoly = d
        else:
            self.minpoly = pquo_exact(self.minpoly, d)
        return d

    def refine(self) -> None:
        """Shrink the isolating disc by a constant factor (quadrant covering)."""
        cx, cy = self.center
        r = self.radius
        half = r / 2
        for dx, dy in ((half, half), (half, -half), (-half, half), (-half, -half),
                       (Q(0), Q(0))):
            c = (cx + dx, cy + dy)
            try:
                n = self._count_in_disc_safe(self.minpoly, c, r * 3 / 4)
            except PrecisionError:
                continue
            if n == 1:
                self.center = c
                self.radius = r * 3 / 4
                return
        raise PrecisionError("failed to shrink isolating disc")

    def box(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        cx, cy = self.center
        r = self.radius
        return (cx - r, cx + r), (cy - r, cy + r)

    def __repr__(self):
        return (
            f"{self.base!r}(z|deg {pdeg(self.minpoly)} near "
            f"{float(self.center[0]):.4g}+{float(self.center[1]):.4g}i)"
        )


class ComplexAlgebraicElement:
    """Element of a :class:`ComplexAlgebraicExtension`: a reduced polynomial in z."""

    __slots__ = ("field", "rep")

    def __init__(self, field: ComplexAlgebraicExtension, rep: list):
        self.field = field
        self.rep = prem(rep, field.minpoly) if pdeg(rep) >= pdeg(field.minpoly) else list(rep)
        pnormalize(self.rep)

    def _lift(self, other):
        if isinstance(other, ComplexAlgebraicElement) and other.field is self.field:
            return other
        return self.field.coerce(other)

    def __add__(self, other):
        o = self._lift(other)
        out = list(self.rep)
        for k, c in enumerate(o.rep):
            if k < len(out):
                out[k] = out[k] + c
            else:
                out.append(c)
        return ComplexAlgebraicElement(self.field, pnormalize(out))

    __radd__ = __add__

    def __neg__(self):
        return ComplexAlgebraicElement(self.field, [-c for c in self.rep])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return ComplexAlgebraicElement(self.field, pmul(self.rep, o.rep))

    __rmul__ = __mul__

    def inverse(self):
        f = self.field
        rep = list(self.rep)
        while True:
            rep = prem(rep, f.minpoly) if pdeg(rep) >= pdeg(f.minpoly) else rep
            pnormalize(rep)
            if not rep:
                raise ZeroDivisionError("inverse of zero element")
            if pdeg(rep) == 0:
                return ComplexAlgebraicElement(f, [f.base.one / rep[0]])
            h, s, _ = pxgcd(rep, f.minpoly, f.base)
            if pdeg(h) == 0:
                return ComplexAlgebraicElement(f, s)
            f._split_against(rep)
            if self.is_zero_element():
                raise ZeroDivisionError("inverse of zero element")

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def is_zero_element(self) -> bool:
        f = self.field
        rep = prem(self.rep, f.minpoly) if pdeg(self.rep) >= pdeg(f.minpoly) else self.rep
        rep = pnormalize(list(rep))
        if not rep:
            return True
        if pdeg(rep) == 0:
            return is_zero(rep[0])
        d = pgcd(rep, f.minpoly, f.base)
        if pdeg(d) < 1:
            return False
        zero = f._contains_root(d)
        f._split_against(rep)
        return zero

    def __bool__(self):
        return not self.is_zero_element()

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return (self - o).is_zero_element()

    def conjugate(self):
        """The complex conjugate, as an element of the conjugate extension."""
        return ComplexAlgebraicElement(self.field.conjugate_field(), list(self.rep))

    def box_bounds(self):
        """Interval boxes enclosing (re, im), refined on demand elsewhere."""
        (xlo, xhi), (ylo, yhi) = self.field.box()
        re_iv = (Q(0), Q(0))
        im_iv = (Q(0), Q(0))
        # interval Horner with complex boxes
        for c in reversed(self.rep):
            clo, chi = bounds_of(c)
            a, b = re_iv, im_iv
            re_iv = _iv_add(_iv_mul(a, (xlo, xhi)), _iv_mul((-b[1], -b[0]), (ylo, yhi)))
            im_iv = _iv_add(_iv_mul(a, (ylo, yhi)), _iv_mul(b, (xlo, xhi)))
            re_iv = _iv_add(re_iv, (clo, chi))
        return re_iv, im_iv

    def __repr__(self):
        re, im = self.box_bounds()
        return f"~({float((re[0]+re[1])/2):.4g}+{float((im[0]+im[1])/2):.4g}i)"

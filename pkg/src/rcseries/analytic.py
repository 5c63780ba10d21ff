"""Analytic elements in one disc variable with Hahn series coefficients.

An :class:`AnalyticSeries` is stored in slice form: a finite sorted list of
``(gamma, p)`` with ``p`` a nonzero polynomial in the disc variable, standing
for ``sum_i t**gamma_i * p_i(xi)``.  Equivalently it is a polynomial in
``xi`` whose coefficients live in the series field; both views are used and
conversions are cheap.

Truncation is tracked on two axes.  ``t_trunc`` works as for plain series.
``xi_order`` is ``None`` while the element is an honest polynomial in the
disc variable, and becomes an integer ``N`` when an operation (unit
inversion, geometric re-expansion) introduces an infinite tail of which only
the first ``N`` jet coefficients are certified.  Evaluation propagates both
windows honestly: at a point of positive valuation the hidden jet tail is
t-adically small, at a unit-sized point it is not, and the certified window
of the value collapses accordingly.

The working radius bounds the closed disc on which unit and zero questions
about the represented element are posed; the top slice decides them.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, PrecisionError, StructuralError
from .exponents import Exponent, ExponentGroup
from .fieldops import QQ, is_zero
from .polys import (
    count_roots_in_disc,
    pderiv,
    pdeg,
    peval,
    pinv_jet,
    pmul,
    pnormalize,
    root_multiplicity,
    smallest_nonzero_root_radius,
)
from .series import GEOMETRIC_CAP, HahnSeries, _add_trunc, _min_trunc, _multiple_reaches

Q = Fraction


def _min_opt(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class AnalyticSeries:
    """Truncated slice-form analytic element over a Hahn series field.

    >>> G = ExponentGroup(1)
    >>> f = AnalyticSeries.from_slices(G, [(G.scalar(0), [0, 0, 1]), (G.scalar(1), [-1])])
    >>> f.top_slice()[1]
    (Fraction(0, 1), Fraction(0, 1), Fraction(1, 1))
    """

    __slots__ = ("group", "slices", "radius", "xi_order", "t_trunc")

    def __init__(self, group, slices, radius, xi_order, t_trunc):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "slices", tuple(slices))
        object.__setattr__(self, "radius", radius)
        object.__setattr__(self, "xi_order", xi_order)
        object.__setattr__(self, "t_trunc", t_trunc)

    def __setattr__(self, name, value):
        raise AttributeError("AnalyticSeries is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_slices(
        cls,
        group: ExponentGroup,
        slices,
        radius: Fraction = Q(2),
        xi_order: int | None = None,
        t_trunc: Exponent | None = None,
    ) -> "AnalyticSeries":
        """Normalize (gamma, coeff-list) data; rationals are coerced exactly."""
        acc: dict = {}
        for gamma, p in slices:
            if not isinstance(gamma, Exponent):
                gamma = group.scalar(gamma)
            p = [Q(c) if isinstance(c, (int, str)) else c for c in p]
            if gamma in acc:
                acc[gamma] = [
                    (acc[gamma][k] if k < len(acc[gamma]) else Q(0))
                    + (p[k] if k < len(p) else Q(0))
                    for k in range(max(len(acc[gamma]), len(p)))
                ]
            else:
                acc[gamma] = list(p)
        out = []
        for gamma in sorted(acc):
            if t_trunc is not None and not (gamma < t_trunc):
                continue
            p = pnormalize(acc[gamma])
            if xi_order is not None:
                p = pnormalize(p[:xi_order])
            if p:
                out.append((gamma, tuple(p)))
        radius = Q(radius)
        if radius <= 1:
            raise DomainError("radius must be a rational > 1")
        return cls(group, out, radius, xi_order, t_trunc)

    @classmethod
    def zero(cls, group, radius=Q(2)) -> "AnalyticSeries":
        return cls(group, (), Q(radius), None, None)

    @classmethod
    def const(cls, group, c, radius=Q(2)) -> "AnalyticSeries":
        """Embed a scalar or a Hahn series as a constant-in-xi element."""
        if isinstance(c, HahnSeries):
            return cls.from_k_poly([c], radius)
        return cls.from_slices(group, [(group.zero(), [c])], radius)

    @classmethod
    def xi(cls, group, radius=Q(2)) -> "AnalyticSeries":
        return cls.from_slices(group, [(group.zero(), [0, 1])], radius)

    @classmethod
    def from_k_poly(
        cls, coeffs: list[HahnSeries], radius=Q(2), xi_order=None
    ) -> "AnalyticSeries":
        """Build from xi-major form: a list of series coefficients."""
        if not coeffs:
            raise DomainError("empty coefficient list")
        group = coeffs[0].group
        slices: dict = {}
        t_trunc = None
        for k, c in enumerate(coeffs):
            if not isinstance(c, HahnSeries):
                c = HahnSeries.from_scalar(group, c)
            t_trunc = _min_trunc(t_trunc, c.trunc) if c.trunc is not None else t_trunc
            for e, a in c.terms:
                slices.setdefault(e, {})[k] = a
        data = []
        for e, d in slices.items():
            p = [Q(0)] * (max(d) + 1)
            for k, a in d.items():
                p[k] = a
            data.append((e, p))
        return cls.from_slices(group, data, radius, xi_order, t_trunc)

    def to_xi_major(self) -> list[HahnSeries]:
        """The xi-major view: coefficient k as a Hahn series (shared t-window)."""
        deg = max((pdeg(list(p)) for _, p in self.slices), default=-1)
        out = []
        for k in range(deg + 1):
            terms = []
            for gamma, p in self.slices:
                if k <= pdeg(list(p)) and not is_zero(p[k]):
                    terms.append((gamma, p[k]))
            out.append(HahnSeries.make(self.group, terms, self.t_trunc))
        if not out:
            out.append(HahnSeries(self.group, (), self.t_trunc))
        return out

    # -- structure ----------------------------------------------------------

    def is_zero_exact(self) -> bool:
        return not self.slices and self.t_trunc is None and self.xi_order is None

    def vanishes_at_window(self) -> bool:
        return not self.slices

    def top_slice(self):
        """(gamma0, poly): the slice of lowest exponent; the gauss norm is
        the norm of t**gamma0."""
        if not self.slices:
            if self.t_trunc is None and self.xi_order is None:
                raise DomainError("top slice of the zero element")
            raise PrecisionError("element vanishes through its window")
        return self.slices[0]

    def gauss_val(self) -> Exponent:
        return self.top_slice()[0]

    def val_lower_bound(self) -> Exponent | None:
        if self.slices:
            return self.slices[0][0]
        return self.t_trunc

    def truncate_t(self, order: Exponent | None) -> "AnalyticSeries":
        new = _min_trunc(self.t_trunc, order)
        if new == self.t_trunc:
            return self
        return AnalyticSeries(
            self.group,
            tuple((g, p) for g, p in self.slices if g < new),
            self.radius,
            self.xi_order,
            new,
        )

    def truncate_xi(self, n: int | None) -> "AnalyticSeries":
        new = _min_opt(self.xi_order, n)
        if new == self.xi_order:
            return self
        return AnalyticSeries.from_slices(
            self.group, [(g, list(p)) for g, p in self.slices], self.radius, new, self.t_trunc
        )

    def with_radius(self, radius) -> "AnalyticSeries":
        radius = Q(radius)
        if radius <= 1:
            raise DomainError("radius must be a rational > 1")
        return AnalyticSeries(self.group, self.slices, radius, self.xi_order, self.t_trunc)

    def map_coeffs(self, fn) -> "AnalyticSeries":
        return AnalyticSeries.from_slices(
            self.group,
            [(g, [fn(c) for c in p]) for g, p in self.slices],
            self.radius,
            self.xi_order,
            self.t_trunc,
        )

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "AnalyticSeries":
        if isinstance(other, AnalyticSeries):
            if other.group != self.group:
                raise StructuralError("analytic series over different groups")
            return other
        if isinstance(other, HahnSeries):
            return AnalyticSeries.const(self.group, other, self.radius)
        return AnalyticSeries.const(self.group, other, self.radius)

    def __add__(self, other):
        o = self._coerce(other)
        return AnalyticSeries.from_slices(
            self.group,
            [(g, list(p)) for g, p in self.slices] + [(g, list(p)) for g, p in o.slices],
            min(self.radius, o.radius),
            _min_opt(self.xi_order, o.xi_order),
            _min_trunc(self.t_trunc, o.t_trunc),
        )

    __radd__ = __add__

    def __neg__(self):
        return AnalyticSeries(
            self.group,
            tuple((g, tuple(-c for c in p)) for g, p in self.slices),
            self.radius,
            self.xi_order,
            self.t_trunc,
        )

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def _xi_order_mul(self, o: "AnalyticSeries") -> int | None:
        def low(s):
            lows = [min(k for k, c in enumerate(p) if not is_zero(c)) for _, p in s.slices]
            return min(lows, default=0)

        cands = []
        if self.xi_order is not None:
            cands.append(self.xi_order + low(o))
        if o.xi_order is not None:
            cands.append(o.xi_order + low(self))
        return min(cands) if cands else None

    def __mul__(self, other):
        if isinstance(other, (int, str, Fraction)) or (
            not isinstance(other, (AnalyticSeries, HahnSeries))
        ):
            c = Q(other) if isinstance(other, (int, str)) else other
            if is_zero(c):
                return AnalyticSeries(self.group, (), self.radius, self.xi_order, self.t_trunc)
            return AnalyticSeries(
                self.group,
                tuple((g, tuple(c * a for a in p)) for g, p in self.slices),
                self.radius,
                self.xi_order,
                self.t_trunc,
            )
        if isinstance(other, HahnSeries):
            return self._scalar_series_mul(other)
        o = self._coerce(other)
        va, vb = self.val_lower_bound(), o.val_lower_bound()
        trunc = _min_trunc(
            _add_trunc(o.t_trunc, va) if va is not None else None,
            _add_trunc(self.t_trunc, vb) if vb is not None else None,
        )
        if (not self.slices and self.t_trunc is None) or (not o.slices and o.t_trunc is None):
            return AnalyticSeries(self.group, (), min(self.radius, o.radius), None, None)
        out = []
        for g1, p1 in self.slices:
            for g2, p2 in o.slices:
                out.append((g1 + g2, pmul(list(p1), list(p2))))
        return AnalyticSeries.from_slices(
            self.group, out, min(self.radius, o.radius), self._xi_order_mul(o), trunc
        )

    __rmul__ = __mul__

    def _scalar_series_mul(self, s: HahnSeries) -> "AnalyticSeries":
        if s.group != self.group:
            raise StructuralError("scalar from a different exponent group")
        va = self.val_lower_bound()
        vs = s.val_lower_bound()
        trunc = _min_trunc(
            _add_trunc(s.trunc, va) if va is not None else None,
            _add_trunc(self.t_trunc, vs) if vs is not None else None,
        )
        if s.is_zero_exact():
            return AnalyticSeries(self.group, (), self.radius, None, None)
        out = []
        for e, c in s.terms:
            for g, p in self.slices:
                out.append((g + e, [c * a for a in p]))
        return AnalyticSeries.from_slices(
            self.group, out, self.radius, self.xi_order, trunc
        )

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = AnalyticSeries.const(self.group, 1, self.radius)
        acc = self
        while n:
            if n & 1:
                out = out * acc
            n >>= 1
            if n:
                acc = acc * acc
        return out

    def mul_xi_power(self, k: int) -> "AnalyticSeries":
        return AnalyticSeries.from_slices(
            self.group,
            [(g, [Q(0)] * k + list(p)) for g, p in self.slices],
            self.radius,
            self.xi_order + k if self.xi_order is not None else None,
            self.t_trunc,
        )

    # -- the ring-theoretic predicates on the represented element -----------

    def is_unit(self, radius=None) -> bool:
        """No top-slice root in the closed working disc (then 1/f exists)."""
        radius = Q(radius) if radius is not None else self.radius
        _, p0 = self.top_slice()
        field = _field_of_poly(p0)
        return count_roots_in_disc(list(p0), radius, field) == 0

    def regularity(self, a) -> int:
        """Vanishing order of the top slice at the point a of the real disc."""
        _, p0 = self.top_slice()
        field = _field_of_poly(p0)
        return root_multiplicity(list(p0), a, field)

    def unit_radius(self) -> Fraction:
        """A rational radius below the smallest nonzero top-slice root modulus."""
        _, p0 = self.top_slice()
        field = _field_of_poly(p0)
        r = smallest_nonzero_root_radius(list(p0), field)
        return min(r, self.radius)

    def oc_check(self, gamma: Exponent, bound: Exponent | None = None) -> bool:
        """Overconvergence certificate for the substitution xi -> t**gamma xi.

        True iff every represented xi-coefficient satisfies
        ``val(a_k) + k*gamma >= bound`` (default bound: the gauss valuation),
        so the substituted element stays within the represented fragment's
        convergence discipline.  A certificate about the window only.
        """
        if not self.slices:
            return True
        if bound is None:
            bound = self.gauss_val()
        for k, c in enumerate(self.to_xi_major()):
            lb = c.val_lower_bound()
            if lb is None:
                continue
            if lb + gamma.scale(k) < bound:
                return False
        return True

    # -- inversion ----------------------------------------------------------

    def inverse(self, t_order: Exponent | None = None, jet_order: int = 16) -> "AnalyticSeries":
        """Inverse of a unit, as a jet of order ``jet_order`` in xi.

        The top slice is inverted as a power-series jet (valid because a unit
        top slice cannot vanish at 0), then the t-direction is corrected by a
        geometric series exactly as for plain series.
        """
        if not self.is_unit():
            raise DomainError("inverse of a non-unit analytic element")
        g0, p0 = self.top_slice()
        if t_order is None:
            if self.t_trunc is not None:
                t_order = self.t_trunc - g0
            else:
                t_order = None
        n = _min_opt(jet_order, self.xi_order)
        b0 = pinv_jet(list(p0), n)
        lead_inv = AnalyticSeries.from_slices(
            self.group, [(-g0, b0)], self.radius, n, None
        )
        u = (lead_inv * self) - 1
        one = AnalyticSeries.const(self.group, 1, self.radius)
        if u.vanishes_at_window() and u.t_trunc is None:
            return lead_inv
        if t_order is None:
            raise PrecisionError("inverting an exact element needs a target order")
        uv = u.val_lower_bound()
        if uv is None:
            return lead_inv.truncate_t(_add_trunc(t_order, -g0))
        if not (self.group.zero() < uv):
            raise PrecisionError("unit correction term does not have positive order")
        if not _multiple_reaches(uv, t_order):
            raise PrecisionError("geometric inversion cannot reach the target window")
        acc = one
        out = one
        power_val = uv
        k = 0
        while power_val < t_order:
            k += 1
            if k > GEOMETRIC_CAP:
                raise PrecisionError("geometric inversion exceeded the term cap")
            acc = ((-1) * acc * u).truncate_t(t_order)
            out = out + acc
            if not acc.slices and acc.t_trunc is None:
                break
            power_val = power_val + uv
        own_cap = (
            _add_trunc(self.t_trunc, -g0 - g0) if self.t_trunc is not None else None
        )
        return (lead_inv * out).truncate_t(_min_trunc(_add_trunc(t_order, -g0), own_cap))

    # -- evaluation and substitution -----------------------------------------

    def eval(self, x: HahnSeries) -> HahnSeries:
        """Value at a point x of the field with |x| <= radius.

        The certified window accounts for the hidden jet tail: its terms have
        valuation at least gamma0 + xi_order * val(x).
        """
        if not isinstance(x, HahnSeries):
            x = HahnSeries.from_scalar(self.group, x)
        if not (abs(x) <= HahnSeries.from_scalar(self.group, self.radius)):
            raise DomainError("evaluation point outside the working disc")
        coeffs = self.to_xi_major()
        val = peval(coeffs, x)
        if not isinstance(val, HahnSeries):
            val = HahnSeries.from_scalar(self.group, val)
        if self.xi_order is not None and self.slices:
            xv = x.val_lower_bound()
            g0 = self.slices[0][0]
            tail = None if xv is None else g0 + xv.scale(self.xi_order)
            val = val.truncate(_min_trunc(val.trunc, tail))
        return val

    def recenter(self, c: HahnSeries, r: HahnSeries, new_radius=None) -> "AnalyticSeries":
        """The element xi -> f(c + r*xi) on the disc that maps back into this one.

        Requires |c| + |r| * new_radius <= radius; when ``new_radius`` is not
        given, a rational one > 1 is searched on a fixed ladder.
        """
        if not isinstance(c, HahnSeries):
            c = HahnSeries.from_scalar(self.group, c)
        if not isinstance(r, HahnSeries):
            r = HahnSeries.from_scalar(self.group, r)
        alpha = HahnSeries.from_scalar(self.group, self.radius)
        candidates = (
            [Q(new_radius)]
            if new_radius is not None
            else [Q(2), Q(3, 2), Q(5, 4), Q(9, 8), Q(17, 16), Q(33, 32)]
        )
        chosen = None
        for cand in candidates:
            if abs(c) + abs(r) * cand <= alpha:
                chosen = cand
                break
        if chosen is None:
            raise DomainError("image disc does not stay inside the working disc")
        coeffs = self.to_xi_major()
        # Horner in (c + r xi) over K
        out: list[HahnSeries] = []
        for a in reversed(coeffs):
            # out <- out * (c + r xi) + a
            nxt: list[HahnSeries] = [a]
            for k, b in enumerate(out):
                bc = b * c
                nxt[k] = nxt[k] + bc if k < len(nxt) else bc
                br = b * r
                if k + 1 < len(nxt):
                    nxt[k + 1] = nxt[k + 1] + br
                else:
                    nxt.append(br)
            out = nxt
        return AnalyticSeries.from_k_poly(out, chosen, self.xi_order)

    def substitute_xi_scale(self, c: HahnSeries, new_radius=None) -> "AnalyticSeries":
        """The element xi -> f(c*xi); |c| * new_radius must stay within radius."""
        return self.recenter(HahnSeries.from_scalar(self.group, 0), c, new_radius)

    # -- comparisons ---------------------------------------------------------

    def agrees_mod(self, other, t_order: Exponent, xi_order: int | None = None) -> bool:
        d = (self - self._coerce(other)).truncate_t(t_order)
        if xi_order is not None:
            d = d.truncate_xi(xi_order)
        return not d.slices

    def __eq__(self, other):
        if not isinstance(other, (AnalyticSeries, HahnSeries, int, Fraction)):
            return NotImplemented
        o = self._coerce(other)
        if (
            self.group != o.group
            or self.t_trunc != o.t_trunc
            or self.xi_order != o.xi_order
        ):
            return False
        if len(self.slices) != len(o.slices):
            return False
        for (g1, p1), (g2, p2) in zip(self.slices, o.slices):
            if g1 != g2 or len(p1) != len(p2):
                return False
            if any(not is_zero(a - b) for a, b in zip(p1, p2)):
                return False
        return True

    __hash__ = None

    def __repr__(self):
        if not self.slices:
            base = "0"
        else:
            bits = []
            for g, p in self.slices:
                gs = str(g.coords[0]) if g.rank == 1 else "(" + ",".join(map(str, g.coords)) + ")"
                ps = "+".join(
                    f"{c}*x^{k}" if k else f"{c}" for k, c in enumerate(p) if not is_zero(c)
                )
                bits.append(f"t^{gs}*({ps})")
            base = " + ".join(bits)
        extras = []
        if self.t_trunc is not None:
            ts = (
                str(self.t_trunc.coords[0])
                if self.t_trunc.rank == 1
                else "(" + ",".join(map(str, self.t_trunc.coords)) + ")"
            )
            extras.append(f"O(t^{ts})")
        if self.xi_order is not None:
            extras.append(f"O(x^{self.xi_order})")
        return " + ".join([base] + extras)


def _field_of_poly(p, default=QQ):
    for c in p:
        if not isinstance(c, (int, Fraction)):
            from .algebraic import AlgebraicElement

            if isinstance(c, AlgebraicElement):
                return c.field
    return default

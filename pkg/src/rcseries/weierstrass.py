"""Weierstrass preparation and division for one disc variable.

The preparation follows the inductive slice argument: the base step is the
classical one-variable preparation of the top slice (which after shrinking
the certified radius is just ``xi**s`` times a jet unit), and each further
t-slice of the defect is divided by ``xi**s`` — a plain low/high coefficient
split — pushing the remainder into the monic polynomial and the quotient
into the unit.  Division works the same way with the base division taken
against the full top slice.

``factor_poly_unit`` realizes the polynomial-times-unit factorization on the
closed working disc by a coprime Hensel lift: the top slice splits into the
product of its square-free factors that meet the disc and the rest, and the
splitting lifts slice by slice, exactly, with no recentering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .analytic import AnalyticSeries, _field_of_poly
from .errors import DomainError, PrecisionError, RegularityError
from .exponents import Exponent
from .fieldops import is_zero
from .polys import (
    count_roots_in_disc,
    pdeg,
    pdivmod,
    pmul,
    pnormalize,
    prem,
    pquo_exact,
    pscale,
    pxgcd,
    root_multiplicity,
    squarefree_decomposition,
)
from .series import HahnSeries, _min_trunc

Q = Fraction

MAX_SLICE_STEPS = 20000


@dataclass
class WeierstrassData:
    """f = (xi^s + A_1 xi^{s-1} + ... + A_s) * U, certified on radius delta."""

    s: int
    A: list[HahnSeries]
    U: AnalyticSeries
    delta: Fraction

    def poly_coeffs(self) -> list[HahnSeries]:
        """Coefficients of the monic polynomial, xi-major (degree 0 first)."""
        group = self.U.group
        out = list(reversed(self.A))
        out.append(HahnSeries.from_scalar(group, 1))
        return out

    def poly_series(self) -> AnalyticSeries:
        return AnalyticSeries.from_k_poly(self.poly_coeffs(), self.U.radius)


@dataclass
class DivisionData:
    """g = Q*f + R_0 + R_1 xi + ... + R_{s-1} xi^{s-1}."""

    Q: AnalyticSeries
    R: list[HahnSeries]
    delta: Fraction

    def remainder_series(self) -> AnalyticSeries:
        group = self.Q.group
        coeffs = list(self.R) if self.R else [HahnSeries.from_scalar(group, 0)]
        return AnalyticSeries.from_k_poly(coeffs, self.Q.radius)


def _check_normalized_regular(f: AnalyticSeries):
    g0, p0 = f.top_slice()
    if not g0.is_zero():
        raise DomainError("preparation input must be normalized to gauss norm 1")
    field = _field_of_poly(p0)
    s = root_multiplicity(list(p0), field.zero if hasattr(field, "zero") else Q(0), field)
    if s == pdeg(p0) + 1:
        raise RegularityError("top slice vanishes identically at the jet")
    return s, list(p0), field


def certified_delta(f: AnalyticSeries) -> Fraction:
    """A rational radius with no top-slice root z, 0 < |z| <= delta."""
    return f.unit_radius()


def w_divide(
    g: AnalyticSeries, f: AnalyticSeries, t_order: Exponent, jet_order: int = 16
) -> DivisionData:
    """Weierstrass division of g by f (f regular of degree s, gauss norm 1).

    The identity g = Q f + sum R_i xi^i holds modulo (t^t_order, xi^N).
    """
    s, p0, field = _check_normalized_regular(f)
    delta = certified_delta(f)
    group = f.group
    e = pnormalize(list(p0[s:]))  # f0 = xi^s * e with e(0) != 0
    from .polys import pinv_jet

    n = jet_order
    exact_e = pdeg(e) == 0
    e_inv = pinv_jet(e, 1 if exact_e else n)

    def base_divide(d: list):
        """d = q * f0 + r with deg r < s, exact in the jet ring."""
        r = list(d[:s])
        high = list(d[s:])
        q = pnormalize(pmul(high, e_inv))
        if not exact_e:
            q = q[:n]
        return pnormalize(q), pnormalize(r)

    zero_s = AnalyticSeries.zero(group, f.radius)
    Qs = zero_s
    R = [HahnSeries.from_scalar(group, 0) for _ in range(s)]
    defect = g.truncate_t(t_order)
    steps = 0
    while defect.slices:
        gamma, d = defect.slices[0]
        steps += 1
        if steps > MAX_SLICE_STEPS:
            raise PrecisionError("division slice induction exceeded step cap")
        q, r = base_divide(list(d))
        tg = HahnSeries.t_power(group, gamma)
        if q:
            Qs = Qs + AnalyticSeries.from_slices(
                group, [(gamma, q)], f.radius, None if exact_e else n
            )
        for i, c in enumerate(r):
            if not is_zero(c):
                R[i] = R[i] + tg * c
        correction = AnalyticSeries.from_slices(group, [(gamma, q)], f.radius) * f
        if r:
            correction = correction + AnalyticSeries.from_slices(group, [(gamma, r)], f.radius)
        defect = (defect - correction).truncate_t(t_order)
    Rt = [c.truncate(t_order) for c in R]
    return DivisionData(Qs.truncate_t(t_order), Rt, delta)


def w_prepare(
    f: AnalyticSeries, t_order: Exponent, jet_order: int = 16
) -> WeierstrassData:
    """Weierstrass preparation: f = P * U mod (t^t_order, xi^N).

    Requires gauss norm 1 and finite regularity s at 0.  P is monic of
    degree s with infinitesimal coefficients; U is a unit on the certified
    radius.  The induction adds, per defect slice, the low part to P and the
    high part (divided by xi^s) to U.
    """
    s, p0, field = _check_normalized_regular(f)
    delta = certified_delta(f)
    group = f.group
    e = pnormalize(list(p0[s:]))
    from .polys import pinv_jet

    n = jet_order
    exact_e = pdeg(e) == 0
    xi_ord = None if exact_e else n
    e_inv = pinv_jet(e, 1 if exact_e else n)

    A = [HahnSeries.from_scalar(group, 0) for _ in range(s)]  # A[0] = A_1, ...
    U = AnalyticSeries.from_slices(group, [(group.zero(), e)], f.radius)
    V = AnalyticSeries.from_slices(group, [(group.zero(), e_inv)], f.radius, xi_ord)

    def p_series():
        coeffs = [A[s - 1 - i] for i in range(s)] + [HahnSeries.from_scalar(group, 1)]
        return AnalyticSeries.from_k_poly(coeffs, f.radius)

    steps = 0
    while True:
        W = (V * f).truncate_t(t_order)
        defect = (W - p_series()).truncate_t(t_order)
        if xi_ord is not None:
            defect = defect.truncate_xi(xi_ord)
        if not defect.slices:
            break
        gamma, d = defect.slices[0]
        steps += 1
        if steps > MAX_SLICE_STEPS:
            raise PrecisionError("preparation slice induction exceeded step cap")
        d = list(d)
        r, q = d[:s], d[s:]
        tg = HahnSeries.t_power(group, gamma)
        for i, c in enumerate(r):
            if not is_zero(c):
                # coefficient of xi^i joins A_{s-i}
                A[s - 1 - i] = A[s - 1 - i] + tg * c
        if pnormalize(list(q)):
            corr = AnalyticSeries.from_slices(group, [(gamma, q)], f.radius, xi_ord)
            one = AnalyticSeries.const(group, 1, f.radius)
            U = (U * (one + corr)).truncate_t(t_order)
            V = (V * (one + corr).inverse(t_order, n)).truncate_t(t_order)
            if xi_ord is not None:
                U = U.truncate_xi(xi_ord)
                V = V.truncate_xi(xi_ord)
    return WeierstrassData(s, [a.truncate(t_order) for a in A], U, delta)


def linear_factor_out(g: AnalyticSeries, beta: HahnSeries, t_order: Exponent) -> AnalyticSeries:
    """The cofactor h with g = (xi - beta) h, given g(beta) = 0 mod t^t_order."""
    one = HahnSeries.from_scalar(g.group, 1)
    if not (abs(beta) <= one):
        raise DomainError("factor center must satisfy |beta| <= 1")
    val = g.eval(beta).truncate(t_order)
    if val.terms:
        raise DomainError("the point is not a root at the working truncation")
    coeffs = g.to_xi_major()
    # synthetic division by (xi - beta), highest degree first
    out = []
    acc = HahnSeries.from_scalar(g.group, 0)
    for c in reversed(coeffs):
        acc = (c + acc * beta).truncate(t_order) if out else c
        out.append(acc)
    # out holds the Horner partials; the last is the remainder
    out = list(reversed(out[:-1]))
    h = AnalyticSeries.from_k_poly(out, g.radius, g.xi_order)
    return h.truncate_t(t_order)


def factor_poly_unit(
    f: AnalyticSeries, t_order: Exponent, jet_order: int = 16
) -> tuple[list[HahnSeries], AnalyticSeries]:
    """Split f = P * U on the closed working disc: P monic over K carrying the
    zeros, U a unit.

    The top slice factors as D0 * H0 with D0 collecting (entire) square-free
    factors that have roots in the disc; the coprime splitting lifts slice by
    slice.  A square-free factor straddling the disc boundary is lifted
    whole, so P may carry companion roots outside the disc; U stays a unit
    and real companions lie outside [-1, 1], leaving sign analysis intact.

    Returns (coefficients of P, xi-major, monic; U).
    """
    gamma0, p0 = f.top_slice()
    group = f.group
    fhat = f if gamma0.is_zero() else f._scalar_series_mul(
        HahnSeries.t_power(group, -gamma0)
    )
    field = _field_of_poly(p0)
    alpha = f.radius
    total_in_disc = count_roots_in_disc(list(p0), alpha, field)
    if total_in_disc == 0:
        one = [HahnSeries.from_scalar(group, 1)]
        return one, f
    lc = p0[-1]
    D0: list = [field.one if hasattr(field, "one") else Q(1)]
    H0: list = [lc]
    for u, mult in squarefree_decomposition(list(p0), field):
        cnt = count_roots_in_disc(u, alpha, field)
        target = D0 if cnt > 0 else H0
        for _ in range(mult):
            new = pmul(target == D0 and D0 or H0, u)
            if cnt > 0:
                D0 = pmul(D0, [c for c in u]) if False else new
            else:
                H0 = new
        # fallthrough handled above
    # (loop rewritten below for clarity)
    D0 = [Q(1)]
    H0 = [lc]
    for u, mult in squarefree_decomposition(list(p0), field):
        cnt = count_roots_in_disc(u, alpha, field)
        piece = u
        for _ in range(mult):
            if cnt > 0:
                D0 = pmul(D0, piece)
            else:
                H0 = pmul(H0, piece)
    degD = pdeg(D0)
    # coprime Bezout data for the lift
    h_inv_mod_D, _s, _t = None, None, None
    g_, s_, t_ = pxgcd(H0, D0, field)
    if pdeg(g_) != 0:
        raise DomainError("disc and non-disc parts of the top slice not coprime")
    h_inv_mod_D = prem(s_, D0)

    P = [HahnSeries.make(group, [(group.zero(), c)]) for c in D0]
    H = AnalyticSeries.from_slices(group, [(group.zero(), H0)], f.radius)

    def p_series():
        return AnalyticSeries.from_k_poly(P, f.radius)

    steps = 0
    while True:
        defect = (fhat - p_series() * H).truncate_t(t_order)
        if not defect.slices:
            break
        gamma, d = defect.slices[0]
        steps += 1
        if steps > MAX_SLICE_STEPS:
            raise PrecisionError("factorization lift exceeded step cap")
        d = list(d)
        pc = prem(pmul(d, h_inv_mod_D), D0)
        hc = pquo_exact(
            pnormalize([a - b for a, b in _zip_pad(d, pmul(pc, H0))]), D0
        )
        tg = HahnSeries.t_power(group, gamma)
        for i, c in enumerate(pc):
            if not is_zero(c):
                P[i] = P[i] + tg * c
        if pnormalize(list(hc)):
            H = H + AnalyticSeries.from_slices(group, [(gamma, hc)], f.radius)
    P = [c.truncate(t_order) for c in P]
    U = (H._scalar_series_mul(HahnSeries.t_power(group, gamma0))
         if not gamma0.is_zero() else H)
    return P, U


def _zip_pad(a: list, b: list):
    n = max(len(a), len(b))
    za = a + [Q(0)] * (n - len(a))
    zb = b + [Q(0)] * (n - len(b))
    return zip(za, zb)

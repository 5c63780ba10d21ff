"""Dense univariate polynomial arithmetic over exact coefficient domains.

Polynomials are lists of coefficients indexed by degree (``f[k]`` is the
coefficient of ``x**k``) over a field handle ``K`` passed explicitly, in the
style of low-level computer-algebra kernels.  On top of the ring operations
this module provides exact real-root machinery (Sturm chains, isolation,
square-free decomposition) and an exact count of complex roots in a closed
disc: boundary roots through the reciprocal-pair transform, interior roots
through a Cayley transform and a Cauchy index.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd
from typing import NamedTuple

from .errors import DomainError
from .fieldops import QQ, ComplexField, bounds_of, is_zero, sign_of, tighten

Q = Fraction


# ---------------------------------------------------------------------------
# ring operations


def pnormalize(f: list) -> list:
    while f and is_zero(f[-1]):
        f.pop()
    return f


def pconst(c, K=QQ) -> list:
    c = K.coerce(c)
    return [] if is_zero(c) else [c]


def pdeg(f: list) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(f) - 1


def _zero_like(c):
    return c - c


def padd(f: list, g: list) -> list:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for k, b in enumerate(g):
        out[k] = out[k] + b
    return pnormalize(out)


def pneg(f: list) -> list:
    return [-c for c in f]


def psub(f: list, g: list) -> list:
    return padd(f, pneg(g))


def pscale(f: list, c) -> list:
    if is_zero(c):
        return []
    return pnormalize([a * c for a in f])


def pmul(f: list, g: list) -> list:
    if not f or not g:
        return []
    zero = _zero_like(f[0] * g[0])
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return pnormalize(out)


def pmul_xk(f: list, k: int) -> list:
    if not f or k == 0:
        return list(f)
    return [_zero_like(f[0])] * k + list(f)


def ppow(f: list, n: int, K=QQ) -> list:
    out = [K.one]
    acc = list(f)
    while n:
        if n & 1:
            out = pmul(out, acc)
        n >>= 1
        if n:
            acc = pmul(acc, acc)
    return out


def pdivmod(f: list, g: list) -> tuple[list, list]:
    """Euclidean division f = q*g + r with deg r < deg g, over a field."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    lc = g[-1]
    dg = pdeg(g)
    q = []
    while pdeg(r) >= dg:
        c = r[-1] / lc
        d = pdeg(r) - dg
        if len(q) < d + 1:
            q.extend([_zero_like(c)] * (d + 1 - len(q)))
        q[d] = q[d] + c
        for i, b in enumerate(g):
            r[d + i] = r[d + i] - c * b
        r.pop()
        pnormalize(r)
    return pnormalize(q), pnormalize(r)


def prem(f: list, g: list) -> list:
    return pdivmod(f, g)[1]


def pquo_exact(f: list, g: list) -> list:
    q, r = pdivmod(f, g)
    if r:
        raise DomainError("inexact polynomial division")
    return q


def peval(f: list, x):
    """Horner evaluation; ``x`` may live in any ring acted on by the coefficients."""
    if not f:
        return x - x
    acc = f[-1] + _zero_like(x)
    for c in reversed(f[:-1]):
        acc = acc * x + c
    return acc


def pderiv(f: list) -> list:
    return pnormalize([c * k for k, c in enumerate(f) if k >= 1])


def pinv_jet(f: list, n: int) -> list:
    """Power-series inverse of f modulo x^n; requires f[0] invertible."""
    if not f or is_zero(f[0]):
        raise ZeroDivisionError("jet inversion needs a nonzero constant term")
    inv0 = 1 / f[0]
    out = [inv0]
    zero = _zero_like(f[0])
    for k in range(1, n):
        acc = zero
        for j in range(1, min(k, len(f) - 1) + 1):
            acc = acc + f[j] * out[k - j]
        out.append(-inv0 * acc)
    return pnormalize(out)


def pmonic(f: list) -> list:
    if not f:
        return []
    lc = f[-1]
    return [c / lc for c in f]


def pshift(f: list, c) -> list:
    """Taylor shift: the polynomial x -> f(x + c)."""
    out: list = []
    for a in reversed(f):
        out = padd(padd(pmul_xk(out, 1), pscale(out, c)), [a])
    return pnormalize(out)


def pscale_arg(f: list, c) -> list:
    """The polynomial x -> f(c*x)."""
    out = []
    pw = None
    for k, a in enumerate(f):
        if k == 0:
            out.append(a)
        else:
            pw = c if pw is None else pw * c
            out.append(a * pw)
    return pnormalize(out)


def preverse(f: list) -> list:
    """Coefficient reversal x^n f(1/x); meant for f with nonzero constant term."""
    return pnormalize(list(reversed(f)))


def pcontent_primitive_q(f: list) -> tuple[Fraction, list]:
    """Positive rational content and primitive part, over QQ only."""
    if not f:
        return Q(1), []
    num_gcd = 0
    den_lcm = 1
    for c in f:
        num_gcd = _igcd(num_gcd, abs(c.numerator))
        den_lcm = den_lcm * c.denominator // _igcd(den_lcm, c.denominator)
    content = Q(num_gcd, den_lcm)
    if content == 0:
        return Q(1), list(f)
    return content, [c / content for c in f]


def pgcd(f: list, g: list, K=QQ) -> list:
    """Monic gcd over a field (primitive-part normalization over QQ for size)."""
    a, b = list(f), list(g)
    rational = K == QQ
    if rational:
        if a:
            a = pcontent_primitive_q(a)[1]
        if b:
            b = pcontent_primitive_q(b)[1]
    while b:
        a, b = b, prem(a, b)
        if b and rational:
            b = pcontent_primitive_q(b)[1]
    return pmonic(a)


def squarefree_part(f: list, K=QQ) -> list:
    if pdeg(f) <= 0:
        return pmonic(f)
    return pmonic(pquo_exact(f, pgcd(f, pderiv(f), K)))


def squarefree_decomposition(f: list, K=QQ) -> list[tuple[list, int]]:
    """Yun's algorithm: [(g_i, i)] with f = lc * prod g_i^i, all g_i square-free monic."""
    if pdeg(f) <= 0:
        return []
    f = pmonic(f)
    out = []
    df = pderiv(f)
    a = pgcd(f, df, K)
    b = pquo_exact(f, a)
    c = pquo_exact(df, a)
    i = 1
    while pdeg(b) >= 1:
        d = psub(c, pderiv(b))
        g = pgcd(b, d, K)
        if pdeg(g) >= 1:
            out.append((pmonic(g), i))
            b = pquo_exact(b, g)
            c = pquo_exact(d, g)
        else:
            c = d
        i += 1
    return out


def root_multiplicity(f: list, c, K=QQ) -> int:
    """Multiplicity of the root x = c (0 when f(c) != 0)."""
    c = K.coerce(c) if isinstance(c, (int, Fraction, str)) else c
    m = 0
    g = list(f)
    lin = [-c, K.one]
    while g and is_zero(peval(g, c)):
        g = pquo_exact(g, lin)
        m += 1
    return m


# ---------------------------------------------------------------------------
# Sturm theory


def sturm_chain(f: list, g: list | None = None, K=QQ) -> list[list]:
    """Signed-remainder chain starting (f, g); g defaults to f'."""
    if g is None:
        g = pderiv(f)
    rational = K == QQ
    chain = [list(f), list(g)]
    while chain[-1]:
        nxt = pneg(prem(chain[-2], chain[-1]))
        if nxt and rational:
            nxt = pcontent_primitive_q(nxt)[1]
        chain.append(nxt)
    chain.pop()
    return chain


def _variations(signs: list[int]) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            v += 1
        prev = s
    return v


def _chain_signs_at(chain: list[list], x) -> list[int]:
    return [sign_of(peval(p, x)) if p else 0 for p in chain]


def _chain_signs_at_inf(chain: list[list], positive: bool) -> list[int]:
    out = []
    for p in chain:
        if not p:
            out.append(0)
            continue
        s = sign_of(p[-1])
        if not positive and (pdeg(p) % 2 == 1):
            s = -s
        out.append(s)
    return out


def cauchy_index(A: list, B: list, K=QQ) -> int:
    """Cauchy index of B/A over the whole real line, via the Sturm chain."""
    if not A or not B:
        return 0
    chain = sturm_chain(A, B, K)
    return _variations(_chain_signs_at_inf(chain, False)) - _variations(
        _chain_signs_at_inf(chain, True)
    )


def count_real_roots(f: list, lo=None, hi=None, K=QQ) -> int:
    """Distinct real roots of square-free ``f`` in (lo, hi]; None means infinity.

    The finite endpoints must not be roots of ``f``.
    """
    if pdeg(f) <= 0:
        return 0
    chain = sturm_chain(f, None, K)
    va = (
        _variations(_chain_signs_at_inf(chain, False))
        if lo is None
        else _variations(_chain_signs_at(chain, lo))
    )
    vb = (
        _variations(_chain_signs_at_inf(chain, True))
        if hi is None
        else _variations(_chain_signs_at(chain, hi))
    )
    return va - vb


def count_real_roots_open(g: list, a, b, K=QQ) -> int:
    """Distinct real roots of square-free g in (a, b); endpoints must not be roots."""
    return count_real_roots(g, a, b, K)


# ---------------------------------------------------------------------------
# real-root isolation


class RootInterval(NamedTuple):
    lo: Fraction
    hi: Fraction
    mult: int
    poly: tuple  # the square-free factor owning the root, for refinement

    @property
    def exact(self) -> bool:
        return self.lo == self.hi


def _isolate_squarefree(g: list, left: Fraction, right: Fraction, K) -> list[tuple]:
    """Isolating (a, b) pairs for the roots of square-free g in [left, right].

    Pairs with a == b are exact roots; for a < b the open interval (a, b)
    contains exactly one root and g(a), g(b) != 0.  Probe points that happen
    to hit a root are peeled off by deflation, which keeps the Sturm counts
    free of endpoint special cases.
    """
    exact = []
    g = list(g)
    while pdeg(g) >= 1:
        hit = None
        for pt in (left, right):
            if is_zero(peval(g, pt)):
                hit = pt
                break
        if hit is None:
            chain = sturm_chain(g, None, K)

            def V(x):
                return _variations(_chain_signs_at(chain, x))

            intervals = []
            stack = [(left, right, V(left), V(right))]
            while stack and hit is None:
                a, b, va, vb = stack.pop()
                n = va - vb
                if n == 0:
                    continue
                if n == 1:
                    intervals.append((a, b))
                    continue
                mid = (a + b) / 2
                if is_zero(peval(g, mid)):
                    hit = mid
                    break
                vm = V(mid)
                stack.append((a, mid, va, vm))
                stack.append((mid, b, vm, vb))
            if hit is None:
                out = exact + intervals
                # keep intervals clear of previously peeled exact roots
                for r, _ in exact:
                    for i, (a, b) in enumerate(out):
                        while a < r < b:
                            a, b = refine_isolating_interval(g, a, b, K)
                        out[i] = (a, b)
                out.sort()
                return out
        exact.append((hit, hit))
        g = pquo_exact(g, [-K.coerce(hit), K.one])
    return sorted(exact)


def refine_isolating_interval(g: list, a: Fraction, b: Fraction, K=QQ):
    """One bisection step for an isolating interval (a, b) of square-free g."""
    if a == b:
        return a, b
    mid = (a + b) / 2
    vm = peval(g, mid)
    if is_zero(vm):
        return mid, mid
    if sign_of(peval(g, a)) * sign_of(vm) < 0:
        return a, mid
    return mid, b


def isolate_real_roots(
    f: list, K=QQ, lo: Fraction | None = None, hi: Fraction | None = None
) -> list[RootInterval]:
    """Isolate the real roots of ``f`` in [lo, hi] (default: everywhere).

    Returns sorted, pairwise-disjoint ``RootInterval`` records carrying the
    multiplicity of the root in ``f`` and the square-free factor to refine
    against.
    """
    if pdeg(f) < 1:
        return []
    bnd = root_bound(f)
    left = -bnd if lo is None else Q(lo)
    right = bnd if hi is None else Q(hi)
    if left > right:
        return []
    found: list[RootInterval] = []
    for g, mult in squarefree_decomposition(f, K):
        for a, b in _isolate_squarefree(g, left, right, K):
            found.append(RootInterval(a, b, mult, tuple(g)))
    found.sort(key=lambda t: (t.lo, t.hi))
    # roots of distinct square-free factors are distinct: refine until disjoint
    changed = True
    while changed:
        changed = False
        for i in range(len(found) - 1):
            x, y = found[i], found[i + 1]
            overlap = x.hi > y.lo or (x.exact and y.lo <= x.lo <= y.hi and not y.exact)
            if x.exact and y.exact:
                overlap = False
            if overlap:
                if not x.exact:
                    a, b = refine_isolating_interval(list(x.poly), x.lo, x.hi, K)
                    found[i] = RootInterval(a, b, x.mult, x.poly)
                if not y.exact:
                    a, b = refine_isolating_interval(list(y.poly), y.lo, y.hi, K)
                    found[i + 1] = RootInterval(a, b, y.mult, y.poly)
                changed = True
        if changed:
            found.sort(key=lambda t: (t.lo, t.hi))
    return found


def rational_roots(f: list) -> list[tuple[Fraction, int]]:
    """All rational roots of f over QQ, with multiplicities, sorted."""
    if pdeg(f) < 1:
        return []
    den = 1
    for c in f:
        den = den * c.denominator // _igcd(den, c.denominator)
    zf = [int(c * den) for c in f]
    out = []
    shift = 0
    while zf and zf[0] == 0:
        zf = zf[1:]
        shift += 1
    if shift:
        out.append((Q(0), shift))
    if len(zf) <= 1:
        return out
    a0, an = abs(zf[0]), abs(zf[-1])
    if a0 > 10**12 or an > 10**12:
        return out  # callers treat missed rational roots as generic algebraic ones
    for p in _divisors(a0):
        for q in _divisors(an):
            for cand in (Q(p, q), Q(-p, q)):
                m = root_multiplicity(f, cand)
                if m:
                    out.append((cand, m))
    return sorted(set(out))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return [1]
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# bounds


def bounds_of_abs(x) -> tuple[Fraction, Fraction]:
    """Rational bounds for |x|, x in a real domain (refines until sign-definite)."""
    lo, hi = bounds_of(x)
    if lo <= 0 <= hi and not (lo == hi == 0):
        if sign_of(x) == 0:
            return Q(0), Q(0)
        width = (hi - lo) / 2
        while True:
            tighten(x, width)
            lo, hi = bounds_of(x)
            if lo > 0 or hi < 0:
                break
            width /= 2
    if lo >= 0:
        return lo, hi
    return -hi, -lo


def root_bound(f: list) -> Fraction:
    """A rational B with every complex root of f inside |z| <= B (Cauchy bound)."""
    if pdeg(f) < 1:
        return Q(1)
    lo_lead, _ = bounds_of_abs(f[-1])
    m = Q(0)
    for c in f[:-1]:
        _, hi = bounds_of_abs(c)
        if hi > m:
            m = hi
    return Q(1) + m / lo_lead


# ---------------------------------------------------------------------------
# exact complex root counting in a closed disc


def _cayley_parts(q: list, K) -> tuple[list, list]:
    """Real and imaginary parts of (1-it)^n q((1+it)/(1-it)) as polynomials in t."""
    CK = K if isinstance(K, ComplexField) else ComplexField(K)
    n = pdeg(q)
    plus = [CK.one, CK.i]
    minus = [CK.one, -CK.i]
    minus_pows = [[CK.one]]
    for _ in range(n):
        minus_pows.append(pmul(minus_pows[-1], minus))
    F: list = []
    pk = [CK.one]
    for k, c in enumerate(q):
        ck = CK.coerce(c)
        if ck:
            F = padd(F, pscale(pmul(pk, minus_pows[n - k]), ck))
        if k < n:
            pk = pmul(pk, plus)
    A = pnormalize([c.re for c in F])
    B = pnormalize([c.im for c in F])
    return A, B


def count_roots_open_unit_disc(q: list, K=QQ) -> int:
    """Roots of q with |z| < 1, with multiplicity; q must have none with |z| = 1."""
    n = pdeg(q)
    if n < 1:
        return 0
    A, B = _cayley_parts(q, K)
    base = K.base if isinstance(K, ComplexField) else K
    if pdeg(A) < n:
        A, B = pneg(B), A  # rotate F by i; the roots do not move
    if pdeg(A) < n:
        raise DomainError("degenerate Cayley transform (root at z = -1?)")
    cnt2 = n - cauchy_index(A, B, base)
    if cnt2 % 2 != 0:
        raise DomainError("parity failure in disc count (root on |z| = 1?)")
    return cnt2 // 2


def _count_unit_circle_roots(q: list, K=QQ) -> tuple[int, list]:
    """(number of roots of q with |z| = 1, with multiplicity; gcd(q, reverse q)).

    Requires real coefficients and q(0) != 0.  The circle roots of q are
    exactly the circle roots of s = gcd(q, rev q) with the same multiplicity,
    and the off-circle roots of s come in reciprocal pairs split evenly
    between inside and outside.
    """
    s = pgcd(q, preverse(q), K)
    if pdeg(s) < 1:
        return 0, s
    a = root_multiplicity(s, K.one, K)
    b = root_multiplicity(s, -K.one, K)
    s1 = list(s)
    for _ in range(a):
        s1 = pquo_exact(s1, [-K.one, K.one])
    for _ in range(b):
        s1 = pquo_exact(s1, [K.one, K.one])
    if pdeg(s1) % 2 != 0:
        raise DomainError("odd degree in palindromic circle factor")
    m = pdeg(s1) // 2
    circle_pairs = 0
    if m >= 1:
        # z^k + z^-k as polynomials in w = z + 1/z
        pks = [[K.from_int(2)], [K.zero, K.one]]
        for _ in range(2, m + 1):
            pks.append(psub(pmul([K.zero, K.one], pks[-1]), pks[-2]))
        S = pconst(s1[m], K)
        for k in range(1, m + 1):
            S = padd(S, pscale(pks[k], s1[m + k]))
        two = K.from_int(2)
        for g, mult in squarefree_decomposition(S, K):
            circle_pairs += mult * count_real_roots_open(g, -two, two, K)
    return a + b + 2 * circle_pairs, s


def count_roots_in_disc(p: list, radius, K=QQ) -> int:
    """Number of complex roots of p with |z| <= radius, with multiplicity; exact.

    ``p`` must be nonzero with coefficients in a real ordered domain and
    ``radius`` a positive rational.  The disc is closed: boundary roots count.

    >>> count_roots_in_disc([Q(0), Q(1)], Q(1))
    1
    >>> count_roots_in_disc([Q(1), Q(0), Q(1)], Q(2))
    2
    >>> count_roots_in_disc([Q(9), Q(0), Q(1)], Q(2))
    0
    """
    if not p:
        raise DomainError("root count of the zero polynomial")
    radius = Q(radius)
    if radius <= 0:
        raise DomainError("disc radius must be positive")
    p = pnormalize(list(p))
    m0 = 0
    while is_zero(p[0]):
        p = p[1:]
        m0 += 1
    if pdeg(p) < 1:
        return m0
    q = pscale_arg(p, K.coerce(radius))
    on_circle, s = _count_unit_circle_roots(q, K)
    interior_of_s = (pdeg(s) - on_circle) // 2 if pdeg(s) >= 1 else 0
    q1 = pquo_exact(q, s) if pdeg(s) >= 1 else q
    return m0 + on_circle + interior_of_s + count_roots_open_unit_disc(q1, K)


def has_root_on_circle(p: list, radius, K=QQ) -> bool:
    """Whether p has a root with |z| exactly equal to the given radius."""
    p = pnormalize(list(p))
    while p and is_zero(p[0]):
        p = p[1:]
    if pdeg(p) < 1:
        return False
    q = pscale_arg(p, K.coerce(Q(radius)))
    return _count_unit_circle_roots(q, K)[0] > 0


def smallest_nonzero_root_radius(p: list, K=QQ) -> Fraction:
    """A positive rational strictly below every nonzero root modulus of p."""
    p = pnormalize(list(p))
    while p and is_zero(p[0]):
        p = p[1:]
    if pdeg(p) < 1:
        return Q(1)
    lo0, _ = bounds_of_abs(p[0])
    m = Q(0)
    for c in p[1:]:
        _, hi = bounds_of_abs(c)
        if hi > m:
            m = hi
    if m == 0:
        return Q(1)
    r = lo0 / (lo0 + m) / 2  # Cauchy-type lower bound on nonzero root moduli
    while count_roots_in_disc(p, r, K) > 0:
        r /= 2
    return r


def pxgcd(f: list, g: list, K=QQ) -> tuple[list, list, list]:
    """Extended Euclid over a field: returns (h, s, t) with s*f + t*g = h = gcd."""
    r0, r1 = list(f), list(g)
    one = K.one
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while r1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
        t0, t1 = t1, psub(t0, pmul(q, t1))
    if not r0:
        return [], [], []
    inv = one / r0[-1]
    return pscale(r0, inv), pscale(s0, inv), pscale(t0, inv)

"""Exact scalar arithmetic: rationals, quadratic surds and ray-positivity certificates.

Everything that feeds a verdict is computed in exact arithmetic over Q
(arbitrary-precision integers underneath).  Floating point never enters a
decision anywhere in this package; the only approximate output is decimal
rendering for reports, and that goes through integer square roots.

Three layers live here:

* ``Rat`` -- an alias for :class:`fractions.Fraction` (normalized, positive
  denominator, gcd 1 -- exactly the invariants we need).
* ``QuadExpr`` -- numbers of the form p + q*sqrt(s) with rational p, q and
  rational s >= 0.  Signs, floors and decimal brackets are all decided by
  case analysis and integer square roots, never by float evaluation.
* ``Poly`` + :func:`poly_positive_on_ray` -- certificates that a rational
  polynomial is strictly positive on a ray [t0, oo).  The cheap certificate
  (shift to t0 and inspect coefficients) is tried first; Sturm sequences
  are the exact fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Iterable, Union

Rat = Fraction

RatLike = Union[Fraction, int, str]


def as_rat(x: RatLike) -> Fraction:
    """Coerce an int, Fraction or exact string ("887/1000", "0.887") to Fraction.

    Floats are rejected on purpose: their binary rounding would silently
    poison exact comparisons.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def rat_cmp(x: RatLike, y: RatLike) -> int:
    """Exact trichotomy: -1, 0 or +1 as x <, =, > y (integer cross-multiplication)."""
    x, y = as_rat(x), as_rat(y)
    lhs = x.numerator * y.denominator
    rhs = y.numerator * x.denominator
    return (lhs > rhs) - (lhs < rhs)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sqrt_bounds(s: Fraction, digits: int) -> tuple[Fraction, Fraction]:
    """Rational bracket lo <= sqrt(s) < hi with hi - lo <= 10**-digits."""
    n, d = s.numerator, s.denominator
    scale = 10**digits
    a = isqrt(n * d * scale * scale)
    den = d * scale
    return Fraction(a, den), Fraction(a + 1, den)


@dataclass(frozen=True)
class QuadExpr:
    """Exact number p + q*sqrt(s), rational p and q, rational radicand s >= 0."""

    p: Fraction
    q: Fraction = Fraction(0)
    s: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        p, q, s = as_rat(self.p), as_rat(self.q), as_rat(self.s)
        if s < 0:
            raise ValueError(f"negative radicand: {s}")
        if q == 0 or s == 0:
            q, s = Fraction(0), Fraction(0)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "s", s)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}.

        Cases on the signs of p and q; only when they disagree is the
        comparison p^2 vs q^2*s needed (both sides of p = -q*sqrt(s) are
        then nonnegative, so squaring is legitimate).
        """
        if self.q == 0:
            return _sign(self.p)
        if self.p == 0:
            return _sign(self.q)  # s > 0 here, so sqrt(s) > 0
        sp, sq = _sign(self.p), _sign(self.q)
        if sp == sq:
            return sp
        d = self.p * self.p - self.q * self.q * self.s
        if d == 0:
            return 0
        return sp if d > 0 else sq

    # -- arithmetic (closed only for a shared radicand) --------------------

    def _coerce(self, other) -> "QuadExpr | None":
        if isinstance(other, QuadExpr):
            return other
        try:
            return QuadExpr(as_rat(other))
        except TypeError:
            return None

    def __add__(self, other) -> "QuadExpr":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.q != 0 and o.q != 0 and self.s != o.s:
            raise ValueError(f"radicands differ: {self.s} vs {o.s}")
        s = self.s if self.q != 0 else o.s
        return QuadExpr(self.p + o.p, self.q + o.q, s)

    __radd__ = __add__

    def __neg__(self) -> "QuadExpr":
        return QuadExpr(-self.p, -self.q, self.s)

    def __sub__(self, other) -> "QuadExpr":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "QuadExpr":
        return (-self) + other

    def __mul__(self, other) -> "QuadExpr":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.q != 0 and o.q != 0:
            if self.s != o.s:
                raise ValueError(f"radicands differ: {self.s} vs {o.s}")
            return QuadExpr(
                self.p * o.p + self.q * o.q * self.s,
                self.p * o.q + self.q * o.p,
                self.s,
            )
        s = self.s if self.q != 0 else o.s
        return QuadExpr(self.p * o.p, self.p * o.q + self.q * o.p, s)

    __rmul__ = __mul__

    def cmp_rat(self, r: RatLike) -> int:
        """Exact sign of self - r."""
        return (self - as_rat(r)).sign()

    def bounds(self, digits: int = 12) -> tuple[Fraction, Fraction]:
        """Rational bracket lo <= value <= hi with width <= |q| * 10**-digits."""
        if self.q == 0:
            return self.p, self.p
        lo_s, hi_s = _sqrt_bounds(self.s, digits)
        a, b = self.p + self.q * lo_s, self.p + self.q * hi_s
        return (a, b) if a <= b else (b, a)

    def floor(self) -> int:
        """Exact floor, decided by sign tests (the bracket only seeds the search)."""
        if self.q == 0:
            return self.p.numerator // self.p.denominator
        digits = 2 + len(str(abs(self.q.numerator) // self.q.denominator))
        lo, _ = self.bounds(digits)
        n = lo.numerator // lo.denominator
        while self.cmp_rat(n + 1) >= 0:
            n += 1
        while self.cmp_rat(n) < 0:
            n -= 1
        return n

    def approx_str(self, places: int = 6) -> str:
        """Decimal rendering to `places` digits (approximate, display only)."""
        lo, hi = self.bounds(places + 6)
        return decimal_str((lo + hi) / 2, places)

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        return f"{self.p} + {self.q}*sqrt({self.s})"


def quad_sign(e: QuadExpr) -> int:
    """Exact sign of p + q*sqrt(s); see :meth:`QuadExpr.sign`."""
    return e.sign()


def quad_floor_milli(e: QuadExpr) -> Fraction:
    """Largest n/1000 (n a nonnegative integer) with n/1000 <= e.

    This is the 3-decimal round-down used throughout the constants
    pipeline.  Requires e >= 0.
    """
    if e.sign() < 0:
        raise ValueError("quad_floor_milli requires a nonnegative input")
    n = (e * 1000).floor()
    return Fraction(n, 1000)


def decimal_str(x: RatLike, places: int = 6) -> str:
    """Fixed-point decimal string of a rational, rounded half away from zero."""
    x = as_rat(x)
    sign = "-" if x < 0 else ""
    scaled = abs(x) * 10**places
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r >= scaled.denominator:
        q += 1
    digits = str(q).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def frac_str(x: RatLike) -> str:
    """Canonical "num/den" rendering of a rational (always with denominator)."""
    x = as_rat(x)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Polynomials over Q and positivity on rays
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial over Q, coefficients ascending, trailing zeros stripped."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RatLike]):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, t: RatLike) -> Fraction:
        t = as_rat(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def scale(self, r: RatLike) -> "Poly":
        r = as_rat(r)
        return Poly(r * c for c in self.coeffs)

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def shift(self, t0: RatLike) -> "Poly":
        """Taylor shift: the polynomial u -> p(t0 + u)."""
        t0 = as_rat(t0)
        out = [Fraction(0)] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j in range(k + 1):
                out[j] += c * comb(k, j) * t0 ** (k - j)
        return Poly(out)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = "1" if (c == 1 and i > 0) else str(c)
            if i == 1:
                term += "*t"
            elif i > 1:
                term += f"*t^{i}"
            parts.append(term)
        return " + ".join(parts)


def _poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a.coeffs) - len(b.coeffs) + 1, 1)
    rem = list(a.coeffs)
    db, lb = b.degree, b.lc()
    while len(rem) - 1 >= db and any(c != 0 for c in rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        k = len(rem) - 1 - db
        f = rem[-1] / lb
        q[k] = f
        for i, c in enumerate(b.coeffs):
            rem[k + i] -= f * c
        rem.pop()
    return Poly(q), Poly(rem)


def _poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a.is_zero:
        return a
    return a.scale(1 / a.lc())


def _squarefree(p: Poly) -> Poly:
    g = _poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p
    q, r = _poly_divmod(p, g)
    assert r.is_zero
    return q


def _sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        _, r = _poly_divmod(chain[-2], chain[-1])
        if r.is_zero:
            break
        chain.append(-r)
    return [q for q in chain if not q.is_zero]


def _variations(values: Iterable[Fraction]) -> int:
    nz = [v for v in values if v != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if (a > 0) != (b > 0))


def _variations_at(chain: list[Poly], x: Fraction) -> int:
    return _variations([q(x) for q in chain])


def _variations_at_inf(chain: list[Poly]) -> int:
    return _variations([q.lc() for q in chain])


def count_roots_above(p: Poly, t0: RatLike) -> int:
    """Number of distinct real roots of p in the open ray (t0, oo)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    sf = _squarefree(p)
    chain = _sturm_chain(sf)
    return _variations_at(chain, as_rat(t0)) - _variations_at_inf(chain)


def _count_roots_in(chain: list[Poly], a: Fraction, b: Fraction) -> int:
    # distinct roots in the half-open interval (a, b]
    return _variations_at(chain, a) - _variations_at(chain, b)


@dataclass(frozen=True)
class PolyRayResult:
    """Outcome of a strict-positivity query "p(t) > 0 for all t >= t0".

    ``positive`` carries the verdict.  A positive verdict comes with a
    checkable certificate: either every coefficient of the shift p(t0+u)
    is nonnegative with positive constant term (``method="shift-coeffs"``),
    or p(t0) > 0 and the Sturm chain counts zero roots on (t0, oo)
    (``method="sturm"``).  A negative verdict carries a rational point
    where p <= 0 when one exists, plus an isolating interval for the
    first offending root otherwise.
    """

    positive: bool
    poly: Poly
    t0: Fraction
    method: str
    shifted: Poly | None = None
    counterexample: Fraction | None = None
    counterexample_interval: tuple[Fraction, Fraction] | None = None

    def recheck(self, t: RatLike) -> bool:
        """Re-evaluate the claim at a single rational point t >= t0."""
        t = as_rat(t)
        if t < self.t0:
            raise ValueError("point below the ray start")
        return self.poly(t) > 0


def _isolate_first_root(sf: Poly, chain: list[Poly], t0: Fraction) -> tuple[Fraction, Fraction]:
    hi = t0 + 1
    while _count_roots_in(chain, t0, hi) == 0:
        hi = t0 + (hi - t0) * 2
    lo = t0
    while hi - lo > Fraction(1, 1 << 12):
        mid = (lo + hi) / 2
        if _count_roots_in(chain, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def _find_nonpositive_point(
    p: Poly, t0: Fraction, lo: Fraction, hi: Fraction
) -> Fraction | None:
    for cand in (hi, (lo + hi) / 2, hi + 1):
        if cand >= t0 and p(cand) <= 0:
            return cand
    # walk outward: past an odd-order root the sign flip must show up
    step = Fraction(1)
    t = hi
    for _ in range(64):
        t = t + step
        if p(t) <= 0:
            return t
        step *= 2
    return None


def poly_positive_on_ray(p: Poly, t0: RatLike) -> PolyRayResult:
    """Decide whether p(t) > 0 for every t >= t0, exactly.

    Strategy: substitute t = t0 + u and inspect coefficients (cheap,
    certificate-producing); fall back to Sturm root counting on (t0, oo).
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    t0 = as_rat(t0)
    shifted = p.shift(t0)
    if shifted.coeffs[0] > 0 and all(c >= 0 for c in shifted.coeffs):
        return PolyRayResult(True, p, t0, "shift-coeffs", shifted=shifted)
    if p(t0) <= 0:
        return PolyRayResult(False, p, t0, "endpoint", counterexample=t0)
    sf = _squarefree(p)
    chain = _sturm_chain(sf)
    n_roots = _variations_at(chain, t0) - _variations_at_inf(chain)
    if n_roots == 0:
        return PolyRayResult(True, p, t0, "sturm")
    lo, hi = _isolate_first_root(sf, chain, t0)
    point = _find_nonpositive_point(p, t0, lo, hi)
    return PolyRayResult(
        False, p, t0, "sturm", counterexample=point, counterexample_interval=(lo, hi)
    )

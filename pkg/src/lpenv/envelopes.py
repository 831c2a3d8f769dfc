"""Closed-form envelopes for the sharp L^p triangle inequality.

Everything lives on the convex cone

    Omega = {(x, y, z) : x, y >= 0, 0 <= z <= sqrt(x*y)}

whose points hold the norm triple (|f|_p^p, |g|_p^p, |fg|_{p/2}^{p/2}).
Two one-homogeneous functions F_p and G_p bound |f+g|_p^p from above and
below; which is which depends on the exponent regime.
"""

import math
from dataclasses import dataclass, field

from .powers import INF, xpow

P_MIN = 1e-3

# Relative slack allowed on the Cauchy-Schwarz constraint z <= sqrt(x*y)
# for triples computed from floating-point norms.
EPS_CS = 1e-9

CONCAVE_F = "concave_F"  # p in (0,1] u [2,inf): F is the concave envelope
CONCAVE_G = "concave_G"  # p in (-inf,0) u (1,2): G is the concave envelope


@dataclass(frozen=True)
class Exponent:
    """A validated nonzero exponent with its regime classification."""

    p: float
    regime: str = field(init=False)
    is_one: bool = field(init=False)
    is_two: bool = field(init=False)

    def __post_init__(self):
        p = self.p
        if not isinstance(p, (int, float)) or not math.isfinite(p):
            raise ValueError("exponent must be a finite real, got %r" % (p,))
        p = float(p)
        if abs(p) < P_MIN:
            raise ValueError(
                "exponent magnitude below %g is rejected (got %r)" % (P_MIN, p)
            )
        object.__setattr__(self, "p", p)
        if 0.0 < p <= 1.0 or p >= 2.0:
            object.__setattr__(self, "regime", CONCAVE_F)
        else:
            object.__setattr__(self, "regime", CONCAVE_G)
        object.__setattr__(self, "is_one", p == 1.0)
        object.__setattr__(self, "is_two", p == 2.0)

    @property
    def f_is_concave(self):
        return self.regime == CONCAVE_F


def classify(p):
    """Validate ``p`` and classify its envelope regime."""
    return Exponent(p)


@dataclass(frozen=True)
class ConeTriple:
    """A point of the cone Omega.

    z is clamped onto the boundary sqrt(x*y) when it exceeds it by at most
    EPS_CS (relative to the natural scale of the triple); beyond that the
    triple is rejected.
    """

    x: float
    y: float
    z: float

    def __post_init__(self):
        x, y, z = float(self.x), float(self.y), float(self.z)
        for name, val in (("x", x), ("y", y), ("z", z)):
            if not math.isfinite(val) or val < 0:
                raise ValueError(
                    "%s must be a finite nonnegative real, got %r" % (name, val)
                )
        bound = math.sqrt(x * y)
        if z > bound:
            slack = EPS_CS * max(bound, 0.5 * (x + y))
            if z - bound > slack:
                raise ValueError(
                    "z=%r violates Cauchy-Schwarz: sqrt(x*y)=%r" % (z, bound)
                )
            z = bound
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    @property
    def ratios(self):
        return DerivedRatios.of(self)


@dataclass(frozen=True)
class DerivedRatios:
    """Normalized coordinates of a cone point.

    gamma (= w) is the overlap ratio 2z/(x+y), zero at the origin.
    v is min{x/z, y/z, 1}, set to 1 on {z = 0}; c_p coincides with v.
    """

    gamma: float
    v: float
    c_p: float

    @property
    def w(self):
        return self.gamma

    @staticmethod
    def of(t):
        s = t.x + t.y
        if s == 0.0:
            gamma = 0.0
        else:
            gamma = min(2.0 * t.z / s, 1.0)
        if t.z > 0.0:
            v = min(t.x / t.z, t.y / t.z, 1.0)
            c_p = min(t.x, t.y, t.z) / t.z
        else:
            v = 1.0
            c_p = 1.0
        return DerivedRatios(gamma=gamma, v=v, c_p=c_p)


def eval_F(p, t):
    """The horizontal-chord envelope F_p at a cone point.

    F_p = (x+y)/2 * ((1+sqrt(1-w^2))^(1/p) + (1-sqrt(1-w^2))^(1/p))^p,
    with sqrt(1-w^2) computed as sqrt((1-w)(1+w)) to keep relative accuracy
    near the elliptical boundary w -> 1, and 1 - sqrt(1-w^2) computed as
    w^2 / (1 + sqrt(1-w^2)) to avoid cancellation as w -> 0.
    """
    s = t.x + t.y
    if s == 0.0:
        return 0.0
    w = t.ratios.w
    r = math.sqrt(max(0.0, (1.0 - w) * (1.0 + w)))
    inv = 1.0 / p.p
    bracket = xpow(1.0 + r, inv) + xpow(w * w / (1.0 + r), inv)
    return 0.5 * s * xpow(bracket, p.p)


def eval_G(p, t):
    """The corner-fan envelope G_p at a cone point.

    For p > 0: x + y + ((v^(1/p) + v^(-1/p))^p - v - 1/v) * z.
    For p < 0: (v^(1/p) + v^(-1/p))^p * z.
    """
    if t.z == 0.0:
        return t.x + t.y if p.p > 0 else 0.0
    v = t.ratios.v
    inv = 1.0 / p.p
    coef = xpow(xpow(v, inv) + xpow(v, -inv), p.p)
    if p.p > 0:
        return t.x + t.y + (coef - v - 1.0 / v) * t.z
    return coef * t.z


def upper_envelope(p, t):
    """The concave envelope: pointwise supremum of |f+g|_p^p at the triple."""
    return eval_F(p, t) if p.f_is_concave else eval_G(p, t)


def lower_envelope(p, t):
    """The convex envelope: pointwise infimum of |f+g|_p^p at the triple."""
    return eval_G(p, t) if p.f_is_concave else eval_F(p, t)


def carlen_bound(p, t):
    """The (1 + Gamma^(2/p))^(p-1) * (x+y) reference bound.

    An upper bound on |f+g|_p^p for p in (0,1] u [2,inf), a lower bound for
    p in (-inf,0) u (1,2). Gamma := 0 at the origin, giving 0 there.
    """
    s = t.x + t.y
    if s == 0.0:
        return 0.0
    gamma = t.ratios.gamma
    coef = xpow(1.0 + xpow(gamma, 2.0 / p.p), p.p - 1.0)
    return coef * s


@dataclass(frozen=True)
class BoundReport:
    """Comparison of an actual |f+g|_p^p against every applicable bound.

    Margins are signed relative slacks (scale = max(1, |actual|)); a
    nonnegative margin means the corresponding inequality holds.
    """

    p: float
    triple: ConeTriple
    actual: float
    upper: float
    lower: float
    carlen: float
    margins: dict

    @staticmethod
    def at(p, t, actual):
        upper = upper_envelope(p, t)
        lower = lower_envelope(p, t)
        carlen = carlen_bound(p, t)
        scale = max(1.0, abs(actual))
        margins = {
            "upper": (upper - actual) / scale,
            "lower": (actual - lower) / scale,
        }
        # carlen bounds from above in the F-concave regime, below otherwise
        if p.f_is_concave:
            margins["carlen"] = (carlen - actual) / scale
        else:
            margins["carlen"] = (actual - carlen) / scale
        return BoundReport(
            p=p.p, triple=t, actual=actual, upper=upper, lower=lower,
            carlen=carlen, margins=margins,
        )

    def ok(self, tol=1e-9):
        return all(m >= -tol for m in self.margins.values())

    def to_dict(self):
        return {
            "p": self.p,
            "triple": {"x": self.triple.x, "y": self.triple.y, "z": self.triple.z},
            "actual": self.actual,
            "upper": self.upper,
            "lower": self.lower,
            "carlen": self.carlen,
            "margins": dict(self.margins),
        }


def two_point(q, x):
    """Both sides of the two-point inequality at parameters (q, x).

    lhs = ((1+x)^q + (1-x)^q)/2, rhs = ((1 + (1-x^2)^q)/2)^(1-q).
    lhs <= rhs for q in (-inf, 1/2] u [1, inf); reversed on [1/2, 1).
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1], got %r" % (x,))
    lhs = 0.5 * (xpow(1.0 + x, q) + xpow(1.0 - x, q))
    inner = 0.5 * (1.0 + xpow((1.0 - x) * (1.0 + x), q))
    rhs = xpow(inner, 1.0 - q)
    return lhs, rhs


def scalar_three_term(a, b, p):
    """Both sides of (a+b)^p vs a^p + b^p + (2^p - 2)(ab)^(p/2).

    lhs <= rhs for p in [1, 2]; reversed for p in (0,1] u [2,inf).
    """
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    pp = p.p
    lhs = xpow(a + b, pp)
    # (ab)^(p/2) as a^(p/2) * b^(p/2): immune to underflow of the product
    overlap = xpow(a, 0.5 * pp) * xpow(b, 0.5 * pp)
    rhs = xpow(a, pp) + xpow(b, pp) + (2.0 ** pp - 2.0) * overlap
    return lhs, rhs


def sum_bound(moments, overlaps, p):
    """Many-function bound: sum_j |f_j|_p^p + (2^p - 2) * sum_{i<j} overlaps.

    ``moments`` is the per-function list of p-th power norms, ``overlaps``
    the already-summed pairwise overlap total. Upper bound on
    |sum f_j|_p^p for p in [1,2], lower bound for p in (0,1] u [2,inf).
    Rejects p < 0, where the bound fails for three or more functions.
    """
    if p.p < 0:
        raise ValueError("the many-function bound requires p > 0")
    total = math.fsum(moments)
    if not math.isfinite(total) or not math.isfinite(float(overlaps)):
        raise ValueError("both sums must be finite")
    return total + (2.0 ** p.p - 2.0) * float(overlaps)

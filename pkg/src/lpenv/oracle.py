"""Independent numerical envelopes on the cross-section D = {x + y = 2}.

In (s, z) coordinates (x = 1+s, y = 1-s) the cross-section is the upper
half-disc. The boundary data is discretized into nodes; the concave
(convex) envelope of the node values is read off the upper (lower) facets
of the 3D convex hull of the lifted nodes. This under- (over-) estimates
the true envelope, converging as the resolution grows, and never consults
the closed forms it is used to check.
"""

import math

import numpy as np
from scipy.spatial import ConvexHull

from .envelopes import ConeTriple, lower_envelope, upper_envelope
from .extremal import extremal_F, extremal_G
from .powers import xpow
from .stepfun import sum_norm


def boundary_value(p, s):
    """phi_p on the semicircle: ((1+s)^(1/p) + (1-s)^(1/p))^p."""
    inv = 1.0 / p.p
    return xpow(xpow(1.0 + s, inv) + xpow(1.0 - s, inv), p.p)


class BoundaryCurve:
    """Discretized boundary data of the half-disc D.

    n nodes uniform in angle on the semicircle, the two diameter
    endpoints, and n//4 interior diameter nodes (value x+y = 2 for p > 0
    and 0 for p < 0, the +inf conventions pre-applied).
    """

    def __init__(self, p, n):
        if n < 16:
            raise ValueError("resolution must be at least 16")
        theta = np.pi * (np.arange(1, n + 1)) / (n + 1)
        semi_s = np.cos(theta)
        semi_z = np.sin(theta)
        semi_v = np.array([boundary_value(p, s) for s in semi_s])
        diam_s = np.concatenate(([-1.0, 1.0], np.linspace(-1.0, 1.0, n // 4 + 2)[1:-1]))
        diam_z = np.zeros_like(diam_s)
        diam_v = np.full_like(diam_s, 2.0 if p.p > 0 else 0.0)
        self.p = p
        self.n = n
        self.nodes = np.column_stack(
            (np.concatenate((semi_s, diam_s)), np.concatenate((semi_z, diam_z)))
        )
        self.values = np.concatenate((semi_v, diam_v))


class EnvelopeOracle:
    """Concave or convex envelope of a BoundaryCurve's node data."""

    def __init__(self, p, kind, n=512):
        if kind not in ("concave", "convex"):
            raise ValueError("kind must be 'concave' or 'convex'")
        curve = BoundaryCurve(p, n)
        self.curve = curve
        self.kind = kind
        pts = np.column_stack((curve.nodes, curve.values))
        self._planes = self._facet_planes(pts, kind)

    @staticmethod
    def _facet_planes(pts, kind):
        # Flat data (p = 1, 2) breaks qhull; fall back to a least-squares
        # plane when the points are exactly coplanar.
        coeff, res, _, _ = np.linalg.lstsq(
            np.column_stack((pts[:, :2], np.ones(len(pts)))), pts[:, 2], rcond=None
        )
        fitted = pts[:, :2] @ coeff[:2] + coeff[2]
        if np.max(np.abs(fitted - pts[:, 2])) < 1e-9 * max(1.0, np.max(np.abs(pts[:, 2]))):
            return np.array([[coeff[0], coeff[1], coeff[2]]])
        hull = ConvexHull(pts)
        eqs = hull.equations  # a*s + b*z + c*v + d <= 0 inside
        sign = 1.0 if kind == "concave" else -1.0
        keep = sign * eqs[:, 2] > 1e-12
        eqs = eqs[keep]
        # v = alpha*s + beta*z + gamma on each facet plane
        return np.column_stack(
            (-eqs[:, 0] / eqs[:, 2], -eqs[:, 1] / eqs[:, 2], -eqs[:, 3] / eqs[:, 2])
        )

    def evaluate(self, s, z):
        s = np.asarray(s, dtype=float)
        z = np.asarray(z, dtype=float)
        if np.any(np.abs(s) > 1.0 + 1e-12) or np.any(z < -1e-12) or np.any(
            s * s + z * z > 1.0 + 1e-9
        ):
            raise ValueError("query outside the closed half-disc D")
        vals = (
            self._planes[:, 0][:, None] * s.ravel()[None, :]
            + self._planes[:, 1][:, None] * z.ravel()[None, :]
            + self._planes[:, 2][:, None]
        )
        best = vals.min(axis=0) if self.kind == "concave" else vals.max(axis=0)
        return best.reshape(s.shape) if s.shape else float(best[0])


def oracle_envelope(p, q, kind, n=512):
    """Envelope estimate at a single point q = (s, z) of D."""
    s, z = q
    return float(EnvelopeOracle(p, kind, n).evaluate(np.array(s), np.array(z)))


def _two_block_candidates(rng, p, t, budget):
    """Random genuine pairs matching t: two blocks of constants, moments
    split (X1, Y1) / (X2, Y2) with sqrt(X1*Y1) + sqrt(X2*Y2) = z."""
    x, y, z = t.x, t.y, t.z
    out = []
    for _ in range(budget):
        c = rng.uniform(0.1, 0.9)
        x1 = rng.uniform(1e-6, 1.0 - 1e-6) * x
        x2 = x - x1
        if x1 <= 0.0 or x2 <= 0.0:
            continue
        # sqrt(x1*y1) = z1 with (z - z1)^2 = x2*(y - z1^2/x1)
        aa = 1.0 + x2 / x1
        disc = z * z - aa * (z * z - x2 * y)
        if disc < 0.0:
            continue
        root = math.sqrt(disc)
        for z1 in ((z + root) / aa, (z - root) / aa):
            if not 0.0 <= z1 <= z:
                continue
            y1 = z1 * z1 / x1
            y2 = y - y1
            if y1 < 0.0 or y2 < 0.0:
                continue
            inv = 1.0 / p.p
            a = xpow(x1 / c, inv)
            b = xpow(y1 / c, inv)
            d = xpow(x2 / (1.0 - c), inv)
            e = xpow(y2 / (1.0 - c), inv)
            out.append(
                c * xpow(a + b, p.p) + (1.0 - c) * xpow(d + e, p.p)
            )
    return out


def empirical_B(p, t, direction, budget=200, seed=0):
    """Best |f+g|_p^p found over pairs whose triple matches t.

    Searches the closed-form extremal families (which contain the exact
    optimizers) plus seeded random two-block pairs through t.
    """
    if direction not in ("sup", "inf"):
        raise ValueError("direction must be 'sup' or 'inf'")
    rng = np.random.default_rng(seed)
    candidates = []
    for ctor in (extremal_F, extremal_G):
        try:
            f, g = ctor(p, t)
        except ValueError:
            continue
        val = sum_norm(f, g, p.p)
        if math.isfinite(val):
            candidates.append(val)
    candidates.extend(
        v for v in _two_block_candidates(rng, p, t, budget) if math.isfinite(v)
    )
    if not candidates:
        raise ValueError("no feasible pair found for triple %r" % (t,))
    return max(candidates) if direction == "sup" else min(candidates)

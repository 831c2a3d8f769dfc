"""Weighted step functions on [0, 1] and their L^p quantities.

These are the concrete measure-space citizens: nonnegative piecewise
constant functions, allowed to take the value +inf (which contributes 0
to p-th powers when p < 0). All integrals are exact sums, so the only
tolerances anywhere are floating-point slack.
"""

import json
import math

from .envelopes import BoundReport, ConeTriple, classify
from .powers import INF, xpow


class StepFunction:
    """A nonnegative step function given by breakpoints 0=t_0<...<t_n=1
    and one (extended-real) value per interval."""

    __slots__ = ("breakpoints", "values")

    def __init__(self, breakpoints, values):
        bp = tuple(float(b) for b in breakpoints)
        vals = tuple(float(v) for v in values)
        if len(bp) < 2 or bp[0] != 0.0 or bp[-1] != 1.0:
            raise ValueError("breakpoints must run from 0 to 1")
        if any(b1 >= b2 for b1, b2 in zip(bp, bp[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if len(vals) != len(bp) - 1:
            raise ValueError("need exactly one value per interval")
        if any(math.isnan(v) or v < 0 for v in vals):
            raise ValueError("values must be nonnegative (or +inf)")
        self.breakpoints = bp
        self.values = vals

    @staticmethod
    def constant(value):
        return StepFunction((0.0, 1.0), (value,))

    def __repr__(self):
        return "StepFunction(%r, %r)" % (list(self.breakpoints), list(self.values))

    def __eq__(self, other):
        return (
            isinstance(other, StepFunction)
            and self.breakpoints == other.breakpoints
            and self.values == other.values
        )

    def to_json(self):
        vals = ["inf" if math.isinf(v) else v for v in self.values]
        return json.dumps({"breakpoints": list(self.breakpoints), "values": vals})

    @staticmethod
    def from_json(text):
        obj = json.loads(text)
        vals = [INF if v == "inf" else float(v) for v in obj["values"]]
        return StepFunction(obj["breakpoints"], vals)


def refine(f, g):
    """Common refinement: merged breakpoints (exact comparison, no epsilon
    merging) with the aligned value lists of f and g."""
    merged = sorted(set(f.breakpoints) | set(g.breakpoints))
    fi = gi = 0
    fv, gv = [], []
    for left in merged[:-1]:
        while f.breakpoints[fi + 1] <= left:
            fi += 1
        while g.breakpoints[gi + 1] <= left:
            gi += 1
        fv.append(f.values[fi])
        gv.append(g.values[gi])
    return merged, fv, gv


def _interval_power(value, p):
    """value^p with the p<0 conventions (0^p = +inf, inf^p = 0)."""
    return xpow(value, p)


def pth_power_norm(f, p):
    """The p-th power integral of f; may legally be +inf for p < 0."""
    if p == 0:
        raise ValueError("p must be nonzero")
    total = 0.0
    for (a, b), v in zip(zip(f.breakpoints, f.breakpoints[1:]), f.values):
        term = _interval_power(v, p)
        if math.isinf(term):
            return INF
        total += (b - a) * term
    return total


def overlap_norm(f, g, p):
    """Integral of (fg)^(p/2) over the common refinement.

    For p < 0 the integrand is 0 wherever either factor is +inf.
    """
    if p == 0:
        raise ValueError("p must be nonzero")
    merged, fv, gv = refine(f, g)
    half = 0.5 * p
    total = 0.0
    for i in range(len(fv)):
        if math.isinf(fv[i]) or math.isinf(gv[i]):
            if p >= 0:
                return INF
            continue
        term = _interval_power(fv[i] * gv[i], half)
        if math.isinf(term):
            return INF
        total += (merged[i + 1] - merged[i]) * term
    return total


def triple_of_pair(f, g, p):
    """The cone point (|f|_p^p, |g|_p^p, |fg|_{p/2}^{p/2}) of a pair."""
    x = pth_power_norm(f, p)
    y = pth_power_norm(g, p)
    z = overlap_norm(f, g, p)
    if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
        raise ValueError(
            "norms must be finite to form a cone point, got (%r, %r, %r)"
            % (x, y, z)
        )
    return ConeTriple(x, y, z)


def sum_norm(f, g, p):
    """|f+g|_p^p on the common refinement (inf + anything = inf)."""
    merged, fv, gv = refine(f, g)
    total = 0.0
    for i in range(len(fv)):
        s = fv[i] + gv[i]
        term = _interval_power(s, p)
        if math.isinf(term):
            return INF
        total += (merged[i + 1] - merged[i]) * term
    return total


def sum_and_report(f, g, p):
    """Evaluate |f+g|_p^p and compare it against every applicable bound."""
    exponent = p if hasattr(p, "p") else classify(p)
    t = triple_of_pair(f, g, exponent.p)
    actual = sum_norm(f, g, exponent.p)
    return BoundReport.at(exponent, t, actual)

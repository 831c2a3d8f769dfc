"""Equality-achieving step-function pairs for a prescribed cone point.

Each constructor returns a pair (f, g) on [0,1] whose norm triple equals
the target and whose |f+g|_p^p attains the corresponding envelope:
swap pairs for F_p, block pairs (with zeros for p > 0 and +inf atoms for
p < 0) for G_p.
"""

import math

from .powers import xpow
from .stepfun import StepFunction


def _two_block(c, left, right):
    if c <= 0.0:
        return StepFunction.constant(right)
    if c >= 1.0:
        return StepFunction.constant(left)
    return StepFunction((0.0, c, 1.0), (left, right))


def extremal_F(p, t):
    """Swap pair (a,b) on [0,c], (b,a) on [c,1] attaining F_p at t.

    a^p and b^p are the roots of s^2 - (x+y)s + z^2, and c places the swap
    point so the first moments match.
    """
    x, y, z = t.x, t.y, t.z
    s = x + y
    if s == 0.0:
        raise ValueError("degenerate target: x + y must be positive")
    disc = max(0.0, (s - 2.0 * z) * (s + 2.0 * z))
    sq = math.sqrt(disc)
    big = 0.5 * (s + sq)
    small = z * z / big  # stable form of (s - sq)/2
    if sq == 0.0:
        c = 0.5
    else:
        c = min(1.0, max(0.0, 0.5 + (x - y) / (2.0 * sq)))
    inv = 1.0 / p.p
    a = xpow(big, inv)
    b = xpow(small, inv)
    return _two_block(c, a, b), _two_block(c, b, a)


def _three_block(v0, v1, v2):
    return StepFunction((0.0, 0.5, 0.75, 1.0), (v0, v1, v2))


def extremal_G_pos(p, t):
    """Block pair attaining G_p at t for p > 0.

    On the triangular cone z <= min(x,y): shared block a on [0,1/2] plus
    disjoint blocks b, c. Otherwise a two-block pair where the smaller
    function is a single block fully inside the other's support.
    """
    if p.p <= 0:
        raise ValueError("extremal_G_pos requires p > 0")
    x, y, z = t.x, t.y, t.z
    inv = 1.0 / p.p
    if z <= min(x, y):
        a = xpow(2.0 * z, inv)
        b = xpow(4.0 * (x - z), inv)
        c = xpow(4.0 * (y - z), inv)
        return _three_block(a, b, 0.0), _three_block(a, 0.0, c)
    if y <= x:
        a = xpow(2.0 * z * z / y, inv)
        b = xpow(2.0 * y, inv)
        c = xpow(max(0.0, 2.0 * x - 2.0 * z * z / y), inv)
        f = StepFunction((0.0, 0.5, 1.0), (a, c))
        g = StepFunction((0.0, 0.5, 1.0), (b, 0.0))
        return f, g
    g, f = extremal_G_pos(p, type(t)(y, x, z))
    return f, g


def extremal_G_neg(p, t):
    """Block pair attaining G_p at t for p < 0.

    Same moment matching as the p > 0 construction with every zero block
    replaced by +inf (contributing 0 to p-th powers).
    """
    if p.p >= 0:
        raise ValueError("extremal_G_neg requires p < 0")
    x, y, z = t.x, t.y, t.z
    if z <= 0.0 or x <= 0.0 or y <= 0.0:
        raise ValueError(
            "extremal_G_neg needs x, y, z > 0 (the z = 0 value is a limit)"
        )
    inv = 1.0 / p.p
    if z <= min(x, y):
        a = xpow(2.0 * z, inv)
        b = xpow(4.0 * (x - z), inv)
        c = xpow(4.0 * (y - z), inv)
        return _three_block(a, b, math.inf), _three_block(a, math.inf, c)
    if y <= x:
        a = xpow(2.0 * z * z / y, inv)
        b = xpow(2.0 * y, inv)
        c = xpow(max(0.0, 2.0 * x - 2.0 * z * z / y), inv)
        f = StepFunction((0.0, 0.5, 1.0), (a, c))
        g = StepFunction((0.0, 0.5, 1.0), (b, math.inf))
        return f, g
    g, f = extremal_G_neg(p, type(t)(y, x, z))
    return f, g


def extremal_G(p, t):
    """Dispatch to the sign-appropriate G_p construction."""
    return extremal_G_pos(p, t) if p.p > 0 else extremal_G_neg(p, t)

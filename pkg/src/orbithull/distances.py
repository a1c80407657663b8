"""Distances between unitary orbits, their convex hulls, and spectra.

Inputs are eigenvalue functions (:class:`StepFunction`) unless noted.  With
rational inputs every formula here is evaluated exactly.
"""
from ._numeric import ValidationError
from .stepfn import StepFunction, common_grid, integrals_at, sup_distance, tail_integrals


def orbit_distance(t, s):
    """Distance between the unitary orbits: ``sup |t(x) - s(x)|``."""
    return sup_distance(s, t)


def _ratio_candidates(t, s):
    """All values of the two hull-distance ratio families at their extremal points.

    ``F(x) = int_0^x (s - t)`` and ``G(x) = int_{1-x}^1 (t - s)`` are
    piecewise affine with kinks at the breakpoints ``b`` and ``1 - b``.  On
    each affine piece ``F(x)/x`` is monotone, so the supremum over (0, 1) is
    attained at a kink, at x = 1, or in the limit x -> 0 where the ratios
    tend to the first and last value differences.
    """
    bps = common_grid(t, s)
    pts = sorted({p for p in bps} | {1 - p for p in bps})
    pts = [p for p in pts if p > 0]
    it, is_ = integrals_at(t, pts), integrals_at(s, pts)
    jt, js = tail_integrals(t, pts), tail_integrals(s, pts)

    out = [s.values[0] - t.values[0], t.values[-1] - s.values[-1]]
    for x, a, b, c, e in zip(pts, it, is_, jt, js):
        out.append((b - a) / x)
        out.append((c - e) / x)
    return out


def hull_distance(t, s):
    """Distance from ``s`` to the closed convex hull of the unitary orbit of ``t``.

    Zero exactly when ``s ≺ t``.
    """
    return max(0, max(_ratio_candidates(t, s)))


def hull_to_hull_distance(t, s):
    """Distance between the two closed convex hulls; only the traces matter.

    ``t`` and ``s`` are spectral forms.
    """
    return abs(s.trace() - t.trace())


def nearest_majorized_profile(t, s):
    """A non-increasing ``h ≺ t`` with ``||h - s||_inf`` equal to ``hull_distance(t, s)``.

    With ``d`` the hull distance, the admissible profiles form the band
    ``s - d <= h <= s + d`` intersected with ``{h ≺ t}``.  Among all profiles
    in the band with the right integral, the clamp of a constant level,
    ``h = min(max(c, s - d), s + d)``, is majorized by every other one, so it
    is the profile to return.  ``c`` is solved exactly from the
    piecewise-linear trace equation.
    """
    d = hull_distance(t, s)
    if d == 0:
        return s
    grid = common_grid(t, s)
    exact = t.exact and s.exact
    probes = grid[:-1] if exact else [(a + b) / 2 for a, b in zip(grid, grid[1:])]
    centers = [s(x) for x in probes]
    widths = [b - a for a, b in zip(grid, grid[1:])]
    lo = [c - d for c in centers]
    hi = [c + d for c in centers]
    target = t.integral()

    def mass(c):
        return sum(w * min(max(c, l), u) for w, l, u in zip(widths, lo, hi))

    knots = sorted(set(lo) | set(hi))
    level = knots[0]
    prev_k, prev_m = knots[0], mass(knots[0])
    if target <= prev_m:
        level = prev_k
    else:
        level = knots[-1]
        for k in knots[1:]:
            m = mass(k)
            if m >= target:
                level = prev_k + (target - prev_m) * (k - prev_k) / (m - prev_m) if m != prev_m else k
                break
            prev_k, prev_m = k, m
    vals = [min(max(level, l), u) for l, u in zip(lo, hi)]
    for i in range(1, len(vals)):
        if vals[i] > vals[i - 1]:
            vals[i] = vals[i - 1]
    return StepFunction(grid, vals)


def spectral_hull_distance(s_spec, t_spec):
    """``max_{x in s_spec} dist(x, [min t_spec, max t_spec])`` for real spectra."""
    if not s_spec.points or not t_spec.points:
        raise ValidationError("spectra must be non-empty")
    ts = t_spec.real_points()
    lo, hi = min(ts), max(ts)
    return max(max(lo - x, x - hi, 0.0) for x in s_spec.real_points())

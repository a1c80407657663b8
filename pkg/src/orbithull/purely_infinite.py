"""Convex-hull membership predicates for unital simple purely infinite algebras.

There the closed convex hull of a unitary orbit is decided by the spectrum
alone: ``S`` lies in it iff ``sigma(S)`` sits inside the convex hull of
``sigma(T)``.  Hulls are closed, so boundary points are members.
"""
from ._numeric import TOL, ValidationError


def _nonempty(*specs):
    for sp in specs:
        if not sp.points:
            raise ValidationError("spectra must be non-empty")


def hull_member_selfadjoint(s_spec, t_spec):
    """Every point of ``s_spec`` lies in ``[min t_spec, max t_spec]``."""
    _nonempty(s_spec, t_spec)
    ts = t_spec.real_points()
    lo, hi = min(ts), max(ts)
    slack = TOL * (1 + max(abs(lo), abs(hi)))
    return all(lo - slack <= x <= hi + slack for x in s_spec.real_points())


def _cross(o, a, b):
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def convex_hull(points):
    """Vertices of the planar convex hull, counter-clockwise (monotone chain).

    Collinear points are dropped; one or two vertices come back for
    degenerate hulls.
    """
    pts = sorted(set(complex(p) for p in points), key=lambda z: (z.real, z.imag))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def point_in_hull(z, hull, scale):
    tol = 1e-12 * (1 + scale)
    if len(hull) == 1:
        return abs(z - hull[0]) <= TOL * (1 + scale)
    if len(hull) == 2:
        a, b = hull
        seg = b - a
        if abs(_cross(a, b, z)) > tol * max(1.0, abs(seg)):
            return False
        u = ((z - a) * seg.conjugate()).real / abs(seg) ** 2
        return -tol <= u <= 1 + tol
    n = len(hull)
    return all(_cross(hull[i], hull[(i + 1) % n], z) >= -tol * max(1.0, abs(hull[(i + 1) % n] - hull[i]))
               for i in range(n))


def hull_member_normal(s_spec, t_spec):
    """Every point of ``s_spec`` lies in the planar convex hull of ``t_spec``.

    Only the spectral condition is tested; the K1-type hypothesis on
    ``lambda I - N`` has no finite model here.
    """
    _nonempty(s_spec, t_spec)
    hull = convex_hull(t_spec.points)
    scale = max(abs(p) for p in t_spec.points)
    return all(point_in_hull(z, hull, scale) for z in s_spec.points)

"""Majorization, submajorization and pointwise dominance of spectral scales.

All predicates compare partial integrals at the merged breakpoints of the two
step functions.  Between consecutive breakpoints both partial integrals are
affine, so the gap between them is affine too and the finitely many checks
are exact.  Float inputs get an additive slack of ``1e-9 * (1 + ||t||)``.
"""
from ._numeric import TOL, DomainError
from .spectral import eigenvalue_function
from .stepfn import common_grid, integrals_at, sample_points


def _slack(t, s):
    if t.exact and s.exact:
        return 0
    return TOL * (1 + t.sup_norm())


def majorizes(t, s, slack=None):
    """True iff ``s`` is majorized by ``t`` (``s ≺ t``).

    ``slack`` overrides the default float slack.
    """
    if slack is None:
        slack = _slack(t, s)
    grid = common_grid(t, s)
    it, is_ = integrals_at(t, grid), integrals_at(s, grid)
    if abs(it[-1] - is_[-1]) > slack:
        return False
    return all(b <= a + slack for a, b in zip(it, is_))


def _check_nonnegative(f, name):
    floor = 0 if f.exact else -TOL
    if f.values[-1] < floor:
        raise DomainError(f"submajorization is defined for singular value functions; {name} takes value {f.values[-1]!r}")


def submajorizes(t, s):
    """True iff every partial integral of ``s`` is at most that of ``t``; totals may differ."""
    _check_nonnegative(t, "t")
    _check_nonnegative(s, "s")
    slack = _slack(t, s)
    grid = common_grid(t, s)
    return all(b <= a + slack for a, b in zip(integrals_at(t, grid), integrals_at(s, grid)))


def dominates_pointwise(t, s):
    """True iff ``s(x) <= t(x)`` for every x in [0, 1)."""
    slack = _slack(t, s)
    grid = common_grid(t, s)
    return all(s(x) <= t(x) + slack for x in sample_points(grid, t.exact and s.exact))


def ramp_trace(form, r):
    """Normalized trace of ``(X - r)_+`` for a spectral form ``X``."""
    return sum(w * max(v - r, 0) for v, w in form.entries)


def convex_test_check(t, s, r_grid):
    """Majorization re-derived from ramp test functions ``x -> (x - r)_+``.

    With ``r_grid`` containing every value of both forms the answer equals
    ``majorizes(eigenvalue_function(t), eigenvalue_function(s))``.
    """
    r_grid = list(r_grid)
    if not r_grid:
        raise DomainError("r_grid must be non-empty")
    exact = t.exact and s.exact and all(isinstance(r, int) or hasattr(r, "denominator") for r in r_grid)
    slack = 0 if exact else TOL * (1 + max(abs(v) for v in t.values))
    if abs(t.trace() - s.trace()) > slack:
        return False
    return all(ramp_trace(s, r) <= ramp_trace(t, r) + slack for r in r_grid)


def check_positive_map_contract(plan_output, input_form):
    """Audit predicate: the image of a unital trace-preserving positive map is majorized by its input."""
    return majorizes(eigenvalue_function(input_form), eigenvalue_function(plan_output))

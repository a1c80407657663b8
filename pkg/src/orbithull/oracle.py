"""Brute-force references used to audit the main code paths.

Nothing here calls into :mod:`orbithull.distances` or
:mod:`orbithull.synthesis`.  Each oracle refuses inputs beyond the size at
which exhaustive search stays trustworthy.
"""
from fractions import Fraction
from itertools import combinations, permutations

import numpy as np
from scipy.optimize import linprog

from ._numeric import DomainError, all_exact
from .majorize import majorizes
from .spectral import SpectralForm, discretize, eigenvalue_function
from .stepfn import partial_integral

MAX_PERMUTATION_N = 8
MAX_GRID_BLOCKS = 256

_perm_cache = {}


def permutation_matching_distance(evals_t, evals_s):
    """``min over permutations sigma of max_k |t_k - s_sigma(k)|``, by enumeration."""
    evals_t, evals_s = list(evals_t), list(evals_s)
    n = len(evals_t)
    if n != len(evals_s):
        raise DomainError("eigenvalue lists must have equal length")
    if n > MAX_PERMUTATION_N:
        raise DomainError(f"refusing n={n}: exhaustive matching is capped at n={MAX_PERMUTATION_N}")
    if all_exact(evals_t + evals_s):
        return min(max(abs(a - evals_s[j]) for a, j in zip(evals_t, p)) for p in permutations(range(n)))
    if n not in _perm_cache:
        _perm_cache[n] = np.array(list(permutations(range(n))))
    perms = _perm_cache[n]
    t = np.asarray(evals_t, dtype=float)
    s = np.asarray(evals_s, dtype=float)
    return float(np.abs(t[None, :] - s[perms]).max(axis=1).min())


def hull_distance_search(t, s, grid_blocks=128):
    """Smallest ``alpha`` admitting a non-increasing ``h ≺ t`` with ``|h - s| <= alpha``.

    ``h`` ranges over step functions constant on the blocks of a uniform
    grid merged with the breakpoints of ``s`` and ``t``; the minimization is
    a linear program (variables ``h_1..h_m, alpha``).  Averaging any
    admissible ``h`` over these blocks keeps it admissible, because ``s`` is
    constant on each block, so the search loses nothing to the grid.
    """
    m = int(grid_blocks)
    if not 1 <= m <= MAX_GRID_BLOCKS:
        raise DomainError(f"grid_blocks must lie in [1, {MAX_GRID_BLOCKS}]")
    xs = sorted({Fraction(k, m) for k in range(m + 1)}
                | {Fraction(x) for x in t.breakpoints} | {Fraction(x) for x in s.breakpoints})
    nb = len(xs) - 1
    widths = [float(b - a) for a, b in zip(xs, xs[1:])]
    cap = [float(partial_integral(t, x)) for x in xs[1:]]
    level = [float(s(x)) for x in xs[:-1]]

    nv = nb + 1  # h_1..h_nb, alpha
    a_ub, b_ub = [], []
    for k in range(nb):
        row = np.zeros(nv)
        row[k], row[nb] = -1.0, -1.0  # h_k >= s_k - alpha
        a_ub.append(row)
        b_ub.append(-level[k])
        row = np.zeros(nv)
        row[k], row[nb] = 1.0, -1.0  # h_k <= s_k + alpha
        a_ub.append(row)
        b_ub.append(level[k])
    for k in range(nb - 1):
        row = np.zeros(nv)
        row[k], row[k + 1] = -1.0, 1.0  # h_{k+1} <= h_k
        a_ub.append(row)
        b_ub.append(0.0)
    for k in range(nb - 1):
        row = np.zeros(nv)
        row[: k + 1] = widths[: k + 1]
        a_ub.append(row)
        b_ub.append(cap[k])
    a_eq = np.zeros((1, nv))
    a_eq[0, :nb] = widths
    c = np.zeros(nv)
    c[nb] = 1.0
    bounds = [(None, None)] * nb + [(0, None)]
    res = linprog(c, A_ub=np.array(a_ub), b_ub=np.array(b_ub), A_eq=a_eq, b_eq=[cap[-1]],
                  bounds=bounds, method="highs")
    if not res.success:
        raise RuntimeError(f"hull distance LP failed: {res.message}")
    return float(res.x[nb])


def random_majorized_pair(n, seed, uniform=False):
    """Deterministic rational pair ``(t, s)`` with ``s ≺ t``.

    ``t`` has ``n`` integer values in [-10, 10]; ``s`` is the block average of
    its eigenvalue function over a random coarser grid.  With
    ``uniform=True`` every weight is ``1/n`` and the grid uses multiples of
    ``1/n``, so both forms are spectra of ``n x n`` diagonal matrices.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    rng = np.random.default_rng(seed)
    values = [Fraction(int(v)) for v in rng.integers(-10, 11, size=n)]
    if uniform:
        weights = [Fraction(1, n)] * n
        interior = [Fraction(k, n) for k in range(1, n)]
    else:
        raw = [int(v) for v in rng.integers(1, 10, size=n)]
        weights = [Fraction(r, sum(raw)) for r in raw]
        interior = []
    t = SpectralForm(list(zip(values, weights)))
    f = eigenvalue_function(t)
    if not uniform:
        interior = list(f.breakpoints[1:-1])
        if rng.random() < 0.5:
            interior.append(Fraction(int(rng.integers(1, 24)), 24))
    keep = sorted({x for x in interior if rng.random() < 0.5})
    s = discretize(f, [Fraction(0)] + keep + [Fraction(1)])
    assert majorizes(f, eigenvalue_function(s))
    return t, s


def _orient(a, b, c):
    return (b.real - a.real) * (c.imag - a.imag) - (b.imag - a.imag) * (c.real - a.real)


def point_in_hull_exhaustive(z, points, tol=1e-12):
    """Is ``z`` in the convex hull of ``points``?  Checks every point, segment and triangle."""
    pts = list(dict.fromkeys(complex(p) for p in points))
    if len(pts) > 60:
        raise DomainError("exhaustive hull test is capped at 60 points")
    scale = 1 + max(abs(p) for p in pts) + abs(z)
    eps = tol * scale
    if any(abs(z - p) <= eps for p in pts):
        return True
    for a, b in combinations(pts, 2):
        seg = b - a
        if abs(_orient(a, b, z)) <= eps * max(1.0, abs(seg)):
            u = ((z - a) * seg.conjugate()).real / abs(seg) ** 2
            if -eps <= u <= 1 + eps:
                return True
    for a, b, c in combinations(pts, 3):
        d1, d2, d3 = _orient(a, b, z), _orient(b, c, z), _orient(c, a, z)
        if (d1 >= -eps and d2 >= -eps and d3 >= -eps) or (d1 <= eps and d2 <= eps and d3 <= eps):
            if abs(_orient(a, b, c)) > eps:
                return True
    return False

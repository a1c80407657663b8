"""Spectral forms, the normalized-trace matrix model, and spectral scales."""
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._numeric import TOL, WEIGHT_TOL, DomainError, ValidationError, all_exact, to_json_number, to_number
from .stepfn import StepFunction, _check_weights, partial_integral, rearrange, validate_grid


@dataclass(frozen=True)
class SpectralForm:
    """Finite spectral data ``[(value, weight), ...]`` with weights summing to 1.

    Models ``T = sum_k value_k P_k`` where ``weight_k`` is the trace of the
    spectral projection ``P_k``.  Values need not be sorted or distinct.
    """

    entries: tuple

    def __post_init__(self):
        entries = tuple((v, w) for v, w in self.entries)
        object.__setattr__(self, "entries", entries)
        _check_weights([w for _, w in entries], self.exact)

    @property
    def exact(self):
        return all_exact([x for e in self.entries for x in e])

    @property
    def values(self):
        return [v for v, _ in self.entries]

    @property
    def weights(self):
        return [w for _, w in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def trace(self):
        return sum(v * w for v, w in self.entries)

    def sorted(self):
        """Entries reordered by non-increasing value (stable)."""
        return SpectralForm(sorted(self.entries, key=lambda e: e[0], reverse=True))

    def map(self, fn):
        return SpectralForm([(fn(v), w) for v, w in self.entries])

    def to_json(self):
        return {"pairs": [[to_json_number(v), to_json_number(w)] for v, w in self.entries]}

    @classmethod
    def from_json(cls, obj, exact=False):
        try:
            pairs = [(to_number(v, exact), to_number(w, exact)) for v, w in obj["pairs"]]
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"bad spectral form JSON: {e}") from None
        return cls(pairs)

    @classmethod
    def uniform(cls, values, exact=None):
        """Equal weights ``1/n``; rational weights when ``exact`` (default: if values are)."""
        values = list(values)
        n = len(values)
        if exact is None:
            exact = all_exact(values)
        w = Fraction(1, n) if exact else 1.0 / n
        return cls([(v, w) for v in values])

    @classmethod
    def from_step(cls, f):
        return cls(f.pairs())


class TracialHermitian:
    """Hermitian ``n x n`` matrix paired with the normalized trace ``Tr/n``."""

    def __init__(self, matrix):
        m = np.asarray(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise ValidationError(f"expected a non-empty square matrix, got shape {m.shape}")
        scale = 1.0 + np.abs(m).max()
        if np.abs(m - m.conj().T).max() > TOL * scale:
            raise ValidationError("matrix is not Hermitian")
        self.matrix = (m + m.conj().T) / 2
        self.dim = m.shape[0]

    def trace(self):
        return float(np.trace(self.matrix).real) / self.dim

    def eigenvalues(self):
        """Eigenvalues in non-increasing order."""
        w, v = np.linalg.eigh(self.matrix)
        if __debug__:
            resid = np.abs(self.matrix @ v - v * w).max()
            assert resid <= 1e-8 * max(1.0, np.abs(w).max()) * self.dim
        return w[::-1].copy()

    def to_json(self):
        return {"n": self.dim, "re": self.matrix.real.tolist(), "im": self.matrix.imag.tolist()}

    @classmethod
    def from_json(cls, obj):
        try:
            re = np.asarray(obj["re"], dtype=float)
            im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=float)
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"bad matrix JSON: {e}") from None
        if "n" in obj and re.shape != (obj["n"], obj["n"]):
            raise ValidationError(f"declared n={obj['n']} but matrix has shape {re.shape}")
        return cls(re + 1j * im)

    @classmethod
    def diagonal(cls, values):
        return cls(np.diag(np.asarray(values, dtype=float)))


@dataclass(frozen=True)
class SpectrumSet:
    """Finite non-empty set of complex spectral points."""

    points: tuple

    def __post_init__(self):
        pts = []
        for p in self.points:
            p = complex(p)
            if not any(abs(p - q) <= TOL for q in pts):
                pts.append(p)
        if not pts:
            raise ValidationError("spectrum must be non-empty")
        object.__setattr__(self, "points", tuple(pts))

    def is_real(self, tol=TOL):
        return all(abs(p.imag) <= tol for p in self.points)

    def real_points(self):
        if not self.is_real():
            raise DomainError("spectrum has non-real points")
        return [p.real for p in self.points]

    def to_json(self):
        return {"points": [[p.real, p.imag] for p in self.points]}

    @classmethod
    def from_json(cls, obj):
        try:
            pts = [complex(p[0], p[1]) if isinstance(p, (list, tuple)) else complex(p) for p in obj["points"]]
        except (KeyError, TypeError, ValueError, IndexError) as e:
            raise ValidationError(f"bad spectrum JSON: {e}") from None
        return cls(pts)


def _as_hermitian(x):
    if isinstance(x, TracialHermitian):
        return x
    return TracialHermitian(x)


def eigenvalue_function(x):
    """Eigenvalue function of a spectral form or Hermitian matrix."""
    if isinstance(x, SpectralForm):
        return rearrange(x.entries)
    h = _as_hermitian(x)
    w = 1.0 / h.dim
    return rearrange([(float(v), w) for v in h.eigenvalues()])


def singular_value_function(x):
    """Eigenvalue function of ``|x|``; accepts arbitrary square complex matrices."""
    if isinstance(x, SpectralForm):
        return rearrange([(abs(v), w) for v, w in x.entries])
    m = x.matrix if isinstance(x, TracialHermitian) else np.asarray(x, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValidationError(f"singular value function needs a square matrix, got shape {m.shape}")
    n = m.shape[0]
    sv = np.linalg.svd(m, compute_uv=False)
    return rearrange([(float(v), 1.0 / n) for v in sv])


def dimension_function(x):
    """Trace of the support projection of a positive spectral form."""
    exact = x.exact
    total = 0
    for v, w in x.entries:
        if (v < 0) if exact else (v < -TOL):
            raise DomainError(f"dimension function needs a positive element; found value {v!r}")
        if (v > 0) if exact else (v > TOL):
            total += w
    return total


def align(a, b):
    """Split two spectral forms onto one common weight sequence.

    Both inputs are sorted by non-increasing value and their cumulative
    weight grids are merged (float grid points within 1e-12 count as one,
    so ties advance both sides together).  Each block of the merged grid
    inherits the value of the block containing it on either side.
    """
    xa, xb = a.sorted(), b.sorted()
    exact = a.exact and b.exact
    ga, gb = _cumulative(xa.weights, exact), _cumulative(xb.weights, exact)
    pts = sorted(set(ga) | set(gb))
    if exact:
        grid = pts
    else:
        grid = [0.0]
        for p in pts[1:-1]:
            if p - grid[-1] > WEIGHT_TOL and 1.0 - p > WEIGHT_TOL:
                grid.append(p)
        grid.append(1.0)
    out_a, out_b = [], []
    for lo, hi in zip(grid, grid[1:]):
        probe = lo if exact else (lo + hi) / 2
        w = hi - lo
        out_a.append((xa.entries[bisect_right(ga, probe) - 1][0], w))
        out_b.append((xb.entries[bisect_right(gb, probe) - 1][0], w))
    return SpectralForm(out_a), SpectralForm(out_b)


def _cumulative(weights, exact):
    g = [0]
    for w in weights:
        g.append(g[-1] + w)
    if not exact:
        g[-1] = 1.0
    return g


def discretize(f, grid):
    """Spectral form of the block means of ``f`` over ``grid``."""
    grid = validate_grid(grid)
    out = []
    prev = 0
    for a, b in zip(grid, grid[1:]):
        cur = partial_integral(f, b)
        out.append(((cur - prev) / (b - a), b - a))
        prev = cur
    return SpectralForm(out)


def diagonal_matrix(form, n=None):
    """Diagonal ``n x n`` matrix whose normalized trace reproduces ``form``.

    Every weight must be a multiple of ``1/n``; ``n`` defaults to the least
    common denominator of the (rational) weights.
    """
    weights = [Fraction(w).limit_denominator(10**9) for w in form.weights]
    if n is None:
        n = 1
        for w in weights:
            n = n * w.denominator // np.gcd(n, w.denominator)
    diag = []
    for (v, _), w in zip(form.entries, weights):
        k = w * n
        if k.denominator != 1:
            raise ValidationError(f"weight {w} is not a multiple of 1/{n}")
        diag.extend([float(v)] * int(k))
    return np.diag(np.asarray(diag, dtype=float))

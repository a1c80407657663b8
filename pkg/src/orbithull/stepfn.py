"""Non-increasing, right-continuous step functions on [0, 1).

A :class:`StepFunction` is the concrete form of an eigenvalue function: the
value ``values[k]`` is taken on ``[breakpoints[k], breakpoints[k+1])``.
Breakpoints are cumulative trace weights, so they start at 0 and end at 1.
"""
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from ._numeric import TOL, WEIGHT_TOL, DomainError, ValidationError, all_exact, to_json_number, to_number


@dataclass(frozen=True)
class StepFunction:
    breakpoints: tuple
    values: tuple

    def __post_init__(self):
        bps = tuple(self.breakpoints)
        vals = tuple(self.values)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "values", vals)
        if len(vals) < 1 or len(bps) != len(vals) + 1:
            raise ValidationError("need len(breakpoints) == len(values) + 1 >= 2")
        if bps[0] != 0 or bps[-1] != 1:
            raise ValidationError("breakpoints must start at 0 and end at 1")
        for a, b in zip(bps, bps[1:]):
            if not a < b:
                raise ValidationError(f"breakpoints not strictly increasing at {a!r}, {b!r}")
        slack = 0 if self.exact else TOL * (1 + max(abs(v) for v in vals))
        for a, b in zip(vals, vals[1:]):
            if b > a + slack:
                raise ValidationError(f"values not non-increasing: {a!r} < {b!r}")

    @property
    def exact(self):
        return all_exact(self.breakpoints) and all_exact(self.values)

    def __call__(self, s):
        if not 0 <= s < 1:
            raise DomainError(f"step functions live on [0, 1); got {s!r}")
        return self.values[bisect_right(self.breakpoints, s) - 1]

    def __len__(self):
        return len(self.values)

    def blocks(self):
        """Yield ``(left, right, value)`` for each block."""
        return zip(self.breakpoints, self.breakpoints[1:], self.values)

    def left_limit_at_one(self):
        """Value approached as s -> 1 (the minimum of the spectrum)."""
        return self.values[-1]

    def sup_norm(self):
        return max(abs(v) for v in self.values)

    def integral(self):
        return partial_integral(self, 1)

    def weights(self):
        return tuple(b - a for a, b in zip(self.breakpoints, self.breakpoints[1:]))

    def pairs(self):
        return list(zip(self.values, self.weights()))

    def shift(self, c):
        return StepFunction(self.breakpoints, tuple(v + c for v in self.values))

    def scale(self, c):
        if c < 0:
            raise DomainError("negative scaling reverses the order of values")
        return StepFunction(self.breakpoints, tuple(c * v for v in self.values))

    def to_json(self):
        return {
            "breakpoints": [to_json_number(b) for b in self.breakpoints],
            "values": [to_json_number(v) for v in self.values],
        }

    @classmethod
    def from_json(cls, obj, exact=False):
        try:
            bps = [to_number(b, exact) for b in obj["breakpoints"]]
            vals = [to_number(v, exact) for v in obj["values"]]
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"bad step function JSON: {e}") from None
        return cls(bps, vals)

    @classmethod
    def constant(cls, c):
        return cls((0, 1), (c,))


def partial_integral(f, t):
    """Integral of ``f`` over ``[0, t]``, summed block by block."""
    if not 0 <= t <= 1:
        raise DomainError(f"t must lie in [0, 1]; got {t!r}")
    total = 0
    for a, b, v in f.blocks():
        if t <= a:
            break
        total += v * (min(b, t) - a)
    return total


def _check_weights(weights, exact):
    if not weights:
        raise ValidationError("empty spectral data")
    for w in weights:
        if not w > 0:
            raise ValidationError(f"weights must be positive; got {w!r}")
    total = sum(weights)
    if exact:
        if total != 1:
            raise ValidationError(f"weights sum to {total}, not 1")
    elif abs(total - 1) > WEIGHT_TOL:
        raise ValidationError(f"weights sum to {total!r}, not 1 (tolerance {WEIGHT_TOL})")


def rearrange(pairs):
    """Non-increasing rearrangement of ``(value, weight)`` pairs.

    Equal values are merged (within ``TOL`` for floats, keeping the weighted
    mean so the integral is unchanged).
    """
    pairs = [(v, w) for v, w in pairs]
    exact = all_exact([x for p in pairs for x in p])
    _check_weights([w for _, w in pairs], exact)
    pairs.sort(key=lambda p: p[0], reverse=True)

    merged = []  # [value_sum_or_value, weight, last_raw_value]
    for v, w in pairs:
        if merged:
            last = merged[-1]
            if (v == last[2]) if exact else abs(v - last[2]) <= TOL:
                if exact:
                    last[1] += w
                else:
                    last[0] = (last[0] * last[1] + v * w) / (last[1] + w)
                    last[1] += w
                last[2] = v
                continue
        merged.append([v, w, v])

    bps = [0]
    for _, w, _ in merged:
        bps.append(bps[-1] + w)
    if not exact:
        bps[-1] = 1.0
    return StepFunction(bps, [m[0] for m in merged])


def validate_grid(grid):
    grid = tuple(grid)
    if len(grid) < 2 or grid[0] != 0 or grid[-1] != 1:
        raise ValidationError("grid must start at 0 and end at 1")
    for a, b in zip(grid, grid[1:]):
        if not a < b:
            raise ValidationError("grid must be strictly increasing")
    return grid


def block_average(f, grid):
    """Replace ``f`` on each grid block by its mean there."""
    grid = validate_grid(grid)
    vals = []
    prev = partial_integral(f, grid[0])
    for a, b in zip(grid, grid[1:]):
        cur = partial_integral(f, b)
        v = (cur - prev) / (b - a)
        if vals and v > vals[-1]:
            # rounding only; exact means are non-increasing
            v = vals[-1]
        vals.append(v)
        prev = cur
    return StepFunction(grid, vals)


def common_grid(*fs):
    """Union of breakpoints.  Float breakpoints closer than 1e-12 are merged."""
    pts = sorted({b for f in fs for b in f.breakpoints})
    if all(f.exact for f in fs):
        return pts
    out = [pts[0]]
    for p in pts[1:-1]:
        if p - out[-1] > WEIGHT_TOL and 1 - p > WEIGHT_TOL:
            out.append(p)
    out.append(pts[-1])
    return out


def sample_points(grid, exact):
    """One point inside each block: left endpoints when exact, midpoints otherwise."""
    if exact:
        return list(grid[:-1])
    return [(a + b) / 2 for a, b in zip(grid, grid[1:])]


def sup_distance(f, g):
    """``sup |f(s) - g(s)|`` over [0, 1), evaluated on the common refinement."""
    grid = common_grid(f, g)
    return max(abs(f(x) - g(x)) for x in sample_points(grid, f.exact and g.exact))


def uniform_grid(m, exact=True):
    if exact:
        return [Fraction(k, m) for k in range(m + 1)]
    return [k / m for k in range(m)] + [1.0]


def integrals_at(f, points):
    """``partial_integral(f, x)`` for each ``x`` of a sorted point list, in one sweep."""
    out = []
    acc = 0
    k = 0
    blocks = list(f.blocks())
    for x in points:
        while k < len(blocks) and blocks[k][1] <= x:
            a, b, v = blocks[k]
            acc += v * (b - a)
            k += 1
        if k < len(blocks) and x > blocks[k][0]:
            out.append(acc + blocks[k][2] * (x - blocks[k][0]))
        else:
            out.append(acc)
    return out


def tail_integrals(f, lengths):
    """``int_{1-x}^1 f`` for each ``x`` of a sorted list, summed from the right end."""
    rev = [(b - a, v) for a, b, v in f.blocks()][::-1]
    out = []
    acc = 0
    start = 0  # distance from 1 of the current block's right edge
    k = 0
    for x in lengths:
        while k < len(rev) and start + rev[k][0] <= x:
            acc += rev[k][1] * rev[k][0]
            start += rev[k][0]
            k += 1
        if k < len(rev) and x > start:
            out.append(acc + rev[k][1] * (x - start))
        else:
            out.append(acc)
    return out

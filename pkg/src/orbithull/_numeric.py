"""Shared tolerances, error types and the exact/float backend switch.

Every routine in the package accepts either exact rationals
(``fractions.Fraction`` / ``int``) or floats.  A computation runs in exact
mode when all of its scalar inputs are rational; as soon as one float
appears, comparisons fall back to the float tolerances below.
"""
from fractions import Fraction
from numbers import Rational

TOL = 1e-9
WEIGHT_TOL = 1e-12


class ValidationError(ValueError):
    """Malformed input: bad weights, breakpoints, shapes."""


class DomainError(ValueError):
    """Well-formed input outside an operation's domain."""


class PreconditionError(DomainError):
    """A stated precondition (alignment, majorization, ...) does not hold."""


def is_exact(*values):
    for v in values:
        if isinstance(v, bool) or not isinstance(v, Rational):
            return False
    return True


def all_exact(seq):
    return all(isinstance(v, Rational) and not isinstance(v, bool) for v in seq)


def to_number(x, exact=False):
    """Parse a JSON scalar.  Strings such as ``"1/3"`` become Fractions."""
    if isinstance(x, str):
        return Fraction(x)
    if exact:
        if isinstance(x, float):
            return Fraction(x).limit_denominator(10**12) if x != int(x) else Fraction(int(x))
        return Fraction(x)
    return x


def to_json_number(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, Rational):
        return int(x)
    return float(x)


def leq(a, b, slack=TOL):
    """``a <= b`` exactly for rationals, with additive slack otherwise."""
    if is_exact(a, b):
        return a <= b
    return a <= b + slack


def close(a, b, slack=TOL):
    if is_exact(a, b):
        return a == b
    return abs(a - b) <= slack

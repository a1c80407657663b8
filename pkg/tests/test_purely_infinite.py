import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbithull import SpectrumSet, ValidationError, hull_member_normal, hull_member_selfadjoint, spectral_hull_distance
from orbithull.oracle import point_in_hull_exhaustive
from orbithull.purely_infinite import convex_hull


def test_selfadjoint_examples():
    assert hull_member_selfadjoint(SpectrumSet([0.5]), SpectrumSet([0, 1]))
    assert hull_member_selfadjoint(SpectrumSet([0, 1]), SpectrumSet([0, 1]))
    assert not hull_member_selfadjoint(SpectrumSet([2]), SpectrumSet([0, 1]))


def test_normal_examples():
    tri = SpectrumSet([0, 1, 1j])
    assert hull_member_normal(SpectrumSet([0.5 + 0.1j]), tri)
    assert hull_member_normal(tri, tri)
    assert not hull_member_normal(SpectrumSet([2j]), tri)


def test_boundary_points_are_members():
    square = SpectrumSet([0, 1, 1 + 1j, 1j])
    assert hull_member_normal(SpectrumSet([0.5, 1 + 0.5j, 0.25 + 1j]), square)
    assert not hull_member_normal(SpectrumSet([0.5 - 1e-6j]), square)


def test_degenerate_hulls():
    assert hull_member_normal(SpectrumSet([0.5 + 0.5j]), SpectrumSet([0, 1 + 1j]))
    assert not hull_member_normal(SpectrumSet([0.5]), SpectrumSet([0, 1 + 1j]))
    assert hull_member_normal(SpectrumSet([2j]), SpectrumSet([2j]))
    assert convex_hull([0, 1, 2, 1j]) == [0, 2, 1j]


def test_empty_spectrum_rejected():
    with pytest.raises(ValidationError):
        hull_member_selfadjoint(SpectrumSet([1]), SpectrumSet([]))


reals = st.lists(st.integers(-50, 50).map(lambda k: k / 8), min_size=1, max_size=6)
points = st.lists(st.tuples(st.integers(-8, 8), st.integers(-8, 8)).map(lambda p: complex(*p) / 4),
                  min_size=1, max_size=7)


@settings(max_examples=300, deadline=None)
@given(reals, reals)
def test_selfadjoint_matches_distance(s, t):
    s, t = SpectrumSet(s), SpectrumSet(t)
    assert hull_member_selfadjoint(s, t) == (spectral_hull_distance(s, t) == 0)
    assert hull_member_normal(s, t) == hull_member_selfadjoint(s, t)


@settings(max_examples=300, deadline=None)
@given(points, points, points)
def test_normal_matches_oracle_and_is_monotone(s, t, extra):
    assert hull_member_normal(SpectrumSet(s), SpectrumSet(t)) == all(point_in_hull_exhaustive(z, t) for z in s)
    if hull_member_normal(SpectrumSet(s), SpectrumSet(t)):
        assert hull_member_normal(SpectrumSet(s), SpectrumSet(t + extra))


def test_float_noise_on_hull_vertices():
    rng = np.random.default_rng(1)
    pts = rng.normal(size=6) + 1j * rng.normal(size=6)
    assert hull_member_normal(SpectrumSet(pts), SpectrumSet(pts))

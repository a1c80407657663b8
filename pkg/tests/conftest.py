import sys
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from orbithull import SpectralForm


def make_form(values, raw_weights):
    total = sum(raw_weights)
    return SpectralForm([(Fraction(v), Fraction(w, total)) for v, w in zip(values, raw_weights)])


@st.composite
def rational_forms(draw, min_size=1, max_size=6, lo=-10, hi=10):
    n = draw(st.integers(min_size, max_size))
    values = draw(st.lists(st.integers(lo, hi), min_size=n, max_size=n))
    weights = draw(st.lists(st.integers(1, 9), min_size=n, max_size=n))
    return make_form(values, weights)


def positive_forms(**kw):
    return rational_forms(lo=0, **kw)


def random_hermitian(rng, n, scale=1.0):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * (a + a.conj().T) / 2


def random_unitary(rng, n):
    q, r = np.linalg.qr(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

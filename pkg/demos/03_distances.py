"""Distances between unitary orbits, their hulls and spectra."""
# %%
from fractions import Fraction as F

import numpy as np

from orbithull import (
    SpectralForm,
    SpectrumSet,
    TracialHermitian,
    eigenvalue_function,
    hull_distance,
    hull_to_hull_distance,
    nearest_majorized_profile,
    orbit_distance,
    spectral_hull_distance,
)
from orbithull.oracle import hull_distance_search, permutation_matching_distance

# %% Orbit distance is the optimal matching distance of the spectra.
T, S = np.diag([1.0, 0.0]), np.diag([3.0, 2.0])
print(orbit_distance(eigenvalue_function(TracialHermitian(T)), eigenvalue_function(TracialHermitian(S))),
      permutation_matching_distance([1, 0], [3, 2]))

# %% Distance from S to the closed convex hull of the orbit of T, with a nearest profile.
t = eigenvalue_function(SpectralForm([(F(4), F(1, 4)), (F(2), F(1, 4)), (F(0), F(1, 2))]))
s = eigenvalue_function(SpectralForm([(F(5), F(1, 8)), (F(1), F(7, 8))]))
h = nearest_majorized_profile(t, s)
print("hull distance", hull_distance(t, s), "LP oracle", round(hull_distance_search(t, s), 9))
print("witness", list(zip(h.breakpoints, h.values)))

# %% Between two hulls only the traces matter.
print(hull_to_hull_distance(SpectralForm([(F(0), F(1))]), SpectralForm([(F(3), F(1, 2)), (F(1), F(1, 2))])))

# %% In purely infinite algebras the spectra decide.
print(spectral_hull_distance(SpectrumSet([2, -1]), SpectrumSet([0, 1])))

"""Majorization, submajorization and the ramp-function cross-check."""
# %%
from fractions import Fraction as F

from orbithull import SpectralForm, convex_test_check, eigenvalue_function, majorizes, submajorizes
from orbithull.oracle import random_majorized_pair

t = SpectralForm([(F(3), F(1, 2)), (F(1), F(1, 2))])
scalar = SpectralForm([(F(2), F(1))])
spread = SpectralForm([(F(4), F(1, 2)), (F(0), F(1, 2))])

# %% The trace scalar sits in the hull; a more spread-out form does not.
print(majorizes(eigenvalue_function(t), eigenvalue_function(scalar)))
print(majorizes(eigenvalue_function(t), eigenvalue_function(spread)))

# %% The same answers from ramp functions max(x - r, 0) at every spectral value.
print(convex_test_check(t, scalar, [1, 2, 3]), convex_test_check(t, spread, [0, 1, 3, 4]))

# %% Submajorization drops the equal-trace requirement.
half = SpectralForm([(F(1), F(1, 2)), (F(0), F(1, 2))])
print(submajorizes(eigenvalue_function(t), eigenvalue_function(half)))

# %% Generated pairs come with majorization built in.
t, s = random_majorized_pair(5, seed=1)
print(t.entries, s.entries, majorizes(eigenvalue_function(t), eigenvalue_function(s)), sep="\n")

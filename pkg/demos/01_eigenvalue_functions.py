"""Eigenvalue functions of matrices and finite spectral data."""
# %%
from fractions import Fraction as F

import numpy as np

from orbithull import SpectralForm, TracialHermitian, eigenvalue_function, partial_integral, singular_value_function
from orbithull.stepfn import block_average

# %% A diagonal matrix with the normalized trace: each eigenvalue carries weight 1/3.
lam = eigenvalue_function(TracialHermitian(np.diag([1.0, 3.0, 2.0])))
print("values     ", lam.values)
print("breakpoints", [round(float(b), 4) for b in lam.breakpoints])
print("integral   ", partial_integral(lam, 1), "= trace / n")

# %% Spectral data need not come from a matrix; weights can be any rationals.
form = SpectralForm([(F(5), F(1, 5)), (F(0), F(4, 5))])
f = eigenvalue_function(form)
print(f(F(0)), f(F(1, 5)), "left limit at 1:", f.left_limit_at_one())

# %% Averaging over a coarser grid gives a function majorized by the original.
g = block_average(eigenvalue_function(SpectralForm.uniform([4, 2, 0])), [0, F(2, 3), 1])
print("block average", g.values)

# %% Singular values of a nilpotent: one unit of mass, one zero.
print(singular_value_function(np.array([[0.0, 1.0], [0.0, 0.0]])).values)

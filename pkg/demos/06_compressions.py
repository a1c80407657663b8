"""Contractions that shrink one spectrum into another."""
# %%
from fractions import Fraction as F

import numpy as np

from orbithull import SpectralForm, compression_for_dominance, submajorization_contraction, two_sided_compression

# %% Pointwise dominance: gamma_k = sqrt(beta_k / alpha_k) blockwise.
c = compression_for_dominance(SpectralForm([(F(4), F(1, 2)), (F(2), F(1, 2))]),
                              SpectralForm([(F(1), F(1, 2)), (F(0), F(1, 2))]))
print(c.coefficients, c.image().entries)

# %% Submajorization: cut t where its running integral reaches the total of s.
a, image = submajorization_contraction(SpectralForm([(F(4), F(1, 4)), (F(0), F(3, 4))]),
                                       SpectralForm([(F(1), F(1, 2)), (F(0), F(1, 2))]))
print("q =", a.q, "k' =", a.k_prime, "image", image.entries)

# %% Two-sided: A t B = s from singular value decompositions.
rng = np.random.default_rng(2)
t = rng.normal(size=(3, 3))
s = np.diag(np.linalg.svd(t, compute_uv=False) * [0.9, 0.5, 0.0])
A, B = two_sided_compression(t, s)
print(np.linalg.norm(A @ t @ B - s), np.linalg.norm(A, 2), np.linalg.norm(B, 2))

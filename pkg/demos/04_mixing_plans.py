"""Certificates of hull membership: pinching sequences and unitary mixtures."""
# %%
from fractions import Fraction as F

import numpy as np

from orbithull import SpectralForm, align, realize_mixing_plan, reduce_to_target, replay

# %% Pinching steps carry the source form onto the target exactly.
t = SpectralForm([(F(4), F(1, 4)), (F(2), F(1, 4)), (F(0), F(1, 2))])
s = SpectralForm([(F(3), F(1, 4)), (F(2), F(1, 4)), (F(1, 2), F(1, 2))])
a, b = align(t, s)
steps = reduce_to_target(a, b)
for st in steps:
    print(st)
print("replayed:", replay(a, steps).values)

# %% At matrix level the same idea gives convex weights and unitaries.
plan = realize_mixing_plan(np.diag([1.0, 0.0, 0.0]), np.eye(3) / 3)
print("weights", plan.weights)
print(np.round(plan.apply(np.diag([1.0, 0.0, 0.0])).real, 12))

# %% A random conjugated pair still reconstructs to machine precision.
rng = np.random.default_rng(0)
q, _ = np.linalg.qr(rng.normal(size=(4, 4)))
T = q @ np.diag([5.0, 2.0, 1.0, 0.0]) @ q.T
S = np.diag([3.0, 2.5, 1.5, 1.0])
plan = realize_mixing_plan(T, S)
print(len(plan), "terms, error", np.linalg.norm(plan.apply(T) - S, 2))

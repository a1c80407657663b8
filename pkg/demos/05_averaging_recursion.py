"""Averaging a two-point element onto its trace by repeated block averaging."""
# %%
from fractions import Fraction as F

from orbithull import averaging_recursion

# %% Weight 0.3: 1 = 3 * 0.3 + 0.1, then 1 = 10 * 0.1 exactly.
trace = averaging_recursion(0.3, 1.0, 0.0)
print(trace.to_csv())
print("limit", trace.limit, "stop", trace.stop_reason)

# %% An irrational-looking weight converges instead of terminating.
trace = averaging_recursion(F(1000, 2719), F(1), F(-1), tol=F(1, 10**12))
print([s.k for s in trace.steps], float(trace.limit), float(trace.expected_limit()))

# %% Under strict comparison an exact division is replaced by a geometric tail.
strict = averaging_recursion(F(1, 3), F(1), F(0), mode="strict", tol=F(1, 10**6))
print(len(strict.steps), "steps", float(strict.limit))

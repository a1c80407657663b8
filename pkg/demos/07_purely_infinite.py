"""Hull membership when only the spectrum matters."""
# %%
from orbithull import SpectrumSet, hull_member_normal, hull_member_selfadjoint, spectral_hull_distance

interval = SpectrumSet([0, 1])
print(hull_member_selfadjoint(SpectrumSet([0.5]), interval), hull_member_selfadjoint(SpectrumSet([2]), interval))
print(spectral_hull_distance(SpectrumSet([2]), interval))

# %% Normal elements: points inside the planar hull of the spectrum, boundary included.
triangle = SpectrumSet([0, 1, 1j])
for z in (0.5 + 0.1j, 0.5 + 0.5j, 2j):
    print(z, hull_member_normal(SpectrumSet([z]), triangle))

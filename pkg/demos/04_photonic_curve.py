"""
Emulated Mach-Zehnder measurement
=================================

|(Tnd^3)_00| is programmed as the internal phase of a Mach-Zehnder
interferometer and read out as the normalized power at detector D1.  The
noiseless emulator reproduces theory exactly; with phase and detector
noise the estimate scatters around it.
"""

# %%
import math

from homfly_photonic import NoiseModel, curve

ideal = curve(3, 2, 10, 60)
noisy = curve(3, 2, 10, 60, noise=NoiseModel(sigma_theta=0.01, sigma_det=0.01,
                                              repeats=100, seed=1))

# %%
print(f"{'k':>4} {'theory':>9} {'estimate':>9} {'stderr(p1)':>11}")
for a, b in zip(ideal[::5], noisy[::5]):
    print(f"{a.k:4d} {a.theory_abs:9.5f} {b.estimate_abs:9.5f} {b.std_error:11.2e}")

rms = math.sqrt(sum((b.estimate_abs - b.theory_abs) ** 2 for b in noisy) / len(noisy))
print("RMS(estimate - theory) =", rms)

# %% Far from the threshold the curve settles at 1/2.
from homfly_photonic import make_params, measure_element

print(measure_element(3, make_params(2, 10 ** 5)).estimate_abs)

# %% The same table from the command line:
#
#   homfly-photonic curve --n 3 --N 2 --k-min 10 --k-max 60 \
#       --sigma-theta 0.01 --sigma-det 0.01 --repeats 100 --seed 1

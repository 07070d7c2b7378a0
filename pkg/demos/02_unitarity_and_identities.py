"""
Operators at roots of unity
===========================

At q = exp(4 pi i/(k+N)), A = q^N every operator is a 2x2 unitary.  We
sweep k, and check a few exact identities.
"""

# %%
import numpy as np

from homfly_photonic import build_S, build_Sbar, build_T, build_Tbar, build_Tnd, make_params

p = make_params(2, 14)
print("q =", p.q, " A =", p.A)
print(np.round(build_S(p).to_array().real, 6))   # Hadamard

# %% worst deviation from unitarity over a sweep
for N in (2, 3, 4):
    worst = 0.0
    for k in range(3 * N + 4, 200 - N + 1):
        pk = make_params(N, k)
        for b in (build_S, build_T, build_Sbar, build_Tbar, build_Tnd):
            u = b(pk).to_array()
            worst = max(worst, np.abs(u @ u.conj().T - np.eye(2)).max())
    print(f"N={N}: max |U U+ - I| = {worst:.2e}")

# %% Exact: the displayed Tnd is S T S+ dressed by diag(A^2, 1) on both sides.
from homfly_photonic.operators import CHANNEL, diag
from homfly_photonic.ring import A, RadElem

dress = diag(RadElem.scalar(A * A), RadElem.one(), CHANNEL)
tnd = build_Tnd()
print(dress @ build_S() @ build_T() @ build_S(adjoint=True) @ dress == tnd)
print("trace:", tnd.trace())
print("det:  ", tnd.det())

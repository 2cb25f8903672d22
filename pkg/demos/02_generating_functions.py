# %% [markdown]
# # Amplitudes from generating functions
#
# Every amplitude psi(x, t) is the z^t coefficient of a closed-form series.
# Here the series are expanded with truncated power-series arithmetic and
# compared against plain step-by-step evolution.

# %%
import numpy as np

from halfwalk import mixed_spec
from halfwalk.evolution import trajectory
from halfwalk.genfun import amplitude_table, generating_functions

spec = mixed_spec()
bundle = generating_functions(spec, T=12, xmax=2)

np.set_printoptions(precision=4, suppress=True, linewidth=100)
print("lambda_+ :", bundle.lambda_plus.coeffs)
print("B(z)     :", bundle.br0.coeffs)
print("Psi_up(0):", bundle.psi_up[0].coeffs)

# %% Coefficients against the simulation, x <= 10 and t <= 50
table = amplitude_table(spec, xmax=10, tmax=50)
worst = 0.0
for t, state in enumerate(trajectory(spec, 50)):
    for x in range(11):
        worst = max(worst, np.abs(table[x, t] - np.array(state.at(x))).max())
print(f"largest disagreement: {worst:.2e}")

# %% [markdown]
# Reading a single late amplitude needs a series of order t + 1 only:

# %%
from halfwalk.genfun import amplitude_at

down, up = amplitude_at(spec, 0, 400)
print(f"|psi(0, 400)|^2 = {abs(down) ** 2 + abs(up) ** 2:.4f}")

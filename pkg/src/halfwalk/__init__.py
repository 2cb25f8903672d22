"""Two-state discrete quantum walks on the half-line.

Three independent routes to the same walk:

- :mod:`halfwalk.evolution` iterates the one-step rule on a state vector,
- :mod:`halfwalk.genfun` reads amplitudes off closed-form generating functions,
- :mod:`halfwalk.weak_limit` evaluates the limit law of ``X_t / t``.
"""

from .coins import (
    Coin,
    WalkSpec,
    det_sqrt,
    phased_spec,
    mixed_spec,
    phased_coin,
    hadamard,
    hadamard_spec,
    is_generic,
    make_coin,
    random_coin,
)
from .errors import (
    AssumptionViolated,
    BadConstantTerm,
    ConfigError,
    DegenerateCoin,
    HalfWalkError,
    NotUnitary,
    NumericalSingularity,
    OutOfSupport,
    QuadratureFailure,
    ZeroConstantTerm,
)
from .evolution import distribution, empirical_cdf, estimate_rho, evolve, initial_state, step
from .genfun import amplitude_at, amplitude_table, psi_series
from .series import PowerSeries
from .weak_limit import QuadratureConfig, density_ac, homogeneous_density, limit_cdf, rho

__version__ = "0.1.0"

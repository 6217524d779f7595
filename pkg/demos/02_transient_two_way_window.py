"""
A transient window of two-way steering
======================================

The steady state of the asymmetric-loss system steers strictly one way,
but the road there is more permissive: starting from vacuum, there is a
finite time window in which *both* steering products dip below one.
This script integrates the moment flow and locates that window.
"""

import numpy as np

from steerkit import (
    SystemParams,
    evolve_moments,
    steady_state_lyapunov,
    steering_result,
    vacuum_thermal_state,
)

params = SystemParams(
    kappa1=1.0, kappa2=0.4, g1=10.0, g2=20.0, gamma_m=0.01, n_th=0.0
)

# Sample the first sixty inverse linewidths on a uniform grid.
times = np.arange(1, 1201) * 0.05
states = evolve_moments(params, vacuum_thermal_state(params.n_th), times)
results = [steering_result(state) for state in states]

# Scan the trace for the two-way region and the first one-way time.
window = [t for t, r in zip(times, results) if r.s12 < 1.0 and r.s21 < 1.0]
print("two-way window: t in [%.2f, %.2f] (%d samples)"
      % (window[0], window[-1], len(window)))

# A few snapshots along the way show the window opening and closing.
print()
print("   t      s12     s21    classification")
for pick in (0.10, 0.50, 1.00, 1.35, 2.00, 10.0, 60.0):
    index = int(round(pick / 0.05)) - 1
    r = results[index]
    print("%6.2f  %6.4f  %6.4f   %s"
          % (times[index], r.s12, r.s21, r.classification))

# The late-time row already matches the steady state.
steady = steering_result(steady_state_lyapunov(params))
final = results[-1]
print()
print("steady state:  s12 = %.6f, s21 = %.6f" % (steady.s12, steady.s21))
print("t = 60 sample: s12 = %.6f, s21 = %.6f  (gap %.1e, %.1e)"
      % (final.s12, final.s21,
         abs(final.s12 - steady.s12), abs(final.s21 - steady.s21)))

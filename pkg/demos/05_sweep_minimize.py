"""
Mapping and minimizing the steering products over parameter space
=================================================================

Which working points steer best?  A grid sweep answers the coarse
question; a pattern-search minimizer sharpens it to a frontier: the
smallest attainable steering product as a function of one swept
parameter, optimizing over the others at every step.
"""

import numpy as np

from steerkit import (
    AxisSpec,
    SweepSpec,
    SystemParams,
    grid_sweep,
    minimize_steering,
)

base = SystemParams(
    kappa1=1.0, kappa2=1.0, g1=1.0, g2=1.0, gamma_m=1.0, n_th=0.0
)

# A small grid over the two couplings: each row reports stability and,
# where stable, both steering products and the entanglement.
spec = SweepSpec(
    base=base,
    axes=(AxisSpec("g1", 1.0, 9.0, 3), AxisSpec("g2", 2.0, 10.0, 3)),
    objective="s21",
)
print("grid over (g1, g2), gamma_m = 1:")
print("   g1     g2   stable    s12      s21")
for row in grid_sweep(spec):
    if row.stable:
        print(" %4.1f   %4.1f   yes    %7.4f  %7.4f"
              % (row.values["g1"], row.values["g2"], row.s12, row.s21))
    else:
        print(" %4.1f   %4.1f   no         -        -"
              % (row.values["g1"], row.values["g2"]))

# The frontier: minimize s21 over the coupling box for each mechanical
# damping.  Steering of cavity 1 by cavity 2 survives all the way into
# the overdamped regime...
box = (AxisSpec("g1", 0.25, 10.0, 41), AxisSpec("g2", 0.25, 10.0, 41))
swept = AxisSpec("gamma_m", 0.1, 20.0, 5)

print()
print("minimized s21 over the (g1, g2) box:")
for point in minimize_steering(SweepSpec(base=base, axes=box, objective="s21"), swept):
    print("  gamma_m = %6.2f: min s21 = %.4f at g1 = %.3f, g2 = %.3f"
          % (point.swept_value, point.value,
             point.best["g1"], point.best["g2"]))

# ... while the reverse direction closes: at strong damping the minimum
# of s12 stays pinned above one no matter the couplings.
print()
print("minimized s12 over the same box:")
for point in minimize_steering(SweepSpec(base=base, axes=box, objective="s12"), swept):
    print("  gamma_m = %6.2f: min s12 = %.6f %s"
          % (point.swept_value, point.value,
             "(> 1: unattainable)" if point.value > 1.0 else ""))

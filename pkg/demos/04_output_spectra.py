"""
Steering in the output fields, frequency by frequency
=====================================================

What leaves the cavities is what a detector sees.  The output-field
transfer matrix turns the intracavity picture into spectra: inferred
variances, steering products and output occupations at each frequency.
This script maps the spectral steering landscape and its closed-form
landmarks — resonance dips, the thermal window, and the damping
threshold for spectral one-way steering.
"""

import numpy as np

from steerkit import (
    SystemParams,
    resonance_frequencies,
    spectral_oneway_threshold,
    spectrum,
    spectrum_point,
    thermal_window,
)

params = SystemParams(
    kappa1=1.0, kappa2=1.0, g1=6.0, g2=10.0, gamma_m=0.01, n_th=0.0
)

# The steering products dip below one only near the collective
# resonances: omega = 0 and +-sqrt(Omega^2 - kappa^2).
marks = resonance_frequencies(params)
print("predicted resonances:", ", ".join("%+.4f" % w for w in marks))

grid = np.linspace(-12.0, 12.0, 2401)
table = spectrum(params, grid)
s12 = np.asarray(table.s12)
dips = [float(grid[i]) for i in range(1, len(grid) - 1)
        if s12[i] < s12[i - 1] and s12[i] < s12[i + 1] and s12[i] < 1.0]
print("observed steering dips:", ", ".join("%+.4f" % w for w in dips))

# Show the spectrum near one sideband.
print()
print(" omega    var_x1   var_x2     s12      s21")
for w in (-9.0, -7.94, -6.0, 0.0, 6.0, 7.94, 9.0):
    pt = spectrum_point(params, w)
    print("%+6.2f   %7.4f  %7.4f  %7.4f  %7.4f"
          % (w, pt.var_x1, pt.var_x2, pt.s12, pt.s21))

# Heating the mechanical bath kills the two directions at different
# rates, opening a window of one-way steering in the bath occupation.
window = thermal_window(params)
print()
print("thermal one-way window: n_th in (%.0f, %.0f)" % window)
for n_th in (0.0, 3600.0, 5000.0, 9999.0):
    pt = spectrum_point(params.with_(n_th=n_th), 0.0)
    print("  n_th = %6.0f: s12[0] = %8.4f, s21[0] = %8.4f"
          % (n_th, pt.s12, pt.s21))

# At strong mechanical damping the direction locks: above the threshold
# gamma_m* = g2^2/kappa only cavity 2 can steer, at every frequency.
weak = SystemParams(1.0, 1.0, 2.0, 3.0, 12.0, 0.0)
print()
print("damping threshold gamma_m* = %.1f" % spectral_oneway_threshold(weak))
for gamma_m in (4.0, 12.0):
    probe = weak.with_(gamma_m=gamma_m)
    t = spectrum(probe, np.linspace(-10.0, 10.0, 2001))
    print("  gamma_m = %4.1f: max s21 = %.4f, min s12 = %.4f"
          % (gamma_m, float(np.max(t.s21)), float(np.min(t.s12))))

"""
The wheel integral behind the charge anomaly
============================================

∫_{[ε,L]^d} ε/(ε+Σt)^{d+1} tends to 1/(d+1)!, which turns the trace of
ρ^{d+1} into the Chern character.
"""

from fractions import Fraction
from math import factorial

from higherkm.core import format_scalar
from higherkm.currents import sl2_fundamental
from higherkm.anomaly import QuadratureConfig, wheel_integral, extrapolate_eps, anomaly_coefficient

for d in (1, 2, 3):
    cfg = QuadratureConfig(d, eps=Fraction(1, 10000), tol=1e-8)
    runs, rich, err = extrapolate_eps(cfg, 2)
    print("d=%d  I(ε)=%.8f  extrapolated %.10f  1/(d+1)! = %.10f" % (
        d, runs[0].value, rich[-1], 1 / factorial(d + 1)))

# the limit does not depend on L
for L in (1, 2, 4):
    print("L=%d  I=%.8f" % (L, wheel_integral(QuadratureConfig(2, L=L, tol=1e-9)).value))

ch, pre = anomaly_coefficient(sl2_fundamental(), 1)
print("sl2 fundamental, d=1:", ch.values, "times", format_scalar(pre))

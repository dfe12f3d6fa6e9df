"""The wheel integral and the anomaly coefficient."""

from .quadrature import (QuadratureConfig, QuadratureResult, ToleranceNotReached, GenzMalik,
                         adaptive_cubature, wheel_integral, wheel_integral_exact_d1,
                         extrapolate_eps)
from .coefficient import anomaly_coefficient

"""Independent reference computations for freezing expected test values.

Everything here is deliberately brute force — composite fixed rules and
closed-form coefficient sums — and shares no code with the package's own
adaptive quadrature.
"""

import math

import numpy as np


def composite_simpson(f, a, b, panels):
    """Composite Simpson rule with ``panels`` parabolic panels."""
    x = np.linspace(a, b, 2 * panels + 1)
    y = f(x)
    h = (b - a) / (2 * panels)
    return float((h / 3.0) * (y[0] + y[-1] + 4.0 * y[1::2].sum() + 2.0 * y[2:-1:2].sum()))


def sinc_block_magnitude(nu, panels=10**6):
    """``|integral of sin(g)/g|`` over ``[(nu-1) pi, nu pi]`` by brute force."""
    value = composite_simpson(lambda g: np.sinc(g / math.pi),
                              (nu - 1) * math.pi, nu * math.pi, panels)
    return abs(value)


def sawtooth_sine_coefficient(k):
    """Sine coefficient of the identity function, by parts: 2 (-1)^(k+1) / k."""
    return 2.0 * (-1.0) ** (k + 1) / k


def sawtooth_partial_sum(x, n):
    k = np.arange(1, n + 1, dtype=np.float64)
    return float(np.sum(2.0 * (-1.0) ** (k + 1) / k * np.sin(k * x)))


def square_sine_coefficient(k):
    """Sine coefficient of the odd unit step: 4/(pi k) for odd k, else 0."""
    return 0.0 if k % 2 == 0 else 4.0 / (math.pi * k)


def square_partial_sum(x, n):
    k = np.arange(1, n + 1, dtype=np.float64)
    coeff = np.where(k % 2 == 1, 4.0 / (math.pi * k), 0.0)
    return float(np.sum(coeff * np.sin(k * x)))

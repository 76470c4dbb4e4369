"""Closed-form oracles that do not touch the package under test."""

import math


def stirling_gamma(x, shift=30):
    # Stirling series at x + shift, then recur down
    y = x + shift
    series = 1 / (12 * y) - 1 / (360 * y**3) + 1 / (1260 * y**5) - 1 / (1680 * y**7)
    log_g = (y - 0.5) * math.log(y) - y + 0.5 * math.log(2 * math.pi) + series
    log_prod = sum(math.log(x + k) for k in range(shift))
    return math.exp(log_g - log_prod)


def erfc_oracle(x):
    """erfc for x >= 0: Maclaurin series of erf below 2, Lentz continued fraction above."""
    if x < 2:
        erf = sum((-1) ** n * x ** (2 * n + 1) / (math.factorial(n) * (2 * n + 1)) for n in range(60))
        return 1 - 2 / math.sqrt(math.pi) * erf
    # erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    f = x
    c, d = x, 0.0
    for k in range(1, 200):
        a = k / 2
        d = 1 / (x + a * d)
        c = x + a / c
        delta = c * d
        f *= delta
        if abs(delta - 1) < 1e-16:
            break
    return math.exp(-x * x) / (math.sqrt(math.pi) * f)


def ml_half(x):
    """E_{1/2}(-x) = exp(x^2) erfc(x) for moderate x >= 0."""
    return math.exp(x * x) * erfc_oracle(x)

"""q-arithmetic primitives: brackets, factorials, Pochhammer products, and
the coefficient weights of the starlike membership criterion.

Every function here is a pure function of plain floats.  Ratios of q-gamma
values are always reduced to finite Pochhammer products, so the gamma
function is never evaluated at a non-integer argument.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# q is kept strictly inside (0, 1); the upper bound still admits the
# near-classical regime q = 1 - 1e-6 used by the limit checks.
Q_MIN = 1.0e-6
Q_MAX = 1.0 - 1.0e-6


@dataclass(frozen=True)
class ClassParams:
    """Parameter tuple (q, lam, alpha, k) of the starlike class, plus the
    series truncation order shared by all series in one computation."""

    q: float
    lam: float = 0.0
    alpha: float = 0.0
    k: float = 0.0
    trunc: int = 64

    def __post_init__(self) -> None:
        if not Q_MIN <= self.q <= Q_MAX:
            raise ValueError(f"q must lie in [{Q_MIN:g}, {Q_MAX}], got {self.q}")
        if not self.lam > -1.0:
            raise ValueError(f"lambda must be > -1, got {self.lam}")
        if not 0.0 <= self.alpha < 1.0:
            raise ValueError(f"alpha must lie in [0, 1), got {self.alpha}")
        if not self.k >= 0.0:
            raise ValueError(f"k must be >= 0, got {self.k}")
        if self.trunc < 2:
            raise ValueError(f"trunc must be >= 2, got {self.trunc}")


def basic_number(t: float, q: float) -> float:
    """[t] = (1 - q**t) / (1 - q); equals 1 + q + ... + q**(t-1) for integer
    t and tends to t as q -> 1."""
    return (1.0 - q**t) / (1.0 - q)


def q_factorial(n: int, q: float) -> float:
    """[n]! = [1][2]...[n]; empty product 1 for n = 0."""
    out = 1.0
    for j in range(1, n + 1):
        out *= basic_number(j, q)
    return out


def q_pochhammer(t: float, n: int, q: float) -> float:
    """Rising product [t][t+1]...[t+n-1] of q-brackets; [t]_0 = 1."""
    out = 1.0
    for j in range(n):
        out *= basic_number(t + j, q)
    return out


def ruscheweyh_coeff(n: int, lam: float, q: float) -> float:
    """Coefficient of z**n in the Ruscheweyh convolution kernel.

    Computed as the Pochhammer ratio [lam+1]_{n-1} / [n-1]!, the reduced
    form of the defining q-gamma ratio.  Requires n >= 2 and lam > -1 so
    every factor is strictly positive.
    """
    return q_pochhammer(lam + 1.0, n - 1, q) / q_factorial(n - 1, q)


def criterion_weight(n: int, params: ClassParams) -> float:
    """Weight multiplying |a_n| in the sufficient membership condition:
    ([n](1+k) - k - alpha) times the kernel coefficient.

    Strictly positive for n >= 2 under the parameter domain, since
    [n] >= 1 + q > 1 >= (k + alpha) / (1 + k).
    """
    bracket = basic_number(n, params.q)
    factor = bracket * (1.0 + params.k) - params.k - params.alpha
    return factor * ruscheweyh_coeff(n, params.lam, params.q)


def criterion_weights(params: ClassParams, order: int | None = None) -> np.ndarray:
    """Weights for n = 2..order as an array (order defaults to trunc)."""
    top = params.trunc if order is None else order
    return np.array([criterion_weight(n, params) for n in range(2, top + 1)])

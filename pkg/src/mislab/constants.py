"""Numerical constants of the counting bounds, as floats and as 50-digit
``mpmath`` values for guarded comparisons."""

from __future__ import annotations

import math

import mpmath

DPS = 50

LOG2_3 = math.log2(3)
LOG2_E = math.log2(math.e)


def _furedi_root() -> mpmath.mpf:
    # real root of g^3 = g + 1 (plastic number), Newton from 1.3
    with mpmath.workdps(DPS):
        return mpmath.findroot(lambda x: x**3 - x - 1, mpmath.mpf("1.3"))


GAMMA_MP = _furedi_root()
GAMMA = float(GAMMA_MP)

# General graphs: per-step geometric ratios and their decay rates.
ALPHA1_ITM = 4 * 3 ** (-4 / 3)
ALPHA_ITM = -math.log2(ALPHA1_ITM)  # = (4/3) log2 3 - 2
BETA1_ITM = 2**0.5 * 3 ** (-1 / 3)
BETA_ITM = -math.log2(BETA1_ITM)  # = (1/3) log2 3 - 1/2

# Triangle-free graphs.
ALPHA1_IM = 2**-0.5 + 0.25
ALPHA_IM = -math.log2(ALPHA1_IM)
BETA1_IM = 2**-0.5 * (3 * GAMMA) ** 0.25
BETA_IM = -math.log2(BETA1_IM)  # = 1/2 - (1/4) log2(3 gamma)

LOG2_3GAMMA = math.log2(3 * GAMMA)

# Binary-entropy deficit at 1/3; named apart from the path/cycle root.
GAMMA_ENT = 1.0 - (LOG2_3 - 2 / 3)


def theta(eps: float, M: int) -> float:
    """Per-vertex entropy gain ``(eps/2) (2M 2^M)^-1 log2 e``."""
    return (eps / 2) * LOG2_E / (2 * M * 2**M)


def default_M(eps: float) -> int:
    """Degree threshold ``ceil(12/eps)``."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    return math.ceil(12 / eps - 1e-12)


def all_constants() -> dict[str, float]:
    return {
        "alpha_itm": ALPHA_ITM,
        "beta_itm": BETA_ITM,
        "alpha_im": ALPHA_IM,
        "beta_im": BETA_IM,
        "gamma": GAMMA,
        "gamma_ent": GAMMA_ENT,
    }


with mpmath.workdps(DPS):
    ALPHA1_ITM_MP = 4 * mpmath.mpf(3) ** (mpmath.mpf(-4) / 3)
    BETA1_ITM_MP = mpmath.sqrt(2) * mpmath.mpf(3) ** (mpmath.mpf(-1) / 3)
    ALPHA1_IM_MP = 1 / mpmath.sqrt(2) + mpmath.mpf(1) / 4
    BETA1_IM_MP = (3 * GAMMA_MP) ** (mpmath.mpf(1) / 4) / mpmath.sqrt(2)

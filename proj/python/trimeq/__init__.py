"""Longitudinal flight trim conditions.

Thin wrapper around the compiled extension: an equilibrium-orientation
solver on the circle, analytic and tabulated aerodynamic coefficient
models, and mechanical checks of the symmetry/stall existence results.
Angles are radians unless a name says otherwise.
"""

from trimeq._core import *  # noqa: F401,F403
from trimeq._core import __version__  # noqa: F401

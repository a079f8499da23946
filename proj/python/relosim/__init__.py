"""Robot-assisted sensor relocation simulator.

Seeded Poisson deployments, coverage/interference target plans, greedy
robot transport schedules on the line and plane, cost bounds, and a
deterministic Monte Carlo sweep harness.
"""

from relosim._core import *  # noqa: F401,F403
from relosim._core import __doc__ as _core_doc

__version__ = "0.1.0"

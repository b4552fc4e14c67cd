"""Sensor-network topology simulator.

Constructions for symmetric k-NN, symmetric (k,j)-NN, random geometric, and
composite (k,j)-NN+disk graphs on uniform point clouds, plus a seeded Monte
Carlo harness for connectivity and degree experiments.  Everything is
implemented in the C++ extension module; this package just re-exports it.
"""

from ._kjnn import *  # noqa: F401,F403
from ._kjnn import __version__  # noqa: F401

"""Finite-field power-sum toolkit: fields F_q, d-th power images, coverage
witnesses, diagonal-equation counting, additive characters, and the
averaging-bound checks, all backed by the C++ core."""

from ._ffsums import *  # noqa: F401,F403
from ._ffsums import __version__  # noqa: F401

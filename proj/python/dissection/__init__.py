"""Exact computations in the parameterized Hopf algebra of dissection diagrams."""

from ._core import *  # noqa: F401,F403

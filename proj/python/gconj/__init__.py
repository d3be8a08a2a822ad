"""Face numbers, face rings and bistellar moves of simplicial complexes."""

from ._core import *  # noqa: F401,F403
from ._core import GconjError, Complex, BistellarMove

__all__ = [name for name in dir() if not name.startswith("_")]

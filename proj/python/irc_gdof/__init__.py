"""GDoF of the symmetric Gaussian interference relay channel."""

from ._core import *  # noqa: F401,F403
from ._core import (
    IrcError,
    DomainError,
    RegimeError,
    DegenerateChannelError,
    InfeasibleAllocationError,
)

__version__ = "0.1.0"

"""Exact minimum hitting sets for line-constrained and line-separable disks."""

from ._hitset import *  # noqa: F401,F403
from ._hitset import HitsetError, __doc__  # noqa: F401

# SPDX-License-Identifier: Apache-2.0
"""Inelastic diffraction of weakly bound dimers by transmission gratings."""

from ._core import *  # noqa: F401,F403
from ._core import __version__, units  # noqa: F401

"""Spectral-mode analysis of single-photon subtraction from multimode squeezed light.

Everything lives in the compiled extension; this package re-exports it.
"""

from photonsub._core import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]

"""Schur/Fourier multiplier transfer laboratory.

Thin Python facade over the C++ core: Schatten(-Orlicz) norms, Toeplitz
and grid transfers of Fourier symbols, multiplier norm estimation,
truncation moment convergence, and the constructive rank-one extension.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401

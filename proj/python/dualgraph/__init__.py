"""Exact invariants of SNC-divisor dual graphs.

Determinants, continued-fraction chains, barks, exceptional-fork
enumeration and the comb/fork elimination scan, all in exact rational
arithmetic. Fractions come back as fractions.Fraction.
"""

from dualgraph._core import *  # noqa: F401,F403
from dualgraph._core import __version__  # noqa: F401

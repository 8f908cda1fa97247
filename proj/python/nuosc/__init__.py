"""Closed-form spectra and observables of an oscillator with an inverse-quadratic
term in a magnetic field, with numerical cross-checks."""

from ._nuosc import *  # noqa: F401,F403
from ._nuosc import __doc__  # noqa: F401

__version__ = "0.1.0"

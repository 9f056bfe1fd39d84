# -*- coding: utf-8 -*-
"""
Exception hierarchy shared by all packages.
Each class carries the exit code the CLI returns for it.
"""


class SpinWaveError(Exception):
    """Base class for every error raised by this project"""

    exit_code = 1


class ValidationError(SpinWaveError):
    """Invalid input: lattice shape, sector index, config key, length mismatch"""

    exit_code = 1


class CapacityError(SpinWaveError):
    """A dimension cap, the bitmask cap or an integer overflow guard was hit"""

    exit_code = 2


class SpectralError(SpinWaveError):
    """Numerical breakdown in an eigensolve or decomposition"""

    exit_code = 2


class RankMismatchError(SpectralError):
    """Exact integer rank and singular-value rank disagree"""


class VerificationError(SpinWaveError):
    """At least one check of the verify suite failed"""

    exit_code = 3

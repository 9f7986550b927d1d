"""Exception hierarchy shared by all hyposhift modules."""


class HyposhiftError(Exception):
    """Base class for every error raised by this package."""


# linalg_core
class NonHermitianInput(HyposhiftError):
    pass


class SingularResolvent(HyposhiftError):
    pass


# shift models
class InvalidDimension(HyposhiftError):
    pass


class NoLimitDeclared(HyposhiftError):
    pass


# Mobius maps
class PoleHit(HyposhiftError):
    pass


class NotAContraction(HyposhiftError):
    pass


class ZeroCenter(HyposhiftError):
    pass


class SingularInput(HyposhiftError):
    pass


# determinants
class NotPSD(HyposhiftError):
    pass


class SeriesDivergent(HyposhiftError):
    pass


class SpectrumHit(HyposhiftError):
    pass


class NotRankOne(HyposhiftError):
    pass


# principal function
class TooCloseToCurve(HyposhiftError):
    pass


class OnEssentialSpectrum(HyposhiftError):
    pass


class EvaluationInsideDisc(HyposhiftError):
    pass


# trace formulas
class DimensionTooSmall(HyposhiftError):
    pass


class DomainError(HyposhiftError):
    pass


# CLI
class ConfigError(HyposhiftError):
    """Invalid experiment configuration; message carries a field path."""


class IoError(HyposhiftError):
    pass

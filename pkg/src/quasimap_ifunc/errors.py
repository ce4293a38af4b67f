"""Exception types shared across the package."""


class ConfigError(Exception):
    """Bad job configuration or presentation data (CLI exit code 2)."""


class ValidationError(ConfigError):
    """A GIT presentation failed its consistency checks."""


class UnboundedFiberError(Exception):
    """Curve class enumeration hit a non-compact search region
    (CLI exit code 4)."""


class PipelineIntegrityError(Exception):
    """An internal exactness gate failed: anti-invariance, exact division
    or invariance checks (CLI exit code 3)."""


class NonUnitInversionError(PipelineIntegrityError):
    """An inversion was requested for a factor that is not a unit.  These
    denominators must be cleared through the Weyl numerator instead."""

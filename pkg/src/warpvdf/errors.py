"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside the region where the math is defined."""


class InfeasibleSpecError(ValueError):
    """A prototype specification cannot be met within the order cap."""


class TuningInfeasibleError(ValueError):
    """No (alpha, M) pair realizes the requested center/bandwidth."""


class NyquistError(TuningInfeasibleError):
    """Decimation would push the stretched passband past Nyquist."""


class NotBandpassError(ValueError):
    """A response curve has no measurable bandpass shape."""

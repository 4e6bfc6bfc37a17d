"""Exception types shared by all modules."""


class GenericityError(ValueError):
    """A parameter set hits the excluded variety: some named factor vanishes."""

    def __init__(self, factor, detail=""):
        self.factor = factor
        self.detail = detail
        msg = f"non-generic parameters: factor {factor} vanishes"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class PoleError(GenericityError):
    """A denominator Pochhammer symbol of a terminating series vanishes."""

    def __init__(self, index, k, base=None):
        self.index = index
        self.k = k
        self.base = base
        detail = f"lower parameter #{index} = {base} gives (b;q)_{k} = 0"
        super().__init__(f"lower[{index}]", detail)


class NondegeneracyError(ValueError):
    """Favard-type data has a vanishing off-diagonal coefficient."""


class ConfigError(ValueError):
    """Malformed run configuration."""


class GenericityExhausted(RuntimeError):
    """Resampling failed to find a generic parameter set."""

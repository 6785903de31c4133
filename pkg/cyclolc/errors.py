"""Exception hierarchy for cyclotomic-lc."""


class CycloError(Exception):
    """Base class for all errors raised by cyclolc."""

    exit_code = 1


class ParameterError(CycloError, ValueError):
    """Invalid sequence parameters or arguments."""

    exit_code = 2


class NotAUnitError(ParameterError):
    """An element is not invertible modulo the given modulus."""

    def __init__(self, a: int, modulus: int):
        super().__init__(f"not a unit: {a} mod {modulus}")
        self.a = a
        self.modulus = modulus


class GridTooLargeError(ParameterError):
    """A verification grid exceeds the configured analysis cap."""


class ConfigError(CycloError):
    """A configuration file or environment value is malformed."""

    exit_code = 2


class FieldTooLargeError(CycloError):
    """The extension degree of GF(2^n) is above the configured limit."""

    def __init__(self, n: int, limit: int):
        super().__init__(
            f"extension degree n={n} exceeds limit {limit}; "
            "use the GCD path (no field check) for this parameter set"
        )
        self.n = n
        self.limit = limit


class InconsistencyError(CycloError):
    """Two independent computations disagree; indicates a bug."""

    exit_code = 3

"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Base class for configuration problems (CLI exit code 2)."""


class ConfigParseError(ConfigError):
    """The configuration file is not valid YAML."""


class SchemaError(ConfigError):
    """A key is unknown, missing, or has the wrong type."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class InvariantError(ConfigError):
    """A value violates a physical or structural invariant."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")

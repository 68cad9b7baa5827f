"""Exception hierarchy shared across the engine."""


class EngineError(Exception):
    """Base class for all engine failures the CLI maps to exit code 1."""


class InvalidSeedError(EngineError, ValueError):
    """Seed token is empty after normalization."""


class InvalidParamsError(EngineError, ValueError):
    """Grid parameters produce an empty interval or violate their bounds."""


class EquationSyntaxError(EngineError, ValueError):
    """Equation text rejected; carries the byte offset and offending token."""

    def __init__(self, message: str, offset: int, token: str = ""):
        self.offset = offset
        self.token = token
        detail = f"{message} at offset {offset}"
        if token:
            detail += f": {token!r}"
        super().__init__(detail)


class RenderError(EngineError, ValueError):
    """Bad rendering input (empty artwork, bad dimensions, color mismatch)."""


class UnknownColorError(RenderError):
    """Color name not in the published table and not a hex literal."""


class ConfigError(EngineError, ValueError):
    """Config/data document rejected; message names the JSON path."""

    def __init__(self, message: str, path: str = "$"):
        self.path = path
        super().__init__(f"{path}: {message}")

"""Exception types shared across the package."""

from __future__ import annotations


class SatEnvError(Exception):
    """Base class of all package-specific errors."""


class ParseError(SatEnvError):
    """Malformed TPTP input; carries the source position when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None,
                 filename: str | None = None):
        self.line = line
        self.column = column
        self.filename = filename
        where = ""
        if filename is not None:
            where += f"{filename}:"
        if line is not None:
            where += f"{line}:"
            if column is not None:
                where += f"{column}:"
        super().__init__(f"{where} {message}" if where else message)


class UnsupportedFormula(ParseError):
    """A non-CNF annotated formula (fof/tff/thf) was encountered."""


class IncludeNotFound(ParseError):
    """No include root resolved an include target."""


class IncludeCycle(ParseError):
    """Include directives form a cycle."""


class DecodeError(SatEnvError):
    """A JSON clause document violates the schema; names the first bad path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class EnvError(SatEnvError):
    """Base class for environment usage errors."""


class InvalidAction(EnvError):
    """The action does not address an unprocessed clause; state is unchanged."""


class NoActiveEpisode(EnvError):
    """reset() has not been called on this environment yet."""


class NoProof(EnvError):
    """tstp_proof() was called but the last outcome is not proof_found."""


class NoUnprocessed(EnvError):
    """An agent was asked to select from a table with no unprocessed clause."""

"""Exception hierarchy shared by the whole package.

The CLI maps these onto exit codes: ``ParseError`` means the input text
itself is malformed (exit 2), every other ``TrieventError`` is a domain
or resource problem with well-formed input (exit 1).
"""


class TrieventError(Exception):
    """Base class for all errors raised by this package."""


class SpaceMismatchError(TrieventError):
    """Two objects built over different world spaces were combined."""


class DomainError(TrieventError):
    """An operation was applied outside its mathematical domain.

    Typical causes: conditioning on the impossible event, a basic
    conditional with an impossible antecedent, or asking for the
    canonical atom probability under a non-positive probability.
    """


class ModelError(TrieventError):
    """A model file is syntactically fine but semantically invalid.

    Covers unknown event/world names, duplicate declarations, and layer
    families that do not form a probability distribution partition.
    """


class AtomLimitError(TrieventError):
    """Atom enumeration was requested beyond the configured factorial gate."""


class ParseError(TrieventError):
    """Malformed input text; carries a position when one is known."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None and column is not None:
            where = f"line {line}, column {column}: "
        elif column is not None:
            where = f"column {column}: "
        super().__init__(where + message)

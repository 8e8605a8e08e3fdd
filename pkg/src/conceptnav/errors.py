"""Exception types shared across the engine.

The service layer maps these onto HTTP status codes (CorpusError -> 400,
UnknownItemError -> 404, InvalidTransitionError -> 409) and the CLI maps
them onto exit code 1.
"""


class CorpusError(ValueError):
    """An input artifact (corpus index, ontology, contexts XML, trace file)
    is malformed or violates a structural invariant."""


class UnknownItemError(LookupError):
    """A referenced id (concept, context, video, session) does not exist."""


class InvalidTransitionError(RuntimeError):
    """A navigation command is not legal in the session's current state."""

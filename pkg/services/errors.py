"""Exception hierarchy for torus-monodromy."""


class MonodromyError(Exception):
    """Base class for every error raised by the kernel."""


class NonPrimitiveClassError(MonodromyError, ValueError):
    """A homology class used as a curve is not primitive."""


class FactorizationError(MonodromyError, ValueError):
    """A factorization is malformed or a move cannot be applied to it."""


class FactorCountError(FactorizationError):
    """An operation that needs exactly three factors got another count."""


class RegistryError(MonodromyError, RuntimeError):
    """A canonical registry row failed validation at load."""


class MarkovError(MonodromyError, ValueError):
    """Invalid Markov-type equation, solution or mutation."""


class HypothesisError(MonodromyError, ValueError):
    """The twist identity assumed by the intersection identity does not hold."""


class CodecError(MonodromyError, ValueError):
    """Malformed JSON input."""


class ConsistencyError(MonodromyError, RuntimeError):
    """A computed result failed its own post-check."""


class ClassificationError(MonodromyError, RuntimeError):
    """A classification stage failed.

    ``stage`` is one of ``identity``, ``orient``, ``reduce``, ``normalize``,
    ``conjugate`` or ``replay``.
    """

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
        self.message = message

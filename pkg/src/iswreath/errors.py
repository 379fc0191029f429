"""Exception hierarchy shared by all modules."""


class SemigroupError(ValueError):
    """Base class for every error raised by this package."""


class PointOutOfRange(SemigroupError):
    pass


class DuplicateSource(SemigroupError):
    pass


class DuplicateImage(SemigroupError):
    pass


class DuplicatePoint(SemigroupError):
    pass


class EmptySupport(SemigroupError):
    pass


class RankMismatch(SemigroupError):
    pass


class RankTooLarge(SemigroupError):
    pass


class NotIdempotent(SemigroupError):
    pass


class InvalidPartition(SemigroupError):
    pass


class InvalidWreathElement(SemigroupError):
    pass


class NotCrossSection(SemigroupError):
    pass


class ComponentNotCrossSection(NotCrossSection):
    pass


class AmbientTooLarge(SemigroupError):
    pass


class NoPartitionRecoverable(SemigroupError):
    pass


class TooLarge(SemigroupError):
    pass


class NoIdentity(SemigroupError):
    pass


class NotClosed(SemigroupError):
    """A product of two listed elements falls outside the list."""


class NotIsomorphism(SemigroupError):
    pass


class TheoremFalsified(NotIsomorphism):
    """A verified isomorphism admits no conjugating witness.

    Raised only when a post-check that the classification results guarantee
    fails. It is never caught inside the package.
    """


class ParseError(SemigroupError):
    pass

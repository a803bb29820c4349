"""Exception types shared across the package."""


class PpmlRankError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(PpmlRankError):
    """A record document is structurally malformed and cannot be built."""


class ValidationError(PpmlRankError):
    """A record parsed but violates one or more model invariants.

    Carries the full violation list so callers can report every problem
    at once instead of failing on the first.
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class DuplicateIdError(PpmlRankError):
    """Two records in one catalog claim the same id."""


class NotFoundError(PpmlRankError):
    """A framework id is not present in the catalog."""


class MissingMaximumError(PpmlRankError):
    """A result entry references a dataset with no recorded maximum."""


class UnknownVocabularyError(PpmlRankError):
    """A search term does not appear in the catalog vocabularies."""


class InvalidQueryError(PpmlRankError):
    """A query parameter could not be decoded."""


class InvalidFilterError(PpmlRankError):
    """A filter is unknown or does not apply to a record's technique."""


class OutOfRangeError(PpmlRankError):
    """A weight value lies outside its permitted range."""

class PartfinError(Exception):
    """Base class for every error raised by partfin."""


class PreconditionError(PartfinError, ValueError):
    pass


class FormatError(PartfinError, ValueError):
    pass


class LimitExceeded(PartfinError):
    def __init__(self, what, value, limit):
        super().__init__(f"{what} = {value} exceeds the enumeration limit {limit}")
        self.what = what
        self.value = value
        self.limit = limit


class NotInRange(PartfinError):
    """A decoder was given a partition outside its encoder's image."""

    def __init__(self, diagnosis):
        super().__init__(f"not in range: {diagnosis}")
        self.diagnosis = diagnosis


class EscapeCollision(PartfinError):
    def __init__(self, first, second, value, cause):
        super().__init__(f"s_{first} == s_{second} == {value!r}: {cause}")
        self.first = first
        self.second = second
        self.value = value
        self.cause = cause


class StreamExhausted(PartfinError):
    def __init__(self, emitted):
        super().__init__(f"no fresh label after {len(emitted)} emitted")
        self.emitted = tuple(emitted)


class CharacterizationFailure(PartfinError):
    """An exhaustive double-check disagreed with the closed-form description."""

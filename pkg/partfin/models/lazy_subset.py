import re
import threading
from dataclasses import dataclass
from functools import total_ordering

from partfin.errors import FormatError, PreconditionError


@total_ordering
@dataclass(frozen=True)
class TwoCopyOrdinal:
    """An index into omega + omega: ``index`` (copy 0) or omega + ``index`` (copy 1)."""

    copy: int
    index: int

    def __post_init__(self):
        if self.copy not in (0, 1):
            raise PreconditionError(f"copy must be 0 or 1, got {self.copy}")
        if self.index < 0:
            raise PreconditionError(f"index must be nonnegative, got {self.index}")

    def __lt__(self, other):
        if not isinstance(other, TwoCopyOrdinal):
            return NotImplemented
        return (self.copy, self.index) < (other.copy, other.index)

    def __repr__(self):
        return f"({self.copy},{self.index})"


class LazySubset:
    """Membership oracle, memoized behind a lock."""

    def __init__(self, oracle, description):
        self._oracle = oracle
        self.description = description
        self._memo = {}
        self._lock = threading.Lock()

    def __contains__(self, xi):
        if xi < 0:
            return False

        with self._lock:
            if xi in self._memo:
                return self._memo[xi]

        answer = bool(self._oracle(xi))

        with self._lock:
            self._memo[xi] = answer
        return answer

    def members(self, window):
        return [xi for xi in range(window + 1) if xi in self]

    def bits(self, window):
        return "".join("1" if xi in self else "0" for xi in range(window + 1))

    def __repr__(self):
        return f"<LazySubset {self.description}>"


class BaseFamily:
    """Indexed family m -> LazySubset, built from a textual description.

    Accepted forms: ``singleton:m`` and ``upto:m`` (sets vary with m),
    ``singleton:N`` and ``upto:N`` with an integer N (constant family),
    ``evens``, ``odds``, ``periodic:PATTERN`` with PATTERN over 0/1.
    """

    _PATTERN = re.compile(r"^(singleton|upto):(m|\d+)$|^(evens|odds)$|^periodic:([01]+)$")

    def __init__(self, description):
        description = description.strip()
        match = self._PATTERN.match(description)
        if not match:
            raise FormatError(f"unrecognized base family description {description!r}")

        self.description = description
        self._build = self._parse(match)
        self._cache = {}
        self._lock = threading.Lock()

    @staticmethod
    def _parse(match):
        kind, arg, parity, pattern = match.groups()

        if kind == "singleton":
            if arg == "m":
                return lambda m: (lambda xi: xi == m, f"{{{m}}}")
            fixed = int(arg)
            return lambda m: (lambda xi: xi == fixed, f"{{{fixed}}}")

        if kind == "upto":
            if arg == "m":
                return lambda m: (lambda xi: xi <= m, f"0..{m}")
            fixed = int(arg)
            return lambda m: (lambda xi: xi <= fixed, f"0..{fixed}")

        if parity == "evens":
            return lambda m: (lambda xi: xi % 2 == 0, "evens")
        if parity == "odds":
            return lambda m: (lambda xi: xi % 2 == 1, "odds")

        period = len(pattern)
        return lambda m: (lambda xi: pattern[xi % period] == "1", f"periodic {pattern}")

    def __call__(self, m):
        if m < 0:
            raise PreconditionError(f"family index must be nonnegative, got {m}")

        with self._lock:
            cached = self._cache.get(m)
        if cached is not None:
            return cached

        oracle, label = self._build(m)
        subset = LazySubset(oracle, f"base({m}) = {label}")

        with self._lock:
            return self._cache.setdefault(m, subset)

    def __repr__(self):
        return f"<BaseFamily {self.description}>"

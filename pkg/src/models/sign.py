"""Sign values: the multiplicative group {+1, -1}."""

from enum import IntEnum
from typing import Iterable


class Sign(IntEnum):
    """An element of O(1) = {+1, -1}.

    Products of signs stay signs; products with other numbers fall back to
    ordinary integer arithmetic, so ``Sign.MINUS * Fraction(1, 2)`` is ``-1/2``.
    """

    PLUS = 1
    MINUS = -1

    def __mul__(self, other):
        if isinstance(other, int) and other in (1, -1):
            return Sign(int(self) * int(other))
        return int(self) * other

    __rmul__ = __mul__

    def __neg__(self) -> "Sign":
        return Sign(-int(self))

    @property
    def symbol(self) -> str:
        """Single character used in listings."""
        return "+" if self is Sign.PLUS else "-"

    @property
    def is_odd(self) -> bool:
        """True for -1."""
        return self is Sign.MINUS

    @classmethod
    def of(cls, value: int) -> "Sign":
        """Coerce +1/-1 (or a Sign) to Sign.

        Raises:
            ValueError: If value is not +1 or -1
        """
        if value not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {value!r}")
        return cls(int(value))

    @classmethod
    def product(cls, signs: Iterable[int]) -> "Sign":
        """Multiply an iterable of signs (empty product is PLUS)."""
        result = cls.PLUS
        for s in signs:
            result = result * s
        return result

    def __str__(self) -> str:
        return self.symbol

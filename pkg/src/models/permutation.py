"""Permutations of {0, ..., k-1}."""

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterator

from src.models.sign import Sign


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {0, ..., k-1}, stored as its image array.

    ``image[j]`` is where j goes. Composition ``p * q`` means "q first,
    then p", i.e. ``(p * q)(j) = p(q(j))``.

    Attributes:
        image: Tuple of images
    """

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"not a permutation: {self.image}")

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        """The identity permutation of degree k."""
        return cls(tuple(range(k)))

    @classmethod
    def transposition(cls, k: int, i: int, j: int) -> "Permutation":
        """Swap i and j in degree k."""
        image = list(range(k))
        image[i], image[j] = image[j], image[i]
        return cls(tuple(image))

    @classmethod
    def all(cls, k: int) -> Iterator["Permutation"]:
        """All permutations of degree k in lexicographic order."""
        for image in permutations(range(k)):
            yield cls(image)

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, j: int) -> int:
        return self.image[j]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.image[other.image[j]] for j in range(self.degree)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for j, target in enumerate(self.image):
            inv[target] = j
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(j == target for j, target in enumerate(self.image))

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Non-trivial cycles, each starting at its least element."""
        seen: set[int] = set()
        result = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.image[start]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.image[nxt]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return tuple(result)

    @cached_property
    def sign(self) -> Sign:
        """Parity of the permutation: (-1)^(sum of (cycle length - 1))."""
        transpositions = sum(len(c) - 1 for c in self.cycles)
        return Sign.MINUS if transpositions % 2 else Sign.PLUS

    @property
    def word(self) -> str:
        """Cycle notation with 1-based points, ``id`` for the identity."""
        if not self.cycles:
            return "id"
        return "".join("(" + " ".join(str(j + 1) for j in c) + ")" for c in self.cycles)

    @property
    def digits(self) -> str:
        """Compact one-line notation used inside morphism ids."""
        return ".".join(str(j) for j in self.image)

    def __str__(self) -> str:
        return self.word

    def __repr__(self) -> str:
        return f"Permutation({self.word}, degree={self.degree})"

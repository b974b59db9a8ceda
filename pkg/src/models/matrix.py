"""Exact rational matrices and vectors indexed by basepoints."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


def _as_fraction_array(values, shape: tuple[int, ...]) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    flat = np.asarray(values, dtype=object).reshape(-1) if np.size(values) else []
    if len(flat) != arr.size:
        raise ValueError(f"expected {arr.size} entries for shape {shape}, got {len(flat)}")
    for idx, value in enumerate(flat):
        arr.flat[idx] = Fraction(value)
    return arr


def format_rational(q: Fraction) -> str:
    """Render as ``num/den`` (or just ``num`` when integral)."""
    return str(Fraction(q))


@dataclass(frozen=True, eq=False)
class RationalMatrix:
    """Matrix of exact rationals with labeled rows and columns.

    Attributes:
        row_basis: Basepoint ids of the left foot's orientable components
        col_basis: Basepoint ids of the right foot's orientable components
        entries: Object-dtype numpy array of Fractions, shape (rows, cols)
    """

    row_basis: tuple[str, ...]
    col_basis: tuple[str, ...]
    entries: np.ndarray

    def __post_init__(self):
        shape = (len(self.row_basis), len(self.col_basis))
        object.__setattr__(self, "entries", _as_fraction_array(self.entries, shape))

    @classmethod
    def from_rows(
        cls,
        row_basis: Sequence[str],
        col_basis: Sequence[str],
        rows: Iterable[Iterable],
    ) -> "RationalMatrix":
        """Build from nested lists of numbers."""
        return cls(tuple(row_basis), tuple(col_basis), [list(r) for r in rows])

    @classmethod
    def identity(cls, basis: Sequence[str]) -> "RationalMatrix":
        n = len(basis)
        return cls(tuple(basis), tuple(basis), np.eye(n, dtype=int).astype(object))

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def is_square(self) -> bool:
        rows, cols = self.shape
        return rows == cols

    def entry(self, row: str, col: str) -> Fraction:
        return self.entries[self.row_basis.index(row), self.col_basis.index(col)]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.col_basis != other.row_basis:
            raise ValueError("inner bases differ")
        if not self.col_basis:
            product = np.zeros((len(self.row_basis), len(other.col_basis)), dtype=object)
        else:
            product = np.dot(self.entries, other.entries)
        return RationalMatrix(self.row_basis, other.col_basis, product)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.row_basis, self.col_basis, -self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (
            self.row_basis == other.row_basis
            and self.col_basis == other.col_basis
            and bool(np.array_equal(self.entries, other.entries))
        )

    def compact(self) -> str:
        """Literal form such as ``[[1,1],[1,2]]``."""
        return "[" + ",".join(
            "[" + ",".join(format_rational(q) for q in row) + "]" for row in self.entries
        ) + "]"

    def to_text(self) -> str:
        """Flat text: tab separated, header row of column labels, exact entries."""
        lines = ["\t".join(["", *self.col_basis])]
        for label, row in zip(self.row_basis, self.entries):
            lines.append("\t".join([label, *(format_rational(q) for q in row)]))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RationalMatrix":
        """Parse the output of to_text."""
        lines = text.rstrip("\n").split("\n")
        col_basis = tuple(lines[0].split("\t")[1:]) if lines[0] else ()
        row_basis, rows = [], []
        for line in lines[1:]:
            label, *cells = line.split("\t")
            row_basis.append(label)
            rows.append([Fraction(c) for c in cells])
        return cls(tuple(row_basis), col_basis, rows)

    def __str__(self) -> str:
        return f"RationalMatrix({self.shape[0]}x{self.shape[1]}, {self.compact()})"

    __repr__ = __str__


@dataclass(frozen=True, eq=False)
class RationalVector:
    """Vector of exact rationals over a basepoint basis.

    Attributes:
        basis: Basepoint ids
        entries: Object-dtype numpy array of Fractions
    """

    basis: tuple[str, ...]
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _as_fraction_array(self.entries, (len(self.basis),)))

    def entry(self, label: str) -> Fraction:
        return self.entries[self.basis.index(label)]

    def tolist(self) -> list[Fraction]:
        return list(self.entries)

    def __add__(self, other: "RationalVector") -> "RationalVector":
        if self.basis != other.basis:
            raise ValueError("bases differ")
        return RationalVector(self.basis, self.entries + other.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalVector):
            return NotImplemented
        return self.basis == other.basis and bool(np.array_equal(self.entries, other.entries))

    def to_text(self) -> str:
        return "".join(f"{b}\t{format_rational(q)}\n" for b, q in zip(self.basis, self.entries))

    def __str__(self) -> str:
        return "RationalVector(" + ", ".join(
            f"{b}: {format_rational(q)}" for b, q in zip(self.basis, self.entries)
        ) + ")"

    __repr__ = __str__

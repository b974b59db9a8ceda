"""Determinant-side report models: basepoints and fiber tables."""

from dataclasses import dataclass, field
from fractions import Fraction

import pandas as pd

from src.models.permutation import Permutation
from src.models.sign import Sign

LISTING_COLUMNS = ["row", "col", "element", "permutation", "sign", "aut", "material"]


@dataclass(frozen=True)
class Basepoints:
    """Canonical basepoints, one per orientable component.

    Attributes:
        points: Ordered tuple (x_1, ..., x_n)
        aut_product: |x_1!| * ... * |x_n!|
    """

    points: tuple[str, ...]
    aut_product: int

    @property
    def degree(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class FiberElement:
    """One component of a two-sided fiber of an exterior power span.

    Attributes:
        apex: Apex tuple of the representative point
        permutation: Permutation label of the component
        sign: Sign of the component
        aut_order: Automorphism group order of the component
    """

    apex: tuple[str, ...]
    permutation: Permutation
    sign: Sign
    aut_order: int = 1

    @property
    def label(self) -> str:
        """Juxtaposed apex entries, e.g. ``x·e``."""
        return "·".join(self.apex)

    def __str__(self) -> str:
        return f"({self.label},{self.permutation.word}){self.sign.symbol}"


@dataclass(frozen=True)
class FiberCell:
    """One cell (row component, column component) of a fiber table.

    Attributes:
        row: Row representative in the left exterior power
        col: Column representative in the right exterior power
        row_tuple: Row representative as a tuple
        col_tuple: Column representative as a tuple
        elements: Components of the fiber, canonically ordered
        net: Signed homotopy cardinality of the fiber
        material: True if both row and column are orientable
    """

    row: str
    col: str
    row_tuple: tuple[str, ...]
    col_tuple: tuple[str, ...]
    elements: tuple[FiberElement, ...]
    net: Fraction
    material: bool


@dataclass(frozen=True)
class FiberTableReport:
    """All two-sided fibers of a k-th exterior power span, per component pair.

    Attributes:
        k: Exterior degree
        rows: Row representatives (orientable first, then canonical order)
        cols: Column representatives, same ordering rule
        cells: (row, col) -> FiberCell
    """

    k: int
    rows: tuple[str, ...]
    cols: tuple[str, ...]
    cells: dict[tuple[str, str], FiberCell] = field(repr=False)

    def cell(self, row: tuple[str, ...] | str, col: tuple[str, ...] | str) -> FiberCell:
        """Look up a cell by representative id or by tuple."""
        for c in self.cells.values():
            if (c.row == row or c.row_tuple == row) and (c.col == col or c.col_tuple == col):
                return c
        raise KeyError((row, col))

    def material_cells(self) -> list[FiberCell]:
        return [c for c in self.cells.values() if c.material]

    def immaterial_cells(self) -> list[FiberCell]:
        return [c for c in self.cells.values() if not c.material]

    def listing(self) -> pd.DataFrame:
        """One row per fiber element, in table order."""
        records = []
        for row in self.rows:
            for col in self.cols:
                cell = self.cells[(row, col)]
                for el in cell.elements:
                    records.append(
                        {
                            "row": "·".join(cell.row_tuple),
                            "col": "·".join(cell.col_tuple),
                            "element": el.label,
                            "permutation": el.permutation.word,
                            "sign": el.sign.symbol,
                            "aut": el.aut_order,
                            "material": cell.material,
                        }
                    )
        return pd.DataFrame.from_records(records, columns=LISTING_COLUMNS)

    def to_tsv(self) -> str:
        """Machine-readable listing as tab separated text."""
        return self.listing().to_csv(sep="\t", index=False, lineterminator="\n")

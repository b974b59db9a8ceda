"""Document model: named groupoids, spans and actions."""

from dataclasses import dataclass, field

from src.models.group import GroupAction
from src.models.groupoid import ParityGroupoid
from src.models.span import PSpan


@dataclass
class DocumentModel:
    """Everything loaded from one document file.

    Attributes:
        groupoids: Name -> parity groupoid
        spans: Name -> P-span
        actions: Name -> group action
        generated: Name -> generator parameters the span was expanded from
    """

    groupoids: dict[str, ParityGroupoid] = field(default_factory=dict)
    spans: dict[str, PSpan] = field(default_factory=dict)
    actions: dict[str, GroupAction] = field(default_factory=dict)
    generated: dict[str, dict] = field(default_factory=dict)

    def names(self) -> list[str]:
        return sorted([*self.groupoids, *self.spans, *self.actions])

    def __str__(self) -> str:
        return (
            f"DocumentModel({len(self.groupoids)} groupoids, "
            f"{len(self.spans)} spans, {len(self.actions)} actions)"
        )

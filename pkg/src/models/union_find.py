"""Disjoint-set forest used for connected components."""

from typing import Hashable, Iterable


class UnionFind:
    """Union-find with path halving and union by size."""

    def __init__(self, items: Iterable[Hashable] = ()):
        """Initialize with singleton classes.

        Args:
            items: Initial elements
        """
        self._parent: dict = {}
        self._size: dict = {}
        for item in items:
            self.add(item)

    def add(self, item: Hashable) -> None:
        """Add a singleton class (no-op if already present)."""
        if item not in self._parent:
            self._parent[item] = item
            self._size[item] = 1

    def find(self, item: Hashable) -> Hashable:
        """Return the root of the class containing item."""
        parent = self._parent
        while parent[item] != item:
            parent[item] = parent[parent[item]]
            item = parent[item]
        return item

    def union(self, a: Hashable, b: Hashable) -> None:
        """Merge the classes of a and b."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]

    def classes(self) -> list[list[Hashable]]:
        """Return all classes, each in insertion order."""
        groups: dict = {}
        for item in self._parent:
            groups.setdefault(self.find(item), []).append(item)
        return list(groups.values())

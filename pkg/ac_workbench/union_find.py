"""Disjoint-set structure over dense integer ids."""

from __future__ import annotations


class UnionFind:
    """Union by rank with path halving.

    Elements are ``0 .. n-1``; each starts as its own singleton set.
    """

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, element: int) -> int:
        parent = self.parent
        while parent[element] != element:
            parent[element] = parent[parent[element]]
            element = parent[element]
        return element

    def unite(self, first: int, second: int) -> int:
        """Merge the sets of two elements.

        Returns:
            The surviving representative, or -1 if both were already in one set.
        """
        a = self.find(first)
        b = self.find(second)
        if a == b:
            return -1
        if self.rank[a] < self.rank[b]:
            a, b = b, a
        self.parent[b] = a
        if self.rank[a] == self.rank[b]:
            self.rank[a] += 1
        return a

"""Disjoint-set forest with path compression."""
from typing import Dict, List


class UnionFind:
    """Union-find over the integers 0..size-1.

    The root of every set is its smallest member, so class numbering by
    smallest slot falls out of a single left-to-right scan.
    """

    def __init__(self, size: int):
        self.parent: List[int] = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        # compress
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> int:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return rx
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return rx

    def labels(self) -> List[int]:
        """Dense class id per element, numbered in order of first appearance."""
        ids: Dict[int, int] = {}
        out = []
        for x in range(len(self.parent)):
            out.append(ids.setdefault(self.find(x), len(ids)))
        return out

    def groups(self) -> List[List[int]]:
        """Members of each class, classes ordered by smallest member."""
        buckets: List[List[int]] = []
        for x, label in enumerate(self.labels()):
            if label == len(buckets):
                buckets.append([])
            buckets[label].append(x)
        return buckets

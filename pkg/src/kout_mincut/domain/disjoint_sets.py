"""Union-find over the integers 0..size-1."""


class DisjointSets:
    """Union-find with union by size and path compression.

    Elements are the integers ``0 .. size - 1``. Instances are single-writer:
    ``find`` mutates the parent array, so concurrent use is not supported.

    Attributes:
        set_count: Number of disjoint sets currently represented.
    """

    __slots__ = ("_parent", "_size", "set_count")

    def __init__(self, size: int):
        if size < 0:
            raise ValueError(f"DisjointSets size must be non-negative, got {size}")
        self._parent = list(range(size))
        self._size = [1] * size
        self.set_count = size

    def __len__(self) -> int:
        return len(self._parent)

    def find(self, x: int) -> int:
        """Return the representative of the set containing ``x``."""
        parent = self._parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the sets containing ``a`` and ``b``.

        Returns:
            True if two distinct sets were merged, False if already joined.
        """
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        self.set_count -= 1
        return True

    def connected(self, a: int, b: int) -> bool:
        """Check whether ``a`` and ``b`` share a set."""
        return self.find(a) == self.find(b)

    def set_size(self, x: int) -> int:
        """Number of elements in the set containing ``x``."""
        return self._size[self.find(x)]

    def labels(self) -> list[int]:
        """Compact labels 0..set_count-1, numbered by first appearance."""
        mapping: dict[int, int] = {}
        out = []
        for x in range(len(self._parent)):
            root = self.find(x)
            label = mapping.get(root)
            if label is None:
                label = mapping[root] = len(mapping)
            out.append(label)
        return out

from typing import List, Optional


class FenwickTree:
    """Binary indexed tree over counts, with rank selection.

    Positions are 1-based. ``increment`` and ``prefix_sum`` take O(log n);
    ``find_kth`` descends the implicit tree in O(log n) without a binary search
    over prefix sums. An optional counter receives one tick per loop iteration
    of ``increment`` and ``find_kth``.
    """

    def __init__(self, size: int, fill: int = 0, counter=None):
        if size < 0:
            raise ValueError("size must be non-negative")
        self.size = size
        self.counter = counter
        self.tree: List[int] = [0] * (size + 1)
        if fill:
            # linear-time build: push each node's total to its parent once
            for i in range(1, size + 1):
                self.tree[i] += fill
                parent = i + (i & -i)
                if parent <= size:
                    self.tree[parent] += self.tree[i]
        self._top = 1 << (size.bit_length() - 1) if size else 0

    def _tick(self):
        if self.counter is not None:
            self.counter.tick()

    def increment(self, position: int, amount: int = 1) -> None:
        if not 1 <= position <= self.size:
            raise IndexError(f"position {position} out of range 1..{self.size}")
        while position <= self.size:
            self._tick()
            self.tree[position] += amount
            position += position & -position

    def prefix_sum(self, position: int) -> int:
        """Sum of counts at positions 1..position."""
        position = min(position, self.size)
        total = 0
        while position > 0:
            total += self.tree[position]
            position -= position & -position
        return total

    def total(self) -> int:
        return self.prefix_sum(self.size)

    def find_kth(self, k: int) -> Optional[int]:
        """
        Smallest position whose prefix sum reaches k.

        With 0/1 counts this is the position of the k-th set slot.

        Args:
            k: 1-based rank

        Returns:
            The position, or None when fewer than k counts are stored
        """
        if k < 1:
            return None
        position = 0
        step = self._top
        while step:
            self._tick()
            candidate = position + step
            if candidate <= self.size and self.tree[candidate] < k:
                position = candidate
                k -= self.tree[candidate]
            step >>= 1
        position += 1
        return position if position <= self.size else None

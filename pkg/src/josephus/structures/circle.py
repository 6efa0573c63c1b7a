"""
Circular Zipper Module

A non-empty circle of distinct labels with one element in focus. The circle is
stored as the focused label plus the labels after it in circle order, the
same shape as ``data CircleOf a = C a [a]``.

Values are immutable: ``next`` and ``remove`` return new circles.
"""

import json
from dataclasses import dataclass
from typing import Any, Dict, Hashable, Iterable, Iterator, Tuple

from ..errors import InvalidInputError

Label = Hashable


@dataclass(frozen=True)
class Circle:
    """Focused circular arrangement of distinct labels.

    Equality is structural: two rotations of the same cyclic order are
    different circles because their focus differs.
    """

    focus: Label
    rest: Tuple[Label, ...] = ()

    def __post_init__(self):
        if not isinstance(self.rest, tuple):
            object.__setattr__(self, "rest", tuple(self.rest))

    @property
    def current(self) -> Label:
        """The element currently in focus."""
        return self.focus

    def is_singleton(self) -> bool:
        return not self.rest

    def next(self) -> "Circle":
        """Move the focus one step; the old focus goes to the back."""
        if not self.rest:
            return self
        return Circle(self.rest[0], self.rest[1:] + (self.focus,))

    def advance(self, steps: int) -> "Circle":
        """Same as calling ``next`` ``steps`` times, with a single copy of the labels."""
        shift = steps % len(self)
        if not shift:
            return self
        labels = self.labels()
        return Circle(labels[shift], labels[shift + 1:] + labels[:shift])

    def remove(self) -> "Circle":
        """Delete the focus and focus the element after it.

        A singleton is returned unchanged, so a circle never becomes empty.
        """
        if not self.rest:
            return self
        return Circle(self.rest[0], self.rest[1:])

    def __len__(self) -> int:
        return 1 + len(self.rest)

    @property
    def size(self) -> int:
        return len(self)

    def __iter__(self) -> Iterator[Label]:
        yield self.focus
        yield from self.rest

    def labels(self) -> Tuple[Label, ...]:
        """All labels in circle order, starting at the focus."""
        return (self.focus,) + self.rest

    def to_dict(self) -> Dict[str, Any]:
        return {"focus": self.focus, "rest": list(self.rest)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Circle":
        return mk_circle(data["focus"], data.get("rest", []))

    def key(self) -> str:
        """Serialized canonical form, used to order and hash states."""
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def __repr__(self):
        return f"Circle({self.focus!r}, {list(self.rest)!r})"


def mk_circle(focus: Label, after: Iterable[Label] = ()) -> Circle:
    """
    Create a circle from its focus and the labels that follow it.

    Args:
        focus: Label placed in focus
        after: Labels after the focus, in circle order

    Returns:
        The new Circle

    Raises:
        InvalidInputError: if a label occurs more than once
    """
    rest = tuple(after)
    seen = {focus}
    for label in rest:
        if label in seen:
            raise InvalidInputError(f"Duplicate label in circle: {label!r}")
        seen.add(label)
    return Circle(focus, rest)


# Functional spelling of the methods above.

def current(c: Circle) -> Label:
    return c.focus


def is_singleton(c: Circle) -> bool:
    return c.is_singleton()


def rotate(c: Circle) -> Circle:
    """``next`` under a name that does not shadow the builtin."""
    return c.next()


def remove(c: Circle) -> Circle:
    return c.remove()

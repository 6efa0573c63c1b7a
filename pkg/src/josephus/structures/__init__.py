from .circle import Circle, current, is_singleton, mk_circle, remove, rotate
from .fenwick import FenwickTree

__all__ = ['Circle', 'mk_circle', 'current', 'is_singleton', 'rotate', 'remove', 'FenwickTree']

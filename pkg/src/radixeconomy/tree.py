"""Capacity and depth of packed m-ary trees.

A packed tree with node size m holds m**k items at depth k.  Counting the
root as one extra item turns the level sum into the geometric series
(m**(d+1) - 1) / (m - 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class TreeSpec:
    node_size_m: int
    depth_d: int

    def __post_init__(self):
        for name in ("node_size_m", "depth_d"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise DomainError(f"{name} must be an integer, got {v!r}")
        if self.node_size_m < 2:
            raise DomainError(f"node_size_m must be >= 2, got {self.node_size_m}")
        if self.depth_d < 0:
            raise DomainError(f"depth_d must be >= 0, got {self.depth_d}")


def capacity(spec: TreeSpec, include_root: bool = False) -> int:
    """Items held by a packed tree of the given node size and depth.

    >>> capacity(TreeSpec(3, 3))
    39
    >>> capacity(TreeSpec(3, 3), include_root=True)
    40
    """
    m, d = spec.node_size_m, spec.depth_d
    with_root = (m ** (d + 1) - 1) // (m - 1)
    return with_root if include_root else with_root - 1


def depth_for(total_with_root: int, node_size_m: int) -> int:
    """Smallest depth whose packed tree (root included) holds ``total_with_root`` items."""
    if isinstance(total_with_root, bool) or not isinstance(total_with_root, int):
        raise DomainError(f"total_with_root must be an integer, got {total_with_root!r}")
    if total_with_root < 1:
        raise DomainError(f"total_with_root must be >= 1, got {total_with_root}")
    TreeSpec(node_size_m, 0)
    depth, level, held = 0, 1, 1
    while held < total_with_root:
        depth += 1
        level *= node_size_m
        held += level
    return depth

"""Neighborhood rings by grid distance."""

from dataclasses import dataclass

from .. import h3core as h3
from .cells import CellId


@dataclass(frozen=True)
class RingNeighborhood:
    center: CellId
    K: int
    rings: list  # rings[k-1] = frozenset of CellId at grid distance k


def k_rings(center: CellId, K: int) -> RingNeighborhood:
    """Rings 1..K around the center, disjoint, center excluded."""
    if K < 0:
        raise ValueError("K must be >= 0")
    rings = [set() for _ in range(K)]
    if K:
        for index, dist in h3.grid_disk_distances(center.index, K):
            if dist:
                rings[dist - 1].add(CellId(index, center.resolution))
    return RingNeighborhood(center, K, [frozenset(r) for r in rings])

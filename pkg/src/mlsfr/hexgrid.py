"""13-cell hexagonal layout.

Cell 0 is the serving cell at the origin. Cells 1-6 are its direct
neighbours on the hexagonal grid (inter-site distance sqrt(3)*r), cells
7-12 are the six co-channel cells of the second ring at 3*r. The UE under
study moves on the straight line from cell 0 towards the corner vertex
shared with cells 1 and 6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

FIRST_RING_FACTOR = math.sqrt(3.0)
SECOND_RING_FACTOR = 3.0
UE_AXIS_ANGLE_DEG = 60.0
N_CELLS = 13


@dataclass(frozen=True)
class NetworkLayout:
    """Cell-centre coordinates (km) for the 13-cell topology."""

    cell_radius_km: float
    centers: np.ndarray = field(repr=False)  # (13, 2)
    ue_axis_angle_deg: float = UE_AXIS_ANGLE_DEG


def _ring(radius: float, start_angle_deg: float) -> list[tuple[float, float]]:
    # Clockwise so that the two cells flanking the 60 deg UE axis get the
    # first and last index of the ring.
    pts = []
    for k in range(6):
        a = math.radians(start_angle_deg - 60.0 * k)
        pts.append((radius * math.cos(a), radius * math.sin(a)))
    return pts


def build_layout(cell_radius_km: float) -> NetworkLayout:
    """Place the 13 cells for a given cell radius (km).

    Cell 1 sits at 30 deg and cell 6 at 90 deg, so the corner vertex on
    the 60 deg axis is shared by cells 0, 1 and 6. Second-ring co-channel
    cells sit at multiples of 60 deg.
    """
    if cell_radius_km <= 0:
        raise ValueError(f"cell radius must be positive, got {cell_radius_km}")
    r = float(cell_radius_km)
    pts = [(0.0, 0.0)]
    pts += _ring(FIRST_RING_FACTOR * r, 30.0)
    pts += _ring(SECOND_RING_FACTOR * r, 0.0)
    return NetworkLayout(cell_radius_km=r, centers=np.asarray(pts, dtype=float))


def ue_position(layout: NetworkLayout, beta0: float) -> np.ndarray:
    """Coordinates of the UE at normalized distance beta0 on the UE axis."""
    if not 0.0 < beta0 <= 1.0:
        raise ValueError(f"beta0 must be in (0, 1], got {beta0}")
    a = math.radians(layout.ue_axis_angle_deg)
    return beta0 * layout.cell_radius_km * np.array([math.cos(a), math.sin(a)])


def shared_vertex(layout: NetworkLayout) -> np.ndarray:
    """The cell corner on the UE axis, equidistant from cells 0, 1 and 6."""
    a = math.radians(layout.ue_axis_angle_deg)
    return layout.cell_radius_km * np.array([math.cos(a), math.sin(a)])


def distances(layout: NetworkLayout, beta0: float) -> np.ndarray:
    """UE-to-base-station distance (km) for all 13 cells, in centre order.

    Index 0 is the serving cell, so distances(layout, b)[0] == b * r.
    """
    ue = ue_position(layout, beta0)
    d = np.linalg.norm(layout.centers - ue, axis=1)
    # avoid rounding dust on the exactly-known serving distance
    d[0] = beta0 * layout.cell_radius_km
    return d

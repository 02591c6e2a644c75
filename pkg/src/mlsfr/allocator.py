"""Bandwidth allocation and interference-pattern analysis.

Three tools live here: the equal-rate bandwidth split across concentric
UE circles (a small LP solved exactly), the coverage-ordered first-fit
allocator that serves each UE from the band with the smallest coverage
that still reaches it, and the two-cell pairing comparison showing why
matching the most vulnerable edge UE with the nearest-centre interferer
raises the worst-case rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import hexgrid, linkmodel, schemes, simplex
from .linkmodel import LinkParams
from .schemes import Scheme

DEFAULT_CIRCLES = tuple(i / 8 for i in range(1, 9))

_RESIDUAL_TOL = 1e-9
_CAPACITY_DUST = 1e-12

OUT_OF_COVERAGE = "out of coverage"
INSUFFICIENT_RESOURCES = "insufficient resources"


@dataclass
class EfficiencyMatrix:
    """Spectrum efficiency (bit/s/Hz) per level and UE circle."""

    circles: tuple[float, ...]
    eta: np.ndarray  # shape (n_levels, n_circles)


def efficiency_matrix(params: LinkParams, layout: hexgrid.NetworkLayout,
                      scheme: Scheme, circles=DEFAULT_CIRCLES) -> EfficiencyMatrix:
    """Evaluate every level of a scheme on every UE circle."""
    circles = tuple(float(b) for b in circles)
    dists = [hexgrid.distances(layout, b) for b in circles]
    eta = np.array([
        [linkmodel.spectral_efficiency(params, schemes.interference_profile(scheme, lv.index), d)
         for d in dists]
        for lv in scheme.levels
    ])
    return EfficiencyMatrix(circles=circles, eta=eta)


@dataclass
class AllocationResult:
    """Equal-rate bandwidth split.

    x[n][i] is the bandwidth fraction level n+1 spends on circle i; every
    circle receives the same rate common_rate, and overall_efficiency is
    that rate summed over the circles.
    """

    x: np.ndarray
    common_rate: float
    overall_efficiency: float
    cap_binding: tuple[bool, ...]


def solve_equal_rate(scheme: Scheme, eff: EfficiencyMatrix) -> AllocationResult:
    """Maximize the common per-circle rate under the per-level caps.

    Deterministic: the LP is solved by a Bland-rule simplex with the
    bandwidth variables ordered level-major, so reruns are bit-identical.
    """
    eta = np.asarray(eff.eta, dtype=float)
    if eta.ndim != 2 or eta.shape[0] != len(scheme.levels):
        raise ValueError("efficiency matrix does not match the scheme")
    if not np.all(np.isfinite(eta)) or np.any(eta <= 0):
        raise ValueError("efficiency entries must be positive and finite")
    n_levels, n_circles = eta.shape
    caps = np.array([lv.bandwidth_cap for lv in scheme.levels])

    nx = n_levels * n_circles
    c = np.zeros(nx + 1)
    c[-1] = 1.0  # the common rate
    a_ub = np.zeros((n_levels, nx + 1))
    for n in range(n_levels):
        a_ub[n, n * n_circles:(n + 1) * n_circles] = 1.0
    a_eq = np.zeros((n_circles, nx + 1))
    for i in range(n_circles):
        a_eq[i, i:nx:n_circles] = eta[:, i]
        a_eq[i, -1] = -1.0
    result = simplex.maximize(c, a_ub=a_ub, b_ub=caps, a_eq=a_eq,
                              b_eq=np.zeros(n_circles))
    x = result.x[:nx].reshape(n_levels, n_circles)
    rate = result.x[-1]

    used = x.sum(axis=1)
    if np.any(used > caps + _RESIDUAL_TOL):
        raise simplex.LinearProgramError("cap constraint violated beyond tolerance")
    if np.max(np.abs(np.sum(x * eta, axis=0) - rate)) > _RESIDUAL_TOL:
        raise simplex.LinearProgramError("equal-rate constraint violated beyond tolerance")
    return AllocationResult(
        x=x,
        common_rate=float(rate),
        overall_efficiency=float(n_circles * rate),
        cap_binding=tuple(bool(caps[n] - used[n] <= _RESIDUAL_TOL) for n in range(n_levels)),
    )


@dataclass
class UeAssignment:
    """Outcome of the first-fit allocation for one UE."""

    beta0: float
    demand: float
    chunks: tuple[tuple[int, float], ...]  # (level index, bandwidth fraction)
    satisfied: bool
    reason: str | None = None


def greedy_allocate(requests, scheme: Scheme, margin: float,
                    pathloss_slope: float = linkmodel.DEFAULT_PATHLOSS_SLOPE
                    ) -> list[UeAssignment]:
    """Serve UEs in order from the smallest-coverage band that reaches them.

    Each request is (beta0, demand_fraction). A UE's candidate list holds
    the levels whose coverage reaches its beta0, sorted by coverage
    (ties: weaker level first); demand is filled first-fit down the list
    against the remaining per-level capacity. A UE that cannot be fully
    served is denied and leaves the capacities untouched.
    """
    remaining = {lv.index: lv.bandwidth_cap for lv in scheme.levels}
    coverage = {lv.index: schemes.coverage_beta(scheme, lv.index, margin, pathloss_slope)
                for lv in scheme.levels}
    out: list[UeAssignment] = []
    for beta0, demand in requests:
        if demand <= 0:
            raise ValueError(f"demand must be positive, got {demand}")
        if not 0.0 < beta0 <= 1.0:
            raise ValueError(f"beta0 must be in (0, 1], got {beta0}")
        candidates = [lv for lv in scheme.levels if coverage[lv.index] >= beta0]
        candidates.sort(key=lambda lv: (coverage[lv.index], lv.gain_db))
        if not candidates:
            out.append(UeAssignment(beta0, demand, (), False, OUT_OF_COVERAGE))
            continue
        chunks = []
        need = demand
        for lv in candidates:
            if need <= _CAPACITY_DUST:
                break
            take = min(remaining[lv.index], need)
            if take > _CAPACITY_DUST:
                chunks.append((lv.index, take))
                need -= take
        if need > _CAPACITY_DUST:
            out.append(UeAssignment(beta0, demand, (), False, INSUFFICIENT_RESOURCES))
            continue
        for idx, amount in chunks:
            remaining[idx] -= amount
        out.append(UeAssignment(beta0, demand, tuple(chunks), True))
    return out


@dataclass
class PairingOutcome:
    """One way of sharing the two frequencies between the two cells."""

    pairs: tuple[tuple[int, int], ...]  # (edge UE index, centre UE index)
    edge_eta: tuple[float, float]
    center_eta: tuple[float, float]
    min_eta: float


@dataclass
class PairingComparison:
    direct: PairingOutcome    # edge i shares with centre i
    crossed: PairingOutcome   # edge i shares with centre 1-i
    better: str               # "direct", "crossed" or "tie"


def evaluate_pairings(edge_beta0s, center_beta0s, params: LinkParams,
                      layout: hexgrid.NetworkLayout) -> PairingComparison:
    """Compare the two ways of pairing two edge UEs with two centre UEs.

    The edge UEs live in cell 0 on the axis towards the shared corner;
    the centre UEs live in the neighbour cell 1 on its own axis towards
    the same corner. Transmit power tracks each UE's path loss (a nearer
    UE is served with less power, referenced to the full budget at the
    cell border), so the interference a UE suffers scales with how far
    out its frequency partner sits. Reported per-UE efficiencies use the
    partner cell as the only interferer; the pairing with the larger
    minimum is "better", equal minima within rounding are a "tie".
    """
    edge = tuple(float(b) for b in edge_beta0s)
    center = tuple(float(b) for b in center_beta0s)
    if len(edge) != 2 or len(center) != 2:
        raise ValueError("expected exactly two edge and two centre positions")
    for b in edge + center:
        if not 0.0 < b <= 1.0:
            raise ValueError(f"positions must be in (0, 1], got {b}")

    r = layout.cell_radius_km
    vertex = hexgrid.shared_vertex(layout)
    bs_edge = layout.centers[0]
    bs_center = layout.centers[1]
    u_edge = (vertex - bs_edge) / np.linalg.norm(vertex - bs_edge)
    u_center = (vertex - bs_center) / np.linalg.norm(vertex - bs_center)

    k0 = params.k0_linear
    loss_edge_budget = params.path_loss_linear(r)
    signal = k0 / loss_edge_budget  # path-loss-compensated received level

    def tx_power(beta0: float) -> float:
        return k0 * params.path_loss_linear(beta0 * r) / loss_edge_budget

    edge_pos = [bs_edge + b * r * u_edge for b in edge]
    center_pos = [bs_center + b * r * u_center for b in center]

    def eta_pair(ei: int, ci: int) -> tuple[float, float]:
        d_edge_to_b = float(np.linalg.norm(edge_pos[ei] - bs_center))
        d_center_to_a = float(np.linalg.norm(center_pos[ci] - bs_edge))
        i_edge = tx_power(center[ci]) / params.path_loss_linear(d_edge_to_b)
        i_center = tx_power(edge[ei]) / params.path_loss_linear(d_center_to_a)
        return (math.log2(1.0 + signal / (i_edge + 1.0)),
                math.log2(1.0 + signal / (i_center + 1.0)))

    def evaluate(pairs: tuple[tuple[int, int], ...]) -> PairingOutcome:
        edge_eta = [0.0, 0.0]
        center_eta = [0.0, 0.0]
        for ei, ci in pairs:
            edge_eta[ei], center_eta[ci] = eta_pair(ei, ci)
        values = edge_eta + center_eta
        return PairingOutcome(pairs=pairs, edge_eta=tuple(edge_eta),
                              center_eta=tuple(center_eta), min_eta=min(values))

    direct = evaluate(((0, 0), (1, 1)))
    crossed = evaluate(((0, 1), (1, 0)))
    scale = max(abs(direct.min_eta), abs(crossed.min_eta), 1.0)
    if abs(direct.min_eta - crossed.min_eta) <= 1e-12 * scale:
        better = "tie"
    elif direct.min_eta > crossed.min_eta:
        better = "direct"
    else:
        better = "crossed"
    return PairingComparison(direct=direct, crossed=crossed, better=better)


def optimal_pattern_probability(neighbor_count: int) -> float:
    """Chance that uniform random allocation hits the preferred pattern.

    One independent fifty-fifty draw per interfering neighbour.
    """
    if neighbor_count < 0:
        raise ValueError(f"neighbour count must be >= 0, got {neighbor_count}")
    return 0.5 ** neighbor_count

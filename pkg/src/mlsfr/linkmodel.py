"""Link budget and downlink spectrum efficiency.

All powers are handled as densities normalized by the receiver noise
density, so the carrier bandwidth cancels out of the SINR. Path loss is
the log-distance law L(d) = a + b*log10(d_km) in dB. The received SINR of
a UE combines the serving cell, the six first-ring interferers and the
six second-ring co-channel cells, each weighted by the relative power
density gain of the band they transmit on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import hexgrid

DEFAULT_NOISE_DENSITY_DBM_PER_HZ = -169.0
# 50 dBm shared over a 20 MHz carrier, rounded to the calibrated value
# that puts the noise-normalized power budget at exactly 146 dB.
DEFAULT_TX_DENSITY_DBM_PER_MHZ = 37.0
DEFAULT_BANDWIDTH_MHZ = 20.0
DEFAULT_PATHLOSS_INTERCEPT_DB = 128.1
DEFAULT_PATHLOSS_SLOPE = 37.6

_MHZ_TO_HZ_DB = 60.0  # 10*log10(1e6)


def db_to_linear(value_db: float) -> float:
    """Power ratio from dB; -inf maps to 0."""
    return 10.0 ** (value_db / 10.0)


def linear_to_db(value: float) -> float:
    """dB from a power ratio; 0 maps to -inf."""
    if value < 0:
        raise ValueError(f"power ratio must be non-negative, got {value}")
    if value == 0:
        return float("-inf")
    return 10.0 * math.log10(value)


@dataclass(frozen=True)
class LinkParams:
    """Noise, transmit power density and path-loss coefficients.

    k0 is the transmit power density divided by the noise density: the
    SNR budget before path loss. bandwidth_mhz is carried for reporting
    only; it cancels in every SINR.
    """

    noise_density_dbm_per_hz: float = DEFAULT_NOISE_DENSITY_DBM_PER_HZ
    tx_density_dbm_per_mhz: float = DEFAULT_TX_DENSITY_DBM_PER_MHZ
    bandwidth_mhz: float = DEFAULT_BANDWIDTH_MHZ
    pathloss_intercept_db: float = DEFAULT_PATHLOSS_INTERCEPT_DB
    pathloss_slope: float = DEFAULT_PATHLOSS_SLOPE

    @property
    def k0_db(self) -> float:
        return (self.tx_density_dbm_per_mhz - _MHZ_TO_HZ_DB
                - self.noise_density_dbm_per_hz)

    @property
    def k0_linear(self) -> float:
        return db_to_linear(self.k0_db)

    def path_loss_db(self, distance_km: float) -> float:
        """Log-distance path loss in dB; the distance must be positive."""
        if distance_km <= 0:
            raise ValueError(f"distance must be positive, got {distance_km}")
        return (self.pathloss_intercept_db
                + self.pathloss_slope * math.log10(distance_km))

    def path_loss_linear(self, distance_km) -> np.ndarray | float:
        d = np.asarray(distance_km, dtype=float)
        if np.any(d <= 0):
            raise ValueError("distances must be positive")
        out = 10.0 ** ((self.pathloss_intercept_db
                        + self.pathloss_slope * np.log10(d)) / 10.0)
        return out if out.ndim else float(out)


@dataclass(frozen=True)
class InterferenceProfile:
    """Relative power density gains (dB, <= 0) seen by one UE.

    serving_gain_db applies to the serving cell's band, ring1_gain_db to
    cells 1-6 and ring2_gain_db to the co-channel cells 7-12.
    """

    serving_gain_db: float = 0.0
    ring1_gain_db: float = 0.0
    ring2_gain_db: float = 0.0

    def __post_init__(self):
        for name in ("serving_gain_db", "ring1_gain_db", "ring2_gain_db"):
            g = getattr(self, name)
            if g > 0:
                raise ValueError(f"{name} must be <= 0 dB, got {g}")


def sinr_components(params: LinkParams, profile: InterferenceProfile,
                    distances_km) -> tuple[float, float]:
    """Signal and interference power, both normalized by the noise power.

    Expects the 13 distances of the layout, serving cell first.
    """
    d = np.asarray(distances_km, dtype=float)
    if d.shape != (hexgrid.N_CELLS,):
        raise ValueError(f"expected {hexgrid.N_CELLS} distances, got shape {d.shape}")
    k0 = params.k0_linear
    signal = db_to_linear(profile.serving_gain_db) * k0 / params.path_loss_linear(d[0])
    inv_loss = 1.0 / params.path_loss_linear(d[1:])
    interference = k0 * (db_to_linear(profile.ring1_gain_db) * float(np.sum(inv_loss[:6]))
                         + db_to_linear(profile.ring2_gain_db) * float(np.sum(inv_loss[6:])))
    return signal, interference


def spectral_efficiency(params: LinkParams, profile: InterferenceProfile,
                        distances_km) -> float:
    """Shannon spectrum efficiency log2(1 + SINR) in bit/s/Hz.

    Deterministic flat-channel bound: interference is treated as noise
    and no fading realization is drawn.
    """
    signal, interference = sinr_components(params, profile, distances_km)
    return math.log2(1.0 + signal / (interference + 1.0))


def gamma_sweep(params: LinkParams, layout: hexgrid.NetworkLayout, beta0: float,
                gamma_grid_db) -> list[tuple[float, float]]:
    """Efficiency of the full-power band versus the neighbour power ratio.

    Every grid point gamma (dB, <= 0) is evaluated with the serving cell
    and the second ring at full power and the first ring scaled by gamma.
    Returns (gamma_db, efficiency) pairs in grid order.
    """
    grid = list(gamma_grid_db)
    if not grid:
        raise ValueError("gamma grid must not be empty")
    d = hexgrid.distances(layout, beta0)
    out = []
    for g in grid:
        if g > 0:
            raise ValueError(f"gamma must be <= 0 dB, got {g}")
        profile = InterferenceProfile(0.0, float(g), 0.0)
        out.append((float(g), spectral_efficiency(params, profile, d)))
    return out

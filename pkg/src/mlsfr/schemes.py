"""Frequency reuse schemes: reuse-1, 2-level SFR and 2N-level SFR.

A scheme is an ordered list of power density limit (PDL) levels, sorted
by descending gain relative to the strongest band. Each level carries a
bandwidth cap and points at the partner level that occupies the same
sub-band in the opposite role: the strongest primary level pairs with the
weakest secondary level, the second strongest with the second weakest,
and so on. With N sub-bands a cell runs an independent 2-level SFR on
each sub-band, for 2N levels in total.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import hexgrid, linkmodel
from .linkmodel import InterferenceProfile, LinkParams

ROLE_PRIMARY = "primary"
ROLE_SECONDARY = "secondary"

_CAP_TOL = 1e-12
_GAIN_TOL = 1e-9


@dataclass(frozen=True)
class Level:
    """One PDL level of a scheme.

    index is 1-based; gain_db is relative to the strongest level (so
    level 1 has gain 0). bandwidth_cap is the fraction of the total
    bandwidth the level may use.
    """

    index: int
    gain_db: float
    role: str
    partner_index: int
    bandwidth_cap: float


@dataclass(frozen=True)
class Scheme:
    name: str
    levels: tuple[Level, ...]
    sub_band_count: int

    def level(self, index: int) -> Level:
        """Level by its 1-based index."""
        if not 1 <= index <= len(self.levels):
            raise ValueError(f"level index {index} out of range 1..{len(self.levels)}")
        return self.levels[index - 1]

    def subband_pairs(self) -> list[tuple[float, float]]:
        """(high, low) PDL gain in dB for each sub-band, sub-band 1 first."""
        n = self.sub_band_count
        if len(self.levels) == 1:
            lv = self.levels[0]
            return [(lv.gain_db, lv.gain_db)]
        return [(self.levels[m].gain_db, self.levels[2 * n - 1 - m].gain_db)
                for m in range(n)]


def validate_scheme(scheme: Scheme) -> None:
    """Check the structural invariants; raises ValueError on violation."""
    levels = scheme.levels
    if not levels:
        raise ValueError("scheme has no levels")
    if abs(levels[0].gain_db) > _GAIN_TOL:
        raise ValueError("level 1 must have gain 0 dB")
    for i, lv in enumerate(levels):
        if lv.index != i + 1:
            raise ValueError("levels must be numbered 1..2N in order")
        if lv.gain_db > _GAIN_TOL:
            raise ValueError(f"level {lv.index} gain must be <= 0 dB")
        if not 0.0 < lv.bandwidth_cap <= 1.0:
            raise ValueError(f"level {lv.index} cap must be in (0, 1]")
        if i and lv.gain_db > levels[i - 1].gain_db + _GAIN_TOL:
            raise ValueError("gains must be non-increasing in level index")
    total = sum(lv.bandwidth_cap for lv in levels)
    if abs(total - 1.0) > _CAP_TOL:
        raise ValueError(f"bandwidth caps must sum to 1, got {total!r}")
    if len(levels) > 1:
        if len(levels) % 2:
            raise ValueError("multi-level schemes need an even number of levels")
        n = len(levels) // 2
        if scheme.sub_band_count != n:
            raise ValueError(f"sub_band_count must be {n} for {len(levels)} levels")
        for lv in levels:
            if lv.partner_index != len(levels) + 1 - lv.index:
                raise ValueError("pairing must match the strongest with the weakest")
            expected = ROLE_PRIMARY if lv.index <= n else ROLE_SECONDARY
            if lv.role != expected:
                raise ValueError(f"level {lv.index} must be {expected}")
    elif scheme.sub_band_count != 1:
        raise ValueError("a single-level scheme spans one band")
    for lv in levels:
        partner = scheme.level(lv.partner_index)
        if partner.partner_index != lv.index:
            raise ValueError(f"partner relation is not an involution at level {lv.index}")
        if partner.index != lv.index:
            if lv.role == partner.role:
                raise ValueError(f"levels {lv.index} and {partner.index} share role {lv.role}")
            primary = lv if lv.role == ROLE_PRIMARY else partner
            secondary = partner if lv.role == ROLE_PRIMARY else lv
            if abs(primary.bandwidth_cap * 2.0 - secondary.bandwidth_cap) > _CAP_TOL:
                raise ValueError("each primary cap must be half its sub-band's secondary cap")
    pairs = scheme.subband_pairs()
    chain = [low for _, low in pairs] + [high for high, _ in pairs[::-1]]
    for a, b in zip(chain, chain[1:]):
        if a > b + _GAIN_TOL:
            raise ValueError("sub-band gains violate the low..high ordering chain")


def make_reuse1() -> Scheme:
    """Single full-power level covering the whole bandwidth."""
    lv = Level(index=1, gain_db=0.0, role=ROLE_PRIMARY, partner_index=1,
               bandwidth_cap=1.0)
    return Scheme(name="reuse1", levels=(lv,), sub_band_count=1)


def make_sfr2(gamma_db: float) -> Scheme:
    """Classic soft frequency reuse: one primary third, two secondary thirds.

    gamma_db is the secondary-to-primary PDL ratio and must be <= 0 dB.
    """
    if gamma_db > 0:
        raise ValueError(f"gamma must be <= 0 dB, got {gamma_db}")
    levels = (
        Level(1, 0.0, ROLE_PRIMARY, 2, 1.0 / 3.0),
        Level(2, float(gamma_db), ROLE_SECONDARY, 1, 2.0 / 3.0),
    )
    return Scheme(name="sfr2", levels=levels, sub_band_count=1)


def make_mlsfr(n_subbands: int, gamma_min_db: float) -> Scheme:
    """2N-level SFR with gains uniformly spaced in dB from 0 to gamma_min.

    Levels 1..N are primary with cap 1/(3N) each, levels N+1..2N are
    secondary with cap 2/(3N). Level i pairs with level 2N+1-i, matching
    the strongest primary with the weakest secondary.
    """
    if n_subbands < 1:
        raise ValueError(f"need at least one sub-band, got {n_subbands}")
    if gamma_min_db > 0:
        raise ValueError(f"gamma_min must be <= 0 dB, got {gamma_min_db}")
    n = int(n_subbands)
    total = 2 * n
    levels = []
    for i in range(1, total + 1):
        gain = gamma_min_db * (i - 1) / (total - 1)
        if gain == 0.0:
            gain = 0.0  # avoid -0.0 in serialized output
        role = ROLE_PRIMARY if i <= n else ROLE_SECONDARY
        cap = 1.0 / (3 * n) if i <= n else 2.0 / (3 * n)
        levels.append(Level(i, gain, role, total + 1 - i, cap))
    return Scheme(name=f"sfr{total}", levels=tuple(levels), sub_band_count=n)


def interference_profile(scheme: Scheme, level_index: int) -> InterferenceProfile:
    """Gain triple seen by a UE served on the given level.

    The serving cell and the second-ring co-channel cells transmit at the
    level's own gain; the first-ring neighbours run the partner level on
    the same sub-band.
    """
    lv = scheme.level(level_index)
    partner = scheme.level(lv.partner_index)
    return InterferenceProfile(serving_gain_db=lv.gain_db,
                               ring1_gain_db=partner.gain_db,
                               ring2_gain_db=lv.gain_db)


def coverage_beta(scheme: Scheme, level_index: int, margin: float,
                  pathloss_slope: float = linkmodel.DEFAULT_PATHLOSS_SLOPE) -> float:
    """Largest normalized UE distance a level may serve.

    Equal-received-power contour under the log-distance path-loss slope,
    scaled by an operator margin and clipped to the cell radius.
    """
    if margin <= 0:
        raise ValueError(f"margin must be positive, got {margin}")
    gain = scheme.level(level_index).gain_db
    return min(1.0, margin * 10.0 ** (gain / pathloss_slope))


def design_gamma(params: LinkParams, layout: hexgrid.NetworkLayout, beta0: float,
                 efficiency_fraction: float, *, eta_tol: float = 1e-6) -> float:
    """Neighbour power ratio (dB) hitting a share of the peak efficiency.

    Finds gamma such that the efficiency at this beta0 equals
    efficiency_fraction times its value with silent first-ring
    neighbours, by bisection on the linear ratio. The fraction must be
    strictly between the reuse-1 floor and 1.
    """
    if not 0.0 < efficiency_fraction < 1.0:
        raise ValueError(f"efficiency fraction must be in (0, 1), got {efficiency_fraction}")
    d = hexgrid.distances(layout, beta0)

    def eta_at(gamma_linear: float) -> float:
        profile = InterferenceProfile(0.0, linkmodel.linear_to_db(gamma_linear), 0.0)
        return linkmodel.spectral_efficiency(params, profile, d)

    peak = eta_at(0.0)
    target = efficiency_fraction * peak
    if eta_at(1.0) >= target:
        raise ValueError(
            f"fraction {efficiency_fraction} is at or below the full-interference floor")
    lo, hi = 0.0, 1.0  # eta(lo) >= target >= eta(hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if eta_at(mid) >= target:
            lo = mid
        else:
            hi = mid
    gamma = 0.5 * (lo + hi)
    if abs(eta_at(gamma) - target) > eta_tol:
        raise ArithmeticError("bisection failed to reach the efficiency target")
    return linkmodel.linear_to_db(gamma)


def scheme_to_dict(scheme: Scheme) -> dict:
    """JSON-friendly description, inverse of scheme_from_dict."""
    return {
        "name": scheme.name,
        "sub_band_count": scheme.sub_band_count,
        "levels": [
            {"index": lv.index, "gain_db": lv.gain_db, "role": lv.role,
             "partner_index": lv.partner_index, "bandwidth_cap": lv.bandwidth_cap}
            for lv in scheme.levels
        ],
    }


def scheme_from_dict(data: dict) -> Scheme:
    levels = tuple(
        Level(index=int(d["index"]), gain_db=float(d["gain_db"]), role=str(d["role"]),
              partner_index=int(d["partner_index"]),
              bandwidth_cap=float(d["bandwidth_cap"]))
        for d in data["levels"]
    )
    scheme = Scheme(name=str(data["name"]), levels=levels,
                    sub_band_count=int(data["sub_band_count"]))
    validate_scheme(scheme)
    return scheme

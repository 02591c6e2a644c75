"""Command-line front end.

Reads an optional scenario file (flat JSON, every key optional), runs one
of the reproduction commands and writes CSV or JSON to a file or stdout.
Outputs carry no timestamps and floats are printed with a fixed format,
so identical scenarios give byte-identical files.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from dataclasses import dataclass, field

from . import allocator, hexgrid, linkmodel, schemes
from .linkmodel import LinkParams

FIG5_BETA0_SQUARED = (0.25, 0.5, 0.75, 1.0)
FIG5_GAMMA_MIN_DB = -30.0
FIG5_GAMMA_STEP_DB = 0.25
FIG6_BETA0_STEP = 0.05


@dataclass
class Scenario:
    """Run configuration; defaults reproduce the reference setup."""

    noise_density_dbm_per_hz: float = linkmodel.DEFAULT_NOISE_DENSITY_DBM_PER_HZ
    tx_density_dbm_per_mhz: float = linkmodel.DEFAULT_TX_DENSITY_DBM_PER_MHZ
    bandwidth_mhz: float = linkmodel.DEFAULT_BANDWIDTH_MHZ
    pathloss_intercept_db: float = linkmodel.DEFAULT_PATHLOSS_INTERCEPT_DB
    pathloss_slope: float = linkmodel.DEFAULT_PATHLOSS_SLOPE
    cell_radius_km: float = 1.0
    scheme_kind: str = "mlsfr"          # reuse1 | sfr2 | mlsfr
    scheme_gamma_db: float = -6.0       # sfr2 power ratio
    scheme_n_subbands: int = 4          # mlsfr sub-band count
    scheme_gamma_min_db: float = -17.0  # mlsfr weakest-level gain
    circles: tuple[float, ...] = allocator.DEFAULT_CIRCLES
    design_anchors: tuple[tuple[float, float], ...] = ((1.0, 0.90),)
    coverage_margin: float = 1.45
    alloc_requests: tuple[tuple[float, float], ...] = (
        (0.95, 0.08), (0.55, 0.10), (0.30, 0.10), (0.10, 0.05))
    pairing_edge_beta0: tuple[float, float] = (0.9, 1.0)
    pairing_center_beta0: tuple[float, float] = (0.25, 0.5)

    def link_params(self) -> LinkParams:
        return LinkParams(
            noise_density_dbm_per_hz=self.noise_density_dbm_per_hz,
            tx_density_dbm_per_mhz=self.tx_density_dbm_per_mhz,
            bandwidth_mhz=self.bandwidth_mhz,
            pathloss_intercept_db=self.pathloss_intercept_db,
            pathloss_slope=self.pathloss_slope,
        )

    def layout(self) -> hexgrid.NetworkLayout:
        return hexgrid.build_layout(self.cell_radius_km)

    def scheme(self) -> schemes.Scheme:
        if self.scheme_kind == "reuse1":
            return schemes.make_reuse1()
        if self.scheme_kind == "sfr2":
            return schemes.make_sfr2(self.scheme_gamma_db)
        if self.scheme_kind == "mlsfr":
            return schemes.make_mlsfr(self.scheme_n_subbands, self.scheme_gamma_min_db)
        raise ValueError(f"unknown scheme kind {self.scheme_kind!r}")

    def comparison_schemes(self) -> list[schemes.Scheme]:
        """The three schemes compared side by side by table4 and fig6."""
        return [
            schemes.make_reuse1(),
            schemes.make_sfr2(self.scheme_gamma_db),
            schemes.make_mlsfr(self.scheme_n_subbands, self.scheme_gamma_min_db),
        ]

    def to_dict(self) -> dict:
        out = {}
        for f in dataclasses.fields(self):
            v = getattr(self, f.name)
            out[f.name] = _untuple(v)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Scenario":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"unknown scenario keys: {', '.join(unknown)}")
        kwargs = {}
        for f in dataclasses.fields(cls):
            if f.name not in data:
                continue
            v = data[f.name]
            if f.name in ("circles",):
                v = tuple(float(x) for x in v)
            elif f.name in ("design_anchors", "alloc_requests"):
                v = tuple((float(a), float(b)) for a, b in v)
            elif f.name in ("pairing_edge_beta0", "pairing_center_beta0"):
                v = tuple(float(x) for x in v)
            elif f.name in ("scheme_kind",):
                v = str(v)
            elif f.name in ("scheme_n_subbands",):
                v = int(v)
            else:
                v = float(v)
            kwargs[f.name] = v
        return cls(**kwargs)


def _untuple(v):
    if isinstance(v, tuple):
        return [_untuple(x) for x in v]
    return v


def load_scenario(path: str | None) -> Scenario:
    if path is None:
        return Scenario()
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("scenario file must hold a JSON object")
    return Scenario.from_dict(data)


def _fmt(v) -> str:
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def _csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines += [",".join(_fmt(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def run_fig5(scenario: Scenario, fmt: str) -> str:
    """Efficiency versus neighbour power ratio for four UE radii."""
    params = scenario.link_params()
    layout = scenario.layout()
    steps = int(round(-FIG5_GAMMA_MIN_DB / FIG5_GAMMA_STEP_DB))
    grid = [FIG5_GAMMA_MIN_DB + k * FIG5_GAMMA_STEP_DB for k in range(steps + 1)]
    sweeps = [linkmodel.gamma_sweep(params, layout, math.sqrt(b2), grid)
              for b2 in FIG5_BETA0_SQUARED]
    header = ["gamma_db"] + [f"eta_beta0sq_{_fmt(b2)}" for b2 in FIG5_BETA0_SQUARED]
    rows = [[grid[k]] + [sweeps[j][k][1] for j in range(len(sweeps))]
            for k in range(len(grid))]
    if fmt == "json":
        return _json({"columns": header, "rows": rows})
    return _csv(header, rows)


def run_fig6(scenario: Scenario, fmt: str) -> str:
    """Per-level efficiency curves plus the operating points on the circles."""
    params = scenario.link_params()
    layout = scenario.layout()
    steps = int(round(1.0 / FIG6_BETA0_STEP))
    curve_grid = [k / steps for k in range(1, steps + 1)]
    rows = []
    for scheme in scenario.comparison_schemes():
        for lv in scheme.levels:
            profile = schemes.interference_profile(scheme, lv.index)
            for b in curve_grid:
                eta = linkmodel.spectral_efficiency(params, profile,
                                                    hexgrid.distances(layout, b))
                rows.append([scheme.name, lv.index, b, eta, "curve"])
            for b in scenario.circles:
                eta = linkmodel.spectral_efficiency(params, profile,
                                                    hexgrid.distances(layout, b))
                rows.append([scheme.name, lv.index, b, eta, "operating"])
    header = ["scheme", "level", "beta0", "eta", "point_kind"]
    if fmt == "json":
        return _json({"columns": header, "rows": rows})
    return _csv(header, rows)


def _table4_report(scenario: Scenario) -> dict:
    params = scenario.link_params()
    layout = scenario.layout()
    report = {"circles": list(scenario.circles), "schemes": []}
    baseline = None
    for scheme in scenario.comparison_schemes():
        eff = allocator.efficiency_matrix(params, layout, scheme, scenario.circles)
        result = allocator.solve_equal_rate(scheme, eff)
        if baseline is None:
            baseline = result.overall_efficiency
        pct = 100.0 * result.x
        report["schemes"].append({
            "name": scheme.name,
            "common_rate": result.common_rate,
            "overall_efficiency": result.overall_efficiency,
            "improvement_vs_reuse1_percent":
                100.0 * (result.overall_efficiency / baseline - 1.0),
            "allocation_percent": [list(row) for row in pct],
            "per_circle_totals_percent": list(pct.sum(axis=0)),
            "per_level_totals_percent": list(pct.sum(axis=1)),
            "cap_binding": list(result.cap_binding),
        })
    return report


def run_table4(scenario: Scenario, fmt: str) -> str:
    """Equal-rate allocation for reuse-1, sfr2 and the multi-level scheme."""
    report = _table4_report(scenario)
    if fmt == "csv":
        header = ["scheme", "row", "beta0", "percent", "common_rate",
                  "overall_efficiency"]
        rows = []
        for entry in report["schemes"]:
            for n, line in enumerate(entry["allocation_percent"], start=1):
                for b, v in zip(report["circles"], line):
                    rows.append([entry["name"], n, b, v,
                                 entry["common_rate"], entry["overall_efficiency"]])
            for b, v in zip(report["circles"], entry["per_circle_totals_percent"]):
                rows.append([entry["name"], "T", b, v,
                             entry["common_rate"], entry["overall_efficiency"]])
        return _csv(header, rows)
    return _json(report)


def run_design(scenario: Scenario, fmt: str) -> str:
    """Design the power ratios and build the multi-level scheme from them."""
    params = scenario.link_params()
    layout = scenario.layout()
    anchors = [{"beta0": b, "fraction": f,
                "gamma_db": schemes.design_gamma(params, layout, b, f)}
               for b, f in scenario.design_anchors]
    gamma_min = anchors[0]["gamma_db"]
    scheme = schemes.make_mlsfr(scenario.scheme_n_subbands, gamma_min)
    report = {
        "anchors": anchors,
        "scheme": schemes.scheme_to_dict(scheme),
        "subband_gamma_db": [low - high for high, low in scheme.subband_pairs()],
    }
    if fmt == "csv":
        rows = [["anchor_gamma", i + 1, a["gamma_db"]] for i, a in enumerate(anchors)]
        rows += [["level_gain", lv.index, lv.gain_db] for lv in scheme.levels]
        rows += [["subband_gamma", m + 1, g]
                 for m, g in enumerate(report["subband_gamma_db"])]
        return _csv(["kind", "index", "value_db"], rows)
    return _json(report)


def run_alloc(scenario: Scenario, fmt: str) -> str:
    """Coverage-ordered first-fit allocation for the scenario's requests."""
    scheme = scenario.scheme()
    assignments = allocator.greedy_allocate(
        scenario.alloc_requests, scheme, scenario.coverage_margin,
        scenario.pathloss_slope)
    if fmt == "csv":
        header = ["ue", "beta0", "demand", "satisfied", "reason", "level", "amount"]
        rows = []
        for i, a in enumerate(assignments):
            if a.chunks:
                for level, amount in a.chunks:
                    rows.append([i, a.beta0, a.demand, a.satisfied,
                                 a.reason or "", level, amount])
            else:
                rows.append([i, a.beta0, a.demand, a.satisfied, a.reason or "", "", ""])
        return _csv(header, rows)
    return _json({
        "scheme": scheme.name,
        "coverage_margin": scenario.coverage_margin,
        "assignments": [
            {"ue": i, "beta0": a.beta0, "demand": a.demand,
             "satisfied": a.satisfied, "reason": a.reason,
             "chunks": [{"level": lvl, "amount": amt} for lvl, amt in a.chunks]}
            for i, a in enumerate(assignments)
        ],
    })


def run_pairing(scenario: Scenario, fmt: str) -> str:
    """Two-cell demo of the interference-pattern comparison."""
    comparison = allocator.evaluate_pairings(
        scenario.pairing_edge_beta0, scenario.pairing_center_beta0,
        scenario.link_params(), scenario.layout())

    def outcome(o: allocator.PairingOutcome) -> dict:
        return {"pairs": [list(p) for p in o.pairs],
                "edge_eta": list(o.edge_eta),
                "center_eta": list(o.center_eta),
                "min_eta": o.min_eta}

    if fmt == "csv":
        rows = []
        for name, o in (("direct", comparison.direct), ("crossed", comparison.crossed)):
            for i, v in enumerate(o.edge_eta):
                rows.append([name, f"eta_edge{i}", v])
            for i, v in enumerate(o.center_eta):
                rows.append([name, f"eta_center{i}", v])
            rows.append([name, "min_eta", o.min_eta])
        rows.append(["comparison", "better", comparison.better])
        return _csv(["pairing", "entry", "value"], rows)
    return _json({
        "edge_beta0": list(scenario.pairing_edge_beta0),
        "center_beta0": list(scenario.pairing_center_beta0),
        "direct": outcome(comparison.direct),
        "crossed": outcome(comparison.crossed),
        "better": comparison.better,
    })


_COMMANDS = {
    "fig5": (run_fig5, "csv"),
    "fig6": (run_fig6, "csv"),
    "table4": (run_table4, "json"),
    "design": (run_design, "json"),
    "alloc": (run_alloc, "json"),
    "pairing": (run_pairing, "json"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mlsfr",
        description="Multi-level soft frequency reuse: curves, scheme design "
                    "and bandwidth allocation reports.")
    sub = parser.add_subparsers(dest="command", required=True)
    help_lines = {
        "fig5": "efficiency versus neighbour power ratio (four UE radii)",
        "fig6": "per-level efficiency versus UE radius, with operating points",
        "table4": "equal-rate bandwidth allocation report for all schemes",
        "design": "power-ratio design and the resulting level table",
        "alloc": "coverage-ordered first-fit allocation of the scenario requests",
        "pairing": "two-cell interference-pattern comparison",
    }
    for name in _COMMANDS:
        p = sub.add_parser(name, help=help_lines[name])
        p.add_argument("--scenario", metavar="PATH",
                       help="JSON scenario file; missing keys use defaults")
        p.add_argument("--out", metavar="PATH", default="-",
                       help="output file, '-' for stdout (default)")
        p.add_argument("--format", choices=("csv", "json"), default=None,
                       help="output format (default: csv for curves, json for reports)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    runner, default_fmt = _COMMANDS[args.command]
    try:
        scenario = load_scenario(args.scenario)
        text = runner(scenario, args.format or default_fmt)
        if args.out == "-":
            sys.stdout.write(text)
        else:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
    except (ValueError, ArithmeticError, OSError, json.JSONDecodeError) as exc:
        message = str(exc).replace("\n", " ")
        print(f"error: {message}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

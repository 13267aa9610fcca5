"""Dependent measures: aggregates, Fitts regression, throughput.

Throughput follows the means-of-means recipe: per participant and
technique, each (amplitude, width) cell yields an effective difficulty
IDe = log2(Ae/We + 1) from the endpoint spread (effective width,
4.133 x the endpoint SD, normalizing to a 96% nominal hit rate) and the
mean movement extent Ae; the cell's throughput is IDe over its mean
movement time; participants average their cells and techniques average
their participants.

Endpoint deviations are one-dimensional: signed projections onto the
start-to-target line on the unrolled surface, relative to the target
centre.
"""

from __future__ import annotations

import math
import warnings
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy import stats

from .experiment import TrialRecord, endpoint_of, start_of, target_of
from .geometry import DisplayGeometry
from .tasks import unroll

GROUPING_KEYS = {
    "technique": lambda r: r.technique,
    "distance": lambda r: r.distance_multiple,
    "offset": lambda r: r.lateral_offset_m,
    "amplitude": lambda r: r.amplitude_m,
    "width": lambda r: r.width_m,
    "id": lambda r: round(r.id_bits, 6),
    "participant": lambda r: r.participant_id,
}

WE_FLOOR_FRACTION = 0.01  # floor = width / 100 for zero-variance cells


@dataclass(frozen=True, slots=True)
class ConditionSummary:
    group: tuple
    mean_mt_s: float
    mt_ci95_halfwidth: float
    accuracy: float
    n_trials: int
    ci_defined: bool


@dataclass(frozen=True, slots=True)
class CellThroughput:
    participant_id: int
    technique: str
    amplitude_m: float
    width_m: float
    effective_amplitude_m: float
    effective_width_m: float
    effective_id_bits: float
    mean_mt_s: float
    throughput_bps: float
    n_trials: int


@dataclass(frozen=True, slots=True)
class ThroughputReport:
    cells: list[CellThroughput]
    participant_means: dict[tuple[int, str], float]  # (participant, technique) -> bps
    technique_means: dict[str, float]  # means-of-means


def effective_width(deviations: Sequence[float], floor_m: float | None = None) -> float:
    """4.133 x sample standard deviation of signed endpoint deviations.

    Zero-variance input is degenerate (a perfectly repeatable agent); when
    a floor is supplied the result is clamped there with a warning instead
    of returning zero.
    """
    if len(deviations) < 2:
        raise ValueError("effective width needs at least 2 endpoint samples")
    sd = float(np.std(np.asarray(deviations, dtype=float), ddof=1))
    we = 4.133 * sd
    if floor_m is not None and we < floor_m:
        warnings.warn(
            f"effective width {we:.3g} m below floor {floor_m:.3g} m; clamping",
            RuntimeWarning,
            stacklevel=2,
        )
        return floor_m
    return we


def _axis_projections(rec: TrialRecord, geom: DisplayGeometry) -> tuple[float, float]:
    """(deviation from target centre, movement extent), both along the
    start-to-target axis on the unrolled plane."""
    sx, sy = unroll(start_of(rec), geom)
    tx, ty = unroll(target_of(rec), geom)
    ex, ey = unroll(endpoint_of(rec), geom)
    ax, ay = tx - sx, ty - sy
    norm = math.hypot(ax, ay)
    if norm == 0.0:
        raise ValueError("degenerate trial: start equals target, projection axis undefined")
    ux, uy = ax / norm, ay / norm
    deviation = (ex - tx) * ux + (ey - ty) * uy
    extent = (ex - sx) * ux + (ey - sy) * uy
    return deviation, extent


def throughput(
    records: Iterable[TrialRecord], geom: DisplayGeometry | None = None
) -> ThroughputReport:
    geom = geom or DisplayGeometry()
    cells_raw: dict[tuple[int, str, float, float], list[TrialRecord]] = defaultdict(list)
    for rec in records:
        cells_raw[(rec.participant_id, rec.technique, rec.amplitude_m, rec.width_m)].append(rec)
    if not cells_raw:
        raise ValueError("no records to analyze")

    too_small = [k for k, v in cells_raw.items() if len(v) < 2]
    if too_small:
        raise ValueError(
            f"{len(too_small)} cell(s) have fewer than 2 trials, e.g. "
            f"(participant, technique, A, W) = {sorted(too_small)[0]}"
        )

    cells: list[CellThroughput] = []
    per_participant: dict[tuple[int, str], list[float]] = defaultdict(list)
    for key in sorted(cells_raw):
        pid, tech, amp, width = key
        recs = cells_raw[key]
        projections = [_axis_projections(r, geom) for r in recs]
        deviations = [p[0] for p in projections]
        extents = [p[1] for p in projections]
        we = effective_width(deviations, floor_m=width * WE_FLOOR_FRACTION)
        ae = float(np.mean(extents))
        ide = math.log2(max(ae, 0.0) / we + 1.0)
        mean_mt = float(np.mean([r.movement_time_s for r in recs]))
        tp = ide / mean_mt
        cells.append(
            CellThroughput(pid, tech, amp, width, ae, we, ide, mean_mt, tp, len(recs))
        )
        per_participant[(pid, tech)].append(tp)

    participant_means = {k: float(np.mean(v)) for k, v in sorted(per_participant.items())}
    by_technique: dict[str, list[float]] = defaultdict(list)
    for (_, tech), tp in participant_means.items():
        by_technique[tech].append(tp)
    technique_means = {t: float(np.mean(v)) for t, v in sorted(by_technique.items())}
    return ThroughputReport(cells, participant_means, technique_means)


def fitts_fit(points: Sequence[tuple[float, float]]) -> tuple[float, float, float]:
    """OLS fit of mean movement time against difficulty.

    Returns (intercept_s, slope_s_per_bit, r_squared). A constant response
    yields slope 0 and, by convention, R^2 = 0 (no variance explained).
    """
    if len(points) < 2:
        raise ValueError("need at least 2 (ID, MT) points")
    x = np.asarray([p[0] for p in points], dtype=float)
    y = np.asarray([p[1] for p in points], dtype=float)
    if np.ptp(x) == 0.0:
        raise ValueError("all difficulty values identical; cannot fit a line")
    slope, intercept = np.polyfit(x, y, 1)
    residuals = y - (intercept + slope * x)
    ss_res = float(np.sum(residuals**2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot <= 1e-12 * max(1.0, float(np.sum(y * y))):
        # constant response: define R^2 = 0, nothing to explain
        return float(intercept), float(slope), 0.0
    return float(intercept), float(slope), 1.0 - ss_res / ss_tot


def mean_mt_by_id(records: Iterable[TrialRecord]) -> list[tuple[float, float]]:
    """(ID bits, mean MT) per task cell, the usual regression input."""
    groups: dict[float, list[float]] = defaultdict(list)
    for rec in records:
        groups[round(rec.id_bits, 9)].append(rec.movement_time_s)
    return [(ide, float(np.mean(mts))) for ide, mts in sorted(groups.items())]


# figure-style plot views: name -> (grouping keys, y measure)
FIGURE_VIEWS: dict[str, tuple[tuple[str, ...], str]] = {
    "mt_by_technique_offset": (("technique", "offset"), "mean_mt_s"),
    "mt_by_technique_distance": (("technique", "distance"), "mean_mt_s"),
    "accuracy_by_technique_distance": (("technique", "distance"), "accuracy"),
    "mt_by_distance_amplitude": (("distance", "amplitude"), "mean_mt_s"),
    "mt_by_width_offset": (("width", "offset"), "mean_mt_s"),
    "mt_by_id_distance": (("id", "distance"), "mean_mt_s"),
    "accuracy_by_distance_width": (("distance", "width"), "accuracy"),
}


def figure_view(
    records: Sequence[TrialRecord], name: str
) -> list[tuple[tuple, float, float]]:
    """(x group, y, ci halfwidth) rows for one named plot view.

    Movement-time views carry the 95% t-interval halfwidth; accuracy views
    carry a normal-approximation halfwidth on the success proportion.
    """
    if name not in FIGURE_VIEWS:
        raise ValueError(f"unknown figure view {name!r} (expected one of {sorted(FIGURE_VIEWS)})")
    keys, measure = FIGURE_VIEWS[name]
    rows = []
    for summary in summarize(records, keys):
        if measure == "mean_mt_s":
            rows.append((summary.group, summary.mean_mt_s, summary.mt_ci95_halfwidth))
        else:
            p, n = summary.accuracy, summary.n_trials
            half = 1.96 * math.sqrt(max(p * (1.0 - p), 0.0) / n)
            rows.append((summary.group, p, half))
    return rows


def summarize(
    records: Sequence[TrialRecord], grouping: Sequence[str]
) -> list[ConditionSummary]:
    """Mean movement time (with 95% t-interval), accuracy and count per group."""
    keyfuncs: list[Callable[[TrialRecord], object]] = []
    for key in grouping:
        if key not in GROUPING_KEYS:
            raise ValueError(f"unknown grouping key {key!r} (expected one of {sorted(GROUPING_KEYS)})")
        keyfuncs.append(GROUPING_KEYS[key])

    groups: dict[tuple, list[TrialRecord]] = defaultdict(list)
    for rec in records:
        groups[tuple(kf(rec) for kf in keyfuncs)].append(rec)
    if not groups:
        raise ValueError("no records to summarize")

    out: list[ConditionSummary] = []
    for key in sorted(groups, key=lambda k: tuple(str(x) for x in k)):
        recs = groups[key]
        mts = np.asarray([r.movement_time_s for r in recs], dtype=float)
        n = len(recs)
        mean = float(mts.mean())
        if n > 1 and float(mts.std(ddof=1)) > 0.0:
            half = float(stats.t.ppf(0.975, n - 1) * mts.std(ddof=1) / math.sqrt(n))
            defined = True
        else:
            half = 0.0
            defined = False
        accuracy = sum(1 for r in recs if r.success) / n
        out.append(ConditionSummary(key, mean, half, accuracy, n, defined))
    return out

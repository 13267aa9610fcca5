"""Experiment execution: factor crossing, seed derivation, trial logging.

A plan crosses techniques x user positions x task specs x repetitions for
a number of virtual participants. Every trial draws its randomness from a
seed mixed out of the master seed and the trial's factor indices, so runs
are reproducible record-for-record regardless of execution order, and a
re-run with the same plan produces byte-identical CSV output.

Each (participant, technique, position) block optionally runs practice
trials first; they are simulated but never recorded, mirroring the live
procedure.
"""

from __future__ import annotations

import csv
import hashlib
import struct
from dataclasses import dataclass, field, fields
from random import Random
from typing import Iterable, Iterator

from .agent import AgentParams, run_trial
from .geometry import DisplayGeometry, SurfacePoint, UserPosition
from .tasks import TaskSpec, fitts_id, generate_layout, layout_feasible
from .transfer import TechniqueConfig

STUDY_POSITIONS = [
    UserPosition(distance_multiple=m, lateral_offset_m=off)
    for off in (0.0, -DisplayGeometry().radius_m / 2)
    for m in (0.5, 1.0, 1.5)
]


@dataclass(frozen=True)
class ExperimentPlan:
    techniques: list[TechniqueConfig]
    positions: list[UserPosition]
    specs: list[TaskSpec]
    repetitions: int = 10
    virtual_participants: int = 12
    master_seed: int = 0
    agent: AgentParams = field(default_factory=AgentParams)
    geom: DisplayGeometry = field(default_factory=DisplayGeometry)
    tick_rate_hz: float = 90.0
    practice_trials: int = 15
    hit_semantics: str = "overlap"

    def __post_init__(self) -> None:
        if self.repetitions < 1:
            raise ValueError("repetitions must be at least 1")
        if not (self.techniques and self.positions and self.specs):
            raise ValueError("techniques, positions and specs must be non-empty")

    @property
    def records_expected(self) -> int:
        return (
            self.virtual_participants
            * len(self.techniques)
            * len(self.positions)
            * len(self.specs)
            * self.repetitions
        )


@dataclass(frozen=True, slots=True)
class TrialRecord:
    participant_id: int
    technique: str
    distance_multiple: float
    lateral_offset_m: float
    amplitude_m: float
    width_m: float
    id_bits: float
    repetition: int
    seed: int
    movement_time_s: float
    success: bool
    endpoint_azimuth_rad: float
    endpoint_height_m: float
    target_azimuth_rad: float
    target_height_m: float
    start_azimuth_rad: float
    start_height_m: float
    click_diameter_m: float


CSV_FIELDS = [f.name for f in fields(TrialRecord)]

_FLOAT_FIELDS = {
    "distance_multiple",
    "lateral_offset_m",
    "amplitude_m",
    "width_m",
    "id_bits",
    "movement_time_s",
    "endpoint_azimuth_rad",
    "endpoint_height_m",
    "target_azimuth_rad",
    "target_height_m",
    "start_azimuth_rad",
    "start_height_m",
    "click_diameter_m",
}
_INT_FIELDS = {"participant_id", "repetition", "seed"}


def _round9(x: float) -> float:
    """Quantize to the CSV's 9 significant digits.

    Applied when records are created, so an in-memory record always equals
    its serialized form and write/read round trips are exactly lossless.
    """
    return float(format(x, ".9g"))


def derive_seed(master_seed: int, *indices: int, tag: str = "trial") -> int:
    """Stable 64-bit seed mixed from the master seed and factor indices.

    Uses blake2b over fixed-width packed integers, so any implementation
    adopting the same recipe reproduces record-level determinism.
    """
    h = hashlib.blake2b(digest_size=8)
    h.update(tag.encode())
    h.update(struct.pack("<q", master_seed))
    for i in indices:
        h.update(struct.pack("<q", i))
    return int.from_bytes(h.digest(), "little")


def _iter_cells(plan: ExperimentPlan) -> Iterator[tuple[int, int, int]]:
    for p in range(plan.virtual_participants):
        for t in range(len(plan.techniques)):
            for o in range(len(plan.positions)):
                yield p, t, o


def run(plan: ExperimentPlan) -> list[TrialRecord]:
    """Execute the full plan and return records in canonical factor order."""
    for spec in plan.specs:
        if not layout_feasible(spec, plan.geom):
            raise ValueError(
                f"infeasible task: amplitude {spec.amplitude_m} m, width {spec.width_m} m "
                "does not fit the display"
            )

    records: list[TrialRecord] = []
    for p, t, o in _iter_cells(plan):
        cfg = plan.techniques[t]
        pos = plan.positions[o]

        # practice block: simulated, dropped
        practice_rng = Random(derive_seed(plan.master_seed, p, t, o, tag="practice"))
        for k in range(plan.practice_trials):
            spec = plan.specs[k % len(plan.specs)]
            layout = generate_layout(practice_rng, spec, plan.geom)
            run_trial(
                derive_seed(plan.master_seed, p, t, o, k, tag="practice-trial"),
                plan.agent, cfg, pos, layout, plan.geom,
                plan.tick_rate_hz, plan.hit_semantics,
            )

        for s, spec in enumerate(plan.specs):
            for rep in range(plan.repetitions):
                seed = derive_seed(plan.master_seed, p, t, o, s, rep)
                layout = generate_layout(
                    Random(derive_seed(plan.master_seed, p, t, o, s, rep, tag="layout")),
                    spec,
                    plan.geom,
                )
                outcome = run_trial(
                    seed, plan.agent, cfg, pos, layout, plan.geom,
                    plan.tick_rate_hz, plan.hit_semantics,
                )
                records.append(
                    TrialRecord(
                        participant_id=p,
                        technique=cfg.id.value,
                        distance_multiple=_round9(pos.distance_multiple),
                        lateral_offset_m=_round9(pos.lateral_offset_m),
                        amplitude_m=_round9(spec.amplitude_m),
                        width_m=_round9(spec.width_m),
                        id_bits=_round9(fitts_id(spec.amplitude_m, spec.width_m)),
                        repetition=rep,
                        seed=seed,
                        movement_time_s=_round9(outcome.movement_time_s),
                        success=outcome.success,
                        endpoint_azimuth_rad=_round9(outcome.endpoint.azimuth_rad),
                        endpoint_height_m=_round9(outcome.endpoint.height_m),
                        target_azimuth_rad=_round9(layout.target.azimuth_rad),
                        target_height_m=_round9(layout.target.height_m),
                        start_azimuth_rad=_round9(layout.start.azimuth_rad),
                        start_height_m=_round9(layout.start.height_m),
                        click_diameter_m=_round9(outcome.click_diameter_m),
                    )
                )
    return records


def _format_value(name: str, value: object) -> str:
    if name in _FLOAT_FIELDS:
        return format(float(value), ".9g")
    if name == "success":
        return "1" if value else "0"
    return str(value)


def write_csv(records: Iterable[TrialRecord], path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for rec in records:
            writer.writerow(_format_value(f, getattr(rec, f)) for f in CSV_FIELDS)


def read_csv(path: str) -> list[TrialRecord]:
    records: list[TrialRecord] = []
    with open(path, "r", newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty file, expected a header row") from None
        if header != CSV_FIELDS:
            raise ValueError(f"{path}: unexpected header {header!r}")
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(CSV_FIELDS):
                raise ValueError(
                    f"{path}:{lineno}: expected {len(CSV_FIELDS)} fields, got {len(row)}"
                )
            kwargs: dict[str, object] = {}
            for name, raw in zip(CSV_FIELDS, row):
                try:
                    if name in _FLOAT_FIELDS:
                        kwargs[name] = float(raw)
                    elif name in _INT_FIELDS:
                        kwargs[name] = int(raw)
                    elif name == "success":
                        kwargs[name] = raw == "1"
                    else:
                        kwargs[name] = raw
                except ValueError:
                    raise ValueError(f"{path}:{lineno}: bad value {raw!r} for {name}") from None
            records.append(TrialRecord(**kwargs))  # type: ignore[arg-type]
    return records


def endpoint_of(rec: TrialRecord) -> SurfacePoint:
    return SurfacePoint(rec.endpoint_azimuth_rad, rec.endpoint_height_m)


def target_of(rec: TrialRecord) -> SurfacePoint:
    return SurfacePoint(rec.target_azimuth_rad, rec.target_height_m)


def start_of(rec: TrialRecord) -> SurfacePoint:
    return SurfacePoint(rec.start_azimuth_rad, rec.start_height_m)

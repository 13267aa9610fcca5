"""Run a compact technique comparison and print the headline numbers.

A scaled-down version of the second study: all six techniques over the
published position grid at the hard widths, four virtual participants.
Takes ~15 s. Run:

    python demos/run_study.py
"""

from dataclasses import replace

from curvepoint import analysis, experiment, preset_plan

plan = replace(
    preset_plan("study2", master_seed=2024),
    virtual_participants=4,
    practice_trials=0,
)
print(f"running {plan.records_expected} trials "
      f"({len(plan.techniques)} techniques x {len(plan.positions)} positions "
      f"x {len(plan.specs)} tasks x {plan.repetitions} reps x "
      f"{plan.virtual_participants} participants)")
records = experiment.run(plan)

print("\nper technique (mean MT, accuracy):")
for row in analysis.summarize(records, ["technique"]):
    print(f"  {row.group[0]:11s} {row.mean_mt_s * 1000:6.0f} ms "
          f"+/-{row.mt_ci95_halfwidth * 1000:4.0f}   {row.accuracy:.3f}   n={row.n_trials}")

print("\nper standing distance:")
for row in analysis.summarize(records, ["distance"]):
    print(f"  {row.group[0]}R: {row.mean_mt_s * 1000:6.0f} ms   acc {row.accuracy:.3f}")

report = analysis.throughput(records)
print("\nthroughput (means-of-means):")
for tech, tp in report.technique_means.items():
    print(f"  {tech:11s} {tp:.2f} bits/s")

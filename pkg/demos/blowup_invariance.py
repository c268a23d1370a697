"""Blow up a resolution and watch what stays fixed.

Free blowups hang a new (-1)-vertex on one center; satellite blowups
subdivide an edge. Volume, the pulled-back nef part, and |det M| are
invariant; self-intersections and canonical coefficients transform by
fixed rules that the invariance report recomputes independently.
"""

from singvol import (
    FreeBlowup,
    ModelTower,
    ResolutionGraph,
    SatelliteBlowup,
    invariance_report,
    volume,
)

base = ResolutionGraph.make((("v", -1, 2),))
tower = ModelTower(base, (FreeBlowup("v"), SatelliteBlowup("v", "b1")))

print("models along the tower:")
for level, model in enumerate(tower.models):
    vol = volume(model).volume
    shape = {v.id: v.self_int for v in model.vertices}
    print(f"  level {level}: self-intersections {shape}, volume {vol}")

print("\ncanonical pullback per level (new coefficient is b_i - 1 or b_i + b_j - 1):")
for level, model in enumerate(tower.models):
    print(f"  level {level}: b = {model.mumford_pullback_canonical().to_doc()}")

rep = invariance_report(tower)
print(f"\ninvariance report ok: {rep.ok} ({len(rep.checks)} checks)")
for check in rep.checks:
    flag = "ok " if check.passed else "FAIL"
    print(f"  [{flag}] level {check.level}: {check.name}")

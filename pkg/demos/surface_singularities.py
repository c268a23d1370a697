"""Classify surface singularities from their resolution dual graphs.

Walks a few built-in graphs through the discrepancy pipeline: numerical
pullback of the canonical class, log discrepancies, the lc test, and the
set of vertices any lc modification must extract.
"""

from singvol import ResolutionGraph
from singvol.catalog import graph_by_name


def show(label: str, graph: ResolutionGraph) -> None:
    rep = graph.discrepancy_report()
    print(f"{label}")
    print(f"  b   = {rep.b.to_doc()}")
    print(f"  ell = {rep.ell.to_doc()}")
    print(f"  log canonical: {rep.is_lc}")
    if rep.lc_mod_support:
        print(f"  lc modification must extract: {sorted(rep.lc_mod_support)}")
    print()


print("=== canonical (ADE) singularities: b = 0, ell = 1 ===\n")
show("A1, one (-2) curve", graph_by_name("A1"))
show("E8, the largest Dynkin graph", graph_by_name("E8"))

print("=== lc but not klt: ell = 0 ===\n")
show("simple elliptic of degree 3", graph_by_name("simple-elliptic-3"))
show("cusp, a cycle of four (-3) curves", graph_by_name("cusp-4"))

print("=== beyond lc ===\n")
show("cone over a genus-2 curve, degree 1", graph_by_name("cone-g2-d1"))

# a pullback computation the support formula must get right: the genus sits
# on one vertex but both log discrepancies go negative
mixed = ResolutionGraph.make(
    (("c", -2, 2), ("t", -2, 0)),
    (("c", "t"),),
)
show("genus-2 vertex with a rational (-2) tail", mixed)

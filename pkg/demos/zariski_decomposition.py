"""Zariski decompositions on a negative definite exceptional lattice.

Decomposes A = P + N with P nef and N effective, first by the active-set
iteration, then by brute force over all vertex subsets, and checks the two
agree. Ends with the local volume, which is -P.P for A = ell.
"""

from fractions import Fraction

from singvol import ResolutionGraph, nef_envelope_trace, volume, zariski_oracle

chain = ResolutionGraph.make(
    (("v1", -2, 0), ("v2", -2, 0), ("v3", -2, 0)),
    (("v1", "v2"), ("v2", "v3")),
)

a = chain.divisor((Fraction(1), Fraction(0), Fraction(-1)))
print("divisor A on the (-2)-chain:", a.to_doc())

dec = nef_envelope_trace(chain, a)
print("\nactive-set result")
print("  P      =", dec.p.to_doc())
print("  N      =", dec.n.to_doc())
print("  active =", sorted(dec.active))

oracle = zariski_oracle(chain, a)
print("\nsubset oracle agrees:", oracle == dec)

print("\nnef part meets every exceptional curve nonnegatively:")
for vid in chain.ids:
    print(f"  P . E_{vid} = {dec.p.intersect(vid)}")

print("\n=== volumes track log canonicity ===\n")
for label, graph in (
    ("A1 (canonical, lc)", ResolutionGraph.make((("v", -2, 0),))),
    ("genus-2 curve, self-intersection -1", ResolutionGraph.make((("v", -1, 2),))),
    ("genus-2 curve, self-intersection -2", ResolutionGraph.make((("v", -2, 2),))),
):
    rep = volume(graph)
    print(f"{label}: volume = {rep.volume}, lc = {rep.is_lc}")

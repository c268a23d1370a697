"""Scan Gorenstein cone volumes and watch them bottom out.

Cones over genus-g curves with integer boundary multiple a have volume
a^2 d where d = (2g - 2)/a must be a positive integer. On any finite grid
the smallest volume is 2, attained once, and the sorted distinct values
certify there is no strictly decreasing chain.
"""

from singvol import dcc_scan

out = dcc_scan(8, 4)

print(f"grid: g <= {out['grid']['g_max']}, a <= {out['grid']['a_max']}")
print(f"{'g':>3} {'a':>3} {'d':>3} {'volume':>8}")
for row in out["rows"]:
    print(f"{row['g']:>3} {row['a']:>3} {row['d']:>3} {row['volume']:>8}")

print(f"\nminimum volume: {out['min_volume']}, attained at {out['min_witnesses']}")
print(f"distinct volumes ascending: {out['distinct_volumes_ascending']}")
print(f"no strictly decreasing chain: {out['no_strictly_decreasing_chain']}")

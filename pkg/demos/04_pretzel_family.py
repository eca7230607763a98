"""The (-3, 3, n) pretzel family K1..K6.

Only K4 and K6 carry enough surgery data to be analysed end to end. The
others are listed with the reason they stop short.
"""

import logging

from csnorm import catalog, full_report

logging.basicConfig(level=logging.ERROR)

for entry in catalog():
    slopes = ", ".join(map(str, entry.profile.boundary_slopes))
    print(f"K{entry.n}: slopes {slopes}")
    if not entry.runnable:
        print("    ", entry.status)
        continue
    doc = full_report(entry.profile)
    nc = doc["norm_curve"]
    print(f"     S = {doc['S']}, s0 = {nc['s0']}, {nc['formula']}")
    print("     surviving surgeries:", ", ".join(doc["surgeries"]["finite_candidates"]))

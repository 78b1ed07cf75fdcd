"""Module census and fusion ring of the simple-current extension.

The extension algebra V(1,1) + V(6,1) acts on the 27 canonical labels of the
(10,7) model through s -> 10-s; orbits give one extended module each, the
three fixed points two each.  Extended fusion is induced from the minimal
model and printed below for a few instructive pairs.
"""

import warnings

from cosetchar import (
    FixedPointFusionWarning,
    classify_ext_modules,
    ext_fuse,
    ext_label,
    simple_current_image,
)
from cosetchar.minimal import KacLabel

orbits, fixed = classify_ext_modules()
print(f"{len(orbits)} orbit modules and {len(fixed)} fixed points "
      f"(2*{len(orbits)} + {len(fixed)} = {2 * len(orbits) + len(fixed)})")
for o in orbits:
    a, b = o.constituents
    print(f"  Ext({o.r},{o.s}) = V{a} + V{b}   weights {o.weights[0]}, {o.weights[1]}")
print("fixed points (two extended structures each):", ", ".join(map(str, fixed)))
print()

print("the simple current pairs labels up:")
for lab in [KacLabel(1, 1), KacLabel(2, 3), KacLabel(3, 5)]:
    print(f"  {lab} <-> {simple_current_image(lab)}")
print()

warnings.simplefilter("ignore", FixedPointFusionWarning)

print("sample fusion products:")
pairs = [((1, 1), (3, 4)), ((2, 1), (2, 1)), ((5, 4), (5, 6)), ((3, 3), (3, 5))]
for (ra, sa), (rb, sb) in pairs:
    out = ext_fuse(ext_label(ra, sa), ext_label(rb, sb))
    print(f"  Ext({ra},{sa}) x Ext({rb},{sb}) = {out}")

# an orbit can appear with multiplicity two: both of its constituents occur
# in the underlying minimal-model fusion
heavy = ext_fuse(ext_label(5, 4), ext_label(5, 6))
print("\nmultiplicity check:", heavy[ext_label(1, 3)], "copies of Ext(1,3)")

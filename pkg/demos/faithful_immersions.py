"""Immersions whose paths never leave the classes they connect.

When every pair class of an optimal colouring has a singleton attached to
it by exactly one edge, the K_χ immersion can be made *faithful*: the path
between two corners stays inside the union of their two colour classes.
The ``faithful`` generator family manufactures hosts with that property;
``refine_split`` then massages the colouring until the counting inequality
behind the construction holds, and the verifier replays the confinement
clause along with everything else.

Run:  python3 demos/faithful_immersions.py
"""

from kchi import (
    PremiseError,
    chi_alpha2,
    faithful_immersion,
    gen_family,
    refine_split,
    verify_immersion,
)

g = gen_family("faithful", (3, 41))
chi, col = chi_alpha2(g)
col = refine_split(g, col)
print(f"host: n={g.n} m={g.m}  χ={chi}")
print(f"  singletons: {col.singletons}")
print(f"  attached pair classes: {col.attached}")
assert not col.detached

imm = faithful_immersion(g, col)
report = verify_immersion(g, imm, chi, faithful_wrt=col)
assert report.ok
print(f"  corners: {imm.corners}")

cls_of = {v: set(cls) for cls in col.classes for v in cls}
for pair, ids in sorted(imm.paths.items()):
    allowed = sorted(cls_of[pair[0]] | cls_of[pair[1]])
    at, walk = pair[0], [pair[0]]
    for e in ids:
        at = g.other_end(e, at)
        walk.append(at)
    assert set(walk) <= set(allowed)
    print(f"  path {pair}: {walk}  (confined to {allowed})")
print("  verifier: accepted, confinement included\n")

# the premise has teeth: the cocktail-party graph K_{2x3} minus a perfect
# matching colours optimally with three detached pairs and no singletons
bad = gen_family("cocktail", 3)
_, bad_col = chi_alpha2(bad)
try:
    faithful_immersion(bad, bad_col)
except PremiseError as e:
    print(f"cocktail(3) rejected as expected: {e}")

# a hundred generated hosts, end to end
for k in range(1, 6):
    for seed in range(20):
        g = gen_family("faithful", (k, seed))
        chi, col = chi_alpha2(g)
        col = refine_split(g, col)
        imm = faithful_immersion(g, col)
        assert verify_immersion(g, imm, chi, faithful_wrt=col).ok
print("100 generated hosts: faithful immersion built and verified on each")

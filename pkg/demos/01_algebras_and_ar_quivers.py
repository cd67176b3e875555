"""Build Nakayama algebras from Kupisch series and explore their AR quivers.

Every algebra here is determined by two ingredients: whether its quiver is
a line or a cycle, and the list of projective lengths c_1..c_m.  All module
arithmetic reduces to the two boundary sequences lmax/rmax.
"""

from nakct import (
    Indec,
    Kind,
    ar_quiver,
    bounds,
    cover_hull,
    from_kupisch,
    homogeneous,
    indecomposables,
    injectives,
    is_selfinjective,
    omega,
    projectives,
    translate,
)
from nakct.render import RenderSpec, render_ar

# A seven-vertex line algebra with two extra relations: the Kupisch series
# (1,2,3,3,4,2,3) says, e.g., that the projective at vertex 5 has length 4.
lam = from_kupisch(Kind.ACYCLIC, (1, 2, 3, 3, 4, 2, 3))
print("algebra:", lam)
print("indecomposables:", len(indecomposables(lam)))
for v in range(1, 8):
    print(f"  vertex {v}: (lmax, rmax) = {bounds(lam, v)}")

# The uniserial M(i,j) has socle i and top j; covers and hulls are read off
# the boundary sequences.
module = Indec(4, 5)
cover, hull, proj, inj = cover_hull(lam, module)
print(f"\nM{tuple(module)}: cover M{tuple(cover)}, hull M{tuple(hull)}, "
      f"projective={proj}, injective={inj}")

print("syzygy chain from M(3,4):", end=" ")
current = Indec(3, 4)
for k in range(4):
    current_k = omega(lam, Indec(3, 4), k)
    print(current_k, end=" ")
print()

print("tau of M(2,3):", translate(lam, Indec(2, 3), "fwd"))

# Render the AR quiver as text: rows are module lengths.
print("\nAR quiver:")
print(render_ar(lam, RenderSpec("ascii")))

# Cyclic algebras wrap around; selfinjectivity means cyclic + homogeneous.
wheel = homogeneous(Kind.CYCLIC, 6, 3)
print("cyclic wheel:", wheel, "selfinjective:", is_selfinjective(wheel))
print("projectives == injectives:", projectives(wheel) == injectives(wheel))
quiver = ar_quiver(wheel)
print("vertices:", len(quiver.vertices), "arrows:", len(quiver.arrows))

"""Edge identifications on the star and the quotient cell census.

Each boundary edge is glued to the collinear edge on the same chord by the
reflection whose axis runs perpendicular to that chord.  Rotating by 72
degrees partitions everything into orbits; the bookkeeping ends at
chi = -6, i.e. genus 4, independently of the branched-cover computation.
"""

import math

from starsurf.geometry import build_star
from starsurf.quotient import (build_reflections, edge_pairing,
                               quotient_euler_genus, triangulate)

star = build_star()

print("the five reflections and their fixed rays:")
for refl in build_reflections():
    print(f"  T_{refl.m}: z -> eps^{2 * refl.m + 1} conj(z), "
          f"axis at {math.degrees(refl.fixed_ray_angle):.0f} degrees")

pairing = edge_pairing(star)
print("\nboundary edge pairs (edge ids) and their identifying reflection:")
for (e0, e1), m in zip(pairing.pairs, pairing.reflection_of_pair):
    print(f"  edges {e0} <-> {e1}   via T_{m}")
print(f"unordered pair orbits under rotation: sizes "
      f"{pairing.unordered_orbit_sizes} (one five-cycle)")
print(f"ordered pair orbits: {pairing.ordered_orbit_count} of sizes "
      f"{sorted(len(o) for o in pairing.ordered_orbits)}")

census = triangulate(star)
print(f"\ntriangulation: {len(census.faces)} faces, {len(census.edges)} edges, "
      f"{len(census.vertices)} vertices")
print(f"face orbits: {[len(o) for o in census.face_orbits]}, "
      f"vertex orbits: {[len(o) for o in census.vertex_orbits]}")
print(f"oriented edge-class labels: {len(census.oriented_edge_orbits)}")
print(f"cone angles: inner {census.cone_angles['inner'] / math.pi:.4f} pi, "
      f"outer {census.cone_angles['outer'] / math.pi:.4f} pi")

chi, genus, meta = quotient_euler_genus(census)
print(f"\nchi = 2 - 10 + 2 = {chi}  =>  genus {genus}")
print("point-set quotient counts, for the record:")
print(f"  {meta['pointset_with_center']}")
print(f"  {meta['pointset_without_center']}")

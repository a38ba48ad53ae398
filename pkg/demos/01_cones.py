"""Exact polyhedral cones: both representations, duality, faces."""
from fractions import Fraction

from hartogs_fans.cones import (
    cone_from_generators,
    cone_from_inequalities,
    dim,
    dual_cone,
    faces_of,
    is_whole_space,
    relative_interior_point,
)

# A pointed cone over a square; redundant and scaled generators are dropped.
square = cone_from_generators(3, [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1), (0, 0, 5)])
print("generators  ", square.generators)
print("facets      ", square.facets)
print("dual        ", dual_cone(square).generators)
print("faces by dim", sorted(dim(f) for f in faces_of(square)))

# Rational input is fine, output rays are primitive integer vectors.
wedge = cone_from_generators(2, [(Fraction(1, 2), Fraction(1, 3)), (0, 1)])
print("wedge rays  ", wedge.generators, "interior point", relative_interior_point(wedge))

# Three rays positively spanning the plane.
print("whole plane?", is_whole_space(cone_from_generators(2, [(1, 0), (-1, 1), (-1, -1)])))

# H-representation with a line in it
slab = cone_from_inequalities(3, [(1, 0, 0), (0, 1, 0)])
print("lineality   ", slab.lineality, "rays", slab.rays)

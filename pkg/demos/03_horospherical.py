"""Horospherical input: colors come from coroots, V is everything."""
from hartogs_fans.exactlin import format_rational
from hartogs_fans.horospherical import (
    HorosphericalDatum,
    a1_datum,
    a2_datum,
    check_horospherical,
    colors_from_roots,
    homogeneous_verdict,
    product_datum,
    torus_datum,
)



def show(d):
    return [(c.name, tuple(format_rational(x) for x in c.point)) for c in colors_from_roots(d)]


sl2_cstar = HorosphericalDatum(product_datum(a1_datum(), torus_datum(1)), frozenset(), ((1, 0), (0, 1)))
print("SL(2) x C* colors:", show(sl2_cstar))

a2 = HorosphericalDatum(a2_datum(), frozenset({0}), ((1, 0), (0, 1)))
print("A2, I = {a1}:     ", show(a2))

# the homogeneous spaces themselves
cases = {
    "rank 2": sl2_cstar,
    "rank 1, color at 1": HorosphericalDatum(a1_datum(), frozenset(), ((1,),)),
    "rank 1, color at 0": HorosphericalDatum(product_datum(a1_datum(), torus_datum(1)), frozenset(), ((0, 1),)),
}
for label, d in cases.items():
    rep = homogeneous_verdict(d)
    print(f"{label:20s} {rep.status:4s} {type(rep.certificate).__name__}")

# An embedding given by cones, with the remaining faces filled in.
rep = check_horospherical(sl2_cstar, [([(0, -1)], ["D_a"]), ([(0, 1)], ["D_a"])], complete_faces=True)
print("C2 x P1 from roots:", rep.status)

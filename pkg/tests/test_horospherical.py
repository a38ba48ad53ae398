import pytest

from hartogs_fans import fixtures
from hartogs_fans.errors import DimensionMismatch
from hartogs_fans.hartogs import RankOneProduct, WholeSpaceWitness, verify_certificate
from hartogs_fans.horospherical import (
    HorosphericalDatum,
    RootDatum,
    a1_datum,
    a2_datum,
    build_fan_input,
    check_horospherical,
    colors_from_roots,
    homogeneous_verdict,
    iota_star,
    product_datum,
    sl2_times_torus_datum,
    torus_datum,
    valuation_cone_horospherical,
)

SL2T = fixtures.sl2_torus_horospherical()


def test_iota_star_examples():
    assert iota_star(SL2T, (1, 0)) == (1, 0)
    assert iota_star(SL2T, (0, 0)) == (0, 0)
    d = HorosphericalDatum(sl2_times_torus_datum(), frozenset(), ((2, 0), (0, 1)))
    assert iota_star(d, (1, 0)) == (2, 0)
    with pytest.raises(DimensionMismatch):
        iota_star(SL2T, (1, 0, 0))


def test_colors_examples():
    assert [(c.name, c.point) for c in colors_from_roots(SL2T)] == [("D_a12", (1, 0))]
    full = HorosphericalDatum(sl2_times_torus_datum(), frozenset({0}), ((1, 0), (0, 1)))
    assert len(colors_from_roots(full)) == 0
    a2 = HorosphericalDatum(a2_datum(), frozenset({0}), ((1, 0), (0, 1)))
    assert [(c.name, c.point) for c in colors_from_roots(a2)] == [("D_a2", (0, 1))]


def test_valuation_cone_is_everything():
    for n in (1, 2, 3):
        d = HorosphericalDatum(torus_datum(n), frozenset(),
                               tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))
        v = valuation_cone_horospherical(d)
        assert set(v.generators) == {tuple(s * int(i == j) for j in range(n)) for i in range(n) for s in (1, -1)}


def test_cartan_check():
    with pytest.raises(ValueError):
        RootDatum(1, ((1,),), ((1,),), ("a",))
    assert a2_datum().cartan_matrix() == [[2, -1], [-1, 2]]


def test_m_basis_must_be_independent():
    with pytest.raises(ValueError):
        HorosphericalDatum(torus_datum(2), frozenset(), ((1, 1), (2, 2)))


def test_homogeneous_cases():
    assert isinstance(homogeneous_verdict(SL2T).certificate, WholeSpaceWitness)
    torus = HorosphericalDatum(torus_datum(1), frozenset(), ((1,),))
    rep = homogeneous_verdict(torus)
    assert rep.hartogs is False and isinstance(rep.certificate, RankOneProduct)
    assert verify_certificate(rep, build_fan_input(torus))
    one = HorosphericalDatum(a1_datum(), frozenset(), ((1,),))
    assert homogeneous_verdict(one).hartogs is True


def test_rank_one_product_does_not_transfer():
    torus = HorosphericalDatum(torus_datum(1), frozenset(), ((1,),))
    cert_rep = homogeneous_verdict(torus)
    one = HorosphericalDatum(a1_datum(), frozenset(), ((1,),))
    assert not verify_certificate(cert_rep, build_fan_input(one))


def test_fixture_fans_from_roots():
    assert check_horospherical(SL2T, [(((0, -1),), ("D_a12",)), (((0, 1),), ("D_a12",))],
                               complete_faces=True).hartogs is True
    p2xc = [(((-1, 0), (0, -1)), ()), (((0, -1),), ("D_a12",))]
    assert check_horospherical(SL2T, p2xc, complete_faces=True).hartogs is False


def test_empty_cone_list_is_homogeneous():
    assert check_horospherical(SL2T) == homogeneous_verdict(SL2T)


def test_product_datum():
    d = product_datum(a1_datum(), torus_datum(1))
    assert d.simple_roots == ((2, 0),) and d.simple_coroots == ((1, 0),)

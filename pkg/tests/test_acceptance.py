"""Acceptance criteria 1-8, one test per criterion.

conftest prints a PASS/FAIL line per criterion at the end of the run.
"""
import random
from dataclasses import replace
from fractions import Fraction

from oracles import fm_same_cone, random_cone_gens, random_rank2_fan, sweep_components

from hartogs_fans import (
    HorosphericalDatum,
    NonzeroFunctional,
    RankOneProduct,
    WholeSpaceWitness,
    check_hartogs,
    cone_from_generators,
    dual_cone,
    gap_regions,
    is_compactifiable_10,
    is_complete,
    is_whole_space,
    validate_fan,
    verify_certificate,
)
from hartogs_fans import exactlin as el
from hartogs_fans import fixtures
from hartogs_fans.horospherical import (
    a1_datum,
    build_fan_input,
    colors_from_roots,
    homogeneous_verdict,
    iota_star,
    torus_datum,
)

ACCEPTANCE_SEED = 20240607


def test_criterion_1_c2xp1_yes():
    fan = fixtures.c2xp1()
    sigmas = {cc.sigma.generators for cc in fan.cones if len(cc.sigma.generators) == 2}
    assert sigmas == {((0, -1), (1, 0)), ((0, 1), (1, 0))}
    rep = check_hartogs(fan)
    assert rep.hartogs is True and rep.status == "yes"
    assert isinstance(rep.certificate, WholeSpaceWitness)
    assert verify_certificate(rep, fan)
    assert "X admits the Hartogs phenomenon" in rep.interpretation


def test_criterion_2_p2xc_no():
    fan = fixtures.p2xc()
    rep = check_hartogs(fan)
    assert rep.hartogs is False and rep.status == "no"
    cert = rep.certificate
    assert isinstance(cert, NonzeroFunctional) and not el.is_zero(cert.functional)
    assert rep.weight_cone.generators == ((0, 1),)
    assert cert.functional == (0, 1)
    assert verify_certificate(rep, fan)
    assert "X does not admit the Hartogs phenomenon" in rep.interpretation


def test_criterion_3_p2xp1_compact():
    fan = fixtures.p2xp1()
    assert len(fan.cones) == 9
    assert validate_fan(fan) == []
    assert is_complete(fan)
    rep = check_hartogs(fan)
    assert rep.complete is True and rep.hartogs is None
    assert rep.status == "not applicable: complete fan (compact variety)"


def test_criterion_4_color_points():
    d = fixtures.sl2_torus_horospherical()
    table = colors_from_roots(d)
    assert [(c.name, c.point) for c in table] == [("D_a12", (1, 0))]
    alpha_vee = d.root_datum.simple_coroots[0]
    assert iota_star(d, alpha_vee) == (1, 0) == tuple(alpha_vee)
    assert fixtures.A_D_INF == (-1, 0)
    assert fixtures.A_D_10 == (0, 1)
    assert fixtures.A_D_01 == (0, -1)
    assert fixtures.A_D_12 == table.point("D_a12")
    # the G-stable divisor rays are the V-generators of the compact fan's rays
    rays = {cc.sigma.generators[0] for cc in fixtures.p2xp1().cones
            if len(cc.sigma.generators) == 1 and not cc.colors}
    assert rays == {fixtures.A_D_INF, fixtures.A_D_10, fixtures.A_D_01}


def test_criterion_5_homogeneous_dichotomy():
    big = homogeneous_verdict(fixtures.sl2_torus_horospherical())
    assert big.hartogs is True
    one_nonzero = homogeneous_verdict(HorosphericalDatum(a1_datum(), frozenset(), ((1,),)))
    assert one_nonzero.hartogs is True
    # ℂ* × SL(2)/B⁻: colors all land on 0
    from hartogs_fans.horospherical import product_datum
    cstar_flag = HorosphericalDatum(product_datum(a1_datum(), torus_datum(1)), frozenset(), ((0, 1),))
    zero = homogeneous_verdict(cstar_flag)
    assert zero.hartogs is False
    assert isinstance(zero.certificate, RankOneProduct)
    for rep, d in ((big, fixtures.sl2_torus_horospherical()),
                   (one_nonzero, HorosphericalDatum(a1_datum(), frozenset(), ((1,),))),
                   (zero, cstar_flag)):
        assert verify_certificate(rep, build_fan_input(d))


def test_criterion_6_cone_properties():
    rng = random.Random(ACCEPTANCE_SEED)
    for _ in range(200):
        rank, gens = random_cone_gens(rng, max_rank=4)
        c = cone_from_generators(rank, gens)
        assert dual_cone(dual_cone(c)) == c
        assert fm_same_cone(rank, gens, c)
        assert is_whole_space(c) == dual_cone(c).is_zero


def test_criterion_7_connectivity():
    rng = random.Random(ACCEPTANCE_SEED)
    done = 0
    while done < 120:
        fan, arc, pieces = random_rank2_fan(rng)
        expected = sweep_components(arc, pieces)
        cells = gap_regions(fan)
        if expected == 0:
            assert not cells.gap_cells
            continue
        assert is_compactifiable_10(fan, cells) == (expected == 1)
        done += 1
    zero = HorosphericalDatum(torus_datum(1), frozenset(), ((1,),))
    fan = build_fan_input(zero)
    assert is_compactifiable_10(fan) is False
    assert homogeneous_verdict(zero).compactifiable_10 is False


def _decided_reports(rng, n):
    out = []
    while len(out) < n:
        fan, _, _ = random_rank2_fan(rng)
        rep = check_hartogs(fan)
        if rep.hartogs is not None:
            out.append((rep, fan))
    return out


def _mutate(rep, fan, rng):
    cert = rep.certificate
    gens = [tuple(Fraction(x) for x in g) for g in rep.c_generators]
    if isinstance(cert, NonzeroFunctional):
        lam = cert.functional
        choice = rng.randrange(3)
        if choice == 0:
            return replace(cert, functional=tuple(0 for _ in lam))
        if choice == 1:
            # push some generator strictly negative
            g = rng.choice(gens)
            t = (Fraction(el.dot(g, lam)) + 1) / el.dot(g, g)
            return replace(cert, functional=tuple(a - t * b for a, b in zip(lam, g)))
        return replace(cert, functional=tuple(-a for a in lam))
    combos = list(cert.combinations)
    k = rng.randrange(len(combos))
    target, coeffs = combos[k]
    choice = rng.randrange(3)
    if choice == 0:
        coeffs = ((coeffs[0][0], coeffs[0][1] + 1),) + coeffs[1:]
    elif choice == 1:
        coeffs = ((coeffs[0][0], -coeffs[0][1]),) + coeffs[1:]
    else:
        allowed = {el.primitive(g) for g in gens}
        fresh = next(v for k in range(1, 100) for v in [(1, k), (k, -1)] if el.primitive(v) not in allowed)
        wg = list(cert.generators)
        wg[coeffs[0][0]] = tuple(Fraction(x) for x in fresh)
        return replace(cert, generators=tuple(wg))
    combos[k] = (target, coeffs)
    return replace(cert, combinations=tuple(combos))


def test_criterion_8_certificate_soundness():
    rng = random.Random(ACCEPTANCE_SEED)
    for fan in (fixtures.c2xp1(), fixtures.p2xc()):
        rep = check_hartogs(fan)
        assert verify_certificate(rep, fan)
    reports = _decided_reports(rng, 100)
    for rep, fan in reports:
        assert verify_certificate(rep, fan)
    assert {r.hartogs for r, _ in reports} == {True, False}
    bad = 0
    for rep, fan in rng.sample(reports, 50):
        mutated = replace(rep, certificate=_mutate(rep, fan, rng))
        assert mutated.certificate != rep.certificate
        assert not verify_certificate(mutated, fan), mutated.certificate
        bad += 1
    assert bad == 50

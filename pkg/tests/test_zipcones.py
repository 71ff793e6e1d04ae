"""Zip-context derived data and the weight cones of the worked examples."""
import random
from fractions import Fraction as Q

import pytest

from zipcone import catalog, linalg, weyl, zipcones
from zipcone.cones import RationalCone, cone_from_generators, cone_from_inequalities
from zipcone.errors import InvalidR
from zipcone.rootdata import build_root_datum, split_frobenius, validate_frobenius

U21_SIGMA = ((0, 0, -1), (0, -1, 0), (-1, 0, 0))


@pytest.fixture
def u21():
    return catalog.preset("U21-inert", q=2)


def quotient(cone):
    return cone.image_under(((1, 0, -1), (0, 1, -1))).complete()


def test_context_gl3_inert_hand_trace(u21):
    # sigma-orbit of e2-e3 is e2-e3 -> e1-e2 -> e2-e3
    assert u21.I == (0,)
    assert u21.I0 == ()
    assert u21.delta_p == (1,)
    assert u21.r_alpha == (2, 2)
    assert u21.m_alpha == {1: 2}
    assert u21.split_degree == 2
    assert u21.p1_delta(1) == (0,)  # sigma^-1(Delta^P) = {e1-e2}


def test_context_so_odd_split():
    for n in (2, 3, 4):
        ctx = catalog.preset("SOodd", n=n, q=2)
        assert ctx.I0 == ctx.I
        assert ctx.delta_p == (0,)
        assert all(r == 1 for r in ctx.r_alpha)
        assert ctx.m_alpha == {0: 1}
        assert ctx.split_degree == 1


def test_context_full_levi_degenerate():
    rd = build_root_datum("GL3")
    frob = validate_frobenius(rd, 2, U21_SIGMA)
    ctx = zipcones.make_context(rd, frob, [0, 1])
    assert ctx.delta_p == ()
    assert ctx.I0 == (0, 1)
    # hw and lw collapse to the I-dominant cone
    assert zipcones.hw_cone(ctx).equal(zipcones.i_dominant_cone(ctx))
    lw, _ = zipcones.lw_cone(ctx)
    assert lw.equal(zipcones.i_dominant_cone(ctx))


def test_delta_alpha_split_closed_form():
    ctx = catalog.preset("SOodd", n=3, q=5)
    for i in range(3):
        av = ctx.rd.simple_coroots[i]
        assert zipcones.delta_alpha(ctx, ctx.rd.simple_roots[i]) == tuple(
            Q(-x, 4) for x in av
        )


def test_delta_alpha_gl3_inert_and_defining_identity(u21):
    q = u21.q
    da = zipcones.delta_alpha(u21, u21.rd.simple_roots[1])
    assert da == tuple(Q(-x, q * q - 1) for x in (q, 1 - q, -1))
    for ctx in (u21, catalog.preset("SOodd", n=2, q=3)):
        for i in range(ctx.rd.r):
            da = zipcones.delta_alpha(ctx, ctx.rd.simple_roots[i])
            assert zipcones.frobenius_twist_of_cocharacter(ctx, da) == tuple(
                Q(x) for x in ctx.rd.simple_coroots[i]
            )


def test_delta_alpha_for_non_simple_root(u21):
    # e1 - e3 = sum of the simple roots; its coroot transports correctly
    da = zipcones.delta_alpha(u21, (1, 0, -1))
    assert zipcones.frobenius_twist_of_cocharacter(u21, da) == (Q(1), Q(0), Q(-1))


def test_dominant_and_levi_cones(u21):
    dom = zipcones.dominant_cone(u21)
    assert dom.member((3, 2, 1)) and not dom.member((1, 2, 3))
    idom = zipcones.i_dominant_cone(zipcones.make_context(u21.rd, u21.frob, []))
    assert idom.member((-5, 7, 1))  # I empty: whole lattice
    assert quotient(zipcones.neg_levi_cone(u21)).generators == ((-1, -1),)


def test_gs_cone_tables(u21):
    assert quotient(zipcones.gs_cone(u21)).inequalities == ((-1, 0), (1, -1))
    so = catalog.preset("SOodd", n=3, q=2)
    gs = zipcones.gs_cone(so)
    expect = cone_from_inequalities(
        3, [so.rd.simple_coroots[1], so.rd.simple_coroots[2], (-1, -1, 0)]
    )
    assert gs.equal(expect)
    assert gs.member((0, 0, 0))


def test_hz_map_image_of_basis_vector(u21):
    # hand derivation: h_Z(1,0,0) = (1,0,0) - q*w0I(sigma^{-1}(1,0,0)) = (1,0,q)
    h = zipcones.hz_map(u21)
    assert linalg.mat_vec(h, (1, 0, 0)) == (1, 0, u21.q)


def test_pha_cone_quotient_table():
    for q in (2, 3, 5):
        ctx = catalog.preset("U21-inert", q=q)
        got = quotient(zipcones.pha_cone(ctx))
        expect = cone_from_inequalities(2, [(q, -(q - 1)), (-(q - 1), -1)])
        assert got.equal(expect)


def test_pha_cone_so_odd_table():
    for n, q in ((2, 2), (3, 2), (4, 3)):
        ctx = catalog.preset("SOodd", n=n, q=q)
        idom = [tuple(ctx.rd.simple_coroots[i]) for i in ctx.I]
        expect = cone_from_inequalities(
            n, idom + [tuple([-(q + 1), -(q - 1)] + [0] * (n - 2))]
        )
        assert zipcones.pha_cone(ctx).equal(expect)


def test_k_alpha_so5_closed_form():
    ctx = catalog.preset("SOodd", n=2, q=2)
    rnd = random.Random(11)
    for _ in range(40):
        a1, a2 = rnd.randint(-9, 9), rnd.randint(-9, 9)
        assert zipcones.k_alpha(ctx, (a1, a2), 0) == (2 + 1) * a1 + (2 - 1) * a2
    assert zipcones.k_alpha(ctx, (0, 0), 0) == 0
    assert zipcones.k_alpha(ctx, (0, 0), 1) == 0


def test_k_alpha_agrees_with_hz_route_on_catalog():
    rnd = random.Random(23)
    for name, ctx in catalog.standard_catalog(2):
        pha = zipcones.pha_cone(ctx)
        for _ in range(150):
            lam = tuple(rnd.randint(-50, 50) for _ in range(ctx.n))
            via_k = all(
                zipcones.k_alpha(ctx, lam, a) <= 0 for a in range(ctx.rd.r)
            )
            assert via_k == pha.member(lam), (name, lam)


def test_hw_cone_tables(u21):
    got = quotient(zipcones.hw_cone(u21))
    assert got.equal(cone_from_inequalities(2, [(1, -1), (-2, 1)]))
    # cross-check: W_{L0}(F_q) = {1}, r = 2 gives (a2-a3) + q(a1-a2) <= 0
    assert len(u21.fixed_levi_weyl()) == 1
    so = catalog.preset("SOodd", n=4, q=2)
    q, n = 2, 4
    row = tuple(
        [-(q ** (2 * n - 2) - 1)]
        + [(q - 1) * (q ** (i - 2) - q ** (2 * n - 1 - i)) for i in range(2, n + 1)]
    )
    idom = [tuple(so.rd.simple_coroots[i]) for i in so.I]
    assert zipcones.hw_cone(so).equal(cone_from_inequalities(n, idom + [row]))


def test_neg_levi_inside_hw_everywhere():
    for name, ctx in catalog.standard_catalog(2):
        assert zipcones.hw_cone(ctx).contains(zipcones.neg_levi_cone(ctx)), name


def test_lw_cone_u21_equals_zip(u21):
    lw, certified = zipcones.lw_cone(u21)
    assert certified  # m_alpha = 2: the commutation condition is vacuous
    assert quotient(lw).equal(cone_from_inequalities(2, [(1, -1), (-1, -1)]))


def test_lw_equals_hw_when_sigma_fixes_I():
    for name in ("SOodd-n3", "GL3-split", "Sp4"):
        ctx = dict(catalog.standard_catalog(2))[name]
        lw, _ = zipcones.lw_cone(ctx)
        assert lw.equal(zipcones.hw_cone(ctx)), name


def test_gs_inside_lw_on_catalog():
    for name, ctx in catalog.standard_catalog(2):
        lw, _ = zipcones.lw_cone(ctx)
        assert lw.contains(zipcones.gs_cone(ctx)), name


def test_cond_commute_cases(u21):
    assert zipcones.check_cond_commute(u21, 1)  # m_alpha = 2, vacuous
    split = catalog.preset("GL3-split", q=2)
    assert all(zipcones.check_cond_commute(split, a) for a in split.delta_p)
    res = catalog.preset("ResSplit", base="B2", r=2, q=2)
    assert all(zipcones.check_cond_commute(res, a) for a in res.delta_p)


def test_weil_transport_gs_identity():
    for name, ctx in catalog.standard_catalog(2):
        sctx = zipcones.split_context(ctx)
        moved = zipcones.gs_cone(sctx).image_under(
            linalg.mat_mul(ctx.w0I.matrix, ctx.w0I0.matrix)
        )
        assert moved.equal(zipcones.gs_cone(ctx)), name


def test_weil_transport_zero_cone(u21):
    zero = cone_from_generators(3, [])
    assert zipcones.weil_transport(u21, 2, zero).equal(zero)


def test_weil_transport_invalid_r(u21):
    with pytest.raises(InvalidR):
        zipcones.weil_transport(u21, 1, cone_from_generators(3, []))


def test_weil_transport_hw_lands_in_zip_cone(u21):
    # the transported split-context highest-weight bound is inside the known
    # zip cone {(q-1)x + y <= 0, x >= y} of the unitary example
    sctx = zipcones.split_context(u21, 2)
    inner = zipcones.hw_cone(sctx)
    moved = zipcones.weil_transport(u21, 2, inner)
    zipc = quotient(zipcones.lw_cone(u21)[0])
    for g in moved.generators:
        assert zipc.member(
            (g[0] - g[2], g[1] - g[2])
        ), g


def test_factorization_identity_behind_so_proof():
    rnd = random.Random(5)
    for label in ("B2", "B3", "B4"):
        rd = build_root_datum(label)
        I = tuple(range(1, rd.r))
        alpha_idx = 0
        coroot = rd.simple_coroots[alpha_idx]
        i_alpha = tuple(
            i for i in I if linalg.dot(rd.simple_roots[i], coroot) == 0
        )
        wi = weyl.enumerate_parabolic(rd, I)
        wia = weyl.enumerate_parabolic(rd, i_alpha)
        reps = weyl.min_coset_reps(rd, i_alpha, ambient=I)
        for q in (2, 3, 5):
            for _ in range(5):
                lam = tuple(rnd.randint(-9, 9) for _ in range(rd.n))
                lhs = sum(
                    q ** w.length * linalg.dot(w.act(lam), coroot) for w in wi
                )
                prefactor = sum(q ** u.length for u in wia)
                rhs = prefactor * sum(
                    q ** v.length * linalg.dot(v.act(lam), coroot) for v in reps
                )
                assert lhs == rhs


def test_zip_report_structure(u21):
    rep = zipcones.zip_report(u21)
    assert rep["hasse_type"] is False and rep["exact_zip"] is False
    assert rep["certified_lw"] is True
    assert rep["outer_bound"] == "idominant"
    assert set(rep["inner_bounds"]) == {"pha", "hw", "gs", "neglevi", "weil_hw", "lw"}
    # every inner bound is included in the outer bound
    for name in rep["inner_bounds"]:
        assert [name, "idominant"] in rep["inclusions"]
    so = zipcones.zip_report(catalog.preset("SOodd", n=3, q=2))
    assert so["hasse_type"] and so["exact_zip"] and so["zip_cone"] == "pha"


def test_hasse_type_detection():
    assert not zipcones.is_hasse_type(catalog.preset("U21-inert", q=2))
    assert zipcones.is_hasse_type(catalog.preset("SOodd", n=3, q=2))
    rd = build_root_datum("GL3")
    ctx = zipcones.make_context(rd, split_frobenius(rd, 2), [])
    assert zipcones.is_hasse_type(ctx)  # I empty: vacuous


def test_hasse_type_pha_binding_only_on_delta_p():
    # for Hasse-type contexts the partial Hasse cone is cut out inside the
    # I-dominant cone by the Delta^P inequalities alone
    for name in ("SOodd-n2", "SOodd-n3", "Sp4", "GL3-split"):
        ctx = dict(catalog.standard_catalog(2))[name]
        assert zipcones.is_hasse_type(ctx)
        ineqs = [ctx.rd.simple_coroots[i] for i in ctx.I]
        covs = zipcones.k_alpha_covectors(ctx)
        ineqs += [linalg.vec_neg(covs[a]) for a in ctx.delta_p]
        reduced = cone_from_inequalities(ctx.n, ineqs)
        assert reduced.equal(zipcones.pha_cone(ctx)), name


def test_zip_membership_of_paper_counterexample(u21):
    # quotient point (x, y) = (-(q-1), q) = (-1, 2) violates (q-1)x + y <= 0
    lw, _ = zipcones.lw_cone(u21)
    assert not lw.member((-1, 2, 0))
    assert not quotient(lw).member((-1, 2))


def test_u21_cones_pairwise_distinct(u21):
    lw, _ = zipcones.lw_cone(u21)
    cones = {
        "pha": zipcones.pha_cone(u21),
        "gs": zipcones.gs_cone(u21),
        "hw": zipcones.hw_cone(u21),
        "zip": lw,
    }
    names = sorted(cones)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            assert not cones[a].equal(cones[b]), (a, b)


def test_degenerate_full_levi_report():
    rd = build_root_datum("GL3")
    ctx = zipcones.make_context(rd, split_frobenius(rd, 2), [0, 1])
    rep = zipcones.zip_report(ctx)
    assert rep["hasse_type"] is False  # -w0,I is the A2 flip, sigma = 1
    idom = zipcones.i_dominant_cone(ctx)
    for name in rep["inner_bounds"]:
        inner = RationalCone.from_json(rep["cones"][name])
        assert idom.contains(inner)


def test_levi_regular_flag(u21):
    assert zipcones.is_levi_regular(u21, (-1, -1, 0))
    assert not zipcones.is_levi_regular(u21, (0, 0, 0))  # not strict
    assert not zipcones.is_levi_regular(u21, (1, 0, 0))  # not on X*(L)

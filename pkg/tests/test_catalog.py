import pytest

from zipcone import catalog, linalg, zipcones
from zipcone.errors import BadParams, UnknownPreset


def test_preset_names_and_param_validation():
    with pytest.raises(UnknownPreset):
        catalog.preset("U22-split", q=2)
    with pytest.raises(BadParams):
        catalog.preset("SOodd", q=2)  # missing n
    with pytest.raises(BadParams):
        catalog.preset("U21-inert", q=1)
    with pytest.raises(BadParams):
        catalog.preset("U21-inert", q=2, n=3)


def test_u21_preset_is_the_inert_picard_context():
    ctx = catalog.preset("U21-inert", q=2)
    assert ctx.rd.label == "GL3" and ctx.I == (0,) and ctx.split_degree == 2


def test_so_odd_preset():
    ctx = catalog.preset("SOodd", n=3, q=2)
    assert ctx.rd.label == "B3"
    assert ctx.I == (1, 2)


def test_hilbert_preset_m2():
    ctx = catalog.preset("HilbertA1m", m=2, q=3)
    assert ctx.rd.r == 2 and ctx.I == ()
    assert ctx.frob.sigma_perm == (1, 0)
    assert ctx.split_degree == 2


def test_quotient_map_kernel_is_declared_lineality():
    _, meta = catalog.preset_with_meta("U21-inert", q=2)
    qm = meta["quotient_map"]
    for gen in meta["lineality"]:
        assert linalg.mat_vec(qm, gen) == (0, 0)
    # and the kernel is no larger
    assert linalg.rank(qm) == 2


def test_determinant_direction_in_every_u21_cone():
    ctx = catalog.preset("U21-inert", q=3)
    lw, _ = zipcones.lw_cone(ctx)
    for cone in (
        zipcones.i_dominant_cone(ctx),
        zipcones.neg_levi_cone(ctx),
        zipcones.gs_cone(ctx),
        zipcones.pha_cone(ctx),
        zipcones.hw_cone(ctx),
        lw,
    ):
        assert cone.member((1, 1, 1)) and cone.member((-1, -1, -1))


def test_res_split_derived_data_two_ways():
    for base, r in (("B2", 2), ("A2", 3)):
        ctx, meta = catalog.preset_with_meta("ResSplit", base=base, r=r, q=2)
        blocks = meta["blocks"]
        by_vector, by_index = catalog.res_split_piece_types(ctx, blocks)
        assert by_vector == by_index
        flattened = tuple(sorted(i for piece in by_index for i in piece))
        assert flattened == ctx.I0


def test_res_split_frobenius_cycles_blocks():
    ctx, meta = catalog.preset_with_meta("ResSplit", base="B2", r=2, q=2)
    assert ctx.split_degree == 2
    perm = ctx.frob.sigma_perm
    b0, b1 = meta["blocks"]
    assert [perm[i] for i in b0] == b1


def test_standard_catalog_size_and_distinctness():
    cat = catalog.standard_catalog(2)
    assert len(cat) >= 10
    assert len({name for name, _ in cat}) == len(cat)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_reproduce_u21(q):
    rep = catalog.reproduce("U21-inert", q=q)
    assert rep["passed"], rep


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_reproduce_so_odd(n, q):
    rep = catalog.reproduce("SOodd", n=n, q=q)
    assert rep["passed"], rep
    names = {row["name"] for row in rep["rows"]}
    assert {"gs", "pha", "hw", "lw", "zip", "idominant", "neglevi"} <= names


def test_reproduce_so_odd_n2_hw_equals_pha():
    rep = catalog.reproduce("SOodd", n=2, q=3)
    assert rep["flag_checks"]["hw equals pha at n=2"]


def test_reproduce_so_odd_n3_strict():
    rep = catalog.reproduce("SOodd", n=3, q=2)
    assert rep["flag_checks"]["hw strictly inside pha at n=3"]


def test_reproduce_unknown_example():
    with pytest.raises(UnknownPreset):
        catalog.reproduce("Sp4", q=2)


def test_so_odd_rank_one():
    ctx = catalog.preset("SOodd", n=1, q=2)
    assert ctx.I == () and ctx.rd.n == 1
    assert zipcones.is_hasse_type(ctx)


def test_so7_slice_corner_data():
    # n = 3 slice a1 = -(q-1): the hw boundary passes through (a, a) and
    # (b, 0) with a = (q^4-1)/(q^3+q^2-q-1) and b = (q^4-1)/(q^3-1), the gs
    # corner sits at (q-1, q-1), the pha corners at (q+1, q+1) and (q+1, 0),
    # and q-1 < a < b < q+1 exactly.
    from fractions import Fraction as Q

    for q in (2, 3, 5):
        ctx = catalog.preset("SOodd", n=3, q=q)
        hw = zipcones.hw_cone(ctx).complete()
        pha = zipcones.pha_cone(ctx)
        gs = zipcones.gs_cone(ctx)
        a = Q(q**4 - 1, q**3 + q**2 - q - 1)
        b = Q(q**4 - 1, q**3 - 1)
        assert Q(q - 1) < a < b < Q(q + 1)

        def scaled(x, y):
            # integer point on the ray through (-(q-1), x, y)
            from math import lcm

            den = lcm(x.denominator, y.denominator)
            return (-(q - 1) * den, int(x * den), int(y * den))

        # boundary memberships: inside the cone, with the key row binding
        for cone, pt in ((hw, scaled(a, a)), (hw, scaled(b, Q(0))),
                         (pha, scaled(Q(q + 1), Q(q + 1))), (pha, scaled(Q(q + 1), Q(0))),
                         (gs, scaled(Q(q - 1), Q(q - 1)))):
            assert cone.member(pt), (q, pt)
            assert cone.binding(pt), (q, pt)
        # on the diagonal, hw reaches exactly to a: past it lies only pha
        mid = (a + b) / 2
        pt = scaled(mid, mid)
        assert not hw.member(pt) and pha.member(pt)
        # on the axis, hw reaches exactly to b: past it lies only pha
        outer = (b + Q(q + 1)) / 2
        pt = scaled(outer, Q(0))
        assert not hw.member(pt) and pha.member(pt)
        # and just inside both markers the point still belongs to hw
        assert hw.member(scaled((a + Q(q - 1)) / 2, (a + Q(q - 1)) / 2))
        assert hw.member(scaled((b + a) / 2, Q(0)))


def test_gs_contains_neg_levi_everywhere():
    for name, ctx in catalog.standard_catalog(2):
        assert zipcones.gs_cone(ctx).contains(zipcones.neg_levi_cone(ctx)), name


def test_so_odd_templates_pinned_at_max_degree_plus_one_points():
    # the expected covectors are integer polynomials in q of degree 2n-2;
    # exact agreement at 2n-1 distinct q values pins every coefficient
    for n in (2, 3, 4, 5):
        degree = 2 * n - 2
        qs = [2, 3, 4, 5, 7, 8, 9, 11, 13][: degree + 1]
        assert len(qs) == degree + 1
        for q in qs:
            rep = catalog.reproduce("SOodd", n=n, q=q)
            assert rep["passed"], (n, q)

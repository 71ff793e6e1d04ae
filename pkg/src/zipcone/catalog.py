"""Preset zip contexts and bit-exact reproduction of the worked examples.

Expected cones are integer-polynomial-in-q inequality templates evaluated at
the given q; comparisons are exact cone equalities (mutual containment), so
redundant rows in either description are harmless.
"""
from __future__ import annotations

from . import linalg, zipcones
from .cones import cone_from_generators, cone_from_inequalities
from .errors import BadParams, UnknownPreset
from .rootdata import build_root_datum, split_frobenius, validate_frobenius
from .zipcones import ZipContext, make_context


# -- presets ----------------------------------------------------------------


def _u21_inert(q: int):
    rd = build_root_datum("GL3")
    sigma = ((0, 0, -1), (0, -1, 0), (-1, 0, 0))
    ctx = make_context(rd, validate_frobenius(rd, q, sigma), [0])
    meta = {
        "quotient_map": ((1, 0, -1), (0, 1, -1)),
        "lineality": ((1, 1, 1),),
    }
    return ctx, meta


def _gl3_split(q: int):
    rd = build_root_datum("GL3")
    ctx = make_context(rd, split_frobenius(rd, q), [0])
    return ctx, {"lineality": ((1, 1, 1),)}


def _so_odd(n: int, q: int):
    rd = build_root_datum(f"B{n}") if n >= 2 else build_root_datum((((1,),), ((2,),)))
    ctx = make_context(rd, split_frobenius(rd, q), range(1, rd.r))
    return ctx, {}


def _sp4(q: int):
    rd = build_root_datum("C2")
    ctx = make_context(rd, split_frobenius(rd, q), [0])
    return ctx, {}


def _hilbert_a1m(m: int, q: int):
    """A1^m in GL2^m coordinates with sigma cycling the factors; I is empty."""
    if m < 1:
        raise BadParams("m must be >= 1")
    n = 2 * m
    roots = []
    for f in range(m):
        v = [0] * n
        v[2 * f], v[2 * f + 1] = 1, -1
        roots.append(tuple(v))
    rd = build_root_datum((roots, roots))
    shift = tuple(
        tuple(1 if j == (i + 2) % n else 0 for j in range(n)) for i in range(n)
    )
    ctx = make_context(rd, validate_frobenius(rd, q, shift), [])
    return ctx, {"blocks": [[f] for f in range(m)]}


def _res_split(base: str, r: int, q: int):
    """Weil restriction of a split group: r block copies of the base datum,
    sigma cycling the blocks; the Levi drops the first simple root on block 0
    and is full on the other blocks."""
    if r < 1:
        raise BadParams("r must be >= 1")
    b = build_root_datum(base)
    n = b.n * r
    roots, coroots = [], []
    blocks = []
    for f in range(r):
        idxs = []
        for k in range(b.r):
            root = [0] * n
            coroot = [0] * n
            root[f * b.n : (f + 1) * b.n] = list(b.simple_roots[k])
            coroot[f * b.n : (f + 1) * b.n] = list(b.simple_coroots[k])
            idxs.append(len(roots))
            roots.append(tuple(root))
            coroots.append(tuple(coroot))
        blocks.append(idxs)
    rd = build_root_datum((roots, coroots))
    shift = tuple(
        tuple(1 if j == (i + b.n) % n else 0 for j in range(n)) for i in range(n)
    )
    frob = validate_frobenius(rd, q, shift)
    levi = [i for i in blocks[0][1:]]
    for f in range(1, r):
        levi.extend(blocks[f])
    ctx = make_context(rd, frob, levi)
    return ctx, {"blocks": blocks, "base_rank": b.r}


_PRESETS = {
    "U21-inert": (_u21_inert, ("q",)),
    "GL3-split": (_gl3_split, ("q",)),
    "SOodd": (_so_odd, ("n", "q")),
    "Sp4": (_sp4, ("q",)),
    "HilbertA1m": (_hilbert_a1m, ("m", "q")),
    "ResSplit": (_res_split, ("base", "r", "q")),
}


def preset_with_meta(name: str, **params):
    if name not in _PRESETS:
        raise UnknownPreset(f"unknown preset {name!r}; know {sorted(_PRESETS)}")
    builder, wanted = _PRESETS[name]
    missing = [k for k in wanted if k not in params]
    extra = [k for k in params if k not in wanted]
    if missing or extra:
        raise BadParams(f"preset {name} takes {wanted}; missing {missing}, extra {extra}")
    if params.get("q", 2) < 2:
        raise BadParams("q must be >= 2")
    return builder(**params)


def preset(name: str, **params) -> ZipContext:
    return preset_with_meta(name, **params)[0]


def standard_catalog(q: int = 2):
    """The ten-context catalog used by the property suites."""
    return [
        ("U21-inert", preset("U21-inert", q=q)),
        ("SOodd-n2", preset("SOodd", n=2, q=q)),
        ("SOodd-n3", preset("SOodd", n=3, q=q)),
        ("SOodd-n4", preset("SOodd", n=4, q=q)),
        ("GL3-split", preset("GL3-split", q=q)),
        ("Sp4", preset("Sp4", q=q)),
        ("HilbertA1m-m1", preset("HilbertA1m", m=1, q=q)),
        ("HilbertA1m-m2", preset("HilbertA1m", m=2, q=q)),
        ("HilbertA1m-m3", preset("HilbertA1m", m=3, q=q)),
        ("ResSplit-B2-r2", preset("ResSplit", base="B2", r=2, q=q)),
    ]


def res_split_piece_types(ctx: ZipContext, blocks):
    """The per-block Levi types of the intersected parabolics, two ways.

    Route one applies sigma^{-i} to root vectors and tests membership in I by
    vector; route two chases indices through the sigma permutation.  Both
    return, for each block j, the sorted simple-root indices of
    block_j intersected with all sigma^{-i}(I).
    """
    r = len(blocks)
    iset = set(ctx.I)
    sigma_inv = linalg.mat_inverse(ctx.frob.sigma)
    i_vectors = {ctx.rd.simple_roots[i] for i in ctx.I}
    by_vector = []
    for j in range(r):
        keep = []
        for a in blocks[j]:
            vec = ctx.rd.simple_roots[a]
            ok = True
            img = vec
            for _ in range(r):
                if img not in i_vectors:
                    ok = False
                    break
                img = linalg.mat_vec(sigma_inv, img)
            # i ranges over 0..r-1: sigma^0, sigma^-1, ..., sigma^-(r-1)
            if ok:
                keep.append(a)
        by_vector.append(tuple(sorted(keep)))
    perm = ctx.frob.sigma_perm
    by_index = []
    for j in range(r):
        keep = []
        for a in blocks[j]:
            cur, ok = a, True
            for _ in range(r):
                if cur not in iset:
                    ok = False
                    break
                cur = perm[cur]
            if ok:
                keep.append(a)
        by_index.append(tuple(sorted(keep)))
    return by_vector, by_index


# -- expected tables for the worked examples --------------------------------


def _u21_expected(q: int):
    """Quotient-plane (x, y) = (a1 - a3, a2 - a3) cones of the unitary example."""
    idom = [(1, -1)]
    return {
        "idominant": cone_from_inequalities(2, idom),
        "neglevi": cone_from_generators(2, [(-1, -1)]),
        "gs": cone_from_inequalities(2, idom + [(-1, 0)]),
        "pha": cone_from_inequalities(2, idom + [(q, -(q - 1)), (-(q - 1), -1)]),
        "hw": cone_from_inequalities(2, idom + [(-q, q - 1)]),
        "lw": cone_from_inequalities(2, idom + [(-(q - 1), -1)]),
        "zip": cone_from_inequalities(2, idom + [(-(q - 1), -1)]),
    }


def _so_odd_expected(n: int, q: int):
    if n < 2:
        raise BadParams("SOodd reproduction needs n >= 2")
    rd = build_root_datum(f"B{n}")
    idom = [tuple(rd.simple_coroots[i]) for i in range(1, rd.r)]
    pha_row = tuple([-(q + 1), -(q - 1)] + [0] * (n - 2))
    hw_row = tuple(
        [-(q ** (2 * n - 2) - 1)]
        + [(q - 1) * (q ** (i - 2) - q ** (2 * n - 1 - i)) for i in range(2, n + 1)]
    )
    neg_levi = cone_from_generators(n, [tuple([-1] + [0] * (n - 1))])
    return {
        "idominant": cone_from_inequalities(n, idom),
        "neglevi": neg_levi,
        "gs": cone_from_inequalities(n, idom + [tuple([-1, -1] + [0] * (n - 2))]),
        "pha": cone_from_inequalities(n, idom + [pha_row]),
        "hw": cone_from_inequalities(n, idom + [hw_row]),
        "lw": cone_from_inequalities(n, idom + [hw_row]),
        "zip": cone_from_inequalities(n, idom + [pha_row]),
    }


def _computed_cones(ctx: ZipContext, quotient=None):
    lw, certified = zipcones.lw_cone(ctx)
    hasse = zipcones.is_hasse_type(ctx)
    cones = {
        "idominant": zipcones.i_dominant_cone(ctx),
        "neglevi": zipcones.neg_levi_cone(ctx),
        "gs": zipcones.gs_cone(ctx),
        "pha": zipcones.pha_cone(ctx),
        "hw": zipcones.hw_cone(ctx),
        "lw": lw,
    }
    zip_route = None
    if hasse:
        cones["zip"] = cones["pha"]
        zip_route = "pha (Hasse-type, exact)"
    elif certified:
        cones["zip"] = lw
        zip_route = "lw (certified lower bound; equality per the unitary example)"
    if quotient is not None:
        cones = {k: c.image_under(quotient) for k, c in cones.items()}
    return cones, {"hasse_type": hasse, "certified_lw": certified, "zip_route": zip_route}


def reproduce(name: str, **params) -> dict:
    """Compare computed cones against the reference table of a worked example.

    Returns a structured report; `passed` is the conjunction of all rows and
    flag checks.  Raises UnknownPreset for presets without expected data.
    """
    if name == "U21-inert":
        q = params.get("q")
        if q is None:
            raise BadParams("U21-inert reproduction needs q")
        ctx, meta = preset_with_meta(name, q=q)
        expected = _u21_expected(q)
        computed, flags = _computed_cones(ctx, quotient=meta["quotient_map"])
        flag_checks = {
            "hasse_type is False": flags["hasse_type"] is False,
            "lw certified": flags["certified_lw"] is True,
            "lineality direction (1,1,1) in every cone": all(
                c.member((1, 1, 1)) and c.member((-1, -1, -1))
                for c in _computed_cones(ctx)[0].values()
            ),
        }
    elif name == "SOodd":
        n, q = params.get("n"), params.get("q")
        if n is None or q is None:
            raise BadParams("SOodd reproduction needs n and q")
        ctx, _ = preset_with_meta(name, n=n, q=q)
        expected = _so_odd_expected(n, q)
        computed, flags = _computed_cones(ctx)
        strict = computed["pha"].contains(computed["hw"]) and not computed[
            "hw"
        ].contains(computed["pha"])
        flag_checks = {
            "hasse_type is True": flags["hasse_type"] is True,
            "exact zip equals pha": flags["zip_route"] == "pha (Hasse-type, exact)",
            "hw equals lw": computed["hw"].equal(computed["lw"]),
        }
        if n == 2:
            flag_checks["hw equals pha at n=2"] = computed["hw"].equal(computed["pha"])
        else:
            flag_checks[f"hw strictly inside pha at n={n}"] = strict
    else:
        raise UnknownPreset(f"no reproduction data for preset {name!r}")

    rows = []
    for cone_name in sorted(expected):
        exp = expected[cone_name]
        got = computed[cone_name]
        ok = got.equal(exp)
        rows.append(
            {
                "name": cone_name,
                "passed": ok,
                "expected": exp.to_json(),
                "computed": got.to_json(),
            }
        )
    passed = all(r["passed"] for r in rows) and all(flag_checks.values())
    return {
        "example": name,
        "params": dict(sorted(params.items())),
        "rows": rows,
        "flag_checks": flag_checks,
        "zip_route": flags["zip_route"],
        "zip_report": zipcones.zip_report(ctx),
        "passed": passed,
    }

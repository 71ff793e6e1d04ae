"""Weight cones attached to a zip context (root datum, Frobenius, Levi type).

A ZipContext packages a root datum, a Frobenius datum and a subset I of the
simple roots (the type of the Levi centralizing the cocharacter), together
with the derived combinatorics: the largest sigma-stable subset I0 of I, the
longest elements w_{0,I} and w_{0,I0}, the orbit lengths r_alpha and the exit
times m_alpha.  On top of that sit the cones:

  dominant, I-dominant, X*_-(L),
  the Griffiths-Schmid cone,
  the partial Hasse invariant cone (image of the dominant cone under
      h_Z: lam -> lam - q w_{0,I} sigma^{-1} lam, computed by two routes),
  the highest and lowest weight cones (norm-extension inequalities),
  and Weil-restriction transports of split-context cones.

Everything is exact; q enters as a plain integer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q

from . import linalg, weyl
from .cones import RationalCone, cone_from_inequalities, equality_pair
from .errors import DimensionMismatch, InternalError, InvalidR
from .rootdata import FrobeniusDatum, RootDatum, pair, validate_frobenius
from .weyl import WeylElement


@dataclass(frozen=True)
class ZipContext:
    rd: RootDatum
    frob: FrobeniusDatum
    I: tuple
    I0: tuple
    delta_p: tuple
    delta_p0: tuple
    w0I: WeylElement
    w0I0: WeylElement
    r_alpha: tuple  # sigma-orbit length of each simple root
    m_alpha: dict  # alpha in Delta^P -> min m >= 1 with sigma^-m(alpha) not in I
    split_degree: int
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.frob.q

    @property
    def n(self) -> int:
        return self.rd.n

    def p1_delta(self, alpha_index: int):
        """Delta^{P_1} for alpha: sigma^-(m_alpha - 1) applied to Delta^P."""
        m = self.m_alpha[alpha_index]
        perm_inv = _perm_inverse(self.frob.sigma_perm)
        out = set(self.delta_p)
        for _ in range(m - 1):
            out = {perm_inv[i] for i in out}
        return tuple(sorted(out))

    def fixed_levi_weyl(self):
        """W_{L_0}(F_q): elements of W_{I0} commuting with sigma."""
        if "wfix" not in self._cache:
            els = weyl.enumerate_parabolic(self.rd, self.I0)
            self._cache["wfix"] = tuple(weyl.sigma_fixed(els, self.frob))
        return self._cache["wfix"]


def _perm_inverse(perm):
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


def make_context(rd: RootDatum, frob: FrobeniusDatum, I) -> ZipContext:
    I = tuple(sorted(set(I)))
    if any(i < 0 or i >= rd.r for i in I):
        raise DimensionMismatch("Levi indices out of range")
    perm = frob.sigma_perm
    perm_inv = _perm_inverse(perm)

    def orbit(i):
        out = [i]
        j = perm[i]
        while j != i:
            out.append(j)
            j = perm[j]
        return out

    iset = set(I)
    I0 = tuple(sorted(i for i in I if all(j in iset for j in orbit(i))))
    if {perm[i] for i in I0} != set(I0):
        raise InternalError("I0 is not sigma-stable")
    delta_p = tuple(i for i in range(rd.r) if i not in iset)
    delta_p0 = tuple(i for i in range(rd.r) if i not in set(I0))
    r_alpha = tuple(len(orbit(i)) for i in range(rd.r))
    m_alpha = {}
    for a in delta_p:
        j, m = perm_inv[a], 1
        while j in iset:
            j = perm_inv[j]
            m += 1
            if m > frob.sigma_order + 1:
                raise InternalError("m_alpha walk failed to terminate")
        m_alpha[a] = m
    split_degree = frob.sigma_order
    for a in delta_p:
        if not 1 <= m_alpha[a] <= r_alpha[a] <= split_degree:
            raise InternalError("1 <= m_alpha <= r_alpha <= split degree violated")
    return ZipContext(
        rd=rd,
        frob=frob,
        I=I,
        I0=I0,
        delta_p=delta_p,
        delta_p0=delta_p0,
        w0I=weyl.longest_element(rd, I),
        w0I0=weyl.longest_element(rd, I0),
        r_alpha=r_alpha,
        m_alpha=m_alpha,
        split_degree=split_degree,
    )


def split_context(ctx: ZipContext, r: int | None = None) -> ZipContext:
    """The context (same datum, Frobenius sigma^r with parameter q^r, Levi I0)
    used by the Weil-restriction transport.  Default r is the split degree."""
    r = ctx.split_degree if r is None else r
    frob_r = validate_frobenius(ctx.rd, ctx.q ** r, linalg.mat_pow(ctx.frob.sigma, r))
    return make_context(ctx.rd, frob_r, ctx.I0)


# -- delta_alpha ----------------------------------------------------------


def delta_alpha(ctx: ZipContext, alpha):
    """The rational cocharacter with delta - q sigma(delta) = alpha^vee."""
    coroot = ctx.rd.coroot_of(tuple(alpha))
    costar = ctx.frob.sigma_costar
    orbit = [coroot]
    cur = linalg.mat_vec(costar, coroot)
    while cur != coroot:
        orbit.append(cur)
        cur = linalg.mat_vec(costar, cur)
        if len(orbit) > ctx.frob.sigma_order:
            raise InternalError("coroot orbit longer than sigma order")
    r = len(orbit)
    q = ctx.q
    denom = q ** r - 1
    total = tuple(
        sum(q ** j * orbit[j][k] for j in range(r)) for k in range(ctx.n)
    )
    return tuple(Q(-t, denom) for t in total)


def frobenius_twist_of_cocharacter(ctx: ZipContext, delta):
    """The map delta -> delta - q sigma(delta) on X_*(T)_Q."""
    img = linalg.mat_vec(ctx.frob.sigma_costar, delta)
    return tuple(Q(d) - ctx.q * Q(s) for d, s in zip(delta, img))


# -- basic cones ----------------------------------------------------------


def dominant_cone(ctx: ZipContext) -> RationalCone:
    return cone_from_inequalities(ctx.n, list(ctx.rd.simple_coroots))


def i_dominant_cone(ctx: ZipContext) -> RationalCone:
    return cone_from_inequalities(ctx.n, [ctx.rd.simple_coroots[i] for i in ctx.I])


def neg_levi_cone(ctx: ZipContext) -> RationalCone:
    """X*_-(L): trivial on the coroots of I, nonpositive on Delta^P coroots."""
    ineqs = []
    for i in ctx.I:
        ineqs.extend(equality_pair(ctx.rd.simple_coroots[i]))
    for a in ctx.delta_p:
        ineqs.append(linalg.vec_neg(ctx.rd.simple_coroots[a]))
    return cone_from_inequalities(ctx.n, ineqs)


def is_levi_regular(ctx: ZipContext, lam) -> bool:
    """Strict negativity on Delta^P inside X*(L) (reported as a flag)."""
    return all(pair(lam, ctx.rd.simple_coroots[i]) == 0 for i in ctx.I) and all(
        pair(lam, ctx.rd.simple_coroots[a]) < 0 for a in ctx.delta_p
    )


def gs_cone(ctx: ZipContext) -> RationalCone:
    """Nonnegative on I-coroots, nonpositive on coroots of Phi+ \\ Phi+_L."""
    iset = set(ctx.I)
    ineqs = [ctx.rd.simple_coroots[i] for i in ctx.I]
    for root, coroot in ctx.rd.positive_roots_with_coroots():
        coeffs = ctx.rd.root_coefficients(root)
        in_levi = all(c == 0 for k, c in enumerate(coeffs) if k not in iset)
        if not in_levi:
            ineqs.append(linalg.vec_neg(coroot))
    return cone_from_inequalities(ctx.n, ineqs)


# -- partial Hasse invariant cone ----------------------------------------


def hz_map(ctx: ZipContext):
    """Integer matrix of h_Z: lam -> lam - q w_{0,I}(sigma^{-1} lam)."""
    sigma_inv = linalg.mat_inverse(ctx.frob.sigma)
    twist = linalg.mat_mul(ctx.w0I.matrix, sigma_inv)
    n = ctx.n
    return tuple(
        tuple((1 if i == j else 0) - ctx.q * twist[i][j] for j in range(n))
        for i in range(n)
    )


def _twist_matrix(ctx: ZipContext):
    sigma_inv = linalg.mat_inverse(ctx.frob.sigma)
    return linalg.mat_mul(ctx.w0I.matrix, sigma_inv)


def pha_cone(ctx: ZipContext) -> RationalCone:
    """Saturation of h_Z(X*_+(T)), computed by both routes and cross-checked.

    V-route: image of the dominant cone under h_Z.  H-route: pull the
    dominance inequalities back through h_Z^{-1} (covectors transform by the
    inverse-transpose).  h_Z is invertible for q >= 2 since the twist matrix
    has finite order, so every eigenvalue of q*twist has modulus q.
    """
    h = hz_map(ctx)
    dom = dominant_cone(ctx)
    v_route = dom.image_under(h)
    hinv = linalg.mat_inverse(h)
    hinvt = linalg.transpose(hinv)
    ineqs = [linalg.mat_vec(hinvt, av) for av in ctx.rd.simple_coroots]
    h_route = cone_from_inequalities(ctx.n, ineqs)
    if not v_route.equal(h_route):
        raise InternalError("pha_cone: V-route and H-route disagree")
    return h_route.complete()


def k_alpha_period(ctx: ZipContext) -> int:
    """Number of terms in the K_alpha sum.

    The twisted operator w_{0,I} o sigma^{-1} satisfies B^d = 1 for d its
    order, so sum_{i<D} q^i B^i = (1 - q^D) h_Z^{-1} for any multiple D of d.
    Taking D = lcm(2 * split_degree, d) keeps the familiar 2n-term sum
    whenever sigma stabilizes I (d divides 2n there) and stays an even
    multiple of d in general.
    """
    d = linalg.mat_order(_twist_matrix(ctx))
    two_n = 2 * ctx.split_degree
    g = _gcd(two_n, d)
    return two_n * d // g


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def k_alpha_covectors(ctx: ZipContext):
    """Covectors c_a with K_a(lam) = <lam, c_a>, cached on the context."""
    if "k_covectors" not in ctx._cache:
        twist_t = linalg.transpose(_twist_matrix(ctx))
        period = k_alpha_period(ctx)
        covs = []
        for a in range(ctx.rd.r):
            cur = ctx.rd.simple_coroots[a]
            total = tuple(0 for _ in range(ctx.n))
            qpow = 1
            for _ in range(period):
                total = linalg.vec_add(total, linalg.vec_scale(qpow, cur))
                cur = linalg.mat_vec(twist_t, cur)
                qpow *= ctx.q
            covs.append(total)
        ctx._cache["k_covectors"] = tuple(covs)
    return ctx._cache["k_covectors"]


def k_alpha(ctx: ZipContext, lam, alpha_index: int):
    """K_alpha(lam) = sum_i q^i <(w_{0,I} sigma^{-1})^i lam, alpha^vee>."""
    return pair(lam, k_alpha_covectors(ctx)[alpha_index])


# -- highest and lowest weight cones --------------------------------------


def _norm_covector(ctx: ZipContext, alpha_index: int, pre_matrix=None):
    """Covector of sum_{w in W_{L0}(F_q)} sum_{i<r_a} q^{i+l(w)} <w M lam, sigma^i a^vee>
    (as a <= 0 constraint; the caller flips the sign)."""
    coroot = ctx.rd.simple_coroots[alpha_index]
    costar = ctx.frob.sigma_costar
    orbit_part = tuple(0 for _ in range(ctx.n))
    cur = coroot
    qpow = 1
    for _ in range(ctx.r_alpha[alpha_index]):
        orbit_part = linalg.vec_add(orbit_part, linalg.vec_scale(qpow, cur))
        cur = linalg.mat_vec(costar, cur)
        qpow *= ctx.q
    total = tuple(0 for _ in range(ctx.n))
    for w in ctx.fixed_levi_weyl():
        wt = linalg.transpose(w.matrix)
        total = linalg.vec_add(
            total, linalg.vec_scale(ctx.q ** w.length, linalg.mat_vec(wt, orbit_part))
        )
    if pre_matrix is not None:
        total = linalg.mat_vec(linalg.transpose(pre_matrix), total)
    return total


def hw_cone(ctx: ZipContext) -> RationalCone:
    """Highest weight cone: I-dominance plus the norm inequalities over Delta^P."""
    ineqs = [ctx.rd.simple_coroots[i] for i in ctx.I]
    for a in ctx.delta_p:
        ineqs.append(linalg.vec_neg(_norm_covector(ctx, a)))
    return cone_from_inequalities(ctx.n, ineqs)


def check_cond_commute(ctx: ZipContext, alpha_index: int) -> bool:
    """Pairings between distinct sigma^{-i}(alpha) for 1 <= i < m_alpha vanish
    both ways and no positive combination of two of them is a root."""
    m = ctx.m_alpha[alpha_index]
    if m <= 2:
        return True
    sigma_inv = linalg.mat_inverse(ctx.frob.sigma)
    costar_inv = linalg.mat_inverse(ctx.frob.sigma_costar)
    root = ctx.rd.simple_roots[alpha_index]
    coroot = ctx.rd.simple_coroots[alpha_index]
    roots, coroots = [root], [coroot]
    for _ in range(m - 1):
        roots.append(linalg.mat_vec(sigma_inv, roots[-1]))
        coroots.append(linalg.mat_vec(costar_inv, coroots[-1]))
    all_roots = set()
    for r, _ in ctx.rd.positive_roots_with_coroots():
        all_roots.add(r)
        all_roots.add(linalg.vec_neg(r))
    for i in range(1, m - 1):
        for j in range(i + 1, m):
            if pair(roots[i], coroots[j]) != 0 or pair(roots[j], coroots[i]) != 0:
                return False
            for a in range(1, 4):
                for b in range(1, 4):
                    combo = linalg.vec_add(
                        linalg.vec_scale(a, roots[i]), linalg.vec_scale(b, roots[j])
                    )
                    if combo in all_roots:
                        return False
    return True


def lw_cone(ctx: ZipContext):
    """Lowest weight cone and its certification flag.

    The norm inequalities are evaluated at lam_0 = w_{0,I0} w_{0,I} lam and
    range over Delta^{P0}.  The containment in the zip cone is guaranteed
    only when every alpha in Delta^P passes the commutation condition;
    `certified` reports exactly that.
    """
    pre = linalg.mat_mul(ctx.w0I0.matrix, ctx.w0I.matrix)
    ineqs = [ctx.rd.simple_coroots[i] for i in ctx.I]
    for a in ctx.delta_p0:
        ineqs.append(linalg.vec_neg(_norm_covector(ctx, a, pre_matrix=pre)))
    certified = all(check_cond_commute(ctx, a) for a in ctx.delta_p)
    return cone_from_inequalities(ctx.n, ineqs), certified


# -- Weil restriction transport -------------------------------------------


def weil_transport(ctx: ZipContext, r: int, inner: RationalCone) -> RationalCone:
    """X*_{+,I} intersected with w_{0,I} w_{0,I0} applied to an inner bound of
    the split-context zip cone."""
    perm = ctx.frob.perm_power(r % ctx.frob.sigma_order)
    if any(perm[i] != i for i in ctx.I):
        raise InvalidR(f"sigma^{r} does not fix I pointwise")
    mat = linalg.mat_mul(ctx.w0I.matrix, ctx.w0I0.matrix)
    moved = inner.image_under(mat)
    return i_dominant_cone(ctx).intersect(moved)


# -- hasse-type test (lattice level) ---------------------------------------


def is_hasse_type(ctx: ZipContext) -> bool:
    """sigma(I) = I as a set and sigma acts on I by -w_{0,I}."""
    perm = ctx.frob.sigma_perm
    if {perm[i] for i in ctx.I} != set(ctx.I):
        return False
    for i in ctx.I:
        img = linalg.mat_vec(ctx.frob.sigma, ctx.rd.simple_roots[i])
        opp = linalg.vec_neg(ctx.w0I.act(ctx.rd.simple_roots[i]))
        if img != opp:
            return False
    return True


def hasse_criteria(ctx: ZipContext) -> dict:
    """Which parts of the root-data criterion hold (for reporting)."""
    perm = ctx.frob.sigma_perm
    stable = {perm[i] for i in ctx.I} == set(ctx.I)
    acts_by_opposition = stable and all(
        linalg.mat_vec(ctx.frob.sigma, ctx.rd.simple_roots[i])
        == linalg.vec_neg(ctx.w0I.act(ctx.rd.simple_roots[i]))
        for i in ctx.I
    )
    return {
        "levi_defined_over_Fq": stable,
        "sigma_acts_by_opposition": acts_by_opposition,
        "hasse_type": stable and acts_by_opposition,
    }


# -- the report -------------------------------------------------------------


CONE_BUILDERS = ("dominant", "idominant", "neglevi", "gs", "pha", "hw", "lw")


def build_cone(ctx: ZipContext, which: str) -> RationalCone:
    if which == "dominant":
        return dominant_cone(ctx)
    if which == "idominant":
        return i_dominant_cone(ctx)
    if which == "neglevi":
        return neg_levi_cone(ctx)
    if which == "gs":
        return gs_cone(ctx)
    if which == "pha":
        return pha_cone(ctx)
    if which == "hw":
        return hw_cone(ctx)
    if which == "lw":
        return lw_cone(ctx)[0]
    raise DimensionMismatch(f"unknown cone name {which!r}")


def zip_report(ctx: ZipContext) -> dict:
    """All computed cones, the inner/outer bounds on the zip cone, the
    Hasse-type flags and the inclusion matrix."""
    cones = {
        "idominant": i_dominant_cone(ctx).complete(),
        "neglevi": neg_levi_cone(ctx).complete(),
        "gs": gs_cone(ctx).complete(),
        "pha": pha_cone(ctx),
        "hw": hw_cone(ctx).complete(),
    }
    lw, certified = lw_cone(ctx)
    cones["lw"] = lw.complete()
    sctx = split_context(ctx)
    cones["weil_hw"] = weil_transport(ctx, ctx.split_degree, hw_cone(sctx)).complete()
    hasse = is_hasse_type(ctx)
    inner = ["pha", "hw", "gs", "neglevi", "weil_hw"]
    if certified:
        inner.append("lw")
    inclusions = []
    names = sorted(cones)
    for a in names:
        for b in names:
            if a != b and cones[b].contains(cones[a]):
                inclusions.append([a, b])
    return {
        "cones": {name: cones[name].to_json() for name in names},
        "inner_bounds": sorted(inner),
        "outer_bound": "idominant",
        "hasse_type": hasse,
        "exact_zip": hasse,
        "zip_cone": "pha" if hasse else None,
        "certified_lw": certified,
        "inclusions": sorted(inclusions),
    }

"""Exact rational polyhedral cones with dual V/H representations.

Cones are saturated by construction: membership of a lattice point is
rational-cone membership.  All vectors are stored as primitive integer
tuples; lineality is allowed on both sides (a lineality direction appears
among the generators as a +/- pair, an equality among the inequalities
likewise).  Conversion uses the double description method with incremental
inequality insertion; the Fourier-Motzkin route in `fm` is kept independent
as a test oracle.
"""
from __future__ import annotations

from . import linalg
from .errors import DimensionMismatch, DimensionTooLarge, SingularMap

DIM_CAP = 12


def _tight_set(vec, constraints):
    return frozenset(
        i for i, a in enumerate(constraints) if linalg.dot(a, vec) == 0
    )


def dual_description(dim: int, ineqs):
    """Extreme rays and lineality of {x : <a, x> >= 0 for a in ineqs}.

    Incremental double description; returns (rays, lineality_basis) with
    rays reduced to canonical representatives modulo the lineality space.
    """
    if dim > DIM_CAP:
        raise DimensionTooLarge(f"dimension {dim} exceeds cap {DIM_CAP}")
    lin = [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
    rays: list = []
    inserted: list = []
    for a in ineqs:
        a = linalg.primitive(a)
        if linalg.is_zero(a):
            continue
        piv = next((l for l in lin if linalg.dot(a, l) != 0), None)
        if piv is not None:
            s = linalg.dot(a, piv)
            if s < 0:
                piv, s = linalg.vec_neg(piv), -s
            new_lin = []
            for l in lin:
                t = linalg.dot(a, l)
                if t == 0:
                    new_lin.append(l)
                elif l not in (piv, linalg.vec_neg(piv)):
                    new_lin.append(
                        linalg.primitive(
                            linalg.vec_sub(linalg.vec_scale(s, l), linalg.vec_scale(t, piv))
                        )
                    )
            projected = []
            for r in rays:
                p = linalg.primitive(
                    linalg.vec_sub(linalg.vec_scale(s, r), linalg.vec_scale(linalg.dot(a, r), piv))
                )
                # rays equal modulo the pivot direction collapse here; keeping
                # duplicates would poison the tight-set adjacency test later
                if not linalg.is_zero(p) and p not in projected:
                    projected.append(p)
            projected.append(piv)
            rays = projected
            lin = new_lin
        else:
            vals = [linalg.dot(a, r) for r in rays]
            if all(v >= 0 for v in vals):
                pass  # constraint is implied on the current cone
            else:
                tights = [_tight_set(r, inserted) for r in rays]
                plus = [i for i, v in enumerate(vals) if v > 0]
                zero = [i for i, v in enumerate(vals) if v == 0]
                minus = [i for i, v in enumerate(vals) if v < 0]
                new_rays = [rays[i] for i in plus + zero]
                for ip in plus:
                    for im in minus:
                        common = tights[ip] & tights[im]
                        adjacent = not any(
                            k not in (ip, im) and common <= tights[k]
                            for k in range(len(rays))
                        )
                        if not adjacent:
                            continue
                        combo = linalg.vec_sub(
                            linalg.vec_scale(vals[ip], rays[im]),
                            linalg.vec_scale(vals[im], rays[ip]),
                        )
                        combo = linalg.primitive(combo)
                        if not linalg.is_zero(combo) and combo not in new_rays:
                            new_rays.append(combo)
                rays = new_rays
        inserted.append(a)
    lin_basis = linalg.canonical_subspace_basis(lin) if lin else ()
    if lin_basis:
        red, piv_cols = linalg.rref(lin_basis)
        rays = [
            linalg.primitive(linalg.reduce_mod_subspace(r, red, piv_cols)) for r in rays
        ]
        rays = [r for r in rays if not linalg.is_zero(r)]
    return tuple(sorted(set(rays))), tuple(lin_basis)


def _merge(rays, lin):
    """Flatten (rays, lineality) into a single generator list with +/- pairs."""
    out = list(rays)
    for l in lin:
        out.append(l)
        out.append(linalg.vec_neg(l))
    return tuple(sorted(set(out)))


class RationalCone:
    """A rational polyhedral cone with at least one of the two descriptions."""

    def __init__(self, dim: int, generators=None, inequalities=None):
        if generators is None and inequalities is None:
            raise DimensionMismatch("need generators or inequalities")
        self.dim = dim
        self._gens = self._normalize(generators) if generators is not None else None
        self._ineqs = self._normalize(inequalities) if inequalities is not None else None
        self._canonical = False

    def _normalize(self, vectors):
        out = []
        for v in vectors:
            if len(v) != self.dim:
                raise DimensionMismatch(
                    f"vector length {len(v)} != ambient dim {self.dim}"
                )
            p = linalg.primitive(v)
            if not linalg.is_zero(p):
                out.append(p)
        return tuple(sorted(set(out)))

    # -- completion ------------------------------------------------------

    def complete(self) -> "RationalCone":
        """Fill in the missing side and canonicalize both (idempotent)."""
        if self._canonical:
            return self
        given_ineqs = self._ineqs if self._gens is not None else None
        if self._gens is not None:
            if self._ineqs is not None:
                self._check_mutual()
            gens_in = self._gens
        else:
            rays, lin = dual_description(self.dim, self._ineqs)
            gens_in = _merge(rays, lin)
        # H-rep: the dual cone of the generators, flattened
        dual_rays, dual_lin = dual_description(self.dim, gens_in)
        ineqs = _merge(dual_rays, dual_lin)
        # canonical V-rep from the canonical H-rep
        rays, lin = dual_description(self.dim, ineqs)
        self._gens = _merge(rays, lin)
        self._ineqs = ineqs
        self._canonical = True
        if given_ineqs is not None:
            # round-trip check: the given inequalities must cut the same cone
            other = RationalCone(self.dim, inequalities=given_ineqs)
            if not self.equal(other):
                raise DimensionMismatch(
                    "generators and inequalities describe different cones"
                )
        return self

    def _check_mutual(self):
        for g in self._gens:
            for h in self._ineqs:
                if linalg.dot(g, h) < 0:
                    raise DimensionMismatch(
                        f"given generator {g} violates given inequality {h}"
                    )

    @property
    def generators(self):
        if self._gens is None:
            self.complete()
        return self._gens

    @property
    def inequalities(self):
        if self._ineqs is None:
            self.complete()
        return self._ineqs

    # -- queries ---------------------------------------------------------

    def member(self, lam) -> bool:
        if len(lam) != self.dim:
            raise DimensionMismatch("vector has wrong length")
        return all(linalg.dot(lam, h) >= 0 for h in self.inequalities)

    def binding(self, lam):
        """Inequalities tight at lam (when member) or violated (when not)."""
        if self.member(lam):
            return [h for h in self.inequalities if linalg.dot(lam, h) == 0]
        return [h for h in self.inequalities if linalg.dot(lam, h) < 0]

    def contains(self, inner: "RationalCone") -> bool:
        if self.dim != inner.dim:
            raise DimensionMismatch("ambient dimensions differ")
        return all(self.member(g) for g in inner.generators)

    def witness_outside(self, inner: "RationalCone"):
        """A generator of inner outside self, or None."""
        for g in inner.generators:
            if not self.member(g):
                return g
        return None

    def equal(self, other: "RationalCone") -> bool:
        return self.contains(other) and other.contains(self)

    def intersect(self, other: "RationalCone") -> "RationalCone":
        if self.dim != other.dim:
            raise DimensionMismatch("ambient dimensions differ")
        return RationalCone(
            self.dim, inequalities=self.inequalities + other.inequalities
        )

    def rank(self) -> int:
        gens = self.generators
        return linalg.rank(gens) if gens else 0

    def lineality_basis(self):
        gens = set(self.generators)
        lines = [g for g in gens if linalg.vec_neg(g) in gens]
        return linalg.canonical_subspace_basis(lines) if lines else ()

    def is_zero(self) -> bool:
        return not self.generators

    # -- maps --------------------------------------------------------------

    def image_under(self, matrix, via: str = "generators") -> "RationalCone":
        """Pushforward along a linear map.

        The generator route works for any matrix (rows x dim).  The
        inequality route needs a square invertible map; covectors then
        transform by the inverse-transpose.
        """
        if via == "generators":
            gens = [linalg.mat_vec(matrix, g) for g in self.generators]
            return RationalCone(len(matrix), generators=gens)
        if via == "inequalities":
            if len(matrix) != self.dim or any(len(r) != self.dim for r in matrix):
                raise SingularMap("inequality pushforward needs a square map")
            try:
                inv = linalg.mat_inverse(matrix)
            except SingularMap:
                raise SingularMap("inequality pushforward needs an invertible map")
            invt = linalg.transpose(inv)
            ineqs = [linalg.mat_vec(invt, h) for h in self.inequalities]
            return RationalCone(self.dim, inequalities=ineqs)
        raise ValueError(f"unknown route {via!r}")

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        self.complete()
        return {
            "dim": self.dim,
            "generators": [list(g) for g in self.generators],
            "inequalities": [list(h) for h in self.inequalities],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RationalCone":
        gens = data.get("generators")
        ineqs = data.get("inequalities")
        return cls(
            int(data["dim"]),
            generators=[tuple(int(x) for x in g) for g in gens] if gens is not None else None,
            inequalities=[tuple(int(x) for x in h) for h in ineqs] if ineqs is not None else None,
        )

    def __repr__(self):
        sides = []
        if self._gens is not None:
            sides.append(f"{len(self._gens)} gens")
        if self._ineqs is not None:
            sides.append(f"{len(self._ineqs)} ineqs")
        return f"RationalCone(dim={self.dim}, {', '.join(sides)})"


def cone_from_generators(dim: int, gens) -> RationalCone:
    return RationalCone(dim, generators=gens)


def cone_from_inequalities(dim: int, ineqs) -> RationalCone:
    return RationalCone(dim, inequalities=ineqs)


def whole_space(dim: int) -> RationalCone:
    return RationalCone(dim, inequalities=[])


def equality_pair(covector):
    """The two inequalities expressing <lam, covector> == 0."""
    return [tuple(covector), linalg.vec_neg(tuple(covector))]

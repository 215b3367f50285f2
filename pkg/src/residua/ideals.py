"""Ideal-level operations: sum, intersection, colon, equality, dimension,
height, minimal generators, and the G_s test via Fitting-ideal heights."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .ring import Polynomial, PolyRing, MonomialOrder, RingMismatchError
from .groebner import (
    GroebnerBasis,
    NotAMemberError,
    divide_exact,
    ideal_syzygies,
    normal_form,
    reduced_groebner,
)


class NonHomogeneousError(ValueError):
    pass


class DivisionInexactError(RuntimeError):
    """Internal consistency failure in the colon computation."""


@dataclass
class Ideal:
    ring: PolyRing
    generators: tuple
    _gb: GroebnerBasis = dc_field(default=None, repr=False, compare=False)

    def __init__(self, ring: PolyRing, generators):
        self.ring = ring
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
            gens.append(g)
        self.generators = tuple(gens)
        self._gb = None

    # -- canonical form ------------------------------------------------------

    def groebner(self) -> GroebnerBasis:
        """Reduced Gröbner basis; computed once and cached."""
        if self._gb is None:
            gens = [g for g in self.generators if not g.is_zero()]
            if not gens:
                self._gb = GroebnerBasis(self.ring, (), reduced=True)
            else:
                self._gb = reduced_groebner(gens)
        return self._gb

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self.groebner()).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def is_zero(self) -> bool:
        return len(self.groebner()) == 0

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb.elements[0] == self.ring.one

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------

def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise RingMismatchError("ideal_sum across rings")
    return Ideal(I.ring, I.generators + J.generators)


def _fresh_var(ring: PolyRing) -> str:
    name = "t"
    i = 0
    while name in ring.variables:
        name = f"t{i}"
        i += 1
    return name


def _extend_ring(ring: PolyRing):
    """Ring with one fresh elimination variable in front, block order."""
    t = _fresh_var(ring)
    ext = PolyRing(ring.field, (t,) + ring.variables, MonomialOrder("block", 1))
    return ext, t


def _lift(p: Polynomial, ext: PolyRing) -> Polynomial:
    return ext.from_dict({(0,) + m: c for m, c in p.terms})


def _drop(p: Polynomial, ring: PolyRing) -> Polynomial:
    return ring.from_dict({m[1:]: c for m, c in p.terms})


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via the auxiliary variable trick: eliminate t from tI + (1-t)J."""
    if I.ring != J.ring:
        raise RingMismatchError("intersect across rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, ())
    ext, tname = _extend_ring(ring)
    t = ext.var(tname)
    gens = [t * _lift(g, ext) for g in I.generators if not g.is_zero()]
    gens += [(ext.one - t) * _lift(g, ext) for g in J.generators if not g.is_zero()]
    gb = reduced_groebner(gens)
    kept = [_drop(g, ring) for g in gb.elements if all(m[0] == 0 for m, _ in g.terms)]
    return Ideal(ring, kept)


def _colon_principal(a: Ideal, f: Polynomial) -> Ideal:
    """a : (f) via generators of a ∩ (f) divided by f."""
    ring = a.ring
    if f.is_zero():
        return Ideal(ring, (ring.one,))
    meet = intersect(a, Ideal(ring, (f,)))
    quot = []
    for g in meet.generators:
        try:
            quot.append(divide_exact(g, f))
        except NotAMemberError as exc:
            raise DivisionInexactError(str(exc)) from exc
    return Ideal(ring, quot)


def colon(a: Ideal, I: Ideal) -> Ideal:
    """The quotient ideal a : I = {r : r·I ⊆ a}."""
    if a.ring != I.ring:
        raise RingMismatchError("colon across rings")
    gens = [g for g in I.generators if not g.is_zero()]
    if not gens:
        raise ValueError("colon by the zero ideal")
    result = None
    for f in gens:
        piece = _colon_principal(a, f)
        result = piece if result is None else intersect(result, piece)
    return result


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise RingMismatchError("ideal_equal across rings")
    return I.groebner().elements == J.groebner().elements


# ---------------------------------------------------------------------------
# dimension theory
# ---------------------------------------------------------------------------

def dimension(I: Ideal) -> int:
    """Krull dimension of R/I: the largest variable subset independent
    modulo the leading-term ideal.  The unit ideal reports -1."""
    if I.is_unit():
        return -1
    nv = I.ring.nvars
    lts = [g.lm() for g in I.groebner().elements]
    if not lts:
        return nv
    best = 0
    for mask in range(1 << nv):
        size = mask.bit_count()
        if size <= best:
            continue
        # S is independent iff no leading monomial is supported inside S
        ok = True
        for m in lts:
            if all(e == 0 or (mask >> i) & 1 for i, e in enumerate(m)):
                ok = False
                break
        if ok:
            best = size
    return best


def height(I: Ideal) -> int:
    """Codimension; the polynomial ring is catenary and equidimensional,
    so height = nvars - dim(R/I).  Unit ideal reports the variable count."""
    if I.is_unit():
        return I.ring.nvars
    return I.ring.nvars - dimension(I)


# ---------------------------------------------------------------------------
# minimal generators and G_s
# ---------------------------------------------------------------------------

def min_gens(I: Ideal) -> list:
    """A minimal homogeneous generating sequence (graded Nakayama)."""
    gens = [g for g in I.generators if not g.is_zero()]
    for g in gens:
        if not g.is_homogeneous():
            raise NonHomogeneousError(f"non-homogeneous generator {g}")
    gens.sort(key=lambda g: g.total_degree())
    kept = []
    for g in gens:
        if not kept:
            kept.append(g.monic())
            continue
        if not normal_form(g, reduced_groebner(kept)).is_zero():
            kept.append(g.monic())
    return kept


def mu(I: Ideal) -> int:
    return len(min_gens(I))


def check_Gs(I: Ideal, s: int) -> bool:
    """G_s via heights of Fitting ideals of I:
    height(Fitt_j(I) + I) >= j+1 for 0 <= j <= s-1."""
    from .fitting import minors  # local import to avoid a cycle

    if I.is_unit() or I.is_zero():
        raise ValueError("check_Gs needs a proper nonzero ideal")
    x = min_gens(I)
    n = len(x)
    syz = ideal_syzygies(x)
    matrix = [[s_.components[i] for s_ in syz] for i in range(n)]
    for j in range(s):
        fitt_j = minors(I.ring, matrix, n - j)
        if height(ideal_sum(fitt_j, I)) < j + 1:
            return False
    return True

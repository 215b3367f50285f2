"""Koszul complexes: exterior algebra elements, differentials, cycle and
homology generators with lifts, and the Kitt ideal via both of its
constructions (homology lifts, and products of cycles with the Gamma
subalgebra generated by the zeta elements of a)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .ring import Polynomial, PolyRing
from .groebner import (
    FreeModuleElement,
    express_in_terms,
    module_member,
    syzygies,
)
from .ideals import Ideal, NonHomogeneousError, height, min_gens
from .fitting import NotASubidealError


# ---------------------------------------------------------------------------
# exterior algebra
# ---------------------------------------------------------------------------

class ExteriorElement:
    """Homogeneous degree-i element of the exterior algebra on e_1..e_n,
    a map from sorted i-subsets of {1..n} to nonzero polynomials."""

    __slots__ = ("ring", "n", "degree", "coeffs")

    def __init__(self, ring: PolyRing, n: int, degree: int, coeffs: dict):
        self.ring = ring
        self.n = n
        self.degree = degree
        self.coeffs = {S: p for S, p in coeffs.items() if not p.is_zero()}
        for S in self.coeffs:
            if len(S) != degree or list(S) != sorted(S):
                raise ValueError(f"bad subset key {S} for degree {degree}")

    @classmethod
    def zero(cls, ring, n, degree):
        return cls(ring, n, degree, {})

    @classmethod
    def scalar(cls, ring, n, poly: Polynomial):
        return cls(ring, n, 0, {(): poly})

    @classmethod
    def basis_vector(cls, ring, n, subset):
        return cls(ring, n, len(subset), {tuple(subset): ring.one})

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, subset) -> Polynomial:
        return self.coeffs.get(tuple(subset), self.ring.zero)

    def __add__(self, other):
        if (self.n, self.degree) != (other.n, other.degree):
            raise ValueError("degree/rank mismatch in exterior addition")
        out = dict(self.coeffs)
        for S, p in other.coeffs.items():
            out[S] = out.get(S, self.ring.zero) + p
        return ExteriorElement(self.ring, self.n, self.degree, out)

    def __neg__(self):
        return ExteriorElement(
            self.ring, self.n, self.degree, {S: -p for S, p in self.coeffs.items()}
        )

    def scale(self, poly: Polynomial):
        return ExteriorElement(
            self.ring, self.n, self.degree, {S: p * poly for S, p in self.coeffs.items()}
        )

    def wedge(self, other: "ExteriorElement") -> "ExteriorElement":
        if self.n != other.n or self.ring != other.ring:
            raise ValueError("ambient rank mismatch in wedge")
        out = {}
        zero = self.ring.zero
        for S, p in self.coeffs.items():
            set_S = set(S)
            for T, q in other.coeffs.items():
                if set_S & set(T):
                    continue
                # sign: parity of #{(s, t) in S x T : s > t}
                inversions = sum(1 for s in S for t in T if s > t)
                merged = tuple(sorted(S + T))
                term = p * q
                if inversions % 2:
                    term = -term
                out[merged] = out.get(merged, zero) + term
        return ExteriorElement(self.ring, self.n, self.degree + other.degree, out)

    def to_module_element(self, basis) -> FreeModuleElement:
        comps = tuple(self.coeffs.get(S, self.ring.zero) for S in basis)
        return FreeModuleElement(self.ring, len(basis), comps)

    @classmethod
    def from_module_element(cls, elem: FreeModuleElement, n, basis):
        coeffs = {S: c for S, c in zip(basis, elem.components)}
        return cls(elem.ring, n, len(basis[0]) if basis else 0, coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for S in sorted(self.coeffs):
            label = "e_" + "".join(str(j) for j in S) if S else "1"
            parts.append(f"({self.coeffs[S]})*{label}")
        return " + ".join(parts)


def wedge(u: ExteriorElement, v: ExteriorElement) -> ExteriorElement:
    return u.wedge(v)


# ---------------------------------------------------------------------------
# the complex
# ---------------------------------------------------------------------------

class KoszulComplex:
    """K(x_1..x_n; R) with d(e_S) = sum_{j in S} (-1)^{pos(j,S)+1} x_j e_{S-j}."""

    def __init__(self, ring: PolyRing, gens):
        self.ring = ring
        self.gens = tuple(gens)
        self.n = len(self.gens)

    @lru_cache(maxsize=None)
    def basis(self, i: int):
        return tuple(combinations(range(1, self.n + 1), i))

    def differential_image(self, subset) -> ExteriorElement:
        """d(e_S) as an exterior element of degree |S| - 1."""
        out = {}
        S = tuple(subset)
        for pos, j in enumerate(S, start=1):
            rest = tuple(k for k in S if k != j)
            term = self.gens[j - 1]
            if pos % 2 == 0:
                term = -term
            out[rest] = out.get(rest, self.ring.zero) + term
        return ExteriorElement(self.ring, self.n, len(S) - 1, out)

    def differential_matrix(self, i: int):
        """Matrix of d_i: K_i -> K_{i-1}; rows over basis(i-1), columns
        over basis(i)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"differential degree {i} out of range 1..{self.n}")
        rows = self.basis(i - 1)
        cols = self.basis(i)
        images = [self.differential_image(S) for S in cols]
        return [[img.coefficient(T) for img in images] for T in rows]

    def differential_columns(self, i: int):
        """Columns of d_i as free-module elements over basis(i-1)."""
        rows = self.basis(i - 1)
        cols = []
        for S in self.basis(i):
            img = self.differential_image(S)
            cols.append(img.to_module_element(rows))
        return cols

    def boundary_elements(self, i: int):
        """Generators of B_i, i.e. d(e_S) for |S| = i+1 (empty for i = n)."""
        if i >= self.n:
            return []
        return [self.differential_image(S) for S in self.basis(i + 1)]


def koszul_differential(K: KoszulComplex, i: int):
    return K.differential_matrix(i)


@dataclass
class HomologyData:
    complex: KoszulComplex
    cycle_gens: dict    # i -> list of ExteriorElement generating Z_i
    boundary_gens: dict  # i -> list of ExteriorElement generating B_i
    lifts: dict         # i -> trimmed cycle generators representing H_i


def _shifted_degree(K: KoszulComplex, elem: ExteriorElement) -> int:
    gd = [g.total_degree() for g in K.gens]
    best = -1
    for S, p in elem.coeffs.items():
        best = max(best, p.total_degree() + sum(gd[j - 1] for j in S))
    return best


def homology_lifts(K: KoszulComplex) -> HomologyData:
    """Cycle generators per degree plus a trimmed subset generating the
    homology modulo boundaries (graded minimalization, input order ties)."""
    n = K.n
    cycles, boundaries, lifts = {}, {}, {}
    one = ExteriorElement.scalar(K.ring, n, K.ring.one)
    cycles[0] = [one]
    boundaries[0] = K.boundary_elements(0)
    lifts[0] = [one]
    for i in range(1, n + 1):
        basis = K.basis(i)
        cols = K.differential_columns(i)
        z = [
            ExteriorElement.from_module_element(s, n, basis)
            for s in syzygies(cols)
        ]
        b = K.boundary_elements(i)
        cycles[i] = z
        boundaries[i] = b
        order = sorted(range(len(z)), key=lambda k: (_shifted_degree(K, z[k]), k))
        kept = []
        span = [e.to_module_element(basis) for e in b]
        for k in order:
            vec = z[k].to_module_element(basis)
            if not module_member(vec, span):
                kept.append(z[k])
                span.append(vec)
        lifts[i] = kept
    return HomologyData(K, cycles, boundaries, lifts)


# ---------------------------------------------------------------------------
# the Kitt ideal
# ---------------------------------------------------------------------------

def _setup(a: Ideal, I: Ideal):
    if not I.is_homogeneous():
        raise NonHomogeneousError("I must be homogeneous")
    if not I.contains_ideal(a):
        raise NotASubidealError("a is not contained in I")
    x = min_gens(I)
    K = KoszulComplex(I.ring, x)
    a_gens = [g for g in a.generators if not g.is_zero()]
    zetas = []
    for g in a_gens:
        c = express_in_terms(g, x)
        zetas.append(
            ExteriorElement(I.ring, K.n, 1, {(i + 1,): c[i] for i in range(K.n)})
        )
    return K, a_gens, zetas


def _gamma_monomials(ring, n, zetas, degree):
    """Degree-d part of the subalgebra generated by the zetas: wedges over
    strictly increasing index tuples (odd-degree squares vanish)."""
    if degree == 0:
        return [ExteriorElement.scalar(ring, n, ring.one)]
    out = []
    for idx in combinations(range(len(zetas)), degree):
        acc = zetas[idx[0]]
        for j in idx[1:]:
            acc = acc.wedge(zetas[j])
            if acc.is_zero():
                break
        if not acc.is_zero():
            out.append(acc)
    return out


def kitt(a: Ideal, I: Ideal, homology: HomologyData = None) -> Ideal:
    """The Kitt ideal from homology lifts:
    Kitt * e_top = a * e_top + sum over i of Gamma_{n-i} * H~_i."""
    K, a_gens, zetas = _setup(a, I)
    n, s = K.n, len(zetas)
    g = height(I)
    H = homology if homology is not None else homology_lifts(K)
    full = tuple(range(1, n + 1))
    gens = list(a_gens)
    for i in range(max(0, n - s), n - g + 1):
        for gamma in _gamma_monomials(I.ring, n, zetas, n - i):
            for h in H.lifts.get(i, []):
                c = gamma.wedge(h).coefficient(full)
                if not c.is_zero():
                    gens.append(c)
    return Ideal(I.ring, gens)


def _cycle_products(ring, n, generators, max_degree):
    """All wedge products (with repetition) of cycle generators with at
    most n factors and total degree <= max_degree, plus the empty product."""
    out = [ExteriorElement.scalar(ring, n, ring.one)]

    def extend(start, acc, factors):
        for k in range(start, len(generators)):
            z = generators[k]
            nxt = acc.wedge(z)
            if nxt.is_zero() or nxt.degree > max_degree:
                continue
            out.append(nxt)
            if factors + 1 < n:
                extend(k, nxt, factors + 1)

    base = ExteriorElement.scalar(ring, n, ring.one)
    extend(0, base, 0)
    return out


def kitt_via_cycles(a: Ideal, I: Ideal, homology: HomologyData = None) -> Ideal:
    """The Kitt ideal as the degree-n component of Gamma * Z (products of
    the Gamma subalgebra with the cycle subalgebra)."""
    K, a_gens, zetas = _setup(a, I)
    n = K.n
    H = homology if homology is not None else homology_lifts(K)
    z_gens = [z for i in range(1, n + 1) for z in H.cycle_gens[i]]
    full = tuple(range(1, n + 1))
    gens = []
    products = _cycle_products(I.ring, n, z_gens, n)
    gamma_by_degree = {
        d: _gamma_monomials(I.ring, n, zetas, d) for d in range(min(len(zetas), n) + 1)
    }
    for prod in products:
        d = n - prod.degree
        for gamma in gamma_by_degree.get(d, []):
            c = gamma.wedge(prod).coefficient(full)
            if not c.is_zero():
                gens.append(c)
    return Ideal(I.ring, gens)


def fitt0_via_Z1(a: Ideal, I: Ideal, homology: HomologyData = None) -> Ideal:
    """Degree-n span of Gamma times products of Z_1 generators; equals
    Fitt_0(I/a)."""
    K, a_gens, zetas = _setup(a, I)
    n = K.n
    H = homology if homology is not None else homology_lifts(K)
    z1 = H.cycle_gens.get(1, [])
    full = tuple(range(1, n + 1))
    gens = []
    gamma_by_degree = {
        d: _gamma_monomials(I.ring, n, zetas, d) for d in range(min(len(zetas), n) + 1)
    }
    for size in range(0, min(len(z1), n) + 1):
        for idx in combinations(range(len(z1)), size):
            prod = ExteriorElement.scalar(I.ring, n, I.ring.one)
            for k in idx:
                prod = prod.wedge(z1[k])
                if prod.is_zero():
                    break
            if prod.is_zero():
                continue
            for gamma in gamma_by_degree.get(n - size, []):
                c = gamma.wedge(prod).coefficient(full)
                if not c.is_zero():
                    gens.append(c)
    return Ideal(I.ring, gens)

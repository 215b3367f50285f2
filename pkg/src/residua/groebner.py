"""Buchberger engine for ideals and submodules of free modules.

Scalar side: normal forms, Buchberger with normal selection strategy and
the product/chain criteria, reduced (canonical) bases, elimination.
Module side: position-over-term Gröbner bases used for syzygies,
membership of module elements, and expressing a polynomial in terms of
generators via the augmented-module technique.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .ring import (
    Polynomial,
    PolyRing,
    MonomialOrder,
    RingMismatchError,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


class NotAMemberError(ValueError):
    pass


class ResourceLimitError(RuntimeError):
    """Raised when the engine exceeds its configured step budget."""


_step_limit = None


def set_step_limit(limit):
    """Set a global cap on S-pair reductions per Buchberger run (None = off)."""
    global _step_limit
    _step_limit = limit


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    elements: tuple
    reduced: bool = False

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


# ---------------------------------------------------------------------------
# scalar engine
# ---------------------------------------------------------------------------

def normal_form(f: Polynomial, G) -> Polynomial:
    """Remainder of f on division by the elements of G (full tail reduction)."""
    elements = G.elements if isinstance(G, GroebnerBasis) else tuple(G)
    ring = f.ring
    for g in elements:
        if g.ring != ring:
            raise RingMismatchError("normal_form across different rings")
    F = ring.field
    lead = [(g.lm(), g.lc(), g) for g in elements if not g.is_zero()]
    rem = {}
    p = f
    while p.terms:
        m, c = p.terms[0]
        for lm_g, lc_g, g in lead:
            if mono_divides(lm_g, m):
                p = p - g.mul_term(mono_div(m, lm_g), F.div(c, lc_g))
                break
        else:
            rem[m] = c
            p = Polynomial(ring, p.terms[1:])
    return ring.from_dict(rem)


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f/g when g divides f exactly; raises otherwise."""
    ring = f.ring
    F = ring.field
    lm_g, lc_g = g.lm(), g.lc()
    quot = {}
    p = f
    while p.terms:
        m, c = p.terms[0]
        if not mono_divides(lm_g, m):
            raise NotAMemberError(f"inexact division of {f} by {g}")
        q_m, q_c = mono_div(m, lm_g), F.div(c, lc_g)
        quot[q_m] = q_c
        p = p - g.mul_term(q_m, q_c)
    return ring.from_dict(quot)


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    F = f.ring.field
    lcm = mono_lcm(f.lm(), g.lm())
    a = f.mul_term(mono_div(lcm, f.lm()), F.inv(f.lc()))
    b = g.mul_term(mono_div(lcm, g.lm()), F.inv(g.lc()))
    return a - b


def buchberger(gens, max_steps=None) -> GroebnerBasis:
    """Gröbner basis of the ideal generated by gens (normal selection strategy).

    Deterministic for a fixed generator order.  Zero generators are dropped;
    an empty ideal yields an empty basis.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("buchberger needs at least one generator")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators from different rings")
    if max_steps is None:
        max_steps = _step_limit

    G = [g.monic() for g in gens if not g.is_zero()]
    if not G:
        return GroebnerBasis(ring, ())

    heap = []
    pending = set()

    def push_pairs(j):
        for i in range(j):
            lcm = mono_lcm(G[i].lm(), G[j].lm())
            heapq.heappush(heap, (ring.key(lcm), i, j))
            pending.add((i, j))

    for j in range(len(G)):
        push_pairs(j)

    steps = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        lm_i, lm_j = G[i].lm(), G[j].lm()
        lcm = mono_lcm(lm_i, lm_j)
        # product criterion: coprime leading monomials
        if lcm == mono_mul(lm_i, lm_j):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_divides(G[k].lm(), lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            continue

        steps += 1
        if max_steps is not None and steps > max_steps:
            raise ResourceLimitError(f"exceeded {max_steps} S-pair reductions")
        r = normal_form(spoly(G[i], G[j]), G)
        if not r.is_zero():
            G.append(r.monic())
            push_pairs(len(G) - 1)

    return GroebnerBasis(ring, tuple(G))


def reduce_basis(G: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced Gröbner basis of the ideal of G."""
    ring = G.ring
    elems = [g.monic() for g in G.elements if not g.is_zero()]
    # minimalize: drop elements whose leading monomial is divisible by another's
    elems.sort(key=lambda g: ring.key(g.lm()))
    minimal = []
    for g in elems:
        if not any(mono_divides(h.lm(), g.lm()) for h in minimal):
            minimal.append(g)
    # tail-reduce each against the others
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        reduced.append(normal_form(g, others).monic())
    reduced.sort(key=lambda g: ring.key(g.lm()))
    return GroebnerBasis(ring, tuple(reduced), reduced=True)


def reduced_groebner(gens, max_steps=None) -> GroebnerBasis:
    return reduce_basis(buchberger(gens, max_steps=max_steps))


def eliminate(gens, k: int):
    """Generators of (gens) ∩ k[x_{k+1},..]; computed with a block order."""
    if not gens:
        return []
    ring = gens[0].ring
    if not 0 <= k < ring.nvars:
        raise ValueError(f"cannot eliminate {k} of {ring.nvars} variables")
    if k == 0:
        return list(gens)
    elim_ring = ring.with_order(MonomialOrder("block", k))
    lifted = [elim_ring.from_dict(dict(g.terms)) for g in gens]
    gb = reduced_groebner([g for g in lifted if not g.is_zero()] or [elim_ring.zero])
    kept = []
    for g in gb.elements:
        if all(all(e == 0 for e in m[:k]) for m, _ in g.terms):
            kept.append(ring.from_dict(dict(g.terms)))
    return kept


# ---------------------------------------------------------------------------
# free modules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FreeModuleElement:
    ring: PolyRing
    rank: int
    components: tuple

    def __post_init__(self):
        if len(self.components) != self.rank:
            raise ValueError("component count must equal rank")

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def dot(self, polys) -> Polynomial:
        acc = self.ring.zero
        for c, p in zip(self.components, polys):
            acc = acc + c * p
        return acc

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


# Internally a module element is a dict {(position, monomial): coefficient}.
# Term order: dominant positions (pos < dominant) beat the rest; within a
# block, position-over-term extending the ring order (smaller position wins).

def _mkey(ring, dominant):
    def key(pm):
        pos, m = pm
        return (1 if pos < dominant else 0, -pos, ring.key(m))
    return key


def _to_dict(elem: FreeModuleElement) -> dict:
    d = {}
    for pos, poly in enumerate(elem.components):
        for m, c in poly.terms:
            d[(pos, m)] = c
    return d


def _from_dict(ring, rank, d) -> FreeModuleElement:
    comps = [dict() for _ in range(rank)]
    for (pos, m), c in d.items():
        comps[pos][m] = c
    return FreeModuleElement(ring, rank, tuple(ring.from_dict(c) for c in comps))


def _m_lead(d, key):
    return max(d, key=key)


def _m_scale_shift(ring, d, mono, coeff):
    F = ring.field
    return {(pos, mono_mul(m, mono)): F.mul(c, coeff) for (pos, m), c in d.items()}


def _m_sub(ring, d1, d2):
    F = ring.field
    zero = F.zero
    out = dict(d1)
    for k, c in d2.items():
        s = F.sub(out.get(k, zero), c)
        if s == zero:
            out.pop(k, None)
        else:
            out[k] = s
    return out


def _m_nf(ring, d, basis, key):
    """Normal form of module element d against basis (list of dicts)."""
    F = ring.field
    lead = [(_m_lead(b, key), b) for b in basis if b]
    rem = {}
    work = dict(d)
    while work:
        pm = _m_lead(work, key)
        pos, m = pm
        c = work[pm]
        reduced = False
        for (bpos, bm), b in lead:
            if bpos == pos and mono_divides(bm, m):
                factor_m = mono_div(m, bm)
                factor_c = F.div(c, b[(bpos, bm)])
                work = _m_sub(ring, work, _m_scale_shift(ring, b, factor_m, factor_c))
                reduced = True
                break
        if not reduced:
            rem[pm] = c
            del work[pm]
    return rem


def _module_groebner(ring, elements, dominant, max_steps=None):
    key = _mkey(ring, dominant)
    F = ring.field
    if max_steps is None:
        max_steps = _step_limit

    G = []
    for e in elements:
        if e:
            lead = _m_lead(e, key)
            G.append(_m_scale_shift(ring, e, (0,) * ring.nvars, F.inv(e[lead])))
    if not G:
        return []

    heap = []

    def push_pairs(j):
        (pj, mj) = _m_lead(G[j], key)
        for i in range(j):
            (pi, mi) = _m_lead(G[i], key)
            if pi != pj:
                continue
            lcm = mono_lcm(mi, mj)
            heapq.heappush(heap, (ring.key(lcm), i, j))

    for j in range(len(G)):
        push_pairs(j)

    steps = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        (pi, mi) = _m_lead(G[i], key)
        (pj, mj) = _m_lead(G[j], key)
        lcm = mono_lcm(mi, mj)
        a = _m_scale_shift(ring, G[i], mono_div(lcm, mi), F.one)
        b = _m_scale_shift(ring, G[j], mono_div(lcm, mj), F.one)
        s = _m_sub(ring, a, b)
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise ResourceLimitError(f"exceeded {max_steps} module S-pair reductions")
        r = _m_nf(ring, s, G, key)
        if r:
            lead = _m_lead(r, key)
            G.append(_m_scale_shift(ring, r, (0,) * ring.nvars, F.inv(r[lead])))
            push_pairs(len(G) - 1)
    return G


def syzygies(gens) -> list:
    """Generators of the syzygy module of a sequence of free-module elements.

    Every returned s satisfies sum(s_i * gens_i) == 0 (verified here).
    """
    gens = list(gens)
    if not gens:
        raise ValueError("syzygies of an empty sequence")
    ring = gens[0].ring
    rank = gens[0].rank
    for g in gens:
        if g.ring != ring or g.rank != rank:
            raise ValueError("generators must share ring and rank")
    m = len(gens)
    aug = []
    for i, g in enumerate(gens):
        d = _to_dict(g)
        d[(rank + i, (0,) * ring.nvars)] = ring.field.one
        aug.append(d)
    gb = _module_groebner(ring, aug, dominant=rank)
    key = _mkey(ring, rank)
    out = []
    for e in gb:
        pos, _ = _m_lead(e, key)
        if pos >= rank:
            tail = {(p - rank, mm): c for (p, mm), c in e.items()}
            if any(p < 0 for (p, _mm) in tail):
                continue
            syz = _from_dict(ring, m, tail)
            # exactness check: the defining identity must hold on the nose
            acc = [ring.zero] * rank
            for idx, coeff in enumerate(syz.components):
                for r_idx, comp in enumerate(gens[idx].components):
                    acc[r_idx] = acc[r_idx] + coeff * comp
            if any(not a.is_zero() for a in acc):
                raise RuntimeError("internal: syzygy identity violated")
            out.append(syz)
    return out


def ideal_syzygies(polys) -> list:
    """Syzygies of a polynomial sequence, viewed in a rank-1 free module."""
    ring = polys[0].ring
    gens = [FreeModuleElement(ring, 1, (p,)) for p in polys]
    return syzygies(gens)


def express_in_terms(f: Polynomial, gens) -> list:
    """Coefficients c with f = sum(c_i * gens_i); raises NotAMemberError."""
    gens = list(gens)
    if not gens:
        raise ValueError("cannot express in terms of an empty sequence")
    ring = f.ring
    m = len(gens)
    aug = []
    for i, g in enumerate(gens):
        d = {(0, mm): c for mm, c in g.terms}
        d[(1 + i, (0,) * ring.nvars)] = ring.field.one
        aug.append(d)
    gb = _module_groebner(ring, aug, dominant=1)
    key = _mkey(ring, 1)
    target = {(0, mm): c for mm, c in f.terms}
    nf = _m_nf(ring, target, gb, key)
    if any(pos == 0 for (pos, _mm) in nf):
        raise NotAMemberError(f"{f} is not in the ideal of the given generators")
    F = ring.field
    tail = {(p - 1, mm): F.neg(c) for (p, mm), c in nf.items()}
    coeffs = _from_dict(ring, m, tail).components
    check = ring.zero
    for c, g in zip(coeffs, gens):
        check = check + c * g
    if check != f:
        raise RuntimeError("internal: expression identity violated")
    return list(coeffs)


def module_member(elem: FreeModuleElement, gens) -> bool:
    """Membership of elem in the submodule generated by gens."""
    gens = [g for g in gens if not g.is_zero()]
    if elem.is_zero():
        return True
    if not gens:
        return False
    ring = elem.ring
    rank = elem.rank
    gb = _module_groebner(ring, [_to_dict(g) for g in gens], dominant=rank)
    nf = _m_nf(ring, _to_dict(elem), gb, _mkey(ring, rank))
    return not nf

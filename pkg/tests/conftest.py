"""Shared fixtures and hypothesis strategies for the residua test suite."""

import random

import pytest
from hypothesis import settings, strategies as st

from residua import GF32003, RATIONALS, Ideal, PolyRing

settings.register_profile("suite", max_examples=25, deadline=None)
settings.load_profile("suite")


@pytest.fixture
def R2():
    """GF(32003)[x, y] under grevlex."""
    return PolyRing(GF32003, ("x", "y"))


@pytest.fixture
def R3():
    return PolyRing(GF32003, ("x", "y", "z"))


@pytest.fixture
def Q2():
    return PolyRing(RATIONALS, ("x", "y"))


def parse_ideal(ring, *texts):
    return Ideal(ring, [ring.parse(t) for t in texts])


# --- hypothesis strategies -------------------------------------------------

def monomials(nvars, max_degree=3):
    return st.lists(
        st.integers(min_value=0, max_value=max_degree), min_size=nvars, max_size=nvars
    ).map(tuple).filter(lambda m: sum(m) <= max_degree)


def polynomials(ring, max_degree=3, max_terms=4):
    def build(pairs):
        d = {}
        for m, c in pairs:
            if sum(m) <= max_degree and c % ring.field.characteristic != 0:
                d[m] = ring.field.element(c)
        return ring.from_dict(d)

    coeffs = st.integers(min_value=1, max_value=ring.field.characteristic - 1)
    return st.lists(
        st.tuples(monomials(ring.nvars, max_degree), coeffs),
        min_size=0,
        max_size=max_terms,
    ).map(build)


def random_homogeneous(ring, degree, rng, density=0.8):
    """Seeded random homogeneous form (test-data helper, not a strategy)."""
    from itertools import product

    d = {}
    for expo in product(range(degree + 1), repeat=ring.nvars):
        if sum(expo) == degree and rng.random() < density:
            d[expo] = ring.field.element(rng.randint(1, ring.field.characteristic - 1))
    if not d:
        expo = (degree,) + (0,) * (ring.nvars - 1)
        d[expo] = ring.field.one
    return ring.from_dict(d)


def seeded_rng(*parts):
    return random.Random(":".join(str(p) for p in parts))

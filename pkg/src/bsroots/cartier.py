"""Descent operators on ideals of V[x1..xn].

For a lift F and level e the polynomial ring is free over its image under
F^e with basis the monomials x^alpha, alpha in [0, p^e)^n. Projection onto
each basis coordinate defines the descent operators, and the image of an
ideal J under all of them is again an ideal: it is generated by the
coordinates of the generators of J. ``cartier_generators`` returns exactly
those coordinate polynomials, with no interreduction, so the raw output is
reproducible; canonicalization happens later in the Groebner layer.

Degrees drop by the factor p^e, which is the engine's source of finiteness.
"""

from __future__ import annotations

from .chainring import ChainRingCtx
from .poly import FrobeniusLift, Poly, frobenius_apply, phi_decompose


def _gen_sort_key(g: Poly):
    lm = g.leading_monomial()
    lc = g.leading_coeff()
    # descending degrevlex on the leading monomial, then ascending coefficient
    desc = (-sum(lm), tuple(reversed(lm)))
    return (desc, lc, g.sort_key())


class IdealGens:
    """Ordered generating set of an ideal; zeros pruned, order canonical."""

    __slots__ = ("ctx", "nvars", "gens")

    def __init__(self, gens, ctx: ChainRingCtx = None, nvars: int = None):
        gens = [g for g in gens if not g.is_zero()]
        if gens:
            ctx = gens[0].ctx if ctx is None else ctx
            nvars = gens[0].nvars if nvars is None else nvars
        if ctx is None or nvars is None:
            raise ValueError("empty generator list needs explicit ctx and nvars")
        for g in gens:
            if g.ctx != ctx or g.nvars != nvars:
                raise ValueError("mixed polynomial rings")
        seen = set()
        unique = []
        for g in sorted(gens, key=_gen_sort_key):
            if g not in seen:
                seen.add(g)
                unique.append(g)
        self.ctx = ctx
        self.nvars = nvars
        self.gens = tuple(unique)

    def __eq__(self, other):
        return (
            isinstance(other, IdealGens)
            and other.ctx == self.ctx
            and other.nvars == self.nvars
            and other.gens == self.gens
        )

    def __hash__(self):
        return hash((self.ctx, self.nvars, self.gens))

    def __repr__(self):
        return f"IdealGens({list(self.gens)!r})"

    def has_unit_constant(self):
        one_mono = (0,) * self.nvars
        return any(
            set(g.terms) == {one_mono} and self.ctx.is_unit(g.terms[one_mono])
            for g in self.gens
        )

    def max_degree(self):
        if not self.gens:
            return 0
        return max(g.degree() for g in self.gens)


def frobenius_pullback_ideal(J: IdealGens, lift: FrobeniusLift, e: int) -> IdealGens:
    """Generators of the extension of F^e(J) to the whole ring."""
    return IdealGens(
        [frobenius_apply(g, lift, e) for g in J.gens], ctx=J.ctx, nvars=J.nvars
    )


def cartier_generators(J: IdealGens, lift: FrobeniusLift, e: int) -> IdealGens:
    """Generators of the image of J under all level-e descent operators.

    These are the coordinates g_alpha of every generator of J in the free
    basis over the e-fold Frobenius image. A unit constant among the inputs
    short-circuits to the unit ideal: its own coordinates already give (1).
    """
    if e < 0:
        raise ValueError("negative level")
    if J.has_unit_constant():
        return IdealGens([Poly.one(J.ctx, J.nvars)], ctx=J.ctx, nvars=J.nvars)
    comps = []
    for g in J.gens:
        comps.extend(phi_decompose(g, lift, e).values())
    return IdealGens(comps, ctx=J.ctx, nvars=J.nvars)

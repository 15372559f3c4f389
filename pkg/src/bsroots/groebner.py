"""Strong Groebner bases over V = Z/p^(m+1).

Over a coefficient ring with zerodivisors a basis must certify leading
terms, not only leading monomials: the term c * x^b reduces by g only when
lm(g) divides x^b and val(lc(g)) <= val(c). Completion therefore closes the
generators under two kinds of syzygies:

  * S-polynomials match leading monomials at the lcm and leading
    coefficients at the common power p^max(val, val);
  * annihilator multiples p^(m+1-j) * g, with j running through the distinct
    coefficient valuations of g from the top down, expose what survives of g
    after its deepest coefficient layer dies. They are inserted unreduced:
    their leading terms are often reducible while their tails carry new
    information, and reduction first would lose it.

Elements are unit-normalized (leading coefficient an exact power of p),
tails are interreduced at the end, and the result is sorted, so equal
ideals yield identical element tuples.
"""

from __future__ import annotations

import heapq
import itertools

from .cartier import IdealGens, _gen_sort_key
from .linalg import Matrix, span_contains
from .poly import Poly, grevlex_key, mono_divides, mono_lcm, mono_quot


class GroebnerBasis:
    """Completed, canonicalized strong basis; supports membership queries."""

    __slots__ = ("ctx", "nvars", "elements", "_lts")

    def __init__(self, ctx, nvars, elements):
        self.ctx = ctx
        self.nvars = nvars
        self.elements = tuple(elements)
        self._lts = tuple(
            (g.leading_monomial(), g.leading_coeff(), g) for g in self.elements
        )

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and other.ctx == self.ctx
            and other.nvars == self.nvars
            and other.elements == self.elements
        )

    def __hash__(self):
        return hash((self.ctx, self.nvars, self.elements))

    def __repr__(self):
        return f"GroebnerBasis({list(self.elements)!r})"

    def contains(self, g: Poly) -> bool:
        return normal_form(g, self).is_zero()

    def is_unit_ideal(self) -> bool:
        one = Poly.one(self.ctx, self.nvars)
        return len(self.elements) == 1 and self.elements[0] == one


def _normalize_unit(g: Poly) -> Poly:
    u = g.ctx.unit_part(g.leading_coeff())
    if u == 1:
        return g
    return g * g.ctx.invert(u)


def normal_form(g: Poly, basis: GroebnerBasis) -> Poly:
    """Fully reduced remainder of g; zero exactly on (certified) members.

    Repeatedly reduces the current leading term by the first basis element
    whose leading term divides it; irreducible leading terms move to the
    output and reduction continues on the strictly smaller rest.
    """
    ctx = g.ctx
    out = {}
    work = g
    while not work.is_zero():
        mono, c = work.leading_term()
        cval = ctx.val(c)
        hit = None
        for lm, lc, b in basis._lts:
            if ctx.val(lc) <= cval and mono_divides(lm, mono):
                hit = (lm, lc, b)
                break
        if hit is None:
            out[mono] = c
            work = work - Poly.monomial(ctx, g.nvars, mono, c)
        else:
            lm, lc, b = hit
            q = ctx.divide_exact(c, lc)
            work = work - b.term_mul(mono_quot(lm, mono), q)
    return Poly(ctx, g.nvars, out)


def _s_poly(f: Poly, g: Poly) -> Poly:
    ctx = f.ctx
    lmf, lcf = f.leading_term()
    lmg, lcg = g.leading_term()
    gamma = mono_lcm(lmf, lmg)
    jf, jg = ctx.val(lcf), ctx.val(lcg)
    j = max(jf, jg)
    # elements are unit-normalized, so scaling by p powers alone matches lts
    sf = f.term_mul(mono_quot(lmf, gamma), ctx.p ** (j - jf))
    sg = g.term_mul(mono_quot(lmg, gamma), ctx.p ** (j - jg))
    return sf - sg


def _annihilator_step(g: Poly):
    """p^(m+1-jmax) * g for jmax the largest coefficient valuation.

    Zero (returned as None) when all coefficient valuations agree, which
    terminates the chain.
    """
    ctx = g.ctx
    jmax = g.max_coeff_val()
    a = g * ctx.p ** (ctx.m + 1 - jmax)
    return None if a.is_zero() else a


def strong_groebner(J) -> GroebnerBasis:
    if isinstance(J, GroebnerBasis):
        return J
    ctx, nvars = J.ctx, J.nvars
    elements = []
    seen = set()
    pairs = []
    counter = itertools.count()

    def push_pairs(h):
        k = len(elements) - 1
        for i in range(k):
            gamma = mono_lcm(elements[i].leading_monomial(), h.leading_monomial())
            heapq.heappush(pairs, (sum(gamma), next(counter), i, k))

    def add(h: Poly, reduce_first: bool):
        if reduce_first:
            h = normal_form(h, GroebnerBasis(ctx, nvars, elements))
        if h.is_zero():
            return
        h = _normalize_unit(h)
        if h in seen:
            return
        seen.add(h)
        elements.append(h)
        push_pairs(h)
        a = _annihilator_step(h)
        if a is not None:
            add(a, reduce_first=False)

    for g in J.gens:
        add(g, reduce_first=False)
    while pairs:
        _, _, i, k = heapq.heappop(pairs)
        add(_s_poly(elements[i], elements[k]), reduce_first=True)

    final = GroebnerBasis(ctx, nvars, elements)
    tidied = []
    for g in elements:
        mono, c = g.leading_term()
        head = Poly.monomial(ctx, nvars, mono, c)
        tidied.append(head + normal_form(g - head, final))
    tidied.sort(key=_gen_sort_key)
    return GroebnerBasis(ctx, nvars, tidied)


def ideal_contains(J, g: Poly) -> bool:
    return strong_groebner(J).contains(g)


def ideal_equal(A, B) -> bool:
    ga, gb = strong_groebner(A), strong_groebner(B)
    if ga.elements == gb.elements:
        return True
    return all(ga.contains(h) for h in gb.elements) and all(
        gb.contains(h) for h in ga.elements
    )


def min_p_power_in(J, g: Poly) -> int:
    """Least t with p^t * g in J; always <= m+1 since p^(m+1) = 0."""
    gb = strong_groebner(J)
    ctx = g.ctx
    for t in range(ctx.m + 2):
        if gb.contains(g * ctx.p**t):
            return t
    raise AssertionError("p^(m+1) annihilates everything")


def _monomials_upto(nvars, cap):
    for total in range(cap + 1):
        for bars in itertools.combinations(range(total + nvars - 1), nvars - 1):
            prev = -1
            parts = []
            for b in bars:
                parts.append(b - prev - 1)
                prev = b
            parts.append(total + nvars - 1 - prev - 1)
            yield tuple(parts)


def membership_bruteforce(J: IdealGens, g: Poly, degree_cap: int):
    """Certificate search: is g a V-combination of mu * f_i, deg(mu) <= cap?

    Returns True on success and None when no certificate exists within the
    cap; None is inconclusive, not a refutation. Independent of the Groebner
    machinery: reduces to a row-span membership over V.
    """
    ctx, nvars = J.ctx, J.nvars
    if g.is_zero():
        return True
    products = []
    for f in J.gens:
        for mu in _monomials_upto(nvars, degree_cap):
            products.append(f.term_mul(mu, 1))
    columns = sorted(
        {m for q in products for m in q.terms} | set(g.terms),
        key=grevlex_key,
        reverse=True,
    )
    index = {m: i for i, m in enumerate(columns)}
    rows = []
    for q in products:
        row = [0] * len(columns)
        for m, c in q.terms.items():
            row[index[m]] = c
        rows.append(row)
    vec = [0] * len(columns)
    for m, c in g.terms.items():
        vec[index[m]] = c
    if span_contains(Matrix(ctx, len(columns), rows), vec):
        return True
    return None

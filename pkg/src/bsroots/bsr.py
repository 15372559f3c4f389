"""Root detection, strengths, and cross-checks.

A candidate root is a p-adically integral rational alpha all of whose
truncations land in the level sets: truncate_below(alpha, e+m) must be a
level-e invariant for every e. The residue tree materializes this test up
to a chosen level E: level 0 is the full window [0, p^m), and a level-e
residue survives when it is a level-e invariant refining a survivor below.
Surviving residues at level E are then lifted back to bounded fractions;
when p^(E+m) exceeds twice the bound box, at most one fraction fits per
residue, so survivors either resolve to a unique root or are reported
unresolved, never guessed.

The strength of a root grades how strongly the jump certifying each
truncation holds: the least power of p that pushes the coordinates of f^a
into the descent image of (f^(a+1)), maximized over coordinates. Strengths
are nonincreasing in the level and are reported at their stable value when
two consecutive levels agree (or the value hits 0, which is final).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from .cartier import IdealGens, cartier_generators
from .chainring import ChainRingCtx
from .groebner import min_p_power_in, strong_groebner
from .nu import NuLevelSet, nu_set, require_nonzerodivisor
from .padic import PAdicRational, fraction_val, reconstruct
from .poly import FrobeniusLift, Poly, phi_decompose


@dataclass(frozen=True)
class ResidueTree:
    p: int
    m: int
    top_level: int
    levels: tuple  # NuLevelSet per level 0..top_level (level 0 synthetic)
    survivors: tuple  # per level, residues whose whole truncation chain held


@dataclass(frozen=True)
class RootEntry:
    alpha: PAdicRational
    residue: int
    strength: int = None
    stabilized: bool = None


@dataclass(frozen=True)
class RootReport:
    p: int
    m: int
    verified_to_level: int
    den_bound: int
    num_bound: int
    roots: tuple
    unresolved: tuple
    tree: ResidueTree


@dataclass(frozen=True)
class StrengthResult:
    alpha: PAdicRational
    value: int
    stabilized: bool
    per_level: tuple  # (e, value) pairs actually computed


@dataclass(frozen=True)
class CrosscheckResult:
    report: RootReport
    report_mod_p: RootReport
    mismatches: tuple

    @property
    def ok(self):
        return not self.mismatches


def _default_top_level(p: int, m: int, den_bound: int, num_bound: int) -> int:
    need = 2 * den_bound * num_bound
    k = 0
    power = 1
    while power <= need:
        power *= p
        k += 1
    return max(3, k + 1 - m)


def candidate_residues(f: Poly, lift: FrobeniusLift, top_level: int) -> ResidueTree:
    """Level sets 0..top_level with the surviving residues at each level."""
    require_nonzerodivisor(f)
    if top_level < 1:
        raise ValueError("top level must be >= 1")
    ctx = f.ctx
    p, m = ctx.p, ctx.m
    card_bound = (m + 1) * math.comb(int(f.degree()) * p**m + f.nvars, f.nvars)
    base = tuple(range(p**m))
    levels = [NuLevelSet(f=f, lift=lift, e=0, window=p**m, members=base)]
    survivors = [base]
    for e in range(1, top_level + 1):
        ns = nu_set(f, lift, e)
        assert len(ns.members) <= card_bound, "level set exceeded cardinality bound"
        below = set(survivors[-1])
        step = p ** (e - 1 + m)
        levels.append(ns)
        survivors.append(tuple(r for r in ns.members if r % step in below))
    return ResidueTree(
        p=p,
        m=m,
        top_level=top_level,
        levels=tuple(levels),
        survivors=tuple(survivors),
    )


def detect_roots(
    f: Poly,
    lift: FrobeniusLift,
    top_level: int = None,
    den_bound: int = 50,
    num_bound: int = 100,
) -> RootReport:
    """Identify bounded rational roots from the residue tree at ``top_level``.

    Every returned root has its full truncation chain inside the level sets.
    Surviving residues that match no bounded fraction are reported in
    ``unresolved``; they are never promoted or silently dropped.
    """
    ctx = f.ctx
    p, m = ctx.p, ctx.m
    if den_bound < 1 or num_bound < 1:
        raise ValueError("bounds must be positive")
    if top_level is None:
        top_level = _default_top_level(p, m, den_bound, num_bound)
    modulus = p ** (top_level + m)
    if modulus <= 2 * den_bound * num_bound:
        raise ValueError(
            "p^(top_level+m) must exceed 2 * num_bound * den_bound "
            "for unambiguous reconstruction"
        )
    tree = candidate_residues(f, lift, top_level)
    member_sets = [set(level.members) for level in tree.levels]
    roots = []
    unresolved = []
    for r in tree.survivors[top_level]:
        verified = [
            alpha
            for alpha in reconstruct(r, modulus, den_bound, num_bound)
            if all(
                alpha.truncate_below(e + m) in member_sets[e]
                for e in range(top_level + 1)
            )
        ]
        assert len(verified) <= 1, "reconstruction bound violated"
        if verified:
            roots.append(RootEntry(alpha=verified[0], residue=r))
        else:
            unresolved.append(r)
    roots.sort(key=lambda entry: entry.alpha.frac)
    for entry in roots:
        shift = -(math.floor(entry.alpha.frac) + 1)
        assert Fraction(-1) <= entry.alpha.frac + shift < 0, "no integral translate"
    if lift.is_standard and set(f.terms.values()) == {1} and len(f.terms) == 1:
        assert all(entry.alpha < 0 for entry in roots), "positive root of a monomial"
    return RootReport(
        p=p,
        m=m,
        verified_to_level=top_level,
        den_bound=den_bound,
        num_bound=num_bound,
        roots=tuple(roots),
        unresolved=tuple(sorted(unresolved)),
        tree=tree,
    )


def strength(
    f: Poly, lift: FrobeniusLift, alpha, e_start: int = 1, e_stop: int = 4
) -> StrengthResult:
    """Largest p-power gap left by the coordinates of f^a, a the truncation.

    At each level e, a = truncate_below(alpha, e+m) and the value is
    max over coordinates g of f^a of the least t with p^t * g inside the
    descent image of (f^(a+1)). The level sequence is nonincreasing; the
    walk stops early once two consecutive levels agree or the value 0 is
    reached, both of which are final.
    """
    require_nonzerodivisor(f)
    if not isinstance(alpha, PAdicRational):
        alpha = PAdicRational(f.ctx.p, alpha)
    if not 1 <= e_start <= e_stop:
        raise ValueError("need 1 <= e_start <= e_stop")
    ctx = f.ctx
    computed = []
    stabilized = False
    for e in range(e_start, e_stop + 1):
        a = alpha.truncate_below(e + ctx.m)
        f_a = f**a
        coords = phi_decompose(f_a, lift, e).values()
        gb = strong_groebner(
            cartier_generators(
                IdealGens([f_a * f], ctx=ctx, nvars=f.nvars), lift, e
            )
        )
        value = max(min_p_power_in(gb, g) for g in coords)
        if computed:
            assert value <= computed[-1][1], "strength increased with the level"
        computed.append((e, value))
        if value == 0 or (len(computed) >= 2 and computed[-2][1] == value):
            stabilized = True
            break
    return StrengthResult(
        alpha=alpha,
        value=computed[-1][1],
        stabilized=stabilized,
        per_level=tuple(computed),
    )


def bfunction_report(
    f: Poly,
    lift: FrobeniusLift,
    top_level: int = None,
    den_bound: int = 50,
    num_bound: int = 100,
    e_start: int = 1,
    e_stop: int = None,
    mapper=None,
) -> RootReport:
    """Root report with strengths attached: the structured b-function data.

    ``mapper`` may be an order-preserving parallel map (per-root jobs are
    independent); the default is the builtin map.
    """
    report = detect_roots(f, lift, top_level, den_bound, num_bound)
    if e_stop is None:
        e_stop = min(4, report.verified_to_level)
    run = mapper if mapper is not None else map
    results = list(
        run(
            lambda entry: strength(f, lift, entry.alpha, e_start, e_stop),
            report.roots,
        )
    )
    graded = []
    for entry, res in zip(report.roots, results):
        assert res.value >= 1, "verified root with vanishing strength"
        graded.append(
            replace(entry, strength=res.value, stabilized=res.stabilized)
        )
    return replace(report, roots=tuple(graded))


def crosscheck_mod_p(
    f: Poly,
    lift: FrobeniusLift,
    top_level: int = None,
    den_bound: int = 50,
    num_bound: int = 100,
) -> CrosscheckResult:
    """Compare roots over V with roots of f mod p over Z/p.

    Checks: the negative roots agree exactly with the mod-p roots, every
    positive root is an integer translate of a negative one, and the two
    root sets agree modulo Z. Failures come back as structured mismatch
    strings, not exceptions.
    """
    report = bfunction_report(f, lift, top_level, den_bound, num_bound)
    ctx0 = ChainRingCtx(f.ctx.p, 0)
    f0 = f.with_ctx(ctx0)
    lift0 = FrobeniusLift.standard(ctx0, f.nvars)
    report0 = bfunction_report(
        f0, lift0, report.verified_to_level + f.ctx.m, den_bound, num_bound
    )
    mismatches = []
    ours = {entry.alpha.frac for entry in report.roots}
    negatives = {a for a in ours if a < 0}
    mod_p = {entry.alpha.frac for entry in report0.roots}
    if negatives != mod_p:
        mismatches.append(
            f"negative roots {sorted(negatives)} != mod-p roots {sorted(mod_p)}"
        )
    for a in sorted(ours - negatives):
        if not any((a - b).denominator == 1 for b in negatives):
            mismatches.append(f"positive root {a} is not an integer translate")
    if {a - math.floor(a) for a in ours} != {a - math.floor(a) for a in mod_p}:
        mismatches.append("root sets differ modulo Z")
    return CrosscheckResult(
        report=report, report_mod_p=report0, mismatches=tuple(mismatches)
    )


@dataclass(frozen=True)
class StrengthVsBRow:
    m: int
    alpha: PAdicRational
    strength: int
    stabilized: bool
    b_valuation: float
    satisfies_bound: bool
    nondecreasing_in_m: bool


def strength_vs_bsato(
    f: Poly,
    lift: FrobeniusLift,
    b_values,
    m_range,
    e_start: int = 1,
    e_stop: int = 4,
):
    """Compare strengths against the p-adic size of classical root data.

    ``b_values`` pairs each alpha with the value of a classical polynomial
    invariant at alpha; the comparison is val_p(value) >= strength, with
    val_p(0) = +inf. ``f`` acts as an integer template re-read over each
    Z/p^(m+1); rows also track that strengths never decrease as m grows.
    """
    p = f.ctx.p
    rows = []
    previous = {}
    for m in sorted(m_range):
        ctx_m = ChainRingCtx(p, m)
        f_m = f.with_ctx(ctx_m)
        lift_m = FrobeniusLift(
            ctx_m,
            f.nvars,
            [None if h is None else h.with_ctx(ctx_m) for h in lift.corrections],
        )
        for alpha_in, b_value in b_values:
            alpha = PAdicRational(p, alpha_in)
            res = strength(f_m, lift_m, alpha, e_start, e_stop)
            b_val = fraction_val(p, b_value)
            prev = previous.get(alpha.frac)
            rows.append(
                StrengthVsBRow(
                    m=m,
                    alpha=alpha,
                    strength=res.value,
                    stabilized=res.stabilized,
                    b_valuation=b_val,
                    satisfies_bound=b_val >= res.value,
                    nondecreasing_in_m=prev is None or res.value >= prev,
                )
            )
            previous[alpha.frac] = res.value
    return rows

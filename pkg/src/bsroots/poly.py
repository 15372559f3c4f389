"""Sparse multivariate polynomials over V = Z/p^(m+1).

A polynomial is a map from exponent tuples to nonzero residues. The ambient
monomial order everywhere is degree reverse lexicographic with
x1 > x2 > ... > xn; ``grevlex_key`` realizes it as a sortable key, so the
leading monomial is the max over the support.

``FrobeniusLift`` models ring endomorphisms F with F(xi) = xi^p + p*hi and
F identity on coefficients. ``phi_decompose`` inverts the induced module
structure: it writes f uniquely as sum over alpha in [0, p^e)^n of
F^e(g_alpha) * x^alpha, the coordinates the descent operators act on.
"""

from __future__ import annotations

from .chainring import ChainRingCtx

NEG_INF = float("-inf")


def grevlex_key(mono):
    """Sort key for degrevlex with x1 > x2 > ...; max over a support = lead."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_quot(divisor, dividend):
    """Exponent difference dividend - divisor (caller checks divisibility)."""
    return tuple(y - x for x, y in zip(divisor, dividend))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class Poly:
    """Immutable sparse polynomial; ``terms`` maps monomial -> coefficient."""

    __slots__ = ("ctx", "nvars", "terms", "_hash")

    def __init__(self, ctx: ChainRingCtx, nvars: int, terms=None):
        mod = ctx.modulus
        clean = {}
        for mono, c in (terms or {}).items():
            c = int(c) % mod
            if c == 0:
                continue
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent tuple {mono} for {nvars} variables")
            clean[mono] = c
        self.ctx = ctx
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, ctx, nvars):
        return cls(ctx, nvars)

    @classmethod
    def const(cls, ctx, nvars, c):
        return cls(ctx, nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, ctx, nvars):
        return cls.const(ctx, nvars, 1)

    @classmethod
    def variable(cls, ctx, nvars, i):
        if not 0 <= i < nvars:
            raise ValueError("variable index out of range")
        mono = tuple(1 if k == i else 0 for k in range(nvars))
        return cls(ctx, nvars, {mono: 1})

    @classmethod
    def monomial(cls, ctx, nvars, mono, c=1):
        return cls(ctx, nvars, {tuple(mono): c})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(m) == 0 for m in self.terms)

    def degree(self):
        """Total degree; NEG_INF for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(m) for m in self.terms)

    def sorted_terms(self):
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=grevlex_key)
        return mono, self.terms[mono]

    def leading_monomial(self):
        return self.leading_term()[0]

    def leading_coeff(self):
        return self.leading_term()[1]

    def min_coeff_val(self):
        """Least valuation over the coefficients; m+1 for the zero polynomial."""
        if not self.terms:
            return self.ctx.m + 1
        return min(self.ctx.val(c) for c in self.terms.values())

    def max_coeff_val(self):
        if not self.terms:
            return self.ctx.m + 1
        return max(self.ctx.val(c) for c in self.terms.values())

    def has_unit_coeff(self):
        """True iff f is a nonzerodivisor on V[x], i.e. some coefficient is a unit."""
        p = self.ctx.p
        return any(c % p for c in self.terms.values())

    def coeff(self, mono):
        return self.terms.get(tuple(mono), 0)

    def with_ctx(self, ctx: ChainRingCtx) -> "Poly":
        """Reinterpret the integer coefficients over another chain ring."""
        return Poly(ctx, self.nvars, dict(self.terms))

    def _binop(self, other, sign):
        if isinstance(other, int):
            other = Poly.const(self.ctx, self.nvars, other)
        if other.ctx != self.ctx or other.nvars != self.nvars:
            raise ValueError("mixed polynomial rings")
        acc = dict(self.terms)
        for mono, c in other.terms.items():
            acc[mono] = acc.get(mono, 0) + sign * c
        return Poly(self.ctx, self.nvars, acc)

    def __add__(self, other):
        return self._binop(other, 1)

    def __radd__(self, other):
        return self._binop(other, 1)

    def __sub__(self, other):
        return self._binop(other, -1)

    def __neg__(self):
        return Poly(self.ctx, self.nvars, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if other % self.ctx.modulus == 0:
                return Poly.zero(self.ctx, self.nvars)
            return Poly(self.ctx, self.nvars, {m: c * other for m, c in self.terms.items()})
        if other.ctx != self.ctx or other.nvars != self.nvars:
            raise ValueError("mixed polynomial rings")
        mod = self.ctx.modulus
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = mono_mul(m1, m2)
                acc[key] = (acc.get(key, 0) + c1 * c2) % mod
        return Poly(self.ctx, self.nvars, acc)

    def __rmul__(self, other):
        return self.__mul__(other)

    def term_mul(self, mono, c):
        """Multiply by the single term c * x^mono."""
        mono = tuple(mono)
        return Poly(
            self.ctx,
            self.nvars,
            {mono_mul(m, mono): cc * c for m, cc in self.terms.items()},
        )

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.one(self.ctx, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self == Poly.const(self.ctx, self.nvars, other)
        return (
            isinstance(other, Poly)
            and other.ctx == self.ctx
            and other.nvars == self.nvars
            and other.terms == self.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, self.nvars, frozenset(self.terms.items())))
        return self._hash

    def sort_key(self):
        """Deterministic total order key: leading data first, then the tail."""
        items = self.sorted_terms()
        return (
            tuple((grevlex_key(m), c) for m, c in items),
        )

    def to_string(self, names=None):
        """Render in the surface syntax accepted by the expression parser."""
        if names is None:
            names = [f"x{i+1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = [str(c)] if (c != 1 or sum(mono) == 0) else []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"<Poly {self.to_string()} over Z/{self.ctx.modulus}>"


class FrobeniusLift:
    """Endomorphism of V[x1..xn] with F(xi) = xi^p + p*hi, identity on V."""

    __slots__ = ("ctx", "nvars", "corrections", "_images")

    def __init__(self, ctx: ChainRingCtx, nvars: int, corrections=None):
        if corrections is None:
            corrections = [None] * nvars
        corrections = list(corrections)
        if len(corrections) != nvars:
            raise ValueError("one correction slot per variable")
        for h in corrections:
            if h is not None and (h.ctx != ctx or h.nvars != nvars):
                raise ValueError("correction in wrong ring")
        self.ctx = ctx
        self.nvars = nvars
        self.corrections = tuple(
            None if (h is None or h.is_zero()) else h for h in corrections
        )
        self._images = {}

    @classmethod
    def standard(cls, ctx, nvars):
        return cls(ctx, nvars)

    @property
    def is_standard(self):
        return all(h is None for h in self.corrections)

    def image(self, i) -> Poly:
        """F(xi) as a polynomial."""
        if i not in self._images:
            xi_p = Poly.monomial(
                self.ctx,
                self.nvars,
                tuple(self.ctx.p if k == i else 0 for k in range(self.nvars)),
            )
            h = self.corrections[i]
            self._images[i] = xi_p if h is None else xi_p + h * self.ctx.p
        return self._images[i]

    def __eq__(self, other):
        return (
            isinstance(other, FrobeniusLift)
            and other.ctx == self.ctx
            and other.nvars == self.nvars
            and other.corrections == self.corrections
        )

    def __hash__(self):
        return hash((self.ctx, self.nvars, self.corrections))


def _apply_lift_once(f: Poly, lift: FrobeniusLift) -> Poly:
    pow_cache = [{0: Poly.one(f.ctx, f.nvars)} for _ in range(f.nvars)]

    def var_pow(i, e):
        cache = pow_cache[i]
        if e not in cache:
            if e == 1:
                cache[e] = lift.image(i)
            elif e % 2 == 0:
                half = var_pow(i, e // 2)
                cache[e] = half * half
            else:
                cache[e] = var_pow(i, e - 1) * lift.image(i)
        return cache[e]

    out = Poly.zero(f.ctx, f.nvars)
    for mono, c in f.sorted_terms():
        t = Poly.const(f.ctx, f.nvars, c)
        for i, e in enumerate(mono):
            if e:
                t = t * var_pow(i, e)
        out = out + t
    return out


def frobenius_apply(f: Poly, lift: FrobeniusLift, e: int) -> Poly:
    """F^e(f): substitute each variable by its lift image, e times."""
    if e < 0:
        raise ValueError("negative iteration count")
    if lift.is_standard:
        q = lift.ctx.p**e
        return Poly(
            f.ctx, f.nvars, {tuple(x * q for x in m): c for m, c in f.terms.items()}
        )
    for _ in range(e):
        f = _apply_lift_once(f, lift)
    return f


def _split_base_q(f: Poly, q: int):
    """Naive digit split f = sum_alpha (x^q-substituted g_alpha) * x^alpha.

    Exact for the standard lift; the first-order approximation otherwise.
    """
    comps = {}
    for mono, c in f.terms.items():
        alpha = tuple(x % q for x in mono)
        beta = tuple(x // q for x in mono)
        comps.setdefault(alpha, {})[beta] = c
    return {
        alpha: Poly(f.ctx, f.nvars, terms) for alpha, terms in sorted(comps.items())
    }


def phi_decompose(f: Poly, lift: FrobeniusLift, e: int) -> dict:
    """Coordinates of f in the free basis {F^e(g) * x^alpha, alpha in [0,p^e)^n}.

    Returns {alpha: g_alpha} with zero components omitted. For a general lift
    the naive split is corrected iteratively: subtracting the exact lift of
    the current coordinates leaves a remainder of strictly larger coefficient
    valuation, so at most m+1 rounds are needed.
    """
    if e < 0:
        raise ValueError("negative level")
    if e == 0:
        return {} if f.is_zero() else {(0,) * f.nvars: f}
    q = lift.ctx.p**e
    if lift.is_standard:
        return _split_base_q(f, q)
    acc = {}
    pending = f
    rounds = 0
    while not pending.is_zero():
        if rounds > lift.ctx.m:
            raise AssertionError("decomposition failed to converge")
        rounds += 1
        step = _split_base_q(pending, q)
        rebuilt = Poly.zero(f.ctx, f.nvars)
        for alpha, g in step.items():
            acc[alpha] = acc.get(alpha, Poly.zero(f.ctx, f.nvars)) + g
            rebuilt = rebuilt + frobenius_apply(g, lift, e).term_mul(alpha, 1)
        pending = pending - rebuilt
    return {alpha: g for alpha, g in sorted(acc.items()) if not g.is_zero()}

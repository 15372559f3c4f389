"""
The windows depend on the lift; the roots do not
================================================

A lift of Frobenius sends each variable to its p-th power plus p times a
correction term. Different corrections reshuffle the level windows, but the
detected root set is the same.
"""

from bsroots import ChainRingCtx, FrobeniusLift, Poly, detect_roots, nu_set

ctx = ChainRingCtx(2, 1)
x = Poly.variable(ctx, 2, 0)
y = Poly.variable(ctx, 2, 1)

# standard lift: F1(x) = x^2, F1(y) = y^2
F1 = FrobeniusLift.standard(ctx, 2)

# bent lift: F2(x) = x^2 + 2*(x*y + y^2), F2(y) = y^2
F2 = FrobeniusLift(ctx, 2, [x * y + y * y, None])
print("F2 images:", F2.image(0).to_string(["x", "y"]), "|",
      F2.image(1).to_string(["x", "y"]))

# the level-1 window of f = x moves when the lift changes
print("\nlevel-1 window of x under F1:", nu_set(x, F1, 1).members)
print("level-1 window of x under F2:", nu_set(x, F2, 1).members)

# for comparison, x + y under the standard lift also fills the window
print("level-1 window of x + y under F1:", nu_set(x + y, F1, 1).members)

# but the roots agree
r1 = detect_roots(x, F1, top_level=7, den_bound=10, num_bound=10)
r2 = detect_roots(x, F2, top_level=7, den_bound=10, num_bound=10)
print("\nroots under F1:", [str(e.alpha.frac) for e in r1.roots])
print("roots under F2:", [str(e.alpha.frac) for e in r2.roots])

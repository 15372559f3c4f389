"""
Level sets of descent invariants
================================

Walk the powers f^n of a polynomial over Z/9 and record where the descent
ideal drops: those n form the level-e window, periodic mod p^(e+m).
"""

from bsroots import ChainRingCtx, FrobeniusLift, Poly, is_nu, nu_set

# the running example: f = x^2 + 3*y over Z/9 (p = 3, m = 1)
ctx = ChainRingCtx(3, 1)
f = Poly(ctx, 2, {(2, 0): 1, (0, 1): 3})
lift = FrobeniusLift.standard(ctx, 2)

# one window per level; each window is a complete period
for e in (1, 2, 3):
    level = nu_set(f, lift, e)
    print(f"level {e} (mod {level.window}): {list(level.members)}")

# membership for arbitrary n reduces into the window
level2 = nu_set(f, lift, 2)
print("\n31 mod 27 =", 31 % 27, "->", 31 in level2)
print("is_nu agrees:", is_nu(f, lift, 2, 31))

# each level refines the one below it: reducing a member mod p^(e-1+m)
# lands in the previous window
level3 = nu_set(f, lift, 3)
print("\nreductions of level-3 members into level 2:")
print(sorted({n % level2.window for n in level3.members}))
print("subset of level 2:", set(level3.members) <= {
    n for n in range(level3.window) if n % level2.window in level2.members
})

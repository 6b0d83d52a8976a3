"""Tour of the graded ring: generators, products, signs, squares."""

from confcohom import AlgebraContext

# Two shared points, one moving point, planar generators (degree d-1 = 1).
ctx = AlgebraContext(m=2, n=1, d=2)
print(f"points: {ctx.points}, generator degree: {ctx.gen_degree}, top step: {ctx.top_step}")

# The two-copy ring has one generator w(i,j) per pair i<j, plus a primed
# partner wp(i,j) whenever j labels a moving point.  Primed generators with
# j <= m coincide with the plain ones and normalize away on construction.
print("generators:", ", ".join(str(g) for g in ctx.generators()))
print("wp(1,2) collapses:", ctx.generator(1, 2, primed=True))

# Products are graded-commutative.  In even d the generators anticommute,
# so reordering a product can flip its sign.
a = ctx.gen_element(1, 2)
b = ctx.gen_element(1, 3)
print("a*b =", a * b)
print("b*a =", b * a)

# Squares of generators vanish (for even d this is forced by the sign rule;
# the ring imposes it in every parity).
print("a*a =", a * a)

# Elements carry integer coefficients and support arbitrary sums.
e = 3 * a * b - b * ctx.gen_element(2, 3, primed=True)
print("a combination:", e)
print("its degree step:", e.homogeneous_step())

# Mixing elements from different contexts is an error; each element knows
# its ring.  Odd d gives a commutative ring instead.
ctx3 = AlgebraContext(2, 1, 3)
x, y = ctx3.gen_element(1, 2), ctx3.gen_element(1, 3)
print("odd d, x*y == y*x:", x * y == y * x)

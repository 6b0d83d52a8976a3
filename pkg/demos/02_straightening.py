"""Straightening products onto the monomial basis, and the closed expansion."""

from confcohom import AlgebraContext, admissible_sequences, expand_constant_column, reduce_element
from confcohom.normalform import basis_monomials, is_basis_monomial

ctx = AlgebraContext(m=2, n=1, d=2)

# A monomial is basic when no two factors in the same copy share an upper
# index.  w(1,3)*w(2,3) repeats the upper index 3, so it is not basic:
bad = ctx.gen_element(1, 3) * ctx.gen_element(2, 3)
print("is basic:", all(is_basis_monomial(ctx, mono) for mono, _ in bad.terms()))

# The three-term relation w(1,3)w(2,3) = w(1,2)w(2,3) - w(1,2)w(1,3)
# rewrites it.  reduce_element applies such rewrites to a normal form.
print("reduced:", reduce_element(bad))

# The basis in each degree step is the set of basic monomials.
for step in range(ctx.top_step + 1):
    monos = basis_monomials(ctx, step)
    print(f"step {step}: {len(monos)} basis monomials")

# Repeated-column products have a closed expansion indexed by admissible
# sequences: starting from (j1), each later entry either repeats its
# predecessor or moves up to the next j.  For J = (2,5,6):
for seq, distinct in admissible_sequences((2, 5, 6)):
    print("admissible:", seq, "distinct entries:", distinct)

# The expansion of w(j1,r)*...*w(jl,r) over those sequences agrees with
# straightening the product directly.
big = AlgebraContext(m=3, n=3, d=2)
J, r = (1, 3, 4), 6
direct = big.one()
for j in J:
    direct = direct * big.gen_element(j, r)
print("expansion == direct straightening:",
      expand_constant_column(big, J, r) == reduce_element(direct))
print("term count:", len(expand_constant_column(big, J, r)))

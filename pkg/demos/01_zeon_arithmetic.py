"""A first look at zeon arithmetic.

Generators square to zero but commute, so a product of blades either merges
disjoint index sets or vanishes.  Everything below runs in well under a
second.
"""

from zeonlap import ZeonPolynomial, exp_elem, inv_sqrt, inverse, nilpotency_index, zeta
from zeonlap.pauli import represent
from zeonlap.poly import spectral_split

z1, z2, z3 = zeta(1), zeta(2), zeta(3)

print("Blades merge or vanish")
print("  ζ1 ζ2        =", z1 * z2)
print("  ζ1 ζ1        =", z1 * z1)
print("  (ζ1 + ζ2)^2  =", (z1 + z2) ** 2)

u = z1 + z2 + z3
print("\nA nilpotent element and its index")
print("  u =", u, "  u^3 =", u**3, "  index =", nilpotency_index(u))

w = 2 + z1 - 3 * zeta(1, 2)
print("\nInvertible elements have an invertible scalar part")
print("  w       =", w)
print("  1/w     =", inverse(w))
print("  w^-1/2  =", inv_sqrt(4 + 4 * z1))
print("  exp(ζ1 + ζ2) =", exp_elem(z1 + z2))

# a polynomial built from zeon roots splits back into the same roots
roots = [1 + zeta(1, 2), -2 + z3, 3 + zeta(2, 3)]
phi = ZeonPolynomial.from_roots(roots)
print("\nA cubic with zeon roots:", phi)
for r in spectral_split(phi):
    print("  root:", r)

print("\nThe same element as an upper-triangular complex matrix (2 generators):")
print(represent(1 + 2 * z1 + 3 * z2 + 4 * zeta(1, 2), 2).data.real)

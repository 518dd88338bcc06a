"""Exact arithmetic in Q[G]: subgroup sums, idempotents, nilpotents.

Walks through the dihedral group of order 12, whose integral group ring
famously fails the nilpotent decomposition property: there is an integral
nilpotent alpha and a central idempotent e with alpha*e non-integral.
"""

from fractions import Fraction

from qgring import build_named, subgroup_generated
from qgring.algebra import AlgElem, hat, one_minus, one_plus, tilde

G = build_named("D12")
a, b = G.element("a"), G.element("b")
print(f"group: {G.name}, order {G.order}")
print(f"elements: {G.names}")

# subgroup sums: hat(H) has integer coefficients, tilde(H) is idempotent
H = subgroup_generated(G, (a,))
print(f"\nhat(<a>) = {hat(H)}")
print(f"tilde(<a>) idempotent: {tilde(H).is_idempotent()}")
print(f"hat(<a>)(1 - a) = 0: {(hat(H) * one_minus(G, a)).is_zero()}")

# the square-zero element (1-b) a (1+b)
alpha = one_minus(G, b) * AlgElem.basis(G, a) * one_plus(G, b)
print(f"\nalpha = (1-b)a(1+b) = {alpha}")
print(f"alpha integral: {alpha.is_integral()}, alpha^2 = 0: {(alpha * alpha).is_zero()}")

# the central idempotent tilde(a^3) - tilde(a)
e = tilde(subgroup_generated(G, (G.word("a^3"),))) - tilde(H)
print(f"\ne = tilde(a^3) - tilde(a): central={e.is_central()} idempotent={e.is_idempotent()}")

prod = alpha * e
print(f"alpha*e = {prod}")
print(f"alpha*e integral: {prod.is_integral()}  <- the ND failure")
assert prod.coeff(prod.support[0]).denominator == 2

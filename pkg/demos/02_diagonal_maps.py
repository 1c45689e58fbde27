"""The four diagonal maps and the theorems they satisfy.

For constant translation families (sigma_x = f, tau_y = g with fg = gf) the
diagonals are simply U = f^-1 and T = g^-1.  On any non-degenerate solution
U and T are bijections, T_hat inverts U, U_hat inverts T, and U commutes
with T, even though U and T need not be mutually inverse.
"""

from yangbaxter import (
    check_diagonal_identities,
    check_diagonal_theorems,
    diagonal_maps,
    invert,
)
from yangbaxter.fixtures import derived2, left_only3, lyubashenko, lyubashenko3

sol = lyubashenko3()
d = diagonal_maps(sol)
print("constant 3-cycle families:")
print("  U     =", d.U, " (inverse of the cycle)")
print("  T     =", d.T)
print("  U_hat =", d.U_hat, " (the cycle itself)")
print("  T_hat =", d.T_hat)

print("\npointwise identity checks (empty lists = identities hold):")
print(" ", check_diagonal_identities(sol))

print("\ntheorem checks (inverses, commutation, bijectivity, fixed points):")
print(" ", check_diagonal_theorems(sol))

# U and T are not mutually inverse here, but they do commute
two = lyubashenko((1, 2, 0), (2, 0, 1))
d2 = diagonal_maps(two)
print("\nfamilies f and f^-1 make U and T mutually inverse:", end=" ")
print(tuple(d2.U[d2.T[x]] for x in range(3)))

# one-sided degeneracy leaves the other side's maps undefined
partial = diagonal_maps(left_only3())
print("\nleft-only solution: U =", partial.U, " T =", partial.T)
print("U_hat =", partial.U_hat, "(defined by lookup, not a bijection here)")

# derived form: identity left translations push everything into U_hat
d3 = diagonal_maps(derived2())
print("\nderived 2-element solution: U =", d3.U, " U_hat =", d3.U_hat)

# the inverse solution swaps the hatted and unhatted diagonals' roles
print("\ninverse solution of the 3-cycle example:", invert(lyubashenko3()).sigma[0])

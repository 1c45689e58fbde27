"""Retract relations, quotient solutions, and the two level notions.

The forward relation merges elements with identical translation rows.  For
non-degenerate solutions the quotient is again a solution and iterating it
either collapses to a point (multipermutation level = number of steps) or
stalls.  A second notion stops as soon as the quotient is a trivial
solution, possibly with more than one element.
"""

from yangbaxter import (
    CompatibilityError,
    check_relation_coincidence,
    check_retract_duality,
    mpl,
    mpl_prime,
    retract,
    retract_relation,
)
from yangbaxter.fixtures import left_only3, lyubashenko3, projection

sol = lyubashenko3()
print("constant-family solution:")
print("  forward blocks:", retract_relation(sol, "forward").blocks())
print("  quotient size: ", retract(sol).quotient.n)
print("  mpl  =", mpl(sol))
print("  mpl' =", mpl_prime(sol))

triv = projection(2)
print("\ntrivial 2-element solution:")
print("  mpl  =", mpl(triv), " (one step to a single point)")
print("  mpl' =", mpl_prime(triv), "(already trivial)")

# for non-degenerate bijective solutions all three relations coincide,
# and the retract commutes with taking the inverse solution
print("\nrelation coincidence:", check_relation_coincidence(sol)["disagreements"])
print("retract duality:     ", check_retract_duality(sol))

# degenerate inputs can break compatibility: the quotient is then undefined
bad = left_only3()
print("\nblocks of the left-only example:", retract_relation(bad, "forward").blocks())
try:
    retract(bad)
except CompatibilityError as exc:
    x1, x2, y1, y2 = exc.witness
    print(f"retract refused: relation not compatible with {exc.op},")
    print(f"  witness ({x1},{x2},{y1},{y2}): images "
          f"{bad.tau[x1][y1]} and {bad.tau[x2][y2]} sit in different blocks")

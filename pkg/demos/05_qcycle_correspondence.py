"""q-cycle sets and their two-way translation with left non-degenerate solutions.

A q-cycle set is a two-operation structure (dot and colon) with invertible
dot translations and three mixed distributivity axioms.  Inverting the left
translation rows carries solutions to q-cycle sets and back, a bijective
correspondence; on the q-cycle side the two diagonals always commute.
"""

from yangbaxter import (
    QCycleSet,
    from_solution,
    is_regular,
    qcycle_diagonals,
    to_solution,
    validate_qcycle,
)
from yangbaxter.fixtures import left_only3, lyubashenko3, qcycle_constant

q = qcycle_constant()
print("constant-colon q-cycle set (dot projects, colon is constant 0):")
print("  axiom violations:", validate_qcycle(q))
print("  regular:", is_regular(q), " (colon rows are constant)")
U, U_hat, failures = qcycle_diagonals(q)
print("  diagonals:", U, U_hat, " commute:", not failures)

sol = to_solution(q)
print("  as a solution: sigma rows identity, tau rows", sol.tau[0])

print("\nround trips on the shipped solutions:")
for name, s in (("left_only3", left_only3()), ("lyubashenko3", lyubashenko3())):
    qq = from_solution(s)
    print(f"  {name}: to_solution(from_solution(s)) == s:", to_solution(qq) == s,
          " regular:", is_regular(qq))

# a perturbed table stops being a q-cycle set, with located violations
colon = [list(row) for row in q.colon]
colon[0][0] = 1
broken = QCycleSet(q.dot, colon)
print("\nperturbing one colon entry produces violations such as:")
print(" ", validate_qcycle(broken)[:3])

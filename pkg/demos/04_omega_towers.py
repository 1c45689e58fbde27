"""Tower evaluation, permutational and reductive levels, closed-form inverses.

A tower starts at a base element and repeatedly applies translations chosen
by a word of symbols; the two collapse properties ask when towers forget
their base (permutational) or absorb it into the arguments (reductive).
"""

from yangbaxter import (
    check_omega_identities,
    check_star_conditions,
    closed_form_U_inverse,
    is_k_permutational,
    is_k_reductive,
    omega_eval,
)
from yangbaxter.fixtures import left_only3, lyubashenko3, projection, z3group
from yangbaxter.omega import SIGMA, TAU

sol = left_only3()
print("height-2 right towers on the left-only example:")
for base in (1, 2):
    print(f"  start {base}: ", omega_eval(sol, (TAU, TAU), base, (0, 0)))
print("the tower returns its own base, so no level ever collapses it:")
for k in (1, 2, 3):
    ok, witness = is_k_permutational(sol, k)
    print(f"  level {k} permutational: {ok}  witness: {witness}")

z3 = z3group()
print("\ngroup-translation example: left towers return the base too")
print("  tower value:", omega_eval(z3, (SIGMA, SIGMA), 2, (0, 0)))
print("  permutational at any level:", is_k_permutational(z3, 3)[0])

lyu = lyubashenko3()
print("\nconstant families: permutational at level 1, reductive at level 2")
print("  level 1 permutational:", is_k_permutational(lyu, 1)[0])
print("  1-reductive:", is_k_reductive(lyu, 1)[0], " 2-reductive:", is_k_reductive(lyu, 2)[0])

# fixed-point conditions bridge the two hierarchies
print("\nstar conditions (some translation fixes each point):")
print("  trivial solution:", check_star_conditions(projection(2)))
print("  constant cycles: ", check_star_conditions(lyu)[0])

# the inverse of U as a single tower of left translations
print("\nclosed form: U^-1 as a height-1 left tower on the cycle example:")
print(" ", closed_form_U_inverse(lyu, 1))

# the rewriting identities behind all of this hold on every solution
report = check_omega_identities(lyu, 3)
bad = {k: v for k, v in report.items() if isinstance(v, dict) and v["failures"]}
print("\nrewriting identity failures (expected none):", bad)
print("lowest permutational level found:", report["permutational_level_bound"])

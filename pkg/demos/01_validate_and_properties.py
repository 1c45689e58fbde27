"""Build a solution from raw tables, validate it, and read off its properties.

The running example is a three-element solution whose left translations are
all the identity while the right action collapses almost everything: it is
left non-degenerate but fails every stronger property, and each failure
comes with a concrete witness.
"""

from yangbaxter import FiniteSolution, properties, validate_braid

sigma = [[0, 1, 2], [0, 1, 2], [0, 1, 2]]
tau = [[1, 2, 2], [1, 2, 2], [2, 2, 2]]
sol = FiniteSolution(sigma, tau)

print("braid violations:", validate_braid(sol))

report = properties(sol)
print("left non-degenerate: ", report.left_nondegenerate)
print("right non-degenerate:", report.right_nondegenerate)
print("bijective:           ", report.bijective)
print("involutive:          ", report.involutive)
print("square-free:         ", report.square_free)

print("\nevery false flag is certified by a witness:")
for flag, witness in report.witnesses.items():
    print(f"  {flag}: {witness}")

# the bijectivity witness replays: two distinct pairs share an image
(p1, p2) = report.witnesses["bijective"]
print(f"\nreplay: r{p1} = {sol.r(*p1)} = r{p2} = {sol.r(*p2)}")

# now break the braid relation on purpose and watch validation catch it
broken = FiniteSolution([[0, 1], [1, 0]], [[0, 1], [0, 1]])
print("\nbroken 2-element tables violate the braid relation at:")
print(" ", validate_braid(broken))

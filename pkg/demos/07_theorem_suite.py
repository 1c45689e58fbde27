"""Machine-verify every theorem over the complete populations up to n = 3.

Each entry replays one claim on every enumerated solution whose hypotheses
it meets; the expected outcome is zero counterexamples everywhere.  Two
entries are open-question observations and assert nothing: they search for
a mismatch between the forward and inverse relations, and track whether
colon-relation quotients of regular q-cycle sets keep invertible rows.
"""

from yangbaxter import theorem_suite

report = theorem_suite(3)

for n, info in sorted(report.populations.items()):
    print(f"population n={n} ({info['filter']}): {info['count']} solutions")
print()
for line in report.lines():
    print(" ", line)

print("\nopen-question observations:")
for name, payload in report.observations.items():
    if isinstance(payload, dict):
        print(f"  {name}: {payload['yes']} yes / {payload['no']} no")
    else:
        print(f"  {name}: {len(payload)} instances found")

print(f"\nelapsed: {report.elapsed:.1f}s")
print("counterexamples:", report.counterexamples())

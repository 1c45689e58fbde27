"""Two-operation cycle structures matching left non-degenerate solutions.

A q-cycle set carries operations dot and colon subject to three mixed
distributive axioms, with every dot translation invertible; it is regular
when the colon translations are invertible too.  Left non-degenerate
solutions and q-cycle sets translate into each other by inverting left
translation rows, and the translation is bijective in both directions.
"""

from itertools import product

from .core import (
    FiniteSolution,
    invert,
    is_permutation,
    left_nondegenerate,
    perm_inverse,
    row_inverses,
    validate_braid,
)
from .errors import InvalidQCycle, MalformedTable, NotBijective, NotLeftNondegenerate


def _as_table(rows, n, name):
    rows = tuple(tuple(row) for row in rows)
    if len(rows) != n:
        raise MalformedTable(f"{name} must have {n} rows, got {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MalformedTable(f"{name} row {i} must have {n} entries, got {len(row)}")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise MalformedTable(f"{name}[{i}] entry {v!r} out of range 0..{n - 1}")
    return rows


class QCycleSet:
    """Immutable dot/colon table pair; validity is checked by validate_qcycle."""

    def __init__(self, dot, colon):
        n = len(dot)
        if n == 0:
            raise MalformedTable("carrier must be nonempty")
        self.n = n
        self.dot = _as_table(dot, n, "dot")
        self.colon = _as_table(colon, n, "colon")

    def __eq__(self, other):
        return (
            isinstance(other, QCycleSet)
            and self.dot == other.dot
            and self.colon == other.colon
        )

    def __hash__(self):
        return hash((self.dot, self.colon))

    def __repr__(self):
        return f"QCycleSet(dot={list(map(list, self.dot))}, colon={list(map(list, self.colon))})"


def validate_qcycle(q):
    """All axiom violations: per-triple failures of the three mixed laws plus
    any dot row that is not a bijection.  Empty list means valid."""
    n = q.n
    d, c = q.dot, q.colon
    violations = []
    for x in range(n):
        if not is_permutation(d[x]):
            violations.append(("dot_row_not_bijective", (x,)))
    for x, y, z in product(range(n), repeat=3):
        if d[d[x][y]][d[x][z]] != d[c[y][x]][d[y][z]]:
            violations.append(("dot_over_dot", (x, y, z)))
        if c[d[x][y]][d[x][z]] != d[c[y][x]][c[y][z]]:
            violations.append(("colon_over_dot", (x, y, z)))
        if c[d[x][y]][c[x][z]] != c[c[y][x]][c[y][z]]:
            violations.append(("colon_over_colon", (x, y, z)))
    return violations


def is_regular(q):
    return all(is_permutation(row) for row in q.colon)


def from_solution(sol):
    """The q-cycle set of a left non-degenerate solution: dot rows are the
    inverted left translations, colon mixes the right action through them."""
    if not left_nondegenerate(sol):
        raise NotLeftNondegenerate("only left non-degenerate solutions convert")
    n = sol.n
    sig_inv = row_inverses(sol.sigma)
    dot = sig_inv
    colon = tuple(
        tuple(sol.tau[sig_inv[y][x]][y] for y in range(n)) for x in range(n)
    )
    q = QCycleSet(dot, colon)
    assert not validate_qcycle(q)
    try:
        inv = invert(sol)
    except NotBijective:
        inv = None
    if inv is not None:
        # for regular solutions the colon rows invert the hatted left rows
        for x in range(n):
            assert q.colon[x] == perm_inverse(inv.sigma[x])
    return q


def to_solution(q):
    """The left non-degenerate solution of a valid q-cycle set; inverse of
    from_solution in both directions."""
    bad = validate_qcycle(q)
    if bad:
        raise InvalidQCycle(f"axioms fail, first violation {bad[0]}", witness=bad[0])
    n = q.n
    dot_inv = tuple(perm_inverse(row) for row in q.dot)
    sigma = dot_inv
    tau = tuple(
        tuple(q.colon[dot_inv[x][y]][x] for x in range(n)) for y in range(n)
    )
    sol = FiniteSolution(sigma, tau)
    assert not validate_braid(sol)
    assert left_nondegenerate(sol)
    return sol


def qcycle_diagonals(q):
    """The two diagonals dot[x][x] and colon[x][x] plus the carrier points
    where they fail to commute (expected none for valid q-cycle sets)."""
    n = q.n
    U = tuple(q.dot[x][x] for x in range(n))
    U_hat = tuple(q.colon[x][x] for x in range(n))
    failures = [x for x in range(n) if U[U_hat[x]] != U_hat[U[x]]]
    return U, U_hat, failures

"""Retract equivalences, quotient solutions and multipermutation levels.

Three equivalences collapse carrier elements with identical action data: the
forward relation compares the raw translation rows, the inverse relation
compares the rows of the inverse solution, and the colon relation compares
the inverse left translations together with the mixed right action
tau[sigma_z^-1(x)](z).  Quotients by the forward relation drive the retract
tower; its stabilization height gives the two multipermutation level notions.
"""

from dataclasses import dataclass
from itertools import product

from .core import (
    FiniteSolution,
    invert,
    left_nondegenerate,
    right_nondegenerate,
    row_inverses,
    validate_braid,
)
from .errors import CompatibilityError, NotLeftNondegenerate, NotNondegenerate
from .omega import SIGMA, TAU, action_table


@dataclass(frozen=True)
class Partition:
    """Blocks of an equivalence on {0..n-1}; block_of maps each element to the
    minimum of its block, so representatives are fixed points."""

    n: int
    block_of: tuple

    @staticmethod
    def from_keys(keys):
        first = {}
        block_of = []
        for x, key in enumerate(keys):
            block_of.append(first.setdefault(key, x))
        return Partition(n=len(block_of), block_of=tuple(block_of))

    def blocks(self):
        groups = {}
        for x, rep in enumerate(self.block_of):
            groups.setdefault(rep, []).append(x)
        return [tuple(groups[rep]) for rep in sorted(groups)]

    def same_block(self, x, y):
        return self.block_of[x] == self.block_of[y]

    def num_blocks(self):
        return len(set(self.block_of))


@dataclass(frozen=True)
class RetractResult:
    quotient: FiniteSolution
    projection: tuple


RELATION_KINDS = ("forward", "inverse", "colon")


def retract_relation(sol, kind="forward"):
    """The partition induced by one of the three row-comparison equivalences."""
    n = sol.n
    if kind == "forward":
        keys = [(sol.sigma[x], sol.tau[x]) for x in range(n)]
    elif kind == "inverse":
        inv = invert(sol)
        keys = [(inv.sigma[x], inv.tau[x]) for x in range(n)]
    elif kind == "colon":
        if not left_nondegenerate(sol):
            raise NotLeftNondegenerate("the colon relation needs left non-degeneracy")
        sig_inv = row_inverses(sol.sigma)
        keys = [
            (sol.sigma[x], tuple(sol.tau[sig_inv[z][x]][z] for z in range(n)))
            for x in range(n)
        ]
    else:
        raise ValueError(f"unknown relation kind {kind!r}")
    return Partition.from_keys(keys)


def check_compatibility(sol, partition, op):
    """First quadruple (x1, x2, y1, y2) of related subscripts and related
    arguments whose op-images land in different blocks, or None when the
    partition is compatible with the operation.  op is any action symbol name
    accepted by the tower machinery."""
    table = action_table(sol, op)
    n = sol.n
    for x1, x2, y1, y2 in product(range(n), repeat=4):
        if not (partition.same_block(x1, x2) and partition.same_block(y1, y2)):
            continue
        if not partition.same_block(table[x1][y1], table[x2][y2]):
            return (x1, x2, y1, y2)
    return None


def retract(sol):
    """Quotient by the forward relation with the induced tables.

    Raises CompatibilityError when the relation fails to respect one of the
    defining operations, which can happen for degenerate solutions only.
    """
    partition = retract_relation(sol, "forward")
    for op in (SIGMA, TAU):
        witness = check_compatibility(sol, partition, op)
        if witness is not None:
            raise CompatibilityError(op, witness)
    reps = sorted(set(partition.block_of))
    index = {rep: i for i, rep in enumerate(reps)}
    projection = tuple(index[partition.block_of[x]] for x in range(sol.n))
    m = len(reps)
    qsigma = [[projection[sol.sigma[reps[a]][reps[b]]] for b in range(m)] for a in range(m)]
    qtau = [[projection[sol.tau[reps[a]][reps[b]]] for b in range(m)] for a in range(m)]
    quotient = FiniteSolution(qsigma, qtau)
    assert not validate_braid(quotient)
    for x, y in product(range(sol.n), repeat=2):
        assert projection[sol.sigma[x][y]] == quotient.sigma[projection[x]][projection[y]]
        assert projection[sol.tau[x][y]] == quotient.tau[projection[x]][projection[y]]
    return RetractResult(quotient=quotient, projection=projection)


def is_irretractable(sol):
    return retract_relation(sol, "forward").num_blocks() == sol.n


def _require_nondegenerate(sol):
    if not (left_nondegenerate(sol) and right_nondegenerate(sol)):
        raise NotNondegenerate("retract towers need a non-degenerate solution")


def mpl(sol):
    """Least height at which the iterated retract collapses to one element,
    or None when the tower stabilizes on a larger irretractable solution."""
    _require_nondegenerate(sol)
    cur = sol
    k = 0
    while cur.n > 1:
        step = retract(cur)
        if step.quotient.n == cur.n:
            return None
        cur = step.quotient
        k += 1
        assert k <= sol.n
    return k


def is_trivial(sol):
    identity = tuple(range(sol.n))
    return all(row == identity for row in sol.sigma) and all(
        row == identity for row in sol.tau
    )


def mpl_prime(sol):
    """Least height at which the iterated retract becomes a trivial solution,
    possibly of size above one; None when the tower stabilizes non-trivially."""
    _require_nondegenerate(sol)
    cur = sol
    k = 0
    while not is_trivial(cur):
        step = retract(cur)
        if step.quotient.n == cur.n:
            return None
        cur = step.quotient
        k += 1
        assert k <= sol.n
    return k


def check_relation_coincidence(sol):
    """For non-degenerate bijective solutions the three relations agree.

    Returns a dict with the three block tables and a list of the relation
    pairs that differ (expected empty).
    """
    _require_nondegenerate(sol)
    parts = {kind: retract_relation(sol, kind) for kind in RELATION_KINDS}
    disagreements = [
        (a, b)
        for i, a in enumerate(RELATION_KINDS)
        for b in RELATION_KINDS[i + 1 :]
        if parts[a].block_of != parts[b].block_of
    ]
    return {
        "blocks": {kind: parts[kind].block_of for kind in RELATION_KINDS},
        "disagreements": disagreements,
    }


def check_retract_duality(sol):
    """The retract of the inverse solution is the inverse of the retract, and
    both have the same multipermutation level.  Returns a failure dict per
    check (all entries expected empty/True)."""
    _require_nondegenerate(sol)
    inv = invert(sol)
    ret = retract(sol)
    ret_inv = retract(inv)
    report = {"mutually_inverse": [], "mpl_equal": []}
    if ret.projection != ret_inv.projection:
        report["mutually_inverse"].append(("projections differ", ret.projection, ret_inv.projection))
    elif invert(ret.quotient) != ret_inv.quotient:
        report["mutually_inverse"].append(
            ("quotient tables differ", ret.quotient, ret_inv.quotient)
        )
    level, level_inv = mpl(sol), mpl(inv)
    if level != level_inv:
        report["mpl_equal"].append((level, level_inv))
    return report

"""Orbit decomposition and decomposability of non-degenerate solutions.

An orbit is a minimal nonempty carrier subset closed under every left and
right translation and their inverses.  The partition is computed as the
connected components of the union of all translation images; on a finite
non-degenerate solution the translations are permutations, so forward images
already generate the closure under inverses.
"""

from dataclasses import dataclass
from itertools import product

from .core import FiniteSolution, left_nondegenerate, right_nondegenerate, validate_braid
from .errors import NotKReductive, NotNondegenerate
from .omega import DEFAULT_ALPHABET, is_k_permutational, is_k_reductive
from .retract import Partition


@dataclass(frozen=True)
class Suborbit:
    """One orbit as a standalone solution; elements[i] is the parent carrier
    element behind local index i, in increasing parent order."""

    elements: tuple
    solution: FiniteSolution


@dataclass(frozen=True)
class OrbitDecomposition:
    partition: Partition
    suborbits: tuple


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def orbit_decomposition(sol):
    if not (left_nondegenerate(sol) and right_nondegenerate(sol)):
        raise NotNondegenerate("orbits need a non-degenerate solution")
    n = sol.n
    parent = list(range(n))
    for y, x in product(range(n), repeat=2):
        for image in (sol.sigma[y][x], sol.tau[y][x]):
            a, b = _find(parent, x), _find(parent, image)
            if a != b:
                parent[max(a, b)] = min(a, b)
    block_of = tuple(_find(parent, x) for x in range(n))
    partition = Partition(n=n, block_of=block_of)

    suborbits = []
    for block in partition.blocks():
        index = {e: i for i, e in enumerate(block)}
        # closure: every translation by any carrier element stays in the block
        for y, e in product(range(n), tuple(block)):
            assert sol.sigma[y][e] in index and sol.tau[y][e] in index
        m = len(block)
        sub_sigma = [[index[sol.sigma[block[a]][block[b]]] for b in range(m)] for a in range(m)]
        sub_tau = [[index[sol.tau[block[a]][block[b]]] for b in range(m)] for a in range(m)]
        sub = FiniteSolution(sub_sigma, sub_tau)
        assert not validate_braid(sub)
        suborbits.append(Suborbit(elements=tuple(block), solution=sub))
    return OrbitDecomposition(partition=partition, suborbits=tuple(suborbits))


def is_decomposable(sol):
    """More than one element and more than one orbit."""
    decomp = orbit_decomposition(sol)
    return sol.n > 1 and decomp.partition.num_blocks() > 1


def check_orbit_theorem(sol, k):
    """Every orbit of a non-degenerate k-reductive solution collapses towers
    of height k-1: returns the list of orbits whose restriction fails, with
    witnesses (expected empty)."""
    ok, witness = is_k_reductive(sol, k)
    if not ok:
        raise NotKReductive(f"solution is not {k}-reductive", witness=witness)
    failures = []
    for sub in orbit_decomposition(sol).suborbits:
        sub_ok, sub_witness = is_k_permutational(sub.solution, k - 1, DEFAULT_ALPHABET)
        if not sub_ok:
            failures.append((sub.elements, sub_witness))
    return failures

"""Tower evaluation over the translation maps of a solution.

A tower of height k starts at a base element and repeatedly applies chosen
translation families: the next value is the image of the next argument under
the translation indexed by the current value.  Height-k towers over a chosen
alphabet of families decide the two tower-collapse properties:

* level-k permutational: every height-k tower is independent of its base;
* k-reductive: every height-k tower equals the height-(k-1) tower obtained
  by promoting the first argument to the base.

Word spaces are scanned exhaustively while the case count stays below
EXHAUSTIVE_LIMIT, and by seeded random sampling above it, so every verdict is
reproducible.
"""

import random
from itertools import product
from math import prod

from .core import invert, is_permutation, row_inverses
from .errors import (
    NotBijective,
    NotKPermutational,
    NotKReductive,
    NotLeftNondegenerate,
    NotRightNondegenerate,
    SymbolUnavailable,
)

SIGMA = "sigma"
SIGMA_INV = "sigma_inv"
TAU = "tau"
TAU_INV = "tau_inv"
SIGMA_HAT = "sigma_hat"
SIGMA_HAT_INV = "sigma_hat_inv"
TAU_HAT = "tau_hat"
TAU_HAT_INV = "tau_hat_inv"

ALL_SYMBOLS = (
    SIGMA, SIGMA_INV, TAU, TAU_INV,
    SIGMA_HAT, SIGMA_HAT_INV, TAU_HAT, TAU_HAT_INV,
)
DEFAULT_ALPHABET = (SIGMA, TAU)
FULL_ALPHABET = (SIGMA, SIGMA_INV, TAU, TAU_INV)

INVERSE_OF = {
    SIGMA: SIGMA_INV, SIGMA_INV: SIGMA,
    TAU: TAU_INV, TAU_INV: TAU,
    SIGMA_HAT: SIGMA_HAT_INV, SIGMA_HAT_INV: SIGMA_HAT,
    TAU_HAT: TAU_HAT_INV, TAU_HAT_INV: TAU_HAT,
}

EXHAUSTIVE_LIMIT = 10**7
SAMPLE_TRIALS = 10**5


def _inverse_rows(table, symbol):
    if not all(is_permutation(row) for row in table):
        raise SymbolUnavailable(f"{symbol} needs every underlying row to be a bijection")
    return row_inverses(table)


def action_tables(sol, symbols):
    """The action table of each requested symbol: table[x][z] applies the
    translation indexed by x to z.  Raises SymbolUnavailable when the solution
    lacks the invertibility a symbol needs."""
    tables = {}
    inv_sol = None
    need_hat = any(s in (SIGMA_HAT, SIGMA_HAT_INV, TAU_HAT, TAU_HAT_INV) for s in symbols)
    if need_hat:
        try:
            inv_sol = invert(sol)
        except NotBijective as exc:
            raise SymbolUnavailable(
                "hatted symbols need a bijective pair map", witness=exc.witness
            ) from exc
    for s in symbols:
        if s == SIGMA:
            tables[s] = sol.sigma
        elif s == TAU:
            tables[s] = sol.tau
        elif s == SIGMA_INV:
            tables[s] = _inverse_rows(sol.sigma, s)
        elif s == TAU_INV:
            tables[s] = _inverse_rows(sol.tau, s)
        elif s == SIGMA_HAT:
            tables[s] = inv_sol.sigma
        elif s == TAU_HAT:
            tables[s] = inv_sol.tau
        elif s == SIGMA_HAT_INV:
            tables[s] = _inverse_rows(inv_sol.sigma, s)
        elif s == TAU_HAT_INV:
            tables[s] = _inverse_rows(inv_sol.tau, s)
        else:
            raise SymbolUnavailable(f"unknown symbol {s!r}")
    return tables


def action_table(sol, symbol):
    return action_tables(sol, (symbol,))[symbol]


def available_symbols(sol):
    out = []
    for s in ALL_SYMBOLS:
        try:
            action_tables(sol, (s,))
        except SymbolUnavailable:
            continue
        out.append(s)
    return tuple(out)


def _eval(tables, word, x, zs):
    acc = x
    for sym, z in zip(word, zs):
        acc = tables[sym][acc][z]
    return acc


def omega_eval(sol, word, x, zs):
    """Evaluate the height-len(word) tower with base x and arguments zs.

    The first symbol of the word acts first: the running value starts at x
    and each step replaces it by the image of the next argument under the
    translation indexed by the running value.
    """
    word = tuple(word)
    zs = tuple(zs)
    if len(word) != len(zs):
        raise ValueError(f"word length {len(word)} != argument count {len(zs)}")
    tables = action_tables(sol, set(word))
    return _eval(tables, word, x, zs)


class _WordSpace:
    """All length-k words over an alphabet, indexable without materialization."""

    def __init__(self, alphabet, k):
        self.alphabet = tuple(alphabet)
        self.k = k

    def __len__(self):
        return len(self.alphabet) ** self.k

    def __getitem__(self, index):
        base = len(self.alphabet)
        word = []
        for _ in range(self.k):
            index, digit = divmod(index, base)
            word.append(self.alphabet[digit])
        return tuple(reversed(word))

    def __iter__(self):
        return iter(product(self.alphabet, repeat=self.k))


def _cases(seed, *dims):
    """Full cartesian product of the dimensions when small enough, otherwise
    a seeded random sample of SAMPLE_TRIALS tuples."""
    total = prod(len(d) for d in dims)
    if total <= EXHAUSTIVE_LIMIT:
        yield from product(*dims)
    else:
        rng = random.Random(seed)
        for _ in range(SAMPLE_TRIALS):
            yield tuple(d[rng.randrange(len(d))] for d in dims)


def is_k_permutational(sol, k, alphabet=DEFAULT_ALPHABET, seed=0):
    """Whether every height-k tower over the alphabet ignores its base element.

    Returns (True, None) or (False, (word, x, y, zs)) where the two bases x
    and y give the tower different values on arguments zs.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    tables = action_tables(sol, set(alphabet))
    n = sol.n
    carrier = range(n)
    words = _WordSpace(alphabet, k)
    zspace = _WordSpace(tuple(carrier), k)
    for case in _cases(seed, words, carrier, carrier, zspace):
        word, x, y, zs = case
        if x == y:
            continue
        if _eval(tables, word, x, zs) != _eval(tables, word, y, zs):
            return False, (word, x, y, zs)
    return True, None


def is_k_reductive(sol, k, seed=0):
    """Whether every height-k tower over {sigma, tau} equals the height-(k-1)
    tower that starts at the first argument instead of the base.

    Returns (True, None) or (False, (word, x, zs)).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    tables = action_tables(sol, set(DEFAULT_ALPHABET))
    n = sol.n
    carrier = range(n)
    words = _WordSpace(DEFAULT_ALPHABET, k)
    zspace = _WordSpace(tuple(carrier), k)
    for word, x, zs in _cases(seed, words, carrier, zspace):
        if _eval(tables, word, x, zs) != _eval(tables, word[1:], zs[0], zs[1:]):
            return False, (word, x, zs)
    return True, None


def check_star_conditions(sol):
    """Whether every element is fixed by some left and some right translation.

    Returns (ok, sigma_fixers, tau_fixers); the fixer tuples hold, for each x,
    a witness subscript whose translation fixes x, or None.
    """
    n = sol.n
    sigma_fixers = []
    tau_fixers = []
    for x in range(n):
        # prefer the element itself, so square-free solutions witness themselves
        order = (x, *(y for y in range(n) if y != x))
        sigma_fixers.append(next((y for y in order if sol.sigma[y][x] == x), None))
        tau_fixers.append(next((z for z in order if sol.tau[z][x] == x), None))
    ok = all(w is not None for w in sigma_fixers) and all(w is not None for w in tau_fixers)
    return ok, tuple(sigma_fixers), tuple(tau_fixers)


def _closed_form(sol, k, reductive, symbol):
    tables = action_tables(sol, (symbol,))
    if reductive:
        ok, witness = is_k_reductive(sol, k)
        if not ok:
            raise NotKReductive(f"solution is not {k}-reductive", witness=witness)
        height = k - 1
    else:
        ok, witness = is_k_permutational(sol, k)
        if not ok:
            raise NotKPermutational(f"solution is not level-{k} permutational", witness=witness)
        height = k
    word = (symbol,) * height
    return tuple(_eval(tables, word, x, (x,) * height) for x in range(sol.n))


def closed_form_U_inverse(sol, k, reductive=False):
    """U inverse as a single tower: apply the left translation family k times
    (k-1 times in the reductive case) starting and ending at the same element.
    The result is checked to invert U on both sides."""
    if not all(is_permutation(row) for row in sol.sigma):
        raise NotLeftNondegenerate("U is only defined for left non-degenerate solutions")
    table = _closed_form(sol, k, reductive, SIGMA)
    U = tuple(sol.sigma[x].index(x) for x in range(sol.n))
    for x in range(sol.n):
        assert table[U[x]] == x
        assert U[table[x]] == x
    return table


def closed_form_T_inverse(sol, k, reductive=False):
    """Dual closed form for T inverse, through the right translation family."""
    if not all(is_permutation(row) for row in sol.tau):
        raise NotRightNondegenerate("T is only defined for right non-degenerate solutions")
    table = _closed_form(sol, k, reductive, TAU)
    T = tuple(sol.tau[x].index(x) for x in range(sol.n))
    for x in range(sol.n):
        assert table[T[x]] == x
        assert T[table[x]] == x
    return table


def _invertible_symbols(sol, symbols):
    out = []
    for s in symbols:
        try:
            action_tables(sol, (s, INVERSE_OF[s]))
        except SymbolUnavailable:
            continue
        out.append(s)
    return tuple(out)


def check_omega_identities(sol, max_m, seed=0, symbols=None):
    """Verify the general tower rewriting identities on this solution.

    peel_one       a height-m tower is the height-(m-1) tower whose base is
                   the value after the first step;
    peel_prefix    any prefix of steps folds into the base the same way;
    inverse_seed   towers repeatedly fed the inverse image of the base
                   return the base;
    inverse_shift  a step followed through an inverse-seeded argument shifts
                   the whole tower down by one;
    drop_base      on a level-k permutational solution, a height-(k+1) tower
                   forgets both its base and its first argument.

    These hold for every solution (drop_base for permutational levels only),
    so any reported failure is an implementation bug, not a property of the
    input.  symbols restricts the tower alphabet; by default every symbol the
    solution supports is used.  Returns a dict of per-identity results with
    checked counts and failure witnesses.
    """
    n = sol.n
    carrier = tuple(range(n))
    usable = available_symbols(sol) if symbols is None else tuple(symbols)
    invertible = _invertible_symbols(sol, usable)
    # only pair a symbol with its inverse when both sit in the alphabet
    invertible = tuple(s for s in invertible if INVERSE_OF[s] in usable)
    tables = action_tables(sol, set(usable) | {INVERSE_OF[s] for s in invertible})
    report = {"seed": seed}

    def run(name, dims, predicate):
        checked = 0
        failures = []
        total = prod(len(d) for d in dims)
        for case in _cases(seed, *dims):
            checked += 1
            if not predicate(*case):
                failures.append(case)
        report[name] = {
            "checked": checked,
            "mode": "exhaustive" if total <= EXHAUSTIVE_LIMIT else "sampled",
            "failures": failures,
        }

    for m in range(1, max_m + 1):
        words = _WordSpace(usable, m)
        zspace = _WordSpace(carrier, m)

        run(
            f"peel_one_m{m}",
            (words, carrier, zspace),
            lambda word, x, zs: _eval(tables, word, x, zs)
            == _eval(tables, word[1:], tables[word[0]][x][zs[0]], zs[1:]),
        )
        run(
            f"peel_prefix_m{m}",
            (words, range(m + 1), carrier, zspace),
            lambda word, j, x, zs: _eval(tables, word, x, zs)
            == _eval(tables, word[j:], _eval(tables, word[:j], x, zs[:j]), zs[j:]),
        )
        run(
            f"inverse_seed_m{m}",
            (invertible, carrier),
            lambda g, x: _eval(
                tables, (g,) * m, x, (tables[INVERSE_OF[g]][x][x],) * m
            ) == x,
        )
        tail = _WordSpace(usable, m - 1)
        ztail = _WordSpace(carrier, m - 1)
        run(
            f"inverse_shift_m{m}",
            (invertible, tail, carrier, carrier, ztail),
            lambda g, rest, x, z1, zs: _eval(
                tables, (g,) + rest, x, (tables[INVERSE_OF[g]][x][z1],) + zs
            ) == _eval(tables, rest, z1, zs),
        )

    perm_level = None
    for k in range(0, max_m):
        ok, _ = is_k_permutational(sol, k, seed=seed)
        if ok:
            perm_level = k
            break
    report["permutational_level_bound"] = perm_level
    if perm_level is not None:
        for k in range(perm_level, max_m):
            words = _WordSpace(DEFAULT_ALPHABET, k + 1)
            zspace = _WordSpace(carrier, k + 1)
            run(
                f"drop_base_k{k}",
                (words, carrier, carrier, zspace),
                lambda word, x, y, zs: _eval(tables, word, x, zs)
                == _eval(tables, word[1:], y, zs[1:]),
            )
    return report


def check_reductive_inverse_start(sol, k, seed=0):
    """Derived identity of k-reductive solutions: replacing the first step by
    the inverse of any first family still collapses to the height-(k-1) tower.
    Needs non-degeneracy to evaluate the inverse families."""
    tables = action_tables(sol, (SIGMA, TAU, SIGMA_INV, TAU_INV))
    carrier = tuple(range(sol.n))
    words = _WordSpace(DEFAULT_ALPHABET, k)
    zspace = _WordSpace(carrier, k)
    failures = []
    for word, x, zs in _cases(seed, words, carrier, zspace):
        lhs = _eval(tables, (INVERSE_OF[word[0]],) + word[1:], x, zs)
        rhs = _eval(tables, word[1:], zs[0], zs[1:])
        if lhs != rhs:
            failures.append((word, x, zs))
    return failures

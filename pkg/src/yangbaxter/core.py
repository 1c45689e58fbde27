"""Finite set-theoretic solutions of the braid relation as dense integer tables.

A candidate solution on the carrier {0, ..., n-1} is a pair of n x n tables:
``sigma[x][y]`` is the image of y under the left translation by x and
``tau[y][x]`` is the image of x under the right translation by y (both tables
are indexed acting-subscript-first).  The induced pair map is

    r(x, y) = (sigma[x][y], tau[y][x])

and the braid relation compares the two triple compositions of r on X^3.
"""

from dataclasses import dataclass
from itertools import permutations, product

from .errors import MalformedTable, NotBijective, SizeMismatch, SizeTooLarge

# Exhaustive relabeling is the canonicalization strategy, so cap the carrier.
CANONICAL_SIZE_CAP = 8


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


class FiniteSolution:
    """Immutable table pair; hashable, so usable as a dict key or set member."""

    def __init__(self, sigma, tau):
        n = len(sigma)
        if n == 0:
            raise MalformedTable("carrier must be nonempty")
        self.n = n
        self.sigma = _as_table(sigma, n, "sigma")
        self.tau = _as_table(tau, n, "tau")

    def r(self, x, y):
        return self.sigma[x][y], self.tau[y][x]

    def __eq__(self, other):
        return (
            isinstance(other, FiniteSolution)
            and self.sigma == other.sigma
            and self.tau == other.tau
        )

    def __hash__(self):
        return hash((self.sigma, self.tau))

    def __repr__(self):
        return f"FiniteSolution(sigma={list(map(list, self.sigma))}, tau={list(map(list, self.tau))})"


@dataclass(frozen=True)
class PropertyReport:
    """Elementary property flags plus a replayable witness for each false flag."""

    braid_ok: bool
    left_nondegenerate: bool
    right_nondegenerate: bool
    nondegenerate: bool
    bijective: bool
    involutive: bool
    square_free: bool
    witnesses: dict

    def as_dict(self):
        d = {
            "braid_ok": self.braid_ok,
            "left_nondegenerate": self.left_nondegenerate,
            "right_nondegenerate": self.right_nondegenerate,
            "nondegenerate": self.nondegenerate,
            "bijective": self.bijective,
            "involutive": self.involutive,
            "square_free": self.square_free,
        }
        d["witnesses"] = {k: list(v) if isinstance(v, tuple) else v for k, v in self.witnesses.items()}
        return d


def is_permutation(row):
    return len(set(row)) == len(row)


def perm_inverse(row):
    inv = [0] * len(row)
    for i, v in enumerate(row):
        inv[v] = i
    return tuple(inv)


def row_inverses(table):
    return tuple(perm_inverse(row) for row in table)


def left_nondegenerate(sol):
    return all(is_permutation(row) for row in sol.sigma)


def right_nondegenerate(sol):
    return all(is_permutation(row) for row in sol.tau)


def _braid_sides(sol, x, y, z):
    r = sol.r
    # composition is right-to-left: the innermost map acts first
    u, v = r(y, z)
    p, q = r(x, u)
    s, w = r(q, v)
    lhs = (p, s, w)
    a, b = r(x, y)
    c, d = r(b, z)
    e, f = r(a, c)
    rhs = (e, f, d)
    return lhs, rhs


def _component_identities(sol, x, y, z):
    """The three per-triple identities that, together, restate the braid relation."""
    s, t = sol.sigma, sol.tau
    c1 = s[x][s[y][z]] == s[s[x][y]][s[t[y][x]][z]]
    c2 = t[s[t[y][x]][z]][s[x][y]] == s[t[s[y][z]][x]][t[z][y]]
    c3 = t[z][t[y][x]] == t[t[z][y]][t[s[y][z]][x]]
    return c1 and c2 and c3


def validate_braid(sol):
    """All triples (x, y, z) where the two sides of the braid relation differ.

    The direct triple-composition route and the component-identity route are
    both evaluated; they must agree on every triple, which guards the
    implementation against transcription errors in either form.
    """
    n = sol.n
    violations = []
    for x, y, z in product(range(n), repeat=3):
        lhs, rhs = _braid_sides(sol, x, y, z)
        direct_bad = lhs != rhs
        component_bad = not _component_identities(sol, x, y, z)
        assert direct_bad == component_bad, (x, y, z)
        if direct_bad:
            violations.append((x, y, z))
    return violations


def _row_collision(row, subscript):
    seen = {}
    for y, v in enumerate(row):
        if v in seen:
            return (subscript, seen[v], y)
        seen[v] = y
    return None


def properties(sol):
    """Compute every elementary flag by direct definition, with witnesses."""
    n = sol.n
    witnesses = {}

    violations = validate_braid(sol)
    braid_ok = not violations
    if violations:
        witnesses["braid_ok"] = violations[0]

    left = True
    for x in range(n):
        w = _row_collision(sol.sigma[x], x)
        if w is not None:
            left = False
            witnesses["left_nondegenerate"] = w
            break
    right = True
    for y in range(n):
        w = _row_collision(sol.tau[y], y)
        if w is not None:
            right = False
            witnesses["right_nondegenerate"] = w
            break
    nondeg = left and right
    if not nondeg:
        witnesses["nondegenerate"] = witnesses.get(
            "left_nondegenerate", witnesses.get("right_nondegenerate")
        )

    bijective = True
    image_of = {}
    for x, y in product(range(n), repeat=2):
        im = sol.r(x, y)
        if im in image_of:
            bijective = False
            witnesses["bijective"] = (image_of[im], (x, y))
            break
        image_of[im] = (x, y)

    involutive = True
    for x, y in product(range(n), repeat=2):
        u, v = sol.r(x, y)
        if sol.r(u, v) != (x, y):
            involutive = False
            witnesses["involutive"] = (x, y)
            break

    square_free = True
    for x in range(n):
        if sol.r(x, x) != (x, x):
            square_free = False
            witnesses["square_free"] = (x,)
            break

    return PropertyReport(
        braid_ok=braid_ok,
        left_nondegenerate=left,
        right_nondegenerate=right,
        nondegenerate=nondeg,
        bijective=bijective,
        involutive=involutive,
        square_free=square_free,
        witnesses=witnesses,
    )


def invert(sol):
    """The component tables of the inverse pair map.

    Returns the solution (sigma_hat, tau_hat) with
    r_inverse(u, v) = (sigma_hat[u][v], tau_hat[v][u]).  Raises NotBijective
    with a colliding pair of inputs when the pair map is not injective.
    """
    n = sol.n
    preimage = {}
    for x, y in product(range(n), repeat=2):
        im = sol.r(x, y)
        if im in preimage:
            raise NotBijective(
                f"pair map is not injective: {preimage[im]} and {(x, y)} share image {im}",
                witness=(preimage[im], (x, y)),
            )
        preimage[im] = (x, y)

    sighat = [[None] * n for _ in range(n)]
    tauhat = [[None] * n for _ in range(n)]
    for (u, v), (x, y) in preimage.items():
        sighat[u][v] = x
        tauhat[v][u] = y
    inv = FiniteSolution(sighat, tauhat)

    # executable postconditions: r and its inverse cancel in both orders
    s, t = sol.sigma, sol.tau
    hs, ht = inv.sigma, inv.tau
    for x, y in product(range(n), repeat=2):
        assert s[hs[x][y]][ht[y][x]] == x
        assert t[ht[y][x]][hs[x][y]] == y
        assert hs[s[x][y]][t[y][x]] == x
        assert ht[t[y][x]][s[x][y]] == y
    if left_nondegenerate(sol):
        # for left non-degenerate bijective solutions the inverse of each
        # sigma_hat row is expressible through sigma and tau alone
        sig_inv = row_inverses(sol.sigma)
        hs_inv = row_inverses(hs)
        for x, y in product(range(n), repeat=2):
            assert hs_inv[x][y] == t[sig_inv[y][x]][y]
    assert not validate_braid(inv)
    return inv


def relabel(sol, pi):
    """Transport the tables along the carrier bijection pi."""
    n = sol.n
    pinv = perm_inverse(pi)
    sigma = [[pi[sol.sigma[pinv[i]][pinv[j]]] for j in range(n)] for i in range(n)]
    tau = [[pi[sol.tau[pinv[i]][pinv[j]]] for j in range(n)] for i in range(n)]
    return FiniteSolution(sigma, tau)


def is_isomorphic(a, b):
    """A relabeling carrying a onto b, or None if none exists."""
    if a.n != b.n:
        raise SizeMismatch(f"carrier sizes differ: {a.n} vs {b.n}")
    for pi in permutations(range(a.n)):
        if relabel(a, pi) == b:
            return pi
    return None


def canonical_form(sol):
    """Lexicographically minimal relabeling; identical across an isomorphism class."""
    if sol.n > CANONICAL_SIZE_CAP:
        raise SizeTooLarge(f"canonical form capped at n <= {CANONICAL_SIZE_CAP}")
    best = None
    for pi in permutations(range(sol.n)):
        cand = relabel(sol, pi)
        key = (cand.sigma, cand.tau)
        if best is None or key < best_key:
            best, best_key = cand, key
    return best

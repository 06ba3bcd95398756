"""Strongly-regular verification of the midpoint graph.

The shared-vertex relation on midpoints is the line graph of K_n (the
triangular / Johnson graph J(n,2)).  All checks here run over the
integers: the A^2 = kI + lambda A + mu (J-I-A) identity exactly, and
eigenvalue multiplicities as v - rank(A - theta I) over the rationals.
Mod-p statements (the eigenvalue collapse) are derived afterwards.
"""

from fractions import Fraction
from math import comb

from .geometry import dist2


class TooSmall(ValueError):
    pass


class BadDistanceValue(ValueError):
    pass


class Graph:
    """Simple undirected graph as a symmetric 0/1 matrix, zero diagonal."""

    def __init__(self, adjacency):
        self.adjacency = [list(row) for row in adjacency]
        self.n_vertices = len(self.adjacency)
        for i, row in enumerate(self.adjacency):
            if len(row) != self.n_vertices or row[i] != 0:
                raise ValueError("adjacency must be square with zero diagonal")
            for j, x in enumerate(row):
                if x not in (0, 1) or x != self.adjacency[j][i]:
                    raise ValueError("adjacency must be symmetric 0/1")

    def degrees(self):
        return [sum(row) for row in self.adjacency]

    def edge_count(self):
        return sum(self.degrees()) // 2


class SrgParams:
    """(v, k, lambda, mu) plus the claimed integer spectrum."""

    def __init__(self, v, k, lam, mu, eigenvalues):
        self.v = v
        self.k = k
        self.lam = lam
        self.mu = mu
        self.eigenvalues = list(eigenvalues)  # [(value, multiplicity)]


def midpoint_graph(mids, delta):
    """Graph on the midpoints with an edge exactly at distance delta/4
    (the shared-vertex relation); delta/2 pairs are non-edges, anything
    else is an error."""
    f = mids.field
    inv4 = f.inv(f.coerce(4))
    inv2 = f.inv(f.coerce(2))
    d4 = f.mul(delta, inv4)
    d2 = f.mul(delta, inv2)
    n = len(mids)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d = dist2(f, mids.points[i], mids.points[j])
            if d == d4:
                adj[i][j] = adj[j][i] = 1
            elif d != d2:
                raise BadDistanceValue(
                    "midpoint pair (%d, %d) at unexpected distance %r"
                    % (i, j, f.serialize(d)))
    return Graph(adj)


def expected_params(n):
    """SRG data of the triangular graph on C(n,2) vertices."""
    if n < 4:
        raise TooSmall("mu is vacuous below n = 4")
    return SrgParams(
        v=comb(n, 2),
        k=2 * (n - 2),
        lam=n - 2,
        mu=4,
        eigenvalues=[(2 * (n - 2), 1), (n - 4, n - 1), (-2, n * (n - 3) // 2)],
    )


def _rational_rank(rows):
    a = [[Fraction(x) for x in row] for row in rows]
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    r = 0
    for c in range(n_cols):
        pivot = None
        for i in range(r, n_rows):
            if a[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(r + 1, n_rows):
            if a[i][c]:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == n_rows:
            break
    return r


def srg_check(g, params):
    """Verify the SRG identity and the claimed spectrum, exactly.

    Returns a report dict with ok=True, or ok=False plus the first
    violated fact.
    """
    v = g.n_vertices
    report = {"ok": True, "v": v, "k": params.k, "lambda": params.lam,
              "mu": params.mu, "eigenvalues": list(params.eigenvalues)}

    def fail(reason):
        report["ok"] = False
        report["failure"] = reason
        return report

    if v != params.v:
        return fail("vertex count %d != v = %d" % (v, params.v))
    degs = g.degrees()
    for i, d in enumerate(degs):
        if d != params.k:
            return fail("vertex %d has degree %d, expected %d" % (i, d, params.k))
    a = g.adjacency
    # A^2 = k I + lambda A + mu (J - I - A), entrywise over Z
    for i in range(v):
        for j in range(v):
            a2 = sum(a[i][t] * a[t][j] for t in range(v))
            if i == j:
                want = params.k
            elif a[i][j]:
                want = params.lam
            else:
                want = params.mu
            if a2 != want:
                return fail("A^2 entry (%d, %d) is %d, expected %d"
                            % (i, j, a2, want))
    total_mult = 0
    for theta, mult in params.eigenvalues:
        shifted = [[a[i][j] - (theta if i == j else 0) for j in range(v)]
                   for i in range(v)]
        got = v - _rational_rank(shifted)
        if got != mult:
            return fail("eigenvalue %d has multiplicity %d, expected %d"
                        % (theta, got, mult))
        total_mult += mult
    if total_mult != v:
        return fail("multiplicities sum to %d, not v = %d" % (total_mult, v))
    return report


def eigen_collapse(n, p):
    """Whether the top two integer eigenvalues 2(n-2) and n-4 coincide
    mod p (exactly when p | n) while -2 stays distinct from n-4
    (exactly when p does not divide n-2)."""
    if n < 4:
        raise TooSmall("needs n >= 4")
    top = 2 * (n - 2)
    mid = n - 4
    low = -2
    return {
        "n": n,
        "p": p,
        "top_mod_p": top % p,
        "mid_mod_p": mid % p,
        "low_mod_p": low % p,
        "collapse": top % p == mid % p,
        "collapse_iff_p_divides_n": (top % p == mid % p) == (n % p == 0),
        "third_distinct": mid % p != low % p,
        "third_distinct_iff": (mid % p != low % p) == ((n - 2) % p != 0),
    }

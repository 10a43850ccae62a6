"""Immutable simple undirected graphs and the primitives everything else builds on.

Vertices are 0-based ints. All density quantities are exact fractions.Fraction
values; floating point never enters decision logic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import GraphInputError, PreconditionError


class Graph:
    """Simple undirected graph with sorted adjacency and bitmask neighborhoods."""

    __slots__ = ("n", "adj", "m", "masks", "_hash")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...]):
        self.n = n
        self.adj = adj
        self.m = sum(len(a) for a in adj) // 2
        masks = []
        for a in adj:
            mask = 0
            for v in a:
                mask |= 1 << v
            masks.append(mask)
        self.masks = tuple(masks)
        self._hash = None

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def vertices(self) -> range:
        return range(self.n)

    def edges(self):
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def add_pairs(self, pairs) -> "Graph":
        """Graph plus the given vertex pairs as edges (existing edges kept)."""
        extra = [set() for _ in range(self.n)]
        for u, v in pairs:
            if u == v:
                raise GraphInputError(f"pair ({u},{v}) is a self-loop")
            if not self.has_edge(u, v):
                extra[u].add(v)
                extra[v].add(u)
        adj = tuple(
            tuple(sorted(set(self.adj[u]) | extra[u])) for u in range(self.n)
        )
        return Graph(self.n, adj)

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(edges, n: int) -> Graph:
    """Build a graph from an edge list; duplicates collapse, self-loops reject."""
    sets: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"vertex id out of range in edge ({u},{v}), n={n}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        sets[u].add(v)
        sets[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in sets))


# ---------------------------------------------------------------------------
# density quantities


def eg_bound(g: Graph) -> Fraction:
    """Erdos-Gallai bound 2m/(n-1); exact."""
    if g.n < 2:
        raise PreconditionError("eg_bound needs at least two vertices")
    return Fraction(2 * g.m, g.n - 1)


def avg_degree_of_set(g: Graph, xs) -> Fraction:
    """Mean of d_G(v) over v in xs, degrees taken in g."""
    xs = list(xs)
    if not xs:
        raise PreconditionError("average degree of the empty set is undefined")
    return Fraction(sum(g.degree(v) for v in xs), len(xs))


def avg_degree(g: Graph) -> Fraction:
    """ad(G) = 2m/n."""
    if g.n == 0:
        raise PreconditionError("average degree of the empty graph is undefined")
    return Fraction(2 * g.m, g.n)


def ceil_frac(x: Fraction | int) -> int:
    return math.ceil(x)


# ---------------------------------------------------------------------------
# subsets, connectivity, blocks


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Relabelled induced subgraph plus the sorted original-id map."""
    vs = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(vs)}
    adj = tuple(
        tuple(index[w] for w in g.adj[v] if w in index) for v in vs
    )
    return Graph(len(vs), adj), vs


def subset_components(g: Graph, vertices) -> list[list[int]]:
    """Connected components of g restricted to `vertices`, as sorted lists."""
    alive = 0
    for v in vertices:
        alive |= 1 << v
    comps = []
    while alive:
        start = (alive & -alive).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= g.masks[v]
            frontier = nxt & alive & ~comp
            comp |= frontier
        comps.append(_mask_to_list(comp))
        alive &= ~comp
    return comps


def _mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        out.append(v)
        mask &= mask - 1
    return out


def is_connected(g: Graph, vertices=None) -> bool:
    vs = list(g.vertices()) if vertices is None else sorted(set(vertices))
    if not vs:
        return True
    return len(subset_components(g, vs)) == 1


def is_biconnected(g: Graph) -> bool:
    """2-connected per the standard definition: n > 2 and no cut vertex."""
    if g.n <= 2:
        return False
    if not is_connected(g):
        return False
    _, cuts = blocks_and_cut_vertices(g)
    return not cuts


def blocks_and_cut_vertices(g: Graph) -> tuple[list[frozenset[int]], set[int]]:
    """Biconnected decomposition of a connected graph.

    Returns the blocks as vertex sets (sorted deterministically) and the set
    of cut vertices. Iterative Hopcroft-Tarjan.
    """
    if g.n == 0:
        raise PreconditionError("empty graph")
    if not is_connected(g):
        raise PreconditionError("graph is disconnected")
    if g.n == 1:
        return [frozenset([0])], set()

    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    cuts: set[int] = set()
    blocks: list[frozenset[int]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0

    root = 0
    disc[root] = low[root] = timer
    timer += 1
    stack = [(root, iter(g.adj[root]))]
    root_children = 0
    while stack:
        v, it = stack[-1]
        w = next(it, None)
        if w is not None:
            if disc[w] == -1:
                parent[w] = v
                disc[w] = low[w] = timer
                timer += 1
                if v == root:
                    root_children += 1
                edge_stack.append((v, w))
                stack.append((w, iter(g.adj[w])))
            elif w != parent[v] and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
            continue
        stack.pop()
        if not stack:
            break
        u = stack[-1][0]
        low[u] = min(low[u], low[v])
        if low[v] >= disc[u]:
            members: set[int] = set()
            while True:
                e = edge_stack.pop()
                members.update(e)
                if e == (u, v):
                    break
            blocks.append(frozenset(members))
            if u != root:
                cuts.add(u)
    if root_children > 1:
        cuts.add(root)

    blocks.sort(key=lambda b: tuple(sorted(b)))
    return blocks, cuts


def two_separators(g: Graph) -> list[tuple[int, int]]:
    """All unordered pairs {x,y} whose removal disconnects a 2-connected g."""
    if not is_biconnected(g):
        raise PreconditionError("two_separators needs a 2-connected graph")
    # Chartrand-Harary: min degree >= (n+1)/2 forces 3-connectivity.
    if g.n > 3 and 2 * g.min_degree() >= g.n + 1:
        return []
    full = (1 << g.n) - 1
    out = []
    for x in range(g.n):
        for y in range(x + 1, g.n):
            alive = full & ~(1 << x) & ~(1 << y)
            if alive == 0:
                continue
            start = (alive & -alive).bit_length() - 1
            comp = 1 << start
            frontier = comp
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    v = (f & -f).bit_length() - 1
                    f &= f - 1
                    nxt |= g.masks[v]
                frontier = nxt & alive & ~comp
                comp |= frontier
            if comp != alive:
                out.append((x, y))
    return out


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class CycleCertificate:
    """Vertex sequence claimed to be a simple cycle of some minimum length."""

    vertices: tuple[int, ...]
    claimed_min_length: int = 3

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class PathCertificate:
    """Vertex sequence claimed to be a simple path; length = edges = len-1."""

    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.vertices[0], self.vertices[-1])

    @property
    def internal(self) -> tuple[int, ...]:
        return self.vertices[1:-1]


@dataclass(frozen=True)
class VerifyOutcome:
    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


def verify_cycle_certificate(g: Graph, cert: CycleCertificate) -> VerifyOutcome:
    """Check a cycle certificate; the reason names the first violated invariant."""
    vs = cert.vertices
    for v in vs:
        if not (0 <= v < g.n):
            return VerifyOutcome(False, f"vertex {v} out of range")
    if len(set(vs)) != len(vs):
        return VerifyOutcome(False, "repeated vertex")
    if len(vs) < 3:
        return VerifyOutcome(False, "cycle has fewer than 3 vertices")
    for i, u in enumerate(vs):
        v = vs[(i + 1) % len(vs)]
        if not g.has_edge(u, v):
            return VerifyOutcome(False, f"missing edge ({u},{v})")
    if len(vs) < cert.claimed_min_length:
        return VerifyOutcome(
            False,
            f"length {len(vs)} below claimed minimum {cert.claimed_min_length}",
        )
    return VerifyOutcome(True)


def verify_path_certificate(g: Graph, cert: PathCertificate) -> VerifyOutcome:
    vs = cert.vertices
    for v in vs:
        if not (0 <= v < g.n):
            return VerifyOutcome(False, f"vertex {v} out of range")
    if len(set(vs)) != len(vs):
        return VerifyOutcome(False, "repeated vertex")
    if len(vs) < 2:
        return VerifyOutcome(False, "path has fewer than 2 vertices")
    for u, v in zip(vs, vs[1:]):
        if not g.has_edge(u, v):
            return VerifyOutcome(False, f"missing edge ({u},{v})")
    return VerifyOutcome(True)


# ---------------------------------------------------------------------------
# pair sets (potentially cyclable)


def is_potentially_cyclable(pairs) -> bool:
    """True iff the pair graph is a linear forest (no duplicate pairs either)."""
    seen = set()
    deg: dict[int, int] = {}
    parent: dict[int, int] = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in pairs:
        if u == v:
            return False
        key = (min(u, v), max(u, v))
        if key in seen:
            return False
        seen.add(key)
        for x in (u, v):
            parent.setdefault(x, x)
            deg[x] = deg.get(x, 0) + 1
            if deg[x] > 2:
                return False
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def normalize_pair_chain(pairs) -> list[tuple[int, int]]:
    """Order a potentially cyclable pair set so shared endpoints are consecutive.

    Returns oriented pairs (x_i, y_i) with y_{i-1} == x_i exactly when two
    pairs share a vertex; components are concatenated lowest end first.
    """
    pairs = [tuple(p) for p in pairs]
    if not is_potentially_cyclable(pairs):
        raise PreconditionError("pair set is not potentially cyclable")
    adjacency: dict[int, list[int]] = {}
    for u, v in pairs:
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    ends = sorted(v for v, ns in adjacency.items() if len(ns) == 1)
    done = set()
    chain: list[tuple[int, int]] = []
    for start in ends:
        if start in done:
            continue
        prev, cur = None, start
        while True:
            done.add(cur)
            nxts = [w for w in adjacency[cur] if w != prev]
            if not nxts:
                break
            nxt = nxts[0]
            chain.append((cur, nxt))
            prev, cur = cur, nxt
    return chain

"""From (G, k) to a long cycle, a small dense core, or a bipartite-dense core.

Pipeline: densest induced subgraph, exhaustive reduction, then either a
two-separator glue cycle, a Dirac cycle (k' <= 0), or iterated calls to the
cycle/cover engine. The engine honors the contract longer-cycle / vertex
cover of size <= delta+2k / Hamiltonian, with an explicit Incomplete outcome
when its search budget runs out; outcomes are always verified, so Incomplete
signals incompleteness, never incorrectness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cyclesearch, longpaths
from .density import mad_with_witness
from .errors import ConstructionFailure, EngineIncomplete, PreconditionError
from .graph import (
    CycleCertificate,
    Graph,
    PathCertificate,
    avg_degree,
    blocks_and_cut_vertices,
    ceil_frac,
    induced_subgraph,
    is_biconnected,
    subset_components,
    two_separators,
    verify_cycle_certificate,
    verify_path_certificate,
)
from .reduction import ReductionTrace, reduce_exhaustive


# ---------------------------------------------------------------------------
# witness types


@dataclass(frozen=True)
class FoundCycle:
    cycle: CycleCertificate


@dataclass(frozen=True)
class SmallDense:
    vertices: frozenset[int]


@dataclass(frozen=True)
class BipartiteDense:
    vertices: frozenset[int]
    A: frozenset[int]
    B: frozenset[int]


DenseWitness = FoundCycle | SmallDense | BipartiteDense


@dataclass(frozen=True)
class LongerCycle:
    cycle: CycleCertificate


@dataclass(frozen=True)
class VertexCover:
    vertices: frozenset[int]


@dataclass(frozen=True)
class Hamiltonian:
    pass


@dataclass(frozen=True)
class Incomplete:
    reason: str


EngineOutcome = LongerCycle | VertexCover | Hamiltonian | Incomplete


# ---------------------------------------------------------------------------
# Dirac decomposition verifier


def _locate_arc(cycle: list[int], path: list[int]) -> tuple[int, int] | None:
    """Start index and direction of `path` as a contiguous arc of `cycle`."""
    n = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    if any(v not in pos for v in path):
        return None
    i = pos[path[0]]
    if all(cycle[(i + d) % n] == path[d] for d in range(len(path))):
        return i, 1
    if all(cycle[(i - d) % n] == path[d] for d in range(len(path))):
        return i, -1
    return None


def check_dirac_decomposition(
    g: Graph,
    C: CycleCertificate,
    P1: PathCertificate,
    P2: PathCertificate,
) -> tuple[bool, str | None]:
    """Literal clause-by-clause check of the Dirac decomposition definition.

    Returns (ok, first violated clause). Malformed certificates raise.
    """
    if not is_biconnected(g):
        raise PreconditionError("host graph must be 2-connected")
    chk = verify_cycle_certificate(g, C)
    if not chk:
        raise PreconditionError(f"C is not a cycle: {chk.reason}")
    delta = g.min_degree()
    if len(C) < 2 * delta:
        raise PreconditionError("C must have length at least 2*delta")
    for P in (P1, P2):
        chk = verify_path_certificate(g, P)
        if not chk:
            raise PreconditionError(f"P is not a path: {chk.reason}")

    v1, v2 = set(P1.vertices), set(P2.vertices)
    if v1 & v2:
        return False, "disjoint paths"

    cyc = list(C.vertices)
    n = len(cyc)
    loc1 = _locate_arc(cyc, list(P1.vertices))
    if loc1 is None:
        return False, "P1 is not an arc of C"
    # orient the cycle along P1
    i, d = loc1
    if d < 0:
        cyc = cyc[::-1]
        i = len(cyc) - 1 - i
    cyc = cyc[i:] + cyc[:i]
    loc2 = _locate_arc(cyc, list(P2.vertices))
    if loc2 is None:
        return False, "P2 is not an arc of C"
    j, d2 = loc2
    # the two connector arcs P' (after P1) and P'' (after P2)
    a1 = len(P1.vertices) - 1  # P1 occupies cyc[0..a1]
    if d2 < 0:
        j = (j - (len(P2.vertices) - 1)) % n
    if j < a1 + 1:
        return False, "P2 overlaps the arc of P1"
    b1 = j  # P2 occupies cyc[b1..b2]
    b2 = j + len(P2.vertices) - 1
    if b2 >= n:
        return False, "P2 overlaps the arc of P1"
    prime_edges = b1 - a1  # arc cyc[a1..b1]
    second_edges = n - b2  # arc cyc[b2..0]
    if prime_edges < delta - 2 or second_edges < delta - 2:
        return False, "connector arc shorter than delta-2 edges"
    interior_prime = frozenset(cyc[a1 + 1 : b1])
    interior_second = frozenset(cyc[b2 + 1 :])

    pv = v1 | v2
    rest = [v for v in g.vertices() if v not in pv]
    comps = [frozenset(c) for c in subset_components(g, rest)] if rest else []

    for comp in sorted(comps, key=min):
        if not _component_clause_ok(g, comp, P1, P2):
            return False, f"component {sorted(comp)} fails clause (ii)"

    for interior, name in ((interior_prime, "P'"), (interior_second, "P''")):
        matching = [c for c in comps if c == interior]
        if len(matching) != 1:
            return False, f"clause (iii): no component equals the interior of {name}"
    return True, None


def _component_clause_ok(g, comp, P1, P2) -> bool:
    sub, _ = induced_subgraph(g, comp)
    two_conn = is_biconnected(sub)
    if two_conn:
        m1 = _matching_size(g, comp, set(P1.vertices))
        m2 = _matching_size(g, comp, set(P2.vertices))
        if m1 == 1 and m2 == 1:
            return True
    if not two_conn and len(comp) >= 3:
        inner = _leaf_block_inner_vertices(g, comp)
        n1 = {u for u in P1.vertices if any(g.has_edge(u, w) for w in comp)}
        n2 = {u for u in P2.vertices if any(g.has_edge(u, w) for w in comp)}
        if len(n1) == 1 and not any(
            g.has_edge(v, u) for v in inner for u in P2.vertices
        ):
            return True
        if len(n2) == 1 and not any(
            g.has_edge(v, u) for v in inner for u in P1.vertices
        ):
            return True
    return False


def _leaf_block_inner_vertices(g, comp) -> set[int]:
    sub, ids = induced_subgraph(g, comp)
    blocks, cuts = blocks_and_cut_vertices(sub)
    inner: set[int] = set()
    for block in blocks:
        block_cuts = block & cuts
        if len(block_cuts) == 1:  # leaf block
            inner |= {ids[v] for v in block - block_cuts}
    return inner


def _matching_size(g: Graph, left, right) -> int:
    """Maximum matching between disjoint vertex sets using g's edges."""
    left = sorted(left)
    right_idx = {v: i for i, v in enumerate(sorted(right))}
    match_l: dict[int, int] = {}
    match_r: dict[int, int] = {}

    def augment(u, seen):
        for w in g.adj[u]:
            i = right_idx.get(w)
            if i is None or i in seen:
                continue
            seen.add(i)
            if i not in match_r or augment(match_r[i], seen):
                match_l[u] = i
                match_r[i] = u
                return True
        return False

    size = 0
    for u in left:
        if augment(u, set()):
            size += 1
    return size


# ---------------------------------------------------------------------------
# the cycle / cover engine


def corollary5_engine(
    h: Graph,
    k: int,
    C: CycleCertificate,
    budget: int | None = None,
    check_preconditions: bool = True,
) -> EngineOutcome:
    """Longer cycle, small vertex cover, or a Hamiltonicity report.

    Cheapest first: Hamiltonicity check, Dirac re-dispatch when 2*delta >= n,
    insertion/rotation enlargement, then a vertex cover by matching
    2-approximation with an exact bounded branch-and-bound behind it.
    """
    chk = verify_cycle_certificate(h, C)
    if not chk:
        raise PreconditionError(f"C is not a cycle of h: {chk.reason}")
    delta = h.min_degree()
    if check_preconditions:
        if not (h.n > 3 and is_biconnected(h) and not two_separators(h)):
            raise PreconditionError("engine needs a 3-connected graph")
        if not (0 < k and 24 * k <= delta):
            raise PreconditionError("engine needs 0 < k <= delta/24")
        if len(C) >= 2 * delta + k:
            raise PreconditionError("engine needs |C| < 2*delta + k")
    if budget is None:
        budget = 200 * h.n

    if len(C) == h.n:
        return Hamiltonian()

    if 2 * delta >= h.n:
        ham = longpaths.dirac_cycle(h)
        if len(ham) > len(C):
            return LongerCycle(ham)

    grown = cyclesearch.grow_cycle(h, list(C.vertices), target=len(C) + 1)
    if len(grown) > len(C):
        cert = CycleCertificate(tuple(grown), len(C) + 1)
        assert verify_cycle_certificate(h, cert)
        return LongerCycle(cert)

    found = cyclesearch.long_cycle_search_best(h, len(C) + 1, rotation_budget=budget)
    if found is not None and len(found) > len(C):
        cert = CycleCertificate(tuple(found), len(C) + 1)
        assert verify_cycle_certificate(h, cert)
        return LongerCycle(cert)

    bound = delta + 2 * k
    cover = _greedy_cover(h)
    if len(cover) <= bound:
        return VertexCover(frozenset(cover))
    cover = _bounded_min_cover(h, bound)
    if cover is not None:
        return VertexCover(frozenset(cover))
    return Incomplete(
        f"no longer cycle within budget and no vertex cover of size <= {bound}"
    )


def _greedy_cover(h: Graph) -> set[int]:
    """Max-degree greedy cover, then the endpoints of a maximal matching if smaller."""
    deg = {v: h.degree(v) for v in h.vertices()}
    uncovered = {(u, v) for u, v in h.edges()}
    incident: dict[int, set[tuple[int, int]]] = {v: set() for v in h.vertices()}
    for e in uncovered:
        incident[e[0]].add(e)
        incident[e[1]].add(e)
    greedy: set[int] = set()
    live = dict(deg)
    while uncovered:
        v = max(sorted(live), key=lambda x: live[x])
        greedy.add(v)
        for e in list(incident[v]):
            if e in uncovered:
                uncovered.remove(e)
                a = e[0] if e[1] == v else e[1]
                live[a] -= 1
        live[v] = -1
    matched: set[int] = set()
    match_cover: set[int] = set()
    for u, v in h.edges():
        if u not in matched and v not in matched:
            matched |= {u, v}
            match_cover |= {u, v}
    return greedy if len(greedy) <= len(match_cover) else match_cover


def _bounded_min_cover(h: Graph, bound: int) -> set[int] | None:
    """Exact vertex cover of size <= bound by include-v-or-its-neighbors search."""
    edges = list(h.edges())

    def lower_bound(uncov):
        matched = set()
        size = 0
        for u, v in uncov:
            if u not in matched and v not in matched:
                matched |= {u, v}
                size += 1
        return size

    best: set[int] | None = None

    def rec(chosen: set[int], uncov: list[tuple[int, int]], limit: int):
        nonlocal best
        if best is not None:
            return
        if not uncov:
            best = set(chosen)
            return
        if limit <= 0 or lower_bound(uncov) > limit:
            return
        deg: dict[int, int] = {}
        for u, v in uncov:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        v = max(sorted(deg), key=lambda x: deg[x])
        rec(chosen | {v}, [e for e in uncov if v not in e], limit - 1)
        if best is not None:
            return
        nbrs = set(h.adj[v])
        if len(nbrs) <= limit:
            rec(
                chosen | nbrs,
                [e for e in uncov if e[0] not in nbrs and e[1] not in nbrs],
                limit - len(nbrs),
            )

    rec(set(), edges, bound)
    return best


# ---------------------------------------------------------------------------
# cover refinement


@dataclass(frozen=True)
class RefinedPartition:
    ok: bool
    A: frozenset[int] = frozenset()
    B: frozenset[int] = frozenset()
    reason: str | None = None


def refine_vertex_cover_to_partition(h: Graph, X, k: int) -> RefinedPartition:
    """Split along a vertex cover: B = V \\ X, A = cover vertices with >= 2|X|
    neighbors in B; verifies the bipartite-dense degree properties."""
    X = frozenset(X)
    for u, v in h.edges():
        if u not in X and v not in X:
            raise PreconditionError(f"X is not a vertex cover: edge ({u},{v}) uncovered")
    ad = avg_degree(h)
    if Fraction(2 * len(X)) > ad + 3 * k + 3:
        return RefinedPartition(False, reason="cover too large: |X| > (ad+3k+3)/2")
    B = frozenset(h.vertices()) - X
    p = len(X)
    A = frozenset(
        v for v in X if sum(1 for w in h.adj[v] if w in B) >= 2 * p
    )
    if not A:
        return RefinedPartition(False, reason="no cover vertex has 2|X| neighbors outside")
    for v in A:
        if sum(1 for w in h.adj[v] if w in B) < 2 * len(A):
            return RefinedPartition(False, reason="A-degree bound failed")
    for v in B:
        if sum(1 for w in h.adj[v] if w in A) < len(A) - 2 * k - 2:
            return RefinedPartition(
                False, reason=f"vertex {v} has degree below |A|-2k-2 into A"
            )
    return RefinedPartition(True, A, B)


# ---------------------------------------------------------------------------
# the trichotomy


@dataclass
class FindDenseInfo:
    mad: Fraction
    trace: ReductionTrace
    core: frozenset[int]
    k_prime: int | None = None
    engine_rounds: int = 0


def find_dense(
    g: Graph,
    k: int,
    strict: bool = True,
    budget: int | None = None,
) -> tuple[DenseWitness, FindDenseInfo]:
    """The trichotomy: long cycle, small dense subgraph, or bipartite-dense pair.

    Strict mode enforces 0 < k <= mad/80 - 1 and then every emitted witness
    carries its guarantee; relaxed mode runs the same pipeline on any k >= 1.
    Certificates are verified before being returned either way.
    """
    if g.n < 2:
        raise PreconditionError("find_dense needs at least two vertices")
    if k < 1:
        raise PreconditionError("k must be positive")
    witness = mad_with_witness(g)
    mad = witness.mad
    if strict and Fraction(k) > mad / 80 - 1:
        raise PreconditionError("strict mode needs 0 < k <= mad/80 - 1")
    threshold = ceil_frac(mad) + k  # integer cycle-length target

    core, trace = reduce_exhaustive(g, witness.vertices)
    info = FindDenseInfo(mad=mad, trace=trace, core=core)
    sub, ids = induced_subgraph(g, core)
    if sub.n < 3:
        raise ConstructionFailure(
            "reduced core is too small to host cycles (graph too sparse)"
        )

    seps = two_separators(sub) if is_biconnected(sub) else []
    if seps:
        cyc = _glue_cycle(g, sub, ids, seps[0])
        if strict and len(cyc) < threshold:
            raise ConstructionFailure(
                "glue cycle shorter than mad+k despite strict preconditions"
            )
        cert = CycleCertificate(tuple(cyc), threshold if len(cyc) >= threshold else 3)
        assert verify_cycle_certificate(g, cert)
        return FoundCycle(cert), info

    delta = sub.min_degree()
    k_prime = ceil_frac(mad) + k - 2 * delta
    info.k_prime = k_prime

    if k_prime <= 0:
        dc = longpaths.dirac_cycle(sub)
        mapped = [ids[v] for v in dc.vertices]
        if len(mapped) >= threshold:
            cert = CycleCertificate(tuple(mapped), threshold)
            assert verify_cycle_certificate(g, cert)
            return FoundCycle(cert), info
        if len(mapped) != sub.n:
            raise ConstructionFailure(
                "Dirac cycle neither reaches the target nor is Hamiltonian"
            )
        _check_small_dense(g, core, mad, k)
        return SmallDense(core), info

    # k' > 0: iterate the engine from a Dirac cycle
    cyc = longpaths.dirac_cycle(sub)
    while True:
        info.engine_rounds += 1
        if len(cyc) >= 2 * delta + k_prime:
            mapped = [ids[v] for v in cyc.vertices]
            cert = CycleCertificate(tuple(mapped), threshold)
            assert verify_cycle_certificate(g, cert)
            return FoundCycle(cert), info
        outcome = corollary5_engine(
            sub, k_prime, cyc, budget=budget, check_preconditions=strict
        )
        if isinstance(outcome, LongerCycle):
            cyc = outcome.cycle
            continue
        if isinstance(outcome, Hamiltonian):
            mapped = [ids[v] for v in cyc.vertices]
            if len(mapped) >= threshold:
                cert = CycleCertificate(tuple(mapped), threshold)
                assert verify_cycle_certificate(g, cert)
                return FoundCycle(cert), info
            _check_small_dense(g, core, mad, k)
            return SmallDense(core), info
        if isinstance(outcome, VertexCover):
            refined = refine_vertex_cover_to_partition(sub, outcome.vertices, k)
            if not refined.ok:
                raise EngineIncomplete(
                    f"cover refinement failed: {refined.reason}"
                )
            A = frozenset(ids[v] for v in refined.A)
            B = frozenset(ids[v] for v in refined.B)
            if strict and Fraction(2 * len(A)) < mad - 8 * k:
                raise EngineIncomplete("refined side A smaller than mad/2 - 4k")
            return BipartiteDense(A | B, A, B), info
        raise EngineIncomplete(outcome.reason)


def _glue_cycle(g: Graph, sub: Graph, ids, sep: tuple[int, int]) -> list[int]:
    """Concatenate Fan paths through both sides of a 2-separator of the core."""
    x, y = sep
    comps = subset_components(sub, set(range(sub.n)) - {x, y})
    comps.sort(key=min)
    if len(comps) < 2:
        raise ConstructionFailure("separator does not split the core")
    sides = []
    for comp in comps[:2]:
        part = sorted(set(comp) | {x, y})
        side, side_ids = induced_subgraph(sub, part)
        sx, sy = side_ids.index(x), side_ids.index(y)
        if not side.has_edge(sx, sy):
            side = side.add_pairs([(sx, sy)])
        path = longpaths.fan_path(side, sx, sy)
        if len(path.vertices) < 3:
            raise ConstructionFailure("fan path degenerated to the virtual edge")
        sides.append([ids[side_ids[v]] for v in path.vertices])
    first, second = sides
    return first + second[-2:0:-1]


def _check_small_dense(g: Graph, core: frozenset[int], mad: Fraction, k: int) -> None:
    sub, _ = induced_subgraph(g, core)
    ad = avg_degree(sub)
    if ad < mad - 1:
        raise ConstructionFailure("small-dense witness: ad(H) < mad - 1")
    if Fraction(2 * sub.min_degree()) < ad:
        raise ConstructionFailure("small-dense witness: delta(H) < ad(H)/2")
    if not (Fraction(sub.n) < ad + k + 1):
        raise ConstructionFailure("small-dense witness: |V(H)| >= ad(H)+k+1")

"""Cycles through prescribed pairs in dense graphs.

Two constructions. In a graph whose average degree nearly matches its order,
a potentially cyclable pair set chains into a short path by jumps of length
at most five, absorbs every low-degree vertex, closes into a cycle, and
extends to a Hamiltonian cycle. In a dense bipartite graph the same chaining
respects the sides and the final cycle covers the small side exactly, giving
length 2p - s + t.

Strict mode enforces the lemmas' numeric preconditions (then success is
guaranteed); relaxed mode runs the identical construction and reports failure
honestly. No mode ever emits an unverified certificate.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConstructionFailure, PreconditionError
from .graph import (
    CycleCertificate,
    Graph,
    avg_degree,
    is_potentially_cyclable,
    normalize_pair_chain,
    verify_cycle_certificate,
)


def _first_common(g: Graph, a: int, b: int, banned: set[int]) -> int | None:
    mask = g.masks[a] & g.masks[b]
    while mask:
        v = (mask & -mask).bit_length() - 1
        if v not in banned:
            return v
        mask &= mask - 1
    return None


def _neighbors_off(g: Graph, v: int, banned: set[int]) -> list[int]:
    return [w for w in g.adj[v] if w not in banned]


def _normalize_pairs(S) -> list[tuple[int, int]]:
    out = []
    for u, v in S:
        if u == v:
            raise PreconditionError("pair with equal endpoints")
        out.append((min(u, v), max(u, v)))
    if len(set(out)) != len(out):
        raise PreconditionError("duplicate pair in S")
    return sorted(out)


def hamiltonian_through_pairs(
    h: Graph, S, k: int, mode: str = "strict"
) -> CycleCertificate:
    """Hamiltonian cycle of h+S containing every pair of S as a cycle edge.

    An empty S is replaced by the lowest edge of h, so the construction always
    has a seed pair. Raises ConstructionFailure when the (relaxed-mode) search
    cannot complete; never returns an unverified cycle.
    """
    if mode not in ("strict", "relaxed"):
        raise PreconditionError(f"unknown mode {mode!r}")
    S = _normalize_pairs(S)
    if not S:
        first = next(h.edges(), None)
        if first is None:
            raise PreconditionError("graph has no edge to substitute for empty S")
        S = [first]
    if not is_potentially_cyclable(S):
        raise PreconditionError("S is not potentially cyclable")
    d = avg_degree(h)
    if mode == "strict":
        if not (0 < k and Fraction(k) <= d / 60):
            raise PreconditionError("strict mode needs 0 < k <= ad/60")
        if not (Fraction(h.min_degree()) >= d / 2):
            raise PreconditionError("strict mode needs min degree >= ad/2")
        if not (d + k > h.n):
            raise PreconditionError("strict mode needs ad + k > n")
        if len(S) > k:
            raise PreconditionError("strict mode needs |S| <= k")

    gp = h.add_pairs(S)
    low_threshold = Fraction(4, 5) * d
    low = {v for v in h.vertices() if h.degree(v) <= low_threshold}
    chain = normalize_pair_chain(S)
    endpoints = {v for pair in chain for v in pair}

    path = [chain[0][0], chain[0][1]]
    for i in range(1, len(chain)):
        x, y = chain[i]
        prev = path[-1]
        if prev == x:
            path.append(y)
            continue
        banned = set(path) | endpoints
        if gp.has_edge(prev, x):
            path += [x, y]
            continue
        z = _first_common(gp, prev, x, banned)
        if z is not None:
            path += [z, x, y]
            continue
        wide = banned | low
        done = False
        us = _neighbors_off(gp, prev, wide)
        vs = _neighbors_off(gp, x, wide)
        for u in us:
            for v in vs:
                if u != v and gp.has_edge(u, v):
                    path += [u, v, x, y]
                    done = True
                    break
            if done:
                break
        if done:
            continue
        for u in us:
            for v in vs:
                if u == v:
                    continue
                w = _first_common(gp, u, v, banned | {u, v})
                if w is not None:
                    path += [u, w, v, x, y]
                    done = True
                    break
            if done:
                break
        if not done:
            raise ConstructionFailure(
                f"could not join pair {i} of the chain (density too low)"
            )

    # absorb every low-degree vertex at the tail end
    for z_i in sorted(low):
        if z_i in path:
            continue
        tail = path[-1]
        on = set(path)
        if gp.has_edge(tail, z_i):
            path.append(z_i)
            continue
        v = _first_common(gp, tail, z_i, on)
        if v is not None:
            path += [v, z_i]
            continue
        wide = on | low
        done = False
        us = _neighbors_off(gp, tail, wide)
        vs = _neighbors_off(gp, z_i, wide)
        for u in us:
            for v in vs:
                if u != v and gp.has_edge(u, v):
                    path += [u, v, z_i]
                    done = True
                    break
            if done:
                break
        if not done:
            for u in us:
                for v in vs:
                    if u == v:
                        continue
                    w = _first_common(gp, u, v, on | {u, v})
                    if w is not None:
                        path += [u, w, v, z_i]
                        done = True
                        break
                if done:
                    break
        if not done:
            raise ConstructionFailure(f"could not absorb low-degree vertex {z_i}")

    cycle = _close_path(gp, path)
    cycle = _extend_hamiltonian(gp, cycle, set(S), d)
    cert = CycleCertificate(tuple(cycle), gp.n)
    check = verify_cycle_certificate(gp, cert)
    if not check:
        raise ConstructionFailure(f"internal: cycle failed verification: {check.reason}")
    _check_pairs_on_cycle(cycle, S)
    return cert


def _close_path(gp: Graph, path: list[int]) -> list[int]:
    head, tail = path[0], path[-1]
    on = set(path)
    if len(path) >= 3 and gp.has_edge(head, tail):
        return list(path)
    v = _first_common(gp, head, tail, on)
    if v is not None:
        return path + [v]
    us = _neighbors_off(gp, head, on)
    vs = _neighbors_off(gp, tail, on)
    for u in us:
        for v in vs:
            if u != v and gp.has_edge(u, v):
                return path + [v, u]
    for u in us:
        for v in vs:
            if u == v:
                continue
            w = _first_common(gp, u, v, on | {u, v})
            if w is not None:
                return path + [v, w, u]
    raise ConstructionFailure("could not close the pair chain into a cycle")


def _cycle_edges_not_in(cycle: list[int], skip: set[tuple[int, int]]):
    n = len(cycle)
    for i in range(n):
        x, y = cycle[i], cycle[(i + 1) % n]
        if (min(x, y), max(x, y)) not in skip:
            yield i, x, y


def _extend_hamiltonian(
    gp: Graph, cycle: list[int], S: set[tuple[int, int]], d: Fraction
) -> list[int]:
    while len(cycle) < gp.n:
        on = set(cycle)
        move = None
        case1_first = Fraction(len(cycle)) <= d / 2
        for attempt in (0, 1):
            do_case1 = case1_first if attempt == 0 else not case1_first
            if do_case1:
                for i, x, y in _cycle_edges_not_in(cycle, S):
                    z = _first_common(gp, x, y, on)
                    if z is not None:
                        move = (i, [z])
                        break
                    us = _neighbors_off(gp, x, on)
                    vs = _neighbors_off(gp, y, on)
                    got = None
                    for u in us:
                        for v in vs:
                            if u != v and gp.has_edge(u, v):
                                got = [u, v]
                                break
                            if u != v and got is None:
                                w = _first_common(gp, u, v, on | {u, v})
                                if w is not None:
                                    got = [u, w, v]
                        if got is not None and len(got) == 2:
                            break
                    if got is not None:
                        move = (i, got)
                        break
            else:
                for v in range(gp.n):
                    if v in on:
                        continue
                    mv = gp.masks[v]
                    for i, x, y in _cycle_edges_not_in(cycle, S):
                        if mv >> x & 1 and mv >> y & 1:
                            move = (i, [v])
                            break
                    if move:
                        break
            if move:
                break
        if move is None:
            raise ConstructionFailure(
                f"could not extend cycle past {len(cycle)}/{gp.n} vertices"
            )
        i, ins = move
        cycle = cycle[: i + 1] + ins + cycle[i + 1 :]
    return cycle


def _check_pairs_on_cycle(cycle: list[int], S) -> None:
    pos = {v: i for i, v in enumerate(cycle)}
    n = len(cycle)
    for u, v in S:
        if u not in pos or v not in pos:
            raise ConstructionFailure(f"pair ({u},{v}) missing from cycle")
        if (pos[u] - pos[v]) % n not in (1, n - 1):
            raise ConstructionFailure(f"pair ({u},{v}) not consecutive on cycle")


# ---------------------------------------------------------------------------
# bipartite-dense covering


def cover_side_through_pairs(
    h: Graph, A, B, S, k: int, mode: str = "strict"
) -> CycleCertificate:
    """Cycle of h+S through every pair of S covering all of A, length 2p-s+t.

    A and B partition V(h) with B independent; only A-B edges of h are used
    (edges inside A, if any, are ignored), which pins the exact length. An
    empty S is replaced by the lowest A-B edge.
    """
    if mode not in ("strict", "relaxed"):
        raise PreconditionError(f"unknown mode {mode!r}")
    A, B = frozenset(A), frozenset(B)
    if A & B or A | B != frozenset(h.vertices()):
        raise PreconditionError("A and B must partition the vertex set")
    for u in B:
        for w in h.adj[u]:
            if w in B:
                raise PreconditionError("B is not an independent set")
    p = len(A)
    if p == 0:
        raise PreconditionError("A must be nonempty")

    # bipartite reduction: A-B edges only
    edges = [(u, v) for u, v in h.edges() if (u in A) != (v in A)]
    hb = Graph(h.n, _adj_from_edges(h.n, edges))

    S = _normalize_pairs(S)
    if not S:
        first = next(iter(hb.edges()), None)
        if first is None:
            raise PreconditionError("no A-B edge to substitute for empty S")
        S = [first]
    if not is_potentially_cyclable(S):
        raise PreconditionError("S is not potentially cyclable")
    s_cnt = sum(1 for u, v in S if u in A and v in A)
    t_cnt = sum(1 for u, v in S if u in B and v in B)
    if mode == "strict":
        if not (0 < k and 10 * k <= p):
            raise PreconditionError("strict mode needs 0 < k <= p/10")
        if any(hb.degree(v) < 2 * p for v in A):
            raise PreconditionError("strict mode needs d(v) >= 2p on A")
        if any(hb.degree(v) < p - k for v in B):
            raise PreconditionError("strict mode needs d(v) >= p-k on B")
        if len(S) > -((-9 * k) // 4):
            raise PreconditionError("strict mode needs |S| <= ceil(9k/4)")

    gp = hb.add_pairs(S)
    chain = normalize_pair_chain(S)
    endpoints = {v for pair in chain for v in pair}

    path = [chain[0][0], chain[0][1]]
    for i in range(1, len(chain)):
        x, y = chain[i]
        prev = path[-1]
        if prev == x:
            path.append(y)
            continue
        if gp.has_edge(prev, x):
            path += [x, y]
            continue
        banned = set(path) | endpoints
        joint = _bip_connector(hb, A, prev, x, banned)
        if joint is None:
            raise ConstructionFailure(f"could not join pair {i} of the chain")
        path += joint + [x, y]

    cycle = _bip_close(hb, A, gp, path)
    cycle = _bip_cover_a(hb, A, B, cycle, set(S), k)

    expected = 2 * p - s_cnt + t_cnt
    if len(cycle) != expected:
        raise ConstructionFailure(
            f"internal: cycle length {len(cycle)} != 2p-s+t = {expected}"
        )
    cert = CycleCertificate(tuple(cycle), expected)
    check = verify_cycle_certificate(gp, cert)
    if not check:
        raise ConstructionFailure(f"internal: cycle failed verification: {check.reason}")
    if not A <= set(cycle):
        raise ConstructionFailure("internal: cycle does not cover A")
    _check_pairs_on_cycle(cycle, S)
    return cert


def _adj_from_edges(n: int, edges) -> tuple[tuple[int, ...], ...]:
    sets: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        sets[u].add(v)
        sets[v].add(u)
    return tuple(tuple(sorted(s)) for s in sets)


def _bip_connector(
    hb: Graph, A: frozenset[int], a: int, b: int, banned: set[int]
) -> list[int] | None:
    """Connector vertices (excluding a and b) of a short a..b path in hb.

    Case analysis on the sides of a and b; connector length 1 or 2, or 3 for
    an A-A pair whose fresh B-neighbors lack a direct common A-neighbor.
    """
    a_in, b_in = a in A, b in A
    if not a_in and not b_in:
        v = _first_common(hb, a, b, banned)
        return None if v is None else [v]
    if a_in and not b_in:
        for u in _neighbors_off(hb, a, banned):
            v = _first_common(hb, u, b, banned | {u})
            if v is not None:
                return [u, v]
        return None
    if not a_in and b_in:
        for v in _neighbors_off(hb, b, banned):
            u = _first_common(hb, a, v, banned | {v})
            if u is not None:
                return [u, v]
        return None
    v = _first_common(hb, a, b, banned)
    if v is not None:
        return [v]
    us = _neighbors_off(hb, a, banned)
    vs = _neighbors_off(hb, b, banned)
    for u in us:
        for v in vs:
            if u == v:
                continue
            w = _first_common(hb, u, v, banned | {u, v})
            if w is not None:
                return [u, w, v]
    return None


def _bip_close(hb: Graph, A: frozenset[int], gp: Graph, path: list[int]) -> list[int]:
    head, tail = path[0], path[-1]
    if len(path) >= 3 and gp.has_edge(head, tail):
        return list(path)
    joint = _bip_connector(hb, A, tail, head, set(path))
    if joint is None:
        raise ConstructionFailure("could not close the pair chain into a cycle")
    return path + joint


def _bip_cover_a(
    hb: Graph,
    A: frozenset[int],
    B: frozenset[int],
    cycle: list[int],
    S: set[tuple[int, int]],
    k: int,
) -> list[int]:
    while not A <= set(cycle):
        on = set(cycle)
        missing = sorted(A - on)
        move = None
        case2_first = len(missing) <= 2 * k
        for attempt in (0, 1):
            do_case2 = case2_first if attempt == 0 else not case2_first
            if do_case2:
                move = _bip_case2(hb, A, B, cycle, S, on, missing)
            else:
                move = _bip_case1(hb, A, B, cycle, S, on)
            if move:
                break
        if move is None:
            raise ConstructionFailure(
                f"could not cover A: {len(missing)} vertices remain outside"
            )
        cycle = move
    return cycle


def _bip_case1(hb, A, B, cycle, S, on):
    """Replace an A-B cycle edge xy by x-u-v-y with u in B, v in A, both fresh."""
    n = len(cycle)
    for i in range(n):
        x, y = cycle[i], cycle[(i + 1) % n]
        if (min(x, y), max(x, y)) in S:
            continue
        if x in A and y in B:
            ax, by = x, y
        elif y in A and x in B:
            ax, by = y, x
        else:
            continue
        for u in _neighbors_off(hb, ax, on):
            v = _first_common(hb, u, by, on | {u})
            if v is not None:
                ins = [u, v] if x == ax else [v, u]
                return cycle[: i + 1] + ins + cycle[i + 1 :]
    return None


def _bip_case2(hb, A, B, cycle, S, on, missing):
    """Replace a segment x-z-y (x,y in A, z in B, non-pair edges) by x-v-u-w-y."""
    n = len(cycle)
    for u in missing:
        fresh = _neighbors_off(hb, u, on)
        if len(fresh) < 2:
            continue
        for i in range(n):
            x, z, y = cycle[i], cycle[(i + 1) % n], cycle[(i + 2) % n]
            if not (x in A and y in A and z in B):
                continue
            if (min(x, z), max(x, z)) in S or (min(z, y), max(z, y)) in S:
                continue
            for v in fresh:
                if not hb.has_edge(x, v):
                    continue
                for w in fresh:
                    if w != v and hb.has_edge(y, w):
                        rot = cycle[i:] + cycle[:i]  # rot: x, z, y, ...
                        return [rot[0], v, u, w] + rot[2:]
    return None

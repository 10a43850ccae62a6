"""Shared search machinery: rotation-extension, chord closures, insertion growth.

Used by the Dirac constructor, the Fan path search, and the cycle engine.
All scanning is in sorted vertex order, so results are deterministic.
"""

from __future__ import annotations

from .graph import Graph


def greedy_extend(g: Graph, path: list[int]) -> list[int]:
    """Extend both ends with the lowest-id unused neighbor until maximal."""
    on = set(path)
    changed = True
    while changed:
        changed = False
        for w in g.adj[path[-1]]:
            if w not in on:
                path.append(w)
                on.add(w)
                changed = True
                break
        for w in g.adj[path[0]]:
            if w not in on:
                path.insert(0, w)
                on.add(w)
                changed = True
                break
    return path


def rotation_round(g: Graph, path: list[int], step_budget: list[int]):
    """One Posa round rotating the last endpoint, first endpoint fixed.

    Returns ('extend', longer_path) as soon as any rotated endpoint can leave
    the path, else ('stuck', {endpoint: rotated_path}).
    """
    on = set(path)
    variants = {path[-1]: path}
    queue = [path[-1]]
    qi = 0
    while qi < len(queue):
        if step_budget[0] <= 0:
            break
        end = queue[qi]
        qi += 1
        p = variants[end]
        for w in g.adj[end]:
            if w not in on:
                return "extend", p + [w]
        pos = {v: i for i, v in enumerate(p)}
        for w in g.adj[end]:
            i = pos[w]
            if i + 1 >= len(p) - 1:
                continue
            new_end = p[i + 1]
            if new_end in variants:
                continue
            step_budget[0] -= 1
            variants[new_end] = p[: i + 1] + p[: i : -1]
            queue.append(new_end)
    return "stuck", variants


def closures(g: Graph, path: list[int]) -> list[list[int]]:
    """Candidate cycles from one path: direct edge, best two-chord, both fans.

    The two-chord closure v0..vb vl..va (va in N(v0), vb in N(vl), a > b) has
    length len(path)+1-(a-b); a-b == 1 is the crossing-chord full closure.
    """
    out = []
    u, w = path[0], path[-1]
    l = len(path) - 1
    if l + 1 >= 3 and g.has_edge(u, w):
        out.append(list(path))
    mu, mw = g.masks[u], g.masks[w]
    a_idx = [i for i in range(1, l + 1) if mu >> path[i] & 1]
    b_idx = [i for i in range(0, l) if mw >> path[i] & 1]
    # minimize a-b over a > b with a two-pointer sweep
    best = None
    j = 0
    for a in a_idx:
        while j < len(b_idx) and b_idx[j] < a:
            j += 1
        if j > 0:
            b = b_idx[j - 1]
            if best is None or a - b < best[0]:
                best = (a - b, a, b)
    if best is not None:
        _, a, b = best
        cyc = path[: b + 1] + path[l : a - 1 : -1]
        if len(cyc) >= 3:
            out.append(cyc)
    if a_idx:
        a = a_idx[-1]
        if a + 1 >= 3:
            out.append(path[: a + 1])
    if b_idx:
        b = b_idx[0]
        if l - b + 1 >= 3:
            out.append(path[b:])
    return out


def grow_cycle(
    g: Graph,
    cycle: list[int],
    forbidden_pairs=frozenset(),
    target: int | None = None,
) -> list[int]:
    """Lengthen a cycle by local moves until stuck (or target reached).

    Moves, in order: insert an outside vertex between adjacent-on-cycle
    neighbors; replace a non-forbidden cycle edge xy by x-z-y, x-u-v-y or
    x-u-w-v-y with all new vertices outside the cycle.
    """
    forbidden = {(min(a, b), max(a, b)) for a, b in forbidden_pairs}
    cyc = list(cycle)
    while target is None or len(cyc) < target:
        on = set(cyc)
        n = len(cyc)
        move = None
        for v in range(g.n):
            if v in on:
                continue
            mv = g.masks[v]
            for i in range(n):
                x, y = cyc[i], cyc[(i + 1) % n]
                if (min(x, y), max(x, y)) in forbidden:
                    continue
                if mv >> x & 1 and mv >> y & 1:
                    move = (i, [v])
                    break
            if move:
                break
        if move is None:
            for i in range(n):
                x, y = cyc[i], cyc[(i + 1) % n]
                if (min(x, y), max(x, y)) in forbidden:
                    continue
                mx, my = g.masks[x], g.masks[y]
                common = mx & my
                z = _lowest_off(common, on)
                if z is not None:
                    move = (i, [z])
                    break
                found = None
                us = _bits_off(mx, on)
                vs = _bits_off(my, on)
                for u in us:
                    for v in vs:
                        if u == v:
                            continue
                        if g.has_edge(u, v):
                            found = [u, v]
                            break
                        wcand = _lowest_off(
                            g.masks[u] & g.masks[v], on | {u, v}
                        )
                        if wcand is not None and found is None:
                            found = [u, wcand, v]
                    if found and len(found) == 2:
                        break
                if found:
                    move = (i, found)
                    break
        if move is None:
            break
        i, ins = move
        cyc = cyc[: i + 1] + ins + cyc[i + 1 :]
    return cyc


def _lowest_off(mask: int, on: set[int]) -> int | None:
    while mask:
        v = (mask & -mask).bit_length() - 1
        if v not in on:
            return v
        mask &= mask - 1
    return None


def _bits_off(mask: int, on: set[int]) -> list[int]:
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        if v not in on:
            out.append(v)
        mask &= mask - 1
    return out


def long_cycle_search_best(
    g: Graph, want: int, rotation_budget: int = 0
) -> list[int] | None:
    """Rotation-extension search for a long cycle; returns the best one found.

    Repeats: grow a maximal path, rotate at both ends, close (full or chord
    closures), reopen non-spanning full closures through an attached outside
    vertex. Every reopen strictly lengthens the working path, so the loop
    terminates. When 2*delta >= n a maximal path always has a crossing
    chord, so this provably reaches a Hamiltonian cycle.
    """
    if g.n < 3:
        return None
    budget = [rotation_budget if rotation_budget > 0 else 50 * g.n]
    best: list[int] | None = None
    path = greedy_extend(g, [0])
    guard = 0
    while guard <= 2 * g.n + 5:
        guard += 1
        # rotate both ends until no extension applies
        while True:
            res, payload = rotation_round(g, path, budget)
            if res == "extend":
                path = greedy_extend(g, payload)
                continue
            variants_last = payload
            res, payload = rotation_round(g, path[::-1], budget)
            if res == "extend":
                path = greedy_extend(g, payload)
                continue
            variants_first = payload
            break
        candidates: list[list[int]] = []
        full = None
        for var in list(variants_last.values()) + [
            p[::-1] for p in variants_first.values()
        ]:
            for c in closures(g, var):
                candidates.append(c)
                if len(c) == len(var) and (full is None or len(c) > len(full)):
                    full = c
        for c in candidates:
            if best is None or len(c) > len(best):
                best = c
        if best is not None and len(best) >= want:
            return best
        if full is not None and len(full) < g.n:
            reopened = _reopen(g, full)
            if reopened is not None and len(reopened) > len(path):
                path = greedy_extend(g, reopened)
                continue
        if best is not None:
            grown = grow_cycle(g, best, target=want)
            if len(grown) > len(best):
                best = grown
                if len(best) >= want:
                    return best
            if len(grown) >= len(path) and len(grown) < g.n:
                reopened = _reopen(g, grown)
                if reopened is not None and len(reopened) > len(path):
                    path = greedy_extend(g, reopened)
                    continue
        break
    return best


def _reopen(g: Graph, cycle: list[int]) -> list[int] | None:
    """Cycle + one attached outside vertex, opened into a longer path."""
    on = set(cycle)
    n = len(cycle)
    for idx, c in enumerate(cycle):
        for w in g.adj[c]:
            if w not in on:
                return [w] + cycle[idx:] + cycle[:idx]
    return None


def find_cycle_at_least(
    g: Graph, want: int, node_budget: int | None = None
) -> list[int] | None:
    """DFS search for any cycle with >= want vertices, reachability-pruned.

    Exhaustive (hence an exact 'no' on return None) when node_budget is None;
    with a budget it is a best-effort finder. Roots each cycle at its minimum
    vertex.
    """
    want = max(want, 3)
    if g.n < want:
        return None
    nodes = [0]

    def reach_mask(start_mask: int, alive: int) -> int:
        comp = start_mask & alive
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
        return comp

    full = (1 << g.n) - 1
    for root in range(g.n - want + 1):
        high = full & ~((1 << root) - 1)  # vertices >= root only
        stack: list[tuple[int, int, list[int]]] = [(root, 1 << root, [root])]
        while stack:
            if node_budget is not None:
                node_budget -= 1
                if node_budget <= 0:
                    return None
            v, mask, path = stack.pop()
            if len(path) >= want and g.has_edge(v, root):
                return path
            alive = high & ~mask | (1 << root)
            rm = reach_mask(g.masks[v] & alive, alive)
            if not rm >> root & 1 and len(path) > 1:
                continue
            if len(path) + (rm & ~mask).bit_count() < want:
                continue
            for w in reversed(g.adj[v]):
                if w > root and not mask >> w & 1:
                    stack.append((w, mask | (1 << w), path + [w]))
    return None


def find_st_path_at_least(
    g: Graph,
    s: int,
    t: int,
    want_vertices: int,
    node_budget: int | None = None,
    allowed: set[int] | None = None,
) -> list[int] | None:
    """DFS search for an (s,t)-path with >= want_vertices vertices.

    Exhaustive when node_budget is None. `allowed` restricts the usable
    vertex set (s and t are always usable).
    """
    if s == t:
        raise ValueError("s and t must differ")
    if allowed is None:
        universe = (1 << g.n) - 1
    else:
        universe = 0
        for v in allowed:
            universe |= 1 << v
        universe |= (1 << s) | (1 << t)

    def reach_mask(start_mask: int, alive: int) -> int:
        comp = start_mask & alive
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
        return comp

    stack: list[tuple[int, int, list[int]]] = [(s, 1 << s, [s])]
    while stack:
        if node_budget is not None:
            node_budget -= 1
            if node_budget <= 0:
                return None
        v, mask, path = stack.pop()
        if v == t:
            if len(path) >= want_vertices:
                return path
            continue
        alive = universe & ~mask | (1 << t)
        rm = reach_mask(g.masks[v] & alive, alive)
        if not rm >> t & 1:
            continue
        if len(path) + (rm & ~mask).bit_count() < want_vertices:
            continue
        for w in reversed(g.adj[v]):
            if universe >> w & 1 and not mask >> w & 1:
                stack.append((w, mask | (1 << w), path + [w]))
    return None

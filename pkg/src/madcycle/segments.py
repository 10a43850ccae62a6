"""Systems of T-segments by color coding.

Two-stage DP: stage one tabulates colorful single segments between anchor
pairs; stage two peels one segment per level, distinguishing a shared next
endpoint (its color returns to the pool) from a fresh one. The identity
coloring turns the Monte Carlo search into an exact subset DP, used
automatically on small hosts.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionError
from .graph import Graph, PathCertificate, verify_path_certificate

DET_N_CAP = 18
RANDOM_Q_CAP = 18
DEFAULT_TRIAL_CAP = 500
DET_STATE_BUDGET = 400_000


class _EngineBudget(Exception):
    """Identity-mode state budget tripped; fall back to random colorings."""


@dataclass(frozen=True)
class SegmentSystem:
    paths: tuple[PathCertificate, ...]
    T: frozenset[int]
    classification: tuple[int, int] | None = None  # (#A-segments, #B-segments)

    @property
    def r(self) -> int:
        return len(self.paths)

    @property
    def p(self) -> int:
        return sum(len(path) - 2 for path in self.paths)

    def endpoint_pairs(self) -> list[tuple[int, int]]:
        return [
            (min(p.vertices[0], p.vertices[-1]), max(p.vertices[0], p.vertices[-1]))
            for p in self.paths
        ]


def validate_segment_system(
    g: Graph,
    system: SegmentSystem,
    T,
    partition: tuple | None = None,
    expect: tuple[int, int] | None = None,
    expect_st: tuple[int, int] | None = None,
    require_a_two_internals: bool = False,
) -> tuple[bool, str | None]:
    """Independent invariant check for a system of T-segments."""
    T = frozenset(T)
    internals_seen: set[int] = set()
    all_vertices: set[int] = set()
    for path in system.paths:
        if not verify_path_certificate(g, path):
            return False, "not a path of the host graph"
        if len(path) < 3:
            return False, "segment shorter than two edges"
        a, b = path.endpoints
        if a not in T or b not in T:
            return False, "endpoint outside T"
        inner = set(path.internal)
        if inner & T:
            return False, "internal vertex inside T"
        if inner & all_vertices:
            return False, "paths are not internally disjoint"
        if internals_seen & set(path.vertices):
            return False, "paths are not internally disjoint"
        internals_seen |= inner
        all_vertices |= set(path.vertices)
    pairs = system.endpoint_pairs()
    if len(set(pairs)) != len(pairs):
        return False, "duplicate endpoint pair"
    deg: dict[int, int] = {}
    parent: dict[int, int] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        for x in (u, v):
            parent.setdefault(x, x)
            deg[x] = deg.get(x, 0) + 1
            if deg[x] > 2:
                return False, "endpoint pairs do not form a linear forest"
        ru, rv = find(u), find(v)
        if ru == rv:
            return False, "endpoint pairs do not form a linear forest"
        parent[ru] = rv
    if expect is not None:
        if system.r != expect[0]:
            return False, f"expected {expect[0]} paths, got {system.r}"
        if system.p != expect[1]:
            return False, f"expected {expect[1]} internal vertices, got {system.p}"
    if partition is not None:
        A = frozenset(partition[0])
        s_cnt = sum(1 for p in system.paths if p.vertices[0] in A and p.vertices[-1] in A)
        t_cnt = sum(
            1 for p in system.paths if p.vertices[0] not in A and p.vertices[-1] not in A
        )
        if expect_st is not None and (s_cnt, t_cnt) != expect_st:
            return False, f"expected (s,t)={expect_st}, got {(s_cnt, t_cnt)}"
        if require_a_two_internals:
            for p in system.paths:
                if p.vertices[0] in A and p.vertices[-1] in A and len(p) - 2 < 2:
                    return False, "A-segment with fewer than two internal vertices"
    return True, None


class _SegmentEngine:
    """One coloring's worth of the two-stage DP, reusable across queries."""

    def __init__(
        self,
        g: Graph,
        T: frozenset[int],
        A: frozenset[int],
        coloring: tuple[int, ...],
        pmax: int,
        rmax: int,
        smax: int,
        tmax: int,
        state_budget: int | None = None,
    ):
        self.g = g
        self.T = T
        self.A = A
        self.coloring = coloring
        self.pmax = pmax
        self.rmax = rmax
        self.smax = smax
        self.tmax = tmax
        self._budget = state_budget
        self._states = 0
        self._alpha: dict[int, list[tuple[int, int]]] = {}
        self._alpha_walk: dict[int, dict[int, int]] = {}
        self._build_alpha()
        self._levels: list[dict] = []
        self._build_levels()

    def _tick(self, k: int = 1):
        if self._budget is not None:
            self._states += k
            if self._states > self._budget:
                raise _EngineBudget()

    # stage one: colorful single segments
    def _build_alpha(self):
        g, T, c = self.g, self.T, self.coloring
        outside = [v for v in g.vertices() if v not in T]
        out_mask = 0
        for v in outside:
            out_mask |= 1 << v
        for x in sorted(T):
            reach: dict[int, int] = {1 << c[x]: 1 << x}
            queue = [1 << c[x]]
            qi = 0
            max_pop = self.pmax + 1  # x plus at most pmax internals
            while qi < len(queue):
                ckey = queue[qi]
                qi += 1
                if ckey.bit_count() >= max_pop:
                    continue
                ends = reach[ckey]
                e = ends
                while e:
                    v = (e & -e).bit_length() - 1
                    e &= e - 1
                    cand = g.masks[v] & out_mask
                    w = cand
                    while w:
                        u = (w & -w).bit_length() - 1
                        w &= w - 1
                        cu = c[u]
                        if ckey >> cu & 1:
                            continue
                        nkey = ckey | (1 << cu)
                        if nkey not in reach:
                            reach[nkey] = 0
                            queue.append(nkey)
                            self._tick()
                        reach[nkey] |= 1 << u
            entries: list[tuple[int, int]] = []
            for ckey, ends in reach.items():
                if ckey.bit_count() < 2:
                    continue  # need at least one internal vertex
                e = ends
                while e:
                    v = (e & -e).bit_length() - 1
                    e &= e - 1
                    if v == x:
                        continue
                    tmask = self.g.masks[v]
                    for y in sorted(T):
                        if y == x or not tmask >> y & 1:
                            continue
                        cy = c[y]
                        if ckey >> cy & 1:
                            continue
                        entries.append((y, ckey | (1 << cy)))
                        self._tick()
            self._alpha[x] = sorted(set(entries))
            self._alpha_walk[x] = reach

    def _gate(self, x: int, y: int, ykey: int) -> bool:
        """alpha*: reject |Y|<=2 and one-internal A-segments."""
        size = ykey.bit_count()
        if size <= 2:
            return False
        if size == 3 and x in self.A and y in self.A:
            return False
        return True

    # stage two: peel segments level by level
    def _build_levels(self):
        A = self.A
        level1: dict[tuple, tuple] = {}
        for x in sorted(self.T):
            for y, ykey in self._alpha[x]:
                if not self._gate(x, y, ykey):
                    continue
                p = ykey.bit_count() - 2
                da = 1 if (x in A and y in A) else 0
                db = 1 if (x not in A and y not in A) else 0
                if p > self.pmax or da > self.smax or db > self.tmax:
                    continue
                key = (x, p, da, db, ykey)
                if key not in level1:
                    level1[key] = (None, x, y, ykey, False)
                    self._tick()
        self._levels = [level1]
        for _ in range(2, self.rmax + 1):
            prev = self._levels[-1]
            cur: dict[tuple, tuple] = {}
            for pkey in prev:
                w, p0, s0, t0, x0 = pkey
                cw_bit = 1 << self.coloring[w]
                for x in sorted(self.T):
                    if x0 >> self.coloring[x] & 1:
                        continue
                    for y, ykey in self._alpha[x]:
                        if not self._gate(x, y, ykey):
                            continue
                        overlap = ykey & x0
                        if y == w:
                            if overlap != cw_bit or not ykey & cw_bit:
                                continue
                        else:
                            if overlap:
                                continue
                            if x0 >> self.coloring[y] & 1:
                                continue
                            if w == y or w == x:
                                continue
                        p = p0 + ykey.bit_count() - 2
                        da = s0 + (1 if (x in A and y in A) else 0)
                        db = t0 + (1 if (x not in A and y not in A) else 0)
                        if p > self.pmax or da > self.smax or db > self.tmax:
                            continue
                        key = (x, p, da, db, x0 | ykey)
                        if key not in cur:
                            cur[key] = (pkey, x, y, ykey, y == w)
                            self._tick()
            self._levels.append(cur)

    def query(self, r: int, p: int, s: int, t: int):
        """One accepting state for exact counts (r, p, s, t), or None."""
        if r < 1 or r > len(self._levels):
            return None
        for key in self._levels[r - 1]:
            if key[1] == p and key[2] == s and key[3] == t:
                return (r, key)
        return None

    def reconstruct(self, r: int, key: tuple) -> list[list[int]]:
        paths = []
        level = r
        while key is not None:
            pred, x, y, ykey, _shared = self._levels[level - 1][key]
            paths.append(self._walk_segment(x, y, ykey))
            key = pred
            level -= 1
        paths.reverse()
        return paths

    def _walk_segment(self, x: int, y: int, ykey: int) -> list[int]:
        """Recover a concrete colorful segment x..y with color set ykey."""
        c = self.coloring
        reach = self._alpha_walk[x]
        ckey = ykey & ~(1 << c[y])
        seq = [y]
        # last internal endpoint adjacent to y
        cur = None
        ends = reach.get(ckey, 0) & self.g.masks[y]
        e = ends
        while e:
            v = (e & -e).bit_length() - 1
            if v != x:
                cur = v
                break
            e &= e - 1
        assert cur is not None, "alpha table inconsistent"
        while cur != x:
            seq.append(cur)
            ckey &= ~(1 << c[cur])
            prev_ends = reach.get(ckey, 0) & self.g.masks[cur]
            nxt = None
            e = prev_ends
            while e:
                v = (e & -e).bit_length() - 1
                e &= e - 1
                if ckey == (1 << c[x]) and v != x:
                    continue
                nxt = v
                break
            assert nxt is not None, "alpha walk broke"
            cur = nxt
        seq.append(x)
        seq.reverse()
        return seq


def _bucket(x: int) -> int:
    b = 4
    while b < x:
        b *= 2
    return b


_overbudget_keys: set = set()


@lru_cache(maxsize=64)
def _identity_engine(g: Graph, T: frozenset, A: frozenset, pmax: int, rmax: int
                     ) -> _SegmentEngine:
    return _SegmentEngine(
        g, T, A, tuple(range(g.n)), pmax, rmax, smax=rmax, tmax=rmax,
        state_budget=DET_STATE_BUDGET,
    )


def _search(
    g: Graph,
    T: frozenset[int],
    A: frozenset[int],
    r: int,
    p: int,
    s: int,
    t: int,
    seed: int,
    trials: int | None,
    trial_offset: int,
    skip_identity: bool = False,
    report: dict | None = None,
) -> SegmentSystem | None:
    # deterministic identity coloring first: exact whenever its reachable
    # state space fits the budget (always at oracle scale)
    key = (g, T, A, _bucket(p), _bucket(r))
    if not skip_identity and key not in _overbudget_keys:
        try:
            engine = _identity_engine(g, T, A, _bucket(p), _bucket(r))
            if report is not None:
                report["deterministic"] = True
            hit = engine.query(r, p, s, t)
            if hit is None:
                return None
            return _assemble(g, T, A, engine, hit)
        except _EngineBudget:
            _overbudget_keys.add(key)
    if report is not None:
        report["deterministic"] = False
    q = p + 2 * r
    if q > RANDOM_Q_CAP:
        return None
    if trials is None:
        trials = min(DEFAULT_TRIAL_CAP, math.ceil(5 * math.exp(3 * p)))
    for trial in range(trial_offset, trial_offset + trials):
        rng = random.Random(seed * 2654435761 + trial)
        coloring = tuple(rng.randrange(q) for _ in range(g.n))
        engine = _SegmentEngine(g, T, A, coloring, p, r, s, t)
        hit = engine.query(r, p, s, t)
        if hit is not None:
            return _assemble(g, T, A, engine, hit)
    return None


def _assemble(g, T, A, engine, hit) -> SegmentSystem:
    r, key = hit
    raw = engine.reconstruct(r, key)
    paths = tuple(PathCertificate(tuple(seq)) for seq in raw)
    s_cnt = sum(1 for pp in paths if pp.vertices[0] in A and pp.vertices[-1] in A)
    t_cnt = sum(
        1 for pp in paths if pp.vertices[0] not in A and pp.vertices[-1] not in A
    )
    system = SegmentSystem(paths, T, (s_cnt, t_cnt))
    ok, reason = validate_segment_system(g, system, T, partition=(A, T - A))
    assert ok, f"segment DP produced an invalid system: {reason}"
    return system


def find_segments(
    g: Graph,
    T,
    r: int,
    p: int,
    seed: int = 0,
    trials: int | None = None,
    trial_offset: int = 0,
    det_cap: int | None = None,
    report: dict | None = None,
) -> SegmentSystem | None:
    """A system of exactly r T-segments with exactly p internal vertices.

    Returned systems always validate; a None answer is exact when the
    identity-coloring mode ran (report["deterministic"]) and one-sided Monte
    Carlo otherwise. det_cap forces the Monte Carlo path on larger hosts
    (a test hook). r > p is immediately infeasible.
    """
    if r < 1 or p < 1:
        raise PreconditionError("need r >= 1 and p >= 1")
    T = frozenset(T)
    if any(v < 0 or v >= g.n for v in T):
        raise PreconditionError("T contains out-of-range vertices")
    if r > p:
        if report is not None:
            report["deterministic"] = True
        return None
    skip_identity = det_cap is not None and g.n > det_cap
    sys_ = _search(
        g, T, frozenset(), r, p, 0, r, seed, trials, trial_offset,
        skip_identity, report,
    )
    if sys_ is None:
        return None
    return SegmentSystem(sys_.paths, T, None)


def find_segments_partitioned(
    g: Graph,
    T,
    A,
    B,
    r: int,
    p: int,
    s: int,
    t: int,
    seed: int = 0,
    trials: int | None = None,
    trial_offset: int = 0,
    det_cap: int | None = None,
    report: dict | None = None,
) -> SegmentSystem | None:
    """Partitioned search: s A-segments, t B-segments, A-segments have >= 2
    internal vertices. Exact counts, as in the plain search."""
    T, A, B = frozenset(T), frozenset(A), frozenset(B)
    if A | B != T or A & B:
        raise PreconditionError("A and B must partition T")
    if s + t > r:
        raise PreconditionError("s + t must not exceed r")
    if s < 0 or t < 0:
        raise PreconditionError("s and t must be nonnegative")
    if r < 1 or p < 1:
        raise PreconditionError("need r >= 1 and p >= 1")
    if r > p:
        if report is not None:
            report["deterministic"] = True
        return None
    skip_identity = det_cap is not None and g.n > det_cap
    system = _search(
        g, T, A, r, p, s, t, seed, trials, trial_offset, skip_identity, report
    )
    if system is None:
        return None
    ok, reason = validate_segment_system(
        g,
        system,
        T,
        partition=(A, B),
        expect=(r, p),
        expect_st=(s, t),
        require_a_two_internals=True,
    )
    assert ok, f"partitioned segment DP invalid: {reason}"
    return system

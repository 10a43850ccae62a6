"""Decide whether a 2-connected graph has a cycle of length >= mad(G)+k.

Dispatch: k = 0 is answered constructively (densest core, reduction, Dirac
cycle); large k relative to mad goes to an exact fallback; otherwise the
dense-subgraph trichotomy drives the two case analyses, searching for one
long outside path or a system of outside segments and splicing them into a
routed cycle through the core.

Answers are three-valued. Yes always carries a verified certificate whose
length meets the exact rational threshold. Unknown is reserved for exhausted
randomized budgets and engine incompleteness; it never masquerades as no.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import cyclesearch, longpaths, routing, segments
from .density import mad_with_witness
from .errors import ConstructionFailure, EngineIncomplete, PreconditionError
from .extract import BipartiteDense, FoundCycle, SmallDense, find_dense
from .graph import (
    CycleCertificate,
    Graph,
    PathCertificate,
    build_graph,
    ceil_frac,
    induced_subgraph,
    is_biconnected,
    is_connected,
    verify_cycle_certificate,
    verify_path_certificate,
)
from .reduction import reduce_exhaustive

FALLBACK_N_CAP = 24
FALLBACK_DP_CAP = 18


@dataclass
class SolveResult:
    answer: str  # yes | no | unknown
    k: int
    mad: Fraction
    threshold_len: int
    certificate: CycleCertificate | None = None
    path_certificate: PathCertificate | None = None
    branch: str = ""
    stats: dict = field(default_factory=dict)
    trace: list | None = None


def k0_constructive_cycle(g: Graph) -> CycleCertificate:
    """A verified cycle of length strictly greater than mad(G).

    Works on any graph with mad >= 3: densest witness, exhaustive reduction,
    then a Dirac cycle of the core. Both min(n_core, 2*delta_core) branches
    exceed mad because the core keeps 2m/(n-1) at least mad's level.
    """
    witness = mad_with_witness(g)
    if witness.mad < 2:
        raise PreconditionError("no cycle exists below mad = 2")
    core, _ = reduce_exhaustive(g, witness.vertices)
    sub, ids = induced_subgraph(g, core)
    cyc = longpaths.dirac_cycle(sub)
    mapped = tuple(ids[v] for v in cyc.vertices)
    cert = CycleCertificate(mapped, ceil_frac(witness.mad))
    check = verify_cycle_certificate(g, cert)
    assert check, check.reason
    if not Fraction(len(mapped)) > witness.mad:
        raise ConstructionFailure("constructive cycle does not exceed mad")
    return cert


def exact_longest_cycle_fallback(
    g: Graph, threshold: Fraction | int, n_cap: int = FALLBACK_N_CAP
) -> SolveResult:
    """Exact decision 'exists a cycle of length >= threshold' for small n.

    Branch-and-bound DFS with reachability pruning; independent of the
    subset-DP oracle. Above the cap the answer is unknown with a diagnostic.
    """
    threshold = Fraction(threshold)
    want = max(ceil_frac(threshold), 3)
    mad = mad_with_witness(g).mad if g.m else Fraction(0)
    base = dict(k=0, mad=mad, threshold_len=want, branch="fallback")
    if g.n > n_cap:
        return SolveResult(
            "unknown",
            stats={"reason": f"fallback cap exceeded: n={g.n} > {n_cap}"},
            **base,
        )
    found = cyclesearch.find_cycle_at_least(g, want, node_budget=None)
    if found is not None:
        cert = CycleCertificate(tuple(found), want)
        assert verify_cycle_certificate(g, cert)
        return SolveResult("yes", certificate=cert, **base)
    return SolveResult("no", **base)


@dataclass
class _Budget:
    seed: int = 0
    trials: int | None = None
    engine: int | None = None
    randomized_used: bool = False


def _splice_segments(
    g: Graph, base_cycle: CycleCertificate, system: segments.SegmentSystem
) -> list[int]:
    """Replace each pair-edge of the routed cycle by its segment.

    The assembly identity holds by construction: every segment with p_i
    internal vertices lengthens the cycle by exactly p_i.
    """
    by_pair: dict[tuple[int, int], PathCertificate] = {}
    for path in system.paths:
        a, b = path.endpoints
        by_pair[(min(a, b), max(a, b))] = path
    cyc = list(base_cycle.vertices)
    n = len(cyc)
    out: list[int] = []
    used: set[tuple[int, int]] = set()
    for i in range(n):
        x, y = cyc[i], cyc[(i + 1) % n]
        key = (min(x, y), max(x, y))
        out.append(x)
        if key in by_pair and key not in used:
            used.add(key)
            seq = list(by_pair[key].vertices)
            if seq[0] != x:
                seq.reverse()
            out.extend(seq[1:-1])
    if used != set(by_pair):
        raise ConstructionFailure("a segment's endpoint pair was not on the cycle")
    expected = len(cyc) + system.p
    if len(out) != expected:
        raise ConstructionFailure("assembly identity violated")
    return out


def case_small_dense(
    g: Graph,
    H,
    k_prime: int,
    mad: Fraction,
    k: int,
    budget: _Budget,
) -> SolveResult:
    """Case (ii): route through a small dense core H.

    (a) one outside (s,t)-path with >= k'+2 vertices, or (b) a system of at
    most k' outside segments carrying between k' and 2k'-2 internal vertices;
    either splices into a Hamiltonian cycle of H through the forced pairs.
    """
    H = frozenset(H)
    threshold = ceil_frac(mad) + k
    base = dict(k=k, mad=mad, threshold_len=threshold, branch="case_ii")
    if k_prime < 1:
        raise PreconditionError("case_small_dense needs k' >= 1")
    sub_h, ids_h = induced_subgraph(g, H)
    back = {orig: i for i, orig in enumerate(ids_h)}
    outside = [v for v in g.vertices() if v not in H]
    stats = {"st_probes": 0, "segment_probes": 0, "k_prime": k_prime}

    # (a) all pairs s,t in H, path outside H with >= k'+2 vertices; only
    # vertices of H with an outside neighbor can start such a path
    if outside:
        outside_set = set(outside)
        anchors = sorted(
            v for v in H if any(w in outside_set for w in g.adj[v])
        )
        restricted, ids_r = induced_subgraph(g, outside_set | H)
        pos_r = {orig: i for i, orig in enumerate(ids_r)}
        allowed_outside = {pos_r[v] for v in outside}
        for s in anchors:
            for t in anchors:
                if s >= t:
                    continue
                rs, rt = pos_r[s], pos_r[t]
                sub_universe = sorted(allowed_outside | {rs, rt})
                gg, ids_gg = induced_subgraph(restricted, sub_universe)
                stats["st_probes"] += 1
                report: dict = {}
                found = longpaths.st_path_at_least(
                    gg,
                    ids_gg.index(rs),
                    ids_gg.index(rt),
                    k_prime + 2,
                    seed=budget.seed,
                    trials=budget.trials,
                    report=report,
                )
                if found is None:
                    if not report.get("deterministic", False):
                        budget.randomized_used = True
                    continue
                orig_path = [ids_r[ids_gg[v]] for v in found.vertices]
                ham = routing.hamiltonian_through_pairs(
                    sub_h, {(back[s], back[t])}, k=k_prime + 1, mode="relaxed"
                )
                mapped = CycleCertificate(
                    tuple(ids_h[v] for v in ham.vertices), len(ham)
                )
                system = segments.SegmentSystem(
                    (PathCertificate(tuple(orig_path)),), H
                )
                out = _splice_segments(g, mapped, system)
                cert = CycleCertificate(tuple(out), threshold)
                check = verify_cycle_certificate(g, cert)
                assert check, check.reason
                return SolveResult("yes", certificate=cert, stats=stats, **base)

    # (b) segment systems with T = H
    for r in range(1, k_prime + 1):
        for p in range(max(k_prime, r), 2 * k_prime - 1):
            stats["segment_probes"] += 1
            report = {}
            system = segments.find_segments(
                g, H, r, p, seed=budget.seed, trials=budget.trials, report=report
            )
            if system is None:
                if not report.get("deterministic", False):
                    budget.randomized_used = True
                continue
            pair_set = {(back[a], back[b]) for a, b in system.endpoint_pairs()}
            ham = routing.hamiltonian_through_pairs(
                sub_h, pair_set, k=k_prime + 1, mode="relaxed"
            )
            mapped = CycleCertificate(tuple(ids_h[v] for v in ham.vertices), len(ham))
            out = _splice_segments(g, mapped, system)
            cert = CycleCertificate(tuple(out), threshold)
            check = verify_cycle_certificate(g, cert)
            assert check, check.reason
            return SolveResult("yes", certificate=cert, stats=stats, **base)

    if budget.randomized_used:
        stats["reason"] = "randomized searches exhausted without a witness"
        return SolveResult("unknown", stats=stats, **base)
    return SolveResult("no", stats=stats, **base)


def case_bipartite_dense(
    g: Graph,
    H,
    A,
    B,
    k_prime: int,
    mad: Fraction,
    k: int,
    budget: _Budget,
) -> SolveResult:
    """Case (iii): route through a bipartite-dense core covering side A.

    (a) one outside path with >= k'+3 vertices, or (b) a partitioned segment
    system (s A-segments with >= 2 internals each, t B-segments, r <= k',
    internals in [k'+s-t, 3k'-2]); splice into the A-covering routed cycle.
    """
    H, A, B = frozenset(H), frozenset(A), frozenset(B)
    threshold = ceil_frac(mad) + k
    base = dict(k=k, mad=mad, threshold_len=threshold, branch="case_iii")
    if k_prime < 1:
        raise PreconditionError("case_bipartite_dense needs k' >= 1")
    if 2 * len(A) < 3 * k_prime:
        raise PreconditionError("case_bipartite_dense needs |A| >= 3k'/2")
    sub_h, ids_h = induced_subgraph(g, H)
    back = {orig: i for i, orig in enumerate(ids_h)}
    a_local = frozenset(back[v] for v in A)
    b_local = frozenset(back[v] for v in B)
    outside = [v for v in g.vertices() if v not in H]
    stats = {"st_probes": 0, "segment_probes": 0, "k_prime": k_prime}
    routing_k = max(1, -(-len(A) // 10))  # largest k the lemma scale allows

    def routed_cycle(pair_set) -> CycleCertificate:
        cyc = routing.cover_side_through_pairs(
            sub_h, a_local, b_local, pair_set, k=routing_k, mode="relaxed"
        )
        return CycleCertificate(tuple(ids_h[v] for v in cyc.vertices), len(cyc))

    if outside:
        outside_set = set(outside)
        anchors = sorted(
            v for v in H if any(w in outside_set for w in g.adj[v])
        )
        restricted, ids_r = induced_subgraph(g, outside_set | H)
        pos_r = {orig: i for i, orig in enumerate(ids_r)}
        allowed_outside = {pos_r[v] for v in outside}
        for s in anchors:
            for t in anchors:
                if s >= t:
                    continue
                rs, rt = pos_r[s], pos_r[t]
                sub_universe = sorted(allowed_outside | {rs, rt})
                gg, ids_gg = induced_subgraph(restricted, sub_universe)
                stats["st_probes"] += 1
                report: dict = {}
                found = longpaths.st_path_at_least(
                    gg,
                    ids_gg.index(rs),
                    ids_gg.index(rt),
                    k_prime + 3,
                    seed=budget.seed,
                    trials=budget.trials,
                    report=report,
                )
                if found is None:
                    if not report.get("deterministic", False):
                        budget.randomized_used = True
                    continue
                orig_path = [ids_r[ids_gg[v]] for v in found.vertices]
                mapped = routed_cycle({(back[s], back[t])})
                system = segments.SegmentSystem(
                    (PathCertificate(tuple(orig_path)),), H
                )
                out = _splice_segments(g, mapped, system)
                cert = CycleCertificate(tuple(out), threshold)
                check = verify_cycle_certificate(g, cert)
                assert check, check.reason
                return SolveResult("yes", certificate=cert, stats=stats, **base)

    for r in range(1, k_prime + 1):
        for s in range(0, min(r, k_prime) + 1):
            for t in range(0, min(r - s, k_prime) + 1):
                lo = max(k_prime + s - t, r, 1)
                hi = 3 * k_prime - 2
                for p in range(lo, hi + 1):
                    stats["segment_probes"] += 1
                    report = {}
                    system = segments.find_segments_partitioned(
                        g, H, A, B, r, p, s, t,
                        seed=budget.seed, trials=budget.trials, report=report,
                    )
                    if system is None:
                        if not report.get("deterministic", False):
                            budget.randomized_used = True
                        continue
                    pair_set = {
                        (back[a], back[b]) for a, b in system.endpoint_pairs()
                    }
                    mapped = routed_cycle(pair_set)
                    out = _splice_segments(g, mapped, system)
                    cert = CycleCertificate(tuple(out), threshold)
                    check = verify_cycle_certificate(g, cert)
                    assert check, check.reason
                    return SolveResult("yes", certificate=cert, stats=stats, **base)

    if budget.randomized_used:
        stats["reason"] = "randomized searches exhausted without a witness"
        return SolveResult("unknown", stats=stats, **base)
    return SolveResult("no", stats=stats, **base)


def solve(
    g: Graph,
    k: int,
    mode: str = "cycle",
    seed: int = 0,
    budget: int | None = None,
    strict: bool = True,
    with_trace: bool = False,
) -> SolveResult:
    """Decide a cycle of length >= mad(G)+k (or a path with >= mad(G)+k
    vertices in path mode). See the module docstring for the dispatch."""
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    if mode == "path":
        return _solve_path(g, k, seed, budget, strict, with_trace)
    if mode != "cycle":
        raise PreconditionError(f"unknown mode {mode!r}")
    if not is_biconnected(g):
        raise PreconditionError("cycle mode needs a 2-connected graph")

    mad = mad_with_witness(g).mad
    # k = 0 is decided constructively with a strictly-longer-than-mad cycle,
    # so its integer threshold is floor(mad)+1; for k >= 1 it is ceil(mad)+k
    if k == 0:
        threshold = mad.numerator // mad.denominator + 1
    else:
        threshold = ceil_frac(mad) + k
    base = dict(k=k, mad=mad, threshold_len=threshold)

    if k == 0:
        cert = k0_constructive_cycle(g)
        cert = CycleCertificate(cert.vertices, threshold)
        assert verify_cycle_certificate(g, cert)
        res = SolveResult("yes", certificate=cert, branch="k0", **base)
        if with_trace:
            _, tr = reduce_exhaustive(g, mad_with_witness(g).vertices)
            res.trace = tr.to_jsonable()
        return res

    in_strict_range = Fraction(k) <= mad / 88 - 1
    if in_strict_range:
        pass
    elif strict or g.n <= FALLBACK_N_CAP:
        # the paper dispatch: out-of-range k goes to the exact fallback
        res = exact_longest_cycle_fallback(g, mad + k)
        res.k, res.mad, res.threshold_len = k, mad, threshold
        return res
    # relaxed mode past the fallback cap: run the dense pipeline best-effort;
    # yes stays certified, but no downgrades to unknown below

    bud = _Budget(seed=seed, trials=budget)
    dense_strict = strict and in_strict_range
    try:
        witness, info = find_dense(g, k, strict=dense_strict, budget=budget)
    except EngineIncomplete as exc:
        return SolveResult(
            "unknown", branch="find_dense",
            stats={"reason": f"engine incomplete: {exc}"}, **base,
        )
    except ConstructionFailure as exc:
        return SolveResult(
            "unknown", branch="find_dense",
            stats={"reason": f"construction failed: {exc}"}, **base,
        )
    trace = info.trace.to_jsonable() if with_trace else None

    if isinstance(witness, FoundCycle):
        cert = witness.cycle
        if len(cert) >= threshold:
            cert = CycleCertificate(cert.vertices, threshold)
            assert verify_cycle_certificate(g, cert)
            return SolveResult(
                "yes", certificate=cert, branch="find_dense", trace=trace, **base
            )
        return SolveResult(
            "unknown", branch="find_dense", trace=trace,
            stats={"reason": "relaxed-mode cycle below threshold"}, **base,
        )

    if isinstance(witness, SmallDense):
        H = witness.vertices
        k_prime = threshold - len(H)
        if k_prime <= 0:
            sub_h, ids_h = induced_subgraph(g, H)
            ham = routing.hamiltonian_through_pairs(
                sub_h, set(), k=k + 1, mode="relaxed"
            )
            cert = CycleCertificate(
                tuple(ids_h[v] for v in ham.vertices), threshold
            )
            assert verify_cycle_certificate(g, cert)
            return SolveResult(
                "yes", certificate=cert, branch="case_ii", trace=trace, **base
            )
        res = case_small_dense(g, H, k_prime, mad, k, bud)
        res.trace = trace
        return _downgrade_out_of_range(res, in_strict_range)

    assert isinstance(witness, BipartiteDense)
    H, A, B = witness.vertices, witness.A, witness.B
    k_prime = threshold - 2 * len(A)
    if k_prime <= 0:
        sub_h, ids_h = induced_subgraph(g, H)
        back = {orig: i for i, orig in enumerate(ids_h)}
        cyc = routing.cover_side_through_pairs(
            sub_h,
            frozenset(back[v] for v in A),
            frozenset(back[v] for v in B),
            set(),
            k=max(1, len(A) // 10),
            mode="relaxed",
        )
        cert = CycleCertificate(tuple(ids_h[v] for v in cyc.vertices), threshold)
        assert verify_cycle_certificate(g, cert)
        return SolveResult(
            "yes", certificate=cert, branch="case_iii", trace=trace, **base
        )
    try:
        res = case_bipartite_dense(g, H, A, B, k_prime, mad, k, bud)
    except ConstructionFailure as exc:
        return SolveResult(
            "unknown", branch="case_iii", trace=trace,
            stats={"reason": f"construction failed: {exc}"}, **base,
        )
    res.trace = trace
    return _downgrade_out_of_range(res, in_strict_range)


def _downgrade_out_of_range(res: SolveResult, in_strict_range: bool) -> SolveResult:
    """Out of the strict k-range the case analyses lose their completeness
    guarantee, so an exhausted search is honestly unknown rather than no."""
    if res.answer == "no" and not in_strict_range:
        res.answer = "unknown"
        res.stats["reason"] = (
            "relaxed-mode search exhausted; no-guarantee outside the strict k range"
        )
    return res


def _solve_path(g, k, seed, budget, strict, with_trace) -> SolveResult:
    """Path mode: universal-vertex reduction with an adjusted k."""
    if not is_connected(g):
        raise PreconditionError("path mode needs a connected graph")
    if g.n < 2:
        raise PreconditionError("path mode needs at least two vertices")
    mad = mad_with_witness(g).mad if g.m else Fraction(0)
    want_vertices = ceil_frac(mad) + k  # path with this many vertices
    base = dict(k=k, mad=mad, threshold_len=want_vertices)

    u = g.n
    gp = build_graph(
        list(g.edges()) + [(v, u) for v in range(g.n)], g.n + 1
    )
    mad_p = mad_with_witness(gp).mad
    k_plus = want_vertices + 1 - ceil_frac(mad_p)

    if k_plus <= 0:
        cyc = k0_constructive_cycle(gp)
        res = SolveResult("yes", branch="path_k0", **base)
        cycle_cert = cyc
    else:
        inner = solve(gp, k_plus, mode="cycle", seed=seed, budget=budget, strict=strict,
                      with_trace=with_trace)
        res = SolveResult(
            inner.answer, branch=f"path[{inner.branch}]",
            stats=inner.stats, trace=inner.trace, **base,
        )
        cycle_cert = inner.certificate
    if res.answer == "yes" and cycle_cert is not None:
        seq = list(cycle_cert.vertices)
        if len(seq) < want_vertices + 1:
            raise ConstructionFailure("path-mode cycle shorter than required")
        if u in seq:
            # drop the universal vertex; the rest is a path of G
            i = seq.index(u)
            seq = seq[i + 1 :] + seq[:i]
        # a cycle avoiding u is already a path of G when read linearly
        path = PathCertificate(tuple(seq))
        check = verify_path_certificate(g, path)
        assert check, check.reason
        if len(path) < want_vertices:
            raise ConstructionFailure("path-mode conversion too short")
        res.path_certificate = path
    return res

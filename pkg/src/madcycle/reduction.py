"""Density-preserving pruning: the four reduction rules over 2m/(n-1).

Rules operate on an induced subgraph of a host graph, tracked as a vertex
set with original ids preserved, so any cycle found in the survivor is
verbatim a cycle of the host.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PreconditionError
from .graph import (
    Graph,
    avg_degree_of_set,
    blocks_and_cut_vertices,
    eg_bound,
    induced_subgraph,
    is_connected,
    subset_components,
    two_separators,
)


@dataclass(frozen=True)
class ReductionStep:
    rule: int
    removed: frozenset[int]
    eg_before: Fraction
    eg_after: Fraction


@dataclass
class ReductionTrace:
    steps: list[ReductionStep] = field(default_factory=list)
    final_vertices: frozenset[int] = frozenset()

    def to_jsonable(self) -> list[dict]:
        return [
            {
                "rule": s.rule,
                "removed": sorted(s.removed),
                "eg_before": {"num": s.eg_before.numerator, "den": s.eg_before.denominator},
                "eg_after": {"num": s.eg_after.numerator, "den": s.eg_after.denominator},
            }
            for s in self.steps
        ]


def _sub_eg(g: Graph, vs) -> Fraction:
    sub, _ = induced_subgraph(g, vs)
    return eg_bound(sub)


def apply_rule(g: Graph, vertices, rule: int) -> tuple[frozenset[int], frozenset[int]] | None:
    """One application of a reduction rule to the induced subgraph g[vertices].

    Returns (survivors, removed) or None when the rule does not apply.
    Deterministic choices: maximize the surviving 2m/(n-1), ties to the part
    with the smallest vertex id; rule 3 removes the smallest qualifying vertex;
    rule 4 uses the lexicographically first (separator, component).
    """
    vs = frozenset(vertices)
    if len(vs) < 2:
        return None
    sub, ids = induced_subgraph(g, vs)

    if rule == 1:
        comps = subset_components(sub, range(sub.n))
        if len(comps) <= 1:
            return None
        best = None
        for comp in comps:
            if len(comp) < 2:
                continue
            val = _sub_eg(sub, comp)
            key = (-val, min(ids[v] for v in comp))
            if best is None or key < best[0]:
                best = (key, comp)
        if best is None:
            return None
        keep = frozenset(ids[v] for v in best[1])
        return keep, vs - keep

    if rule == 2:
        if not is_connected(sub):
            raise PreconditionError("rule 2 needs a connected graph")
        if sub.n < 3:
            return None
        blocks, cuts = blocks_and_cut_vertices(sub)
        if not cuts:
            return None
        best = None
        for block in blocks:
            val = _sub_eg(sub, block)
            key = (-val, min(ids[v] for v in block))
            if best is None or key < best[0]:
                best = (key, block)
        keep = frozenset(ids[v] for v in best[1])
        return keep, vs - keep

    if rule == 3:
        if sub.n < 3:
            return None
        threshold = eg_bound(sub) / 2
        for v in range(sub.n):
            if sub.degree(v) <= threshold:
                keep = vs - {ids[v]}
                return keep, frozenset({ids[v]})
        return None

    if rule == 4:
        if sub.n < 4:
            return None
        if not is_connected(sub) or blocks_and_cut_vertices(sub)[1]:
            raise PreconditionError("rule 4 needs a 2-connected graph")
        before = eg_bound(sub)
        threshold = Fraction(2, 3) * before
        for x, y in two_separators(sub):
            comps = subset_components(sub, set(range(sub.n)) - {x, y})
            comps.sort(key=min)
            for comp in comps:
                if avg_degree_of_set(sub, comp) <= threshold:
                    # the density-preservation proof for this rule needs
                    # 2m/(n-1) > 6; below that, commit only non-decreasing
                    # applications (above it the check never fails)
                    if _sub_eg(sub, set(range(sub.n)) - set(comp)) < before:
                        continue
                    removed = frozenset(ids[v] for v in comp)
                    return vs - removed, removed
        return None

    raise ValueError(f"unknown rule {rule}")


def reduce_exhaustive(g: Graph, vertices=None) -> tuple[frozenset[int], ReductionTrace]:
    """Apply rules 1..4 until none fires; priority order 1, 2, 3, 4.

    Claim safety: 2m/(n-1) never decreases across a step. The survivor of a
    run starting from a graph with an edge always keeps at least one edge.
    """
    vs = frozenset(g.vertices()) if vertices is None else frozenset(vertices)
    if len(vs) < 2:
        raise PreconditionError("reduction needs at least two vertices")
    sub, _ = induced_subgraph(g, vs)
    if sub.m == 0:
        raise PreconditionError("reduction needs at least one edge")

    trace = ReductionTrace()
    while True:
        before = _sub_eg(g, vs)
        fired = None
        sub, _ = induced_subgraph(g, vs)
        connected = is_connected(sub)
        for rule in (1, 2, 3, 4):
            if rule == 2 and not connected:
                continue
            if rule == 4 and (not connected or sub.n < 3 or blocks_and_cut_vertices(sub)[1]):
                continue
            res = apply_rule(g, vs, rule)
            if res is not None:
                fired = (rule, res)
                break
        if fired is None:
            break
        rule, (keep, removed) = fired
        after = _sub_eg(g, keep)
        trace.steps.append(ReductionStep(rule, removed, before, after))
        vs = keep
    trace.final_vertices = vs
    return vs, trace

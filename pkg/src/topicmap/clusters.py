"""Community detection on the topic map via weighted label propagation.

Every node starts with a unique label; nodes repeatedly adopt the label
carrying the largest total incident link weight, asynchronously, in a seeded
shuffled order per sweep, until a fixed point or an iteration budget. A node
can also hold graded memberships in several communities: the weight share
toward each label, kept when it reaches a threshold.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidParamsError
from .mapbuilder import TermGraph


@dataclass
class CommunityAssignment:
    """primary: term -> community id (contiguous from 0, largest first).
    memberships: term -> {community id: strength}; a node's primary community
    is always present and carries its maximal strength.
    """

    primary: dict[str, int]
    memberships: dict[str, dict[int, float]]

    def community_count(self) -> int:
        return len(set(self.primary.values())) if self.primary else 0


def _best_label(scores: dict[int, float]) -> int:
    # max total weight, ties to the smallest label id
    return min(scores.items(), key=lambda kv: (-kv[1], kv[0]))[0]


def detect_communities(
    graph: TermGraph,
    seed: int = 1,
    max_iters: int = 100,
    membership_threshold: float = 0.3,
) -> CommunityAssignment:
    """Label propagation over link weights (raw similarity when a link has
    no weight assigned). Deterministic for a fixed seed; isolated nodes keep
    singleton communities.
    """
    if max_iters < 1:
        raise InvalidParamsError("max_iters must be >= 1")
    if not 0 < membership_threshold <= 1:
        raise InvalidParamsError("membership_threshold must be in (0, 1]")

    nodes = sorted(graph.freq)
    label = {t: i for i, t in enumerate(nodes)}
    adjacency: dict[str, list[tuple[str, float]]] = {t: [] for t in nodes}
    for (a, b), link in graph.links.items():
        w = link.raw if link.weight is None else link.weight
        adjacency[a].append((b, w))
        adjacency[b].append((a, w))

    rng = random.Random(seed)
    order = list(nodes)
    for _ in range(max_iters):
        rng.shuffle(order)
        changed = False
        for u in order:
            if not adjacency[u]:
                continue
            scores: dict[int, float] = {}
            for v, w in adjacency[u]:
                scores[label[v]] = scores.get(label[v], 0.0) + w
            best = _best_label(scores)
            if best != label[u]:
                label[u] = best
                changed = True
        if not changed:
            break

    # One synchronous pass over the frozen labels: re-derive each node's
    # primary as the argmax and collect membership shares from the same
    # snapshot, so the primary always sits in memberships at max strength.
    # At a fixed point this changes nothing.
    final_label: dict[str, int] = {}
    shares: dict[str, dict[int, float]] = {}
    for u in nodes:
        scores = {}
        total = 0.0
        for v, w in adjacency[u]:
            scores[label[v]] = scores.get(label[v], 0.0) + w
            total += w
        if not scores or total <= 0:
            final_label[u] = label[u]
            shares[u] = {label[u]: 1.0}
            continue
        best = _best_label(scores)
        final_label[u] = best
        kept = {
            lab: s / total
            for lab, s in scores.items()
            if lab == best or s / total >= membership_threshold
        }
        shares[u] = kept

    # Contiguous ids: largest community first, ties by smallest member term.
    groups: dict[int, list[str]] = {}
    for u in nodes:
        groups.setdefault(final_label[u], []).append(u)
    ranked = sorted(groups.items(), key=lambda kv: (-len(kv[1]), min(kv[1])))
    relabel = {old: new for new, (old, _) in enumerate(ranked)}

    primary = {u: relabel[final_label[u]] for u in nodes}
    memberships = {
        u: {
            relabel[lab]: strength
            for lab, strength in shares[u].items()
            if lab in relabel
        }
        for u in nodes
    }
    return CommunityAssignment(primary=primary, memberships=memberships)

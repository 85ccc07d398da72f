"""Turn word vectors plus term frequencies into a pruned topic map.

Pipeline: take the N most frequent terms, link every pair with its cosine
similarity, drop links below a percentile threshold and beyond a per-node
cap, then min-max normalize surviving link strengths into [0, 1].

Pruning is deliberately order-independent: the percentile threshold and every
node's cap are computed from the unpruned graph, then one global survival
rule is applied (a link survives iff its similarity reaches the threshold and
both endpoint caps). Node-by-node removal would make results depend on
iteration order.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import corpus as corpus_mod
from .corpus import Document, Vocabulary
from .embedding import EmbeddingModel, TrainParams, train
from .errors import (
    EmptyGraphError,
    EmptyInputError,
    FewerTermsThanRequested,
    InvalidParamsError,
    MissingVectorWarning,
    UnknownTermError,
)


@dataclass(frozen=True)
class MapParams:
    """Network construction knobs: size, percentile threshold, link cap.

    ``base_percentile`` is the relaxed export layer: the map file carries all
    links down to it so a client can re-prune live between ``base_percentile``
    and 1 without a server round-trip; links that also clear ``percentile``
    are flagged primary.
    """

    n_terms: int = 500
    percentile: float = 0.985
    cap: int = 12
    base_percentile: float = 0.95

    def __post_init__(self):
        if self.n_terms < 2:
            raise InvalidParamsError("n_terms must be >= 2")
        if not 0 < self.base_percentile <= self.percentile < 1:
            raise InvalidParamsError(
                "need 0 < base_percentile <= percentile < 1"
            )
        if self.cap < 1:
            raise InvalidParamsError("cap must be >= 1")


@dataclass
class Link:
    raw: float
    weight: float | None = None
    primary: bool = True


class TermGraph:
    """Weighted undirected graph over terms.

    No self-links, at most one link per unordered pair; every link endpoint
    is a node. ``raw`` holds the cosine similarity, ``weight`` the normalized
    strength once assigned.
    """

    def __init__(self):
        self.freq: dict[str, int] = {}
        self.links: dict[tuple[str, str], Link] = {}

    @staticmethod
    def pair(a: str, b: str) -> tuple[str, str]:
        if a == b:
            raise InvalidParamsError(f"self-link on {a!r}")
        return (a, b) if a < b else (b, a)

    def add_node(self, term: str, freq: int = 1) -> None:
        self.freq[term] = freq

    def add_link(
        self, a: str, b: str, raw: float, weight: float | None = None,
        primary: bool = True,
    ) -> None:
        key = self.pair(a, b)
        self.freq.setdefault(a, 1)
        self.freq.setdefault(b, 1)
        self.links[key] = Link(raw=raw, weight=weight, primary=primary)

    def node_count(self) -> int:
        return len(self.freq)

    def link_count(self) -> int:
        return len(self.links)

    def degree(self, term: str) -> int:
        return sum(1 for pair in self.links if term in pair)

    def neighbors(self, term: str) -> list[tuple[str, Link]]:
        out = []
        for (a, b), link in self.links.items():
            if a == term:
                out.append((b, link))
            elif b == term:
                out.append((a, link))
        return out

    def copy_nodes(self) -> "TermGraph":
        g = TermGraph()
        g.freq = dict(self.freq)
        return g


def build_complete_similarity(
    model: EmbeddingModel, terms: Sequence[str]
) -> TermGraph:
    """Complete graph over ``terms`` with pairwise cosine similarities.

    Each link's raw value is computed exactly as ``model.similarity`` would
    return it. Node frequencies come from the model's counts when known.
    """
    if len(terms) < 2:
        raise InvalidParamsError("need at least 2 terms")
    if len(set(terms)) != len(terms):
        raise InvalidParamsError("duplicate terms")
    unit = model.unit_matrix
    rows = {}
    for t in terms:
        if t not in model:
            raise UnknownTermError(t)
        rows[t] = unit[model._index[t]]
    graph = TermGraph()
    for t in terms:
        count = 1
        if model.counts is not None:
            count = int(model.counts[model._index[t]])
        graph.add_node(t, max(1, count))
    ordered = list(terms)
    for i, a in enumerate(ordered):
        ua = rows[a]
        for b in ordered[i + 1 :]:
            raw = float(ua @ rows[b])
            graph.add_link(a, b, raw=max(-1.0, min(1.0, raw)))
    return graph


def percentile_threshold(values: Iterable[float], p: float) -> float:
    """Nearest-rank percentile: the smallest stored value v such that the
    fraction of values <= v reaches p. p=0 gives the minimum, p=1 the maximum.
    """
    if not 0 <= p <= 1:
        raise InvalidParamsError("p must be in [0, 1]")
    arr = np.sort(np.asarray(list(values), dtype=np.float64))
    n = arr.shape[0]
    if n == 0:
        raise EmptyInputError("no values")
    fracs = np.arange(1, n + 1) / n
    idx = min(int(np.searchsorted(fracs, p, side="left")), n - 1)
    return float(arr[idx])


def _node_caps(graph: TermGraph, cap: int) -> dict[str, float]:
    per_node: dict[str, list[float]] = {t: [] for t in graph.freq}
    for (a, b), link in graph.links.items():
        per_node[a].append(link.raw)
        per_node[b].append(link.raw)
    caps = {}
    for node, raws in per_node.items():
        if len(raws) >= cap:
            raws.sort(reverse=True)
            caps[node] = raws[cap - 1]
        else:
            caps[node] = -math.inf
    return caps


def prune(graph: TermGraph, p: float, cap: int) -> TermGraph:
    """Keep links whose raw similarity reaches the global percentile
    threshold and the cap-th largest similarity of BOTH endpoints.

    Thresholds and caps are taken from ``graph`` as given, so the result is
    independent of any iteration order. Nodes are all retained.
    """
    if cap < 1:
        raise InvalidParamsError("cap must be >= 1")
    if not 0 <= p <= 1:
        raise InvalidParamsError("p must be in [0, 1]")
    out = graph.copy_nodes()
    if not graph.links:
        return out
    threshold = percentile_threshold(
        (link.raw for link in graph.links.values()), p
    )
    caps = _node_caps(graph, cap)
    for (a, b) in sorted(graph.links):
        link = graph.links[(a, b)]
        if link.raw >= max(threshold, caps[a], caps[b]):
            out.add_link(a, b, raw=link.raw, weight=link.weight,
                         primary=link.primary)
    return out


def normalize(graph: TermGraph) -> TermGraph:
    """Min-max scale surviving raw similarities into [0, 1] link weights.

    A degenerate range (all raws equal, or a single link) maps to 1.0.
    Raw values are preserved alongside the weights.
    """
    if not graph.links:
        raise EmptyGraphError("no links to normalize")
    raws = [link.raw for link in graph.links.values()]
    lo, hi = min(raws), max(raws)
    span = hi - lo
    out = graph.copy_nodes()
    for (a, b) in sorted(graph.links):
        link = graph.links[(a, b)]
        weight = 1.0 if span == 0 else (link.raw - lo) / span
        out.add_link(a, b, raw=link.raw, weight=weight, primary=link.primary)
    return out


@dataclass
class MapMeta:
    vector_size: int
    context_size: int
    epochs: int
    terms: int
    percentile: float
    cap: int
    base_percentile: float
    seed: int
    documents: int
    tokens: int
    vocab: int


@dataclass
class TopicMap:
    """The export artifact: normalized base-layer graph plus metadata.

    ``graph`` holds every link down to the base percentile; links that also
    survive at the primary percentile carry ``primary=True``. ``communities``
    maps term -> community id, or is None when detection was disabled.
    """

    meta: MapMeta
    graph: TermGraph
    communities: dict[str, int] | None = None

    def primary_subgraph(self) -> TermGraph:
        g = self.graph.copy_nodes()
        for (a, b), link in self.graph.links.items():
            if link.primary:
                g.add_link(a, b, raw=link.raw, weight=link.weight)
        return g

    def min_raw(self) -> float:
        """Smallest surviving raw similarity: the operational base threshold."""
        if not self.graph.links:
            return 0.0
        return min(link.raw for link in self.graph.links.values())


def _as_documents(documents: Sequence) -> list[Document]:
    docs = []
    for i, item in enumerate(documents):
        if isinstance(item, Document):
            docs.append(item)
        elif isinstance(item, str):
            docs.append(Document(f"doc-{i}", corpus_mod.tokenize(item)))
        else:
            doc_id, text = item
            docs.append(Document(str(doc_id), corpus_mod.tokenize(text)))
    return docs


def build_map(
    documents: Sequence,
    *,
    count_documents: Sequence | None = None,
    train_params: TrainParams | None = None,
    map_params: MapParams | None = None,
    model: EmbeddingModel | None = None,
    stopwords: frozenset[str] | set[str] | None = None,
    phrases: bool = True,
    phrase_discount: float = 5.0,
    phrase_threshold: float = 100.0,
    communities: bool = True,
    community_seed: int | None = None,
    community_max_iters: int = 100,
    membership_threshold: float = 0.3,
) -> TopicMap:
    """Run the full corpus-to-map pipeline.

    Trains vectors on ``documents`` unless a pre-trained ``model`` is given.
    Term frequencies come from ``count_documents`` when given (a smaller
    foreground set), else from the training corpus. Frequent terms lacking a
    trained vector are dropped with a warning, as is a top-terms request
    larger than the usable vocabulary.
    """
    tp = train_params or TrainParams()
    mp = map_params or MapParams()
    if stopwords is None:
        stopwords = corpus_mod.DEFAULT_STOPWORDS

    docs = _as_documents(documents)
    if phrases:
        docs = corpus_mod.detect_phrases(docs, phrase_discount, phrase_threshold)

    if model is None:
        model = train(docs, tp)

    if count_documents is not None:
        counting = _as_documents(count_documents)
        if phrases:
            counting = corpus_mod.detect_phrases(
                counting, phrase_discount, phrase_threshold
            )
    else:
        counting = docs
    vocab = corpus_mod.count_terms(counting, stopwords, tp.min_count)

    top = corpus_mod.top_terms(vocab, mp.n_terms) if vocab.entries else []
    if len(top) < mp.n_terms:
        warnings.warn(
            f"only {len(top)} usable terms for a {mp.n_terms}-term map",
            FewerTermsThanRequested,
            stacklevel=2,
        )
    usable = [t for t in top if t in model]
    if len(usable) < len(top):
        dropped = sorted(set(top) - set(usable))
        warnings.warn(
            f"dropping {len(dropped)} frequent terms without vectors: "
            f"{', '.join(dropped[:10])}{'...' if len(dropped) > 10 else ''}",
            MissingVectorWarning,
            stacklevel=2,
        )
    if len(usable) < 2:
        raise EmptyGraphError("fewer than 2 mappable terms")

    complete = build_complete_similarity(model, usable)
    for t in usable:
        complete.freq[t] = vocab.entries[t]

    base = prune(complete, mp.base_percentile, mp.cap)
    primary = prune(complete, mp.percentile, mp.cap)
    normalized = normalize(base)
    for pair, link in normalized.links.items():
        link.primary = pair in primary.links

    meta = MapMeta(
        vector_size=model.vector_size,
        context_size=tp.context_size,
        epochs=tp.epochs,
        terms=normalized.node_count(),
        percentile=mp.percentile,
        cap=mp.cap,
        base_percentile=mp.base_percentile,
        seed=tp.seed,
        documents=vocab.total_documents,
        tokens=vocab.total_tokens,
        vocab=len(vocab.entries),
    )
    topic_map = TopicMap(meta=meta, graph=normalized)
    if communities:
        from .clusters import detect_communities

        assignment = detect_communities(
            topic_map.primary_subgraph(),
            seed=community_seed if community_seed is not None else tp.seed,
            max_iters=community_max_iters,
            membership_threshold=membership_threshold,
        )
        topic_map.communities = assignment.primary
    return topic_map


def _real(x: float) -> str:
    return f"{x:.6f}"


def serialize_map(topic_map: TopicMap) -> str:
    """Render the map as its canonical JSON: fixed key order, nodes by
    descending frequency then term, links lexicographic, reals at 6 decimals.
    Byte-identical across runs for identical inputs.
    """
    m = topic_map.meta
    comm = topic_map.communities
    out = [
        '{"meta":{'
        f'"vectorSize":{m.vector_size},'
        f'"contextSize":{m.context_size},'
        f'"epochs":{m.epochs},'
        f'"terms":{m.terms},'
        f'"percentile":{_real(m.percentile)},'
        f'"cap":{m.cap},'
        f'"basePercentile":{_real(m.base_percentile)},'
        f'"seed":{m.seed},'
        f'"corpus":{{"documents":{m.documents},"tokens":{m.tokens},'
        f'"vocab":{m.vocab}}}}},"nodes":['
    ]
    nodes = sorted(topic_map.graph.freq.items(), key=lambda kv: (-kv[1], kv[0]))
    node_parts = []
    for term, freq in nodes:
        community = "null" if comm is None or term not in comm else str(comm[term])
        node_parts.append(
            f'{{"id":{json.dumps(term, ensure_ascii=False)},'
            f'"freq":{freq},"community":{community}}}'
        )
    out.append(",".join(node_parts))
    out.append('],"links":[')
    link_parts = []
    for (a, b) in sorted(topic_map.graph.links):
        link = topic_map.graph.links[(a, b)]
        weight = link.weight if link.weight is not None else 0.0
        link_parts.append(
            f'{{"source":{json.dumps(a, ensure_ascii=False)},'
            f'"target":{json.dumps(b, ensure_ascii=False)},'
            f'"raw":{_real(link.raw)},"weight":{_real(weight)},'
            f'"primary":{"true" if link.primary else "false"}}}'
        )
    out.append(",".join(link_parts))
    out.append("]}")
    return "".join(out)


def save_map(topic_map: TopicMap, path: str | Path) -> None:
    Path(path).write_bytes(serialize_map(topic_map).encode("utf-8"))


def load_map(path: str | Path) -> TopicMap:
    """Parse a serialized map back into a TopicMap."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    m = data["meta"]
    meta = MapMeta(
        vector_size=m["vectorSize"],
        context_size=m["contextSize"],
        epochs=m["epochs"],
        terms=m["terms"],
        percentile=m["percentile"],
        cap=m["cap"],
        base_percentile=m["basePercentile"],
        seed=m["seed"],
        documents=m["corpus"]["documents"],
        tokens=m["corpus"]["tokens"],
        vocab=m["corpus"]["vocab"],
    )
    graph = TermGraph()
    communities: dict[str, int] = {}
    any_community = False
    for node in data["nodes"]:
        graph.add_node(node["id"], node["freq"])
        if node.get("community") is not None:
            communities[node["id"]] = node["community"]
            any_community = True
    for link in data["links"]:
        graph.add_link(
            link["source"],
            link["target"],
            raw=link["raw"],
            weight=link["weight"],
            primary=link["primary"],
        )
    return TopicMap(
        meta=meta,
        graph=graph,
        communities=communities if any_community else None,
    )

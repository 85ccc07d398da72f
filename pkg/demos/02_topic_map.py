"""Build a topic map and inspect its structure before serving it.

The map pipeline turns a corpus into a small weighted graph: pick the
most frequent terms, connect every pair by cosine similarity, prune to
the strongest links (a global percentile plus a per-node cap so hubs
cannot drown everyone else), normalize weights to [0, 1], and label
communities by propagating labels across the surviving links.

This demo reuses the three-theme corpus from demo 01, builds the map,
prints the communities it found, and writes the JSON export that the
browser explorer consumes.

Run:  python3 demos/02_topic_map.py
"""

import importlib
from collections import defaultdict
from pathlib import Path

from topicmap import MapParams, TrainParams, build_map, save_map

demo01 = importlib.import_module("01_train_and_query")

OUT = Path("/tmp/demo-topic-map.json")


def main() -> None:
    docs = demo01.make_corpus()
    params = TrainParams(
        vector_size=48, context_size=5, epochs=5, min_count=5,
        subsample_t=0.0, seed=42, workers=1,
    )

    # 24 theme words survive; the stopword list swallows most of the filler,
    # leaving a couple of stragglers that end up as isolated singletons.
    topic_map = build_map(
        docs,
        train_params=params,
        map_params=MapParams(n_terms=26, percentile=0.9, cap=6,
                             base_percentile=0.8),
        phrases=False,
    )

    meta = topic_map.meta
    print(f"map: {meta.terms} terms, {topic_map.graph.link_count()} links "
          f"(corpus: {meta.documents} docs, {meta.tokens} tokens)")

    groups = defaultdict(list)
    for term, community in sorted(topic_map.communities.items()):
        groups[community].append(term)
    print(f"\ncommunities ({len(groups)}):")
    for community in sorted(groups):
        print(f"  [{community}] {' '.join(sorted(groups[community]))}")

    ranked = sorted(
        topic_map.graph.links.items(), key=lambda kv: -kv[1].raw
    )[:8]
    print("\nstrongest links:")
    for (a, b), link in ranked:
        tag = "" if link.primary else "  (below display percentile)"
        print(f"  {a:12s} -- {b:12s} raw {link.raw:+.3f} "
              f"weight {link.weight:.3f}{tag}")

    save_map(topic_map, OUT)
    print(f"\nexport written to {OUT} ({OUT.stat().st_size} bytes)")
    print("open it with demo 03, or: python3 -m topicmap serve", OUT)


if __name__ == "__main__":
    main()

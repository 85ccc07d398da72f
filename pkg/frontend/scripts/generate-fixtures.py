#!/usr/bin/env python3
"""Regenerate the client/server pruning parity fixtures.

Runs the engine's prune over the canonical 4-node example and 20 random
base layers at a grid of (P, L) settings, and writes the expected
survivor sets to test/fixtures/pruning-parity.json. The TypeScript tests
replay apply_live_pruning over the same inputs and must match exactly.

Raw values are rounded to 6 decimals, matching the precision of the map
export that the client actually sees.

Usage:  python3 scripts/generate-fixtures.py   (from frontend/)
"""

import json
import random
from pathlib import Path

from topicmap import TermGraph, prune

OUT = Path(__file__).resolve().parents[1] / "test" / "fixtures" / "pruning-parity.json"


def graph_from(links):
    g = TermGraph()
    for a, b, raw in links:
        g.add_link(a, b, raw)
    return g


def survivors(links, p, cap):
    pruned = prune(graph_from(links), p, cap)
    return sorted(f"{a}|{b}" for a, b in pruned.links)


def random_layer(rng, index):
    n = rng.randint(5, 25)
    names = [f"t{i:02d}" for i in range(n)]
    links = []
    tie_heavy = index % 4 == 0
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() > 0.45:
                continue
            raw = (
                rng.choice([0.1, 0.25, 0.5, 0.75, 0.9])
                if tie_heavy
                else round(rng.uniform(-1, 1), 6)
            )
            links.append([names[i], names[j], raw])
    if not links:
        links.append([names[0], names[1], 0.5])
    return links


def cases_for(links, rng):
    n_nodes = len({t for a, b, _ in links for t in (a, b)})
    cases = [
        {"p": 0.0, "l": n_nodes},  # identity: everything survives
        {"p": 1.0, "l": 1},
    ]
    for _ in range(6):
        cases.append({"p": round(rng.random(), 4), "l": rng.randint(1, n_nodes)})
    for case in cases:
        case["survivors"] = survivors(links, case["p"], case["l"])
    return cases


def main():
    rng = random.Random(20240817)
    fixtures = []

    four_node = [
        ["a", "b", 0.9], ["a", "c", 0.2], ["a", "d", 0.3],
        ["b", "c", 0.8], ["b", "d", 0.1], ["c", "d", 0.7],
    ]
    fixtures.append({
        "name": "four-node worked example",
        "links": four_node,
        "cases": [
            {"p": 0.5, "l": 2, "survivors": survivors(four_node, 0.5, 2)},
            *cases_for(four_node, rng),
        ],
    })

    for index in range(20):
        links = random_layer(rng, index)
        fixtures.append({
            "name": f"random layer {index}",
            "links": links,
            "cases": cases_for(links, rng),
        })

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"fixtures": fixtures}, indent=1), encoding="utf-8")
    n_cases = sum(len(f["cases"]) for f in fixtures)
    print(f"wrote {OUT} ({len(fixtures)} fixtures, {n_cases} cases)")


if __name__ == "__main__":
    main()

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topicmap import (
    EmptyGraphError,
    EmptyInputError,
    InvalidParamsError,
    MapParams,
    TermGraph,
    UnknownTermError,
    build_complete_similarity,
    build_map,
    load_map,
    normalize,
    percentile_threshold,
    prune,
    save_map,
    serialize_map,
)

from conftest import make_two_topic_docs, random_model, TWO_TOPIC_PARAMS
from oracles import percentile_oracle, prune_oracle


def complete_graph(n, rng, as_int=False):
    g = TermGraph()
    names = [f"n{i:02d}" for i in range(n)]
    for name in names:
        g.add_node(name, rng.randint(1, 100))
    for i in range(n):
        for j in range(i + 1, n):
            raw = rng.choice([0.1, 0.25, 0.5, 0.75]) if as_int else rng.uniform(-1, 1)
            g.add_link(names[i], names[j], raw)
    return g


FIXTURE_4NODE = {
    ("a", "b"): 0.9,
    ("a", "c"): 0.2,
    ("a", "d"): 0.3,
    ("b", "c"): 0.8,
    ("b", "d"): 0.1,
    ("c", "d"): 0.7,
}


def fixture_graph():
    g = TermGraph()
    for (a, b), raw in FIXTURE_4NODE.items():
        g.add_link(a, b, raw)
    return g


class TestPercentileThreshold:
    def test_scan_definition(self):
        values = list(range(1, 101))
        assert percentile_threshold(values, 0.97) == 97

    def test_extremes(self):
        assert percentile_threshold([5.0, 1.0, 3.0], 0.0) == 1.0
        assert percentile_threshold([5.0, 1.0, 3.0], 1.0) == 5.0

    def test_ties(self):
        assert percentile_threshold([1, 1, 1, 2], 0.5) == 1
        assert percentile_threshold([1, 1, 1, 2], 0.8) == 2

    def test_empty(self):
        with pytest.raises(EmptyInputError):
            percentile_threshold([], 0.5)

    def test_p_out_of_range(self):
        with pytest.raises(InvalidParamsError):
            percentile_threshold([1.0], 1.5)

    @given(
        st.lists(
            st.floats(-100, 100, allow_nan=False).map(lambda x: round(x, 2)),
            min_size=1,
            max_size=60,
        ),
        st.one_of(st.just(0.0), st.just(1.0), st.floats(0, 1)),
    )
    @settings(max_examples=300)
    def test_matches_sort_oracle(self, values, p):
        assert percentile_threshold(values, p) == percentile_oracle(values, p)


class TestPrune:
    def test_worked_example_links(self):
        pruned = prune(fixture_graph(), 0.5, 2)
        assert set(pruned.links) == {("a", "b"), ("a", "d"), ("b", "c"), ("c", "d")}

    def test_worked_example_weights(self):
        weighted = normalize(prune(fixture_graph(), 0.5, 2))
        weights = {pair: link.weight for pair, link in weighted.links.items()}
        assert weights[("a", "b")] == pytest.approx(1.0, abs=1e-4)
        assert weights[("a", "d")] == pytest.approx(0.0, abs=1e-4)
        assert weights[("b", "c")] == pytest.approx(0.8333, abs=1e-4)
        assert weights[("c", "d")] == pytest.approx(0.6667, abs=1e-4)

    def test_matches_oracle_on_random_graphs(self):
        rng = random.Random(17)
        for trial in range(40):
            n = rng.randint(4, 30)
            g = complete_graph(n, rng, as_int=(trial % 3 == 0))
            p = rng.random()
            cap = rng.randint(1, n)
            got = set(prune(g, p, cap).links)
            want = prune_oracle(
                {pair: link.raw for pair, link in g.links.items()}, cap, p
            )
            assert got == want, f"trial {trial}: n={n} p={p} cap={cap}"

    def test_identity_settings(self):
        rng = random.Random(2)
        g = complete_graph(8, rng)
        pruned = prune(g, 0.0, 7)
        assert set(pruned.links) == set(g.links)

    def test_nodes_retained(self):
        pruned = prune(fixture_graph(), 0.99, 1)
        assert set(pruned.freq) == {"a", "b", "c", "d"}

    def test_cap_bounds_primary_degree(self):
        # distinct raws: every node keeps at most `cap` links
        rng = random.Random(23)
        g = complete_graph(20, rng)
        for cap in (1, 3, 12):
            pruned = prune(g, 0.0, cap)
            for node in pruned.freq:
                assert pruned.degree(node) <= cap

    def test_label_permutation_invariance(self):
        rng = random.Random(31)
        g = complete_graph(12, rng)
        mapping = {f"n{i:02d}": f"m{(i * 7) % 12:02d}" for i in range(12)}
        relabeled = TermGraph()
        for t, f in g.freq.items():
            relabeled.add_node(mapping[t], f)
        for (a, b), link in g.links.items():
            relabeled.add_link(mapping[a], mapping[b], link.raw)
        got = {
            tuple(sorted((mapping[a], mapping[b])))
            for (a, b) in prune(g, 0.7, 3).links
        }
        assert got == set(prune(relabeled, 0.7, 3).links)

    def test_bad_params(self):
        g = fixture_graph()
        with pytest.raises(InvalidParamsError):
            prune(g, 0.5, 0)
        with pytest.raises(InvalidParamsError):
            prune(g, -0.1, 2)

    def test_self_link_rejected(self):
        g = TermGraph()
        with pytest.raises(InvalidParamsError):
            g.add_link("a", "a", 0.5)


class TestNormalize:
    def test_range(self):
        rng = random.Random(5)
        g = prune(complete_graph(10, rng), 0.5, 4)
        weighted = normalize(g)
        weights = [link.weight for link in weighted.links.values()]
        assert min(weights) == 0.0
        assert max(weights) == 1.0
        assert all(0.0 <= w <= 1.0 for w in weights)

    def test_raw_preserved(self):
        g = fixture_graph()
        weighted = normalize(g)
        for pair, link in weighted.links.items():
            assert link.raw == FIXTURE_4NODE[pair]

    def test_degenerate_all_equal(self):
        g = TermGraph()
        g.add_link("a", "b", 0.5)
        g.add_link("b", "c", 0.5)
        weighted = normalize(g)
        assert all(link.weight == 1.0 for link in weighted.links.values())

    def test_empty(self):
        with pytest.raises(EmptyGraphError):
            normalize(TermGraph())


class TestBuildCompleteSimilarity:
    def test_raws_match_similarity_exactly(self):
        m = random_model(25, 8, seed=1)
        terms = m.terms[:10]
        g = build_complete_similarity(m, terms)
        assert len(g.links) == 45
        for (a, b), link in g.links.items():
            assert link.raw == m.similarity(a, b)

    def test_unknown_term(self):
        m = random_model(5, 4, seed=2)
        with pytest.raises(UnknownTermError):
            build_complete_similarity(m, ["t0000", "nope"])

    def test_too_few_terms(self):
        m = random_model(5, 4, seed=3)
        with pytest.raises(InvalidParamsError):
            build_complete_similarity(m, ["t0000"])

    def test_duplicate_terms(self):
        m = random_model(5, 4, seed=4)
        with pytest.raises(InvalidParamsError):
            build_complete_similarity(m, ["t0000", "t0000"])


class TestMapParams:
    def test_defaults(self):
        p = MapParams()
        assert (p.n_terms, p.percentile, p.cap, p.base_percentile) == (
            500,
            0.985,
            12,
            0.95,
        )

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"n_terms": 1},
            {"percentile": 1.0},
            {"base_percentile": 0.0},
            {"percentile": 0.9, "base_percentile": 0.95},
            {"cap": 0},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(InvalidParamsError):
            MapParams(**kwargs)


@pytest.fixture(scope="module")
def two_topic_map(two_topic_docs):
    return build_map(
        two_topic_docs,
        train_params=TWO_TOPIC_PARAMS,
        map_params=MapParams(
            n_terms=20, percentile=0.8, cap=12, base_percentile=0.7
        ),
        phrases=False,
    )


class TestBuildMap:
    def test_meta(self, two_topic_map):
        meta = two_topic_map.meta
        assert meta.terms == 20
        assert meta.vector_size == 48
        assert meta.documents == 1000
        assert meta.tokens == 30000
        assert meta.vocab == 20
        assert meta.seed == 7

    def test_weights_and_flags(self, two_topic_map):
        links = two_topic_map.graph.links
        assert links, "map has no links"
        primary = [pair for pair, link in links.items() if link.primary]
        assert 0 < len(primary) <= len(links)
        for link in links.values():
            assert 0.0 <= link.weight <= 1.0

    def test_primary_degree_capped(self, two_topic_map):
        # with distinct raws, no node may exceed `cap` primary links
        primary = two_topic_map.primary_subgraph()
        for node in primary.freq:
            assert primary.degree(node) <= two_topic_map.meta.cap

    def test_communities_populated(self, two_topic_map):
        assert two_topic_map.communities is not None
        assert set(two_topic_map.communities) == set(two_topic_map.graph.freq)

    def test_counts_from_foreground(self, two_topic_docs):
        foreground = two_topic_docs[:100]
        tm = build_map(
            two_topic_docs,
            count_documents=foreground,
            train_params=TWO_TOPIC_PARAMS,
            map_params=MapParams(
                n_terms=20, percentile=0.8, cap=12, base_percentile=0.7
            ),
            phrases=False,
        )
        assert tm.meta.documents == 100
        assert tm.meta.tokens == 3000
        assert sum(tm.graph.freq.values()) == 3000

    def test_fewer_terms_warns(self, two_topic_docs):
        with pytest.warns(UserWarning, match="usable terms"):
            build_map(
                two_topic_docs[:200],
                train_params=TWO_TOPIC_PARAMS,
                map_params=MapParams(
                    n_terms=100, percentile=0.8, cap=12, base_percentile=0.7
                ),
                phrases=False,
                communities=False,
            )


class TestSerialization:
    def test_round_trip_byte_identical(self, tmp_path, two_topic_map):
        text = serialize_map(two_topic_map)
        path = tmp_path / "map.json"
        save_map(two_topic_map, path)
        assert path.read_text(encoding="utf-8") == text
        reloaded = load_map(path)
        assert serialize_map(reloaded) == text

    def test_key_order_and_shapes(self, two_topic_map):
        text = serialize_map(two_topic_map)
        assert text.startswith('{"meta":{"vectorSize":48,"contextSize":5,')
        data = json.loads(text)
        assert list(data) == ["meta", "nodes", "links"]
        assert list(data["meta"]) == [
            "vectorSize",
            "contextSize",
            "epochs",
            "terms",
            "percentile",
            "cap",
            "basePercentile",
            "seed",
            "corpus",
        ]
        assert list(data["meta"]["corpus"]) == ["documents", "tokens", "vocab"]
        assert list(data["nodes"][0]) == ["id", "freq", "community"]
        assert list(data["links"][0]) == [
            "source",
            "target",
            "raw",
            "weight",
            "primary",
        ]

    def test_node_order(self, two_topic_map):
        data = json.loads(serialize_map(two_topic_map))
        keys = [(-n["freq"], n["id"]) for n in data["nodes"]]
        assert keys == sorted(keys)

    def test_link_order(self, two_topic_map):
        data = json.loads(serialize_map(two_topic_map))
        pairs = [(l["source"], l["target"]) for l in data["links"]]
        assert pairs == sorted(pairs)
        assert all(s < t for s, t in pairs)

    def test_reals_have_six_decimals(self, two_topic_map):
        import re

        text = serialize_map(two_topic_map)
        for m in re.finditer(r'"(?:raw|weight|percentile|basePercentile)":(-?\d+\.\d+)', text):
            whole, frac = m.group(1).split(".")
            assert len(frac) == 6

    def test_null_communities(self, two_topic_docs):
        tm = build_map(
            two_topic_docs,
            train_params=TWO_TOPIC_PARAMS,
            map_params=MapParams(
                n_terms=20, percentile=0.8, cap=12, base_percentile=0.7
            ),
            phrases=False,
            communities=False,
        )
        data = json.loads(serialize_map(tm))
        assert all(n["community"] is None for n in data["nodes"])
        reloaded_text = serialize_map(tm)
        assert '"community":null' in reloaded_text

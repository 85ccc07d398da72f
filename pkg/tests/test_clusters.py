import itertools
import random

import pytest

from topicmap import InvalidParamsError, TermGraph, detect_communities


def two_cliques_with_bridge(bridge_weight=0.1):
    """Two 5-cliques, all intra-links weight 1.0, one weak bridge."""
    g = TermGraph()
    left = [f"l{i}" for i in range(5)]
    right = [f"r{i}" for i in range(5)]
    for group in (left, right):
        for a, b in itertools.combinations(group, 2):
            g.add_link(a, b, raw=1.0, weight=1.0)
    g.add_link(left[0], right[0], raw=bridge_weight, weight=bridge_weight)
    return g, left, right


class TestTwoCliques:
    def test_two_communities(self):
        g, left, right = two_cliques_with_bridge()
        result = detect_communities(g, seed=1)
        assert result.community_count() == 2
        left_ids = {result.primary[t] for t in left}
        right_ids = {result.primary[t] for t in right}
        assert len(left_ids) == 1 and len(right_ids) == 1
        assert left_ids != right_ids

    def test_bridge_endpoints_primary_only(self):
        # share toward the far side is 0.1/4.1 < 0.3, so no second membership
        g, left, right = two_cliques_with_bridge()
        result = detect_communities(g, seed=1)
        for endpoint in ("l0", "r0"):
            memberships = result.memberships[endpoint]
            assert set(memberships) == {result.primary[endpoint]}
            assert memberships[result.primary[endpoint]] == pytest.approx(
                4.0 / 4.1
            )

    def test_strong_bridge_gains_second_membership(self):
        g, left, right = two_cliques_with_bridge(bridge_weight=2.0)
        result = detect_communities(g, seed=1)
        if result.community_count() == 2:
            for endpoint in ("l0", "r0"):
                # share toward the far side is 2/6 = 0.33 >= 0.3
                assert len(result.memberships[endpoint]) == 2


class TestInvariants:
    def make_random_graph(self, seed, n=25, p_link=0.3):
        rng = random.Random(seed)
        g = TermGraph()
        names = [f"n{i:02d}" for i in range(n)]
        for name in names:
            g.add_node(name, rng.randint(1, 50))
        for a, b in itertools.combinations(names, 2):
            if rng.random() < p_link:
                g.add_link(a, b, raw=rng.uniform(0, 1), weight=rng.uniform(0, 1))
        return g

    def test_primary_in_memberships_at_max_strength(self):
        for seed in range(8):
            g = self.make_random_graph(seed)
            result = detect_communities(g, seed=seed)
            for term, mems in result.memberships.items():
                primary = result.primary[term]
                assert primary in mems
                assert mems[primary] == max(mems.values())

    def test_ids_contiguous_largest_first(self):
        for seed in range(8):
            g = self.make_random_graph(seed)
            result = detect_communities(g, seed=seed)
            ids = sorted(set(result.primary.values()))
            assert ids == list(range(len(ids)))
            sizes = [
                sum(1 for c in result.primary.values() if c == i) for i in ids
            ]
            assert sizes == sorted(sizes, reverse=True)

    def test_deterministic_for_fixed_seed(self):
        g = self.make_random_graph(3)
        r1 = detect_communities(g, seed=9)
        r2 = detect_communities(g, seed=9)
        assert r1.primary == r2.primary
        assert r1.memberships == r2.memberships

    def test_isolated_nodes_are_singletons(self):
        g = TermGraph()
        g.add_link("a", "b", raw=1.0, weight=1.0)
        g.add_node("lonely", 3)
        result = detect_communities(g, seed=1)
        assert result.primary["a"] == result.primary["b"]
        assert result.primary["lonely"] != result.primary["a"]
        assert result.memberships["lonely"] == {result.primary["lonely"]: 1.0}

    def test_no_links_all_singletons(self):
        g = TermGraph()
        for name in "abc":
            g.add_node(name, 1)
        result = detect_communities(g, seed=1)
        assert len(set(result.primary.values())) == 3

    def test_converges_on_equal_weight_ring(self):
        g = TermGraph()
        n = 12
        for i in range(n):
            g.add_link(f"n{i:02d}", f"n{(i + 1) % n:02d}", raw=0.5, weight=0.5)
        result = detect_communities(g, seed=4, max_iters=100)
        assert set(result.primary) == set(g.freq)

    def test_bad_params(self):
        g = TermGraph()
        g.add_link("a", "b", raw=1.0)
        with pytest.raises(InvalidParamsError):
            detect_communities(g, max_iters=0)
        with pytest.raises(InvalidParamsError):
            detect_communities(g, membership_threshold=0.0)

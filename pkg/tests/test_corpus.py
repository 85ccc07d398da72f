import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topicmap import (
    Document,
    count_terms,
    detect_phrases,
    load_corpus,
    load_stopwords,
    make_documents,
    tokenize,
    top_terms,
)


class TestTokenize:
    def test_internal_periods_survive(self):
        assert tokenize("The U.S. bank") == ["the", "u.s", "bank"]

    def test_empty(self):
        assert tokenize("") == []

    def test_punctuation_only(self):
        assert tokenize("!!! ---") == []

    def test_internal_hyphen_survives(self):
        assert tokenize("forward-looking statements") == [
            "forward-looking",
            "statements",
        ]

    def test_surrounding_punctuation_stripped(self):
        assert tokenize("(hello)... 'world'!") == ["hello", "world"]

    def test_digits(self):
        assert tokenize("Q2 2014 results") == ["q2", "2014", "results"]

    def test_order_preserved(self):
        assert tokenize("one two three") == ["one", "two", "three"]

    @given(st.text(max_size=200))
    def test_idempotent_on_own_output(self, raw):
        once = tokenize(raw)
        assert tokenize(" ".join(once)) == once

    @given(st.text(max_size=200))
    def test_tokens_lowercase_and_nonempty(self, raw):
        for tok in tokenize(raw):
            assert tok
            assert tok == tok.lower()


class TestDetectPhrases:
    def test_rare_adjacent_pair_merges(self):
        # q2 and 2014 appear only together; filler keeps total_tokens up
        filler = [f"w{i}" for i in range(200)]
        docs = [
            Document(str(i), ["q2", "2014"] + filler) for i in range(30)
        ]
        # score = (30 - 5) / (30 * 30) * 6060 = 168.3 >= 100
        merged = detect_phrases(docs, discount=5.0, score_threshold=100.0)
        assert all(d.tokens[0] == "q2_2014" for d in merged)
        assert all("q2" not in d.tokens and "2014" not in d.tokens for d in merged)

    def test_no_adjacent_cooccurrence_unchanged(self):
        # every adjacent pair is unique, so count(ab) - discount goes negative
        docs = [
            Document("0", ["alpha", "x", "beta"]),
            Document("1", ["beta", "y", "alpha"]),
        ]
        merged = detect_phrases(docs, 5.0, 100.0)
        assert [d.tokens for d in merged] == [d.tokens for d in docs]

    def test_score_against_direct_recount(self):
        # 200 docs, "alpha beta" in each, plus independent unigrams
        rng = random.Random(5)
        pool = [f"u{i}" for i in range(50)]
        docs = []
        for i in range(200):
            toks = rng.choices(pool, k=120)
            pos = rng.randrange(len(toks) + 1)
            docs.append(Document(str(i), toks[:pos] + ["alpha", "beta"] + toks[pos:]))

        unigrams = Counter(t for d in docs for t in d.tokens)
        bigrams = Counter(
            (a, b) for d in docs for a, b in zip(d.tokens, d.tokens[1:])
        )
        total = sum(unigrams.values())
        discount, threshold = 5.0, 100.0
        score = (
            (bigrams[("alpha", "beta")] - discount)
            / (unigrams["alpha"] * unigrams["beta"])
            * total
        )
        merged = detect_phrases(docs, discount, threshold)
        merged_any = any("alpha_beta" in d.tokens for d in merged)
        assert merged_any == (score >= threshold)
        assert score >= threshold  # the fixture is built to clear it

    def test_greedy_left_to_right(self):
        # both (a,b) and (b,c) qualify; the left pair wins, c stays single
        docs = [Document(str(i), ["a", "b", "c"]) for i in range(50)]
        merged = detect_phrases(docs, 0.0, 1.0)
        assert all(d.tokens == ["a_b", "c"] for d in merged)

    @given(
        st.lists(
            st.lists(st.sampled_from("abcdef"), max_size=12),
            max_size=10,
        )
    )
    @settings(max_examples=50)
    def test_never_grows_and_no_whitespace(self, token_lists):
        docs = [Document(str(i), toks) for i, toks in enumerate(token_lists)]
        merged = detect_phrases(docs, 0.0, 0.5)
        assert sum(len(d.tokens) for d in merged) <= sum(
            len(d.tokens) for d in docs
        )
        for d in merged:
            for tok in d.tokens:
                assert " " not in tok


class TestCountTerms:
    def test_basic(self):
        vocab = count_terms([Document("0", ["a", "b", "a"])], frozenset(), 1)
        assert vocab.entries == {"a": 2, "b": 1}
        assert vocab.total_tokens == 3
        assert vocab.total_documents == 1

    def test_stopwords_excluded_but_counted(self):
        vocab = count_terms([Document("0", ["a", "b", "a"])], frozenset({"a"}), 1)
        assert vocab.entries == {"b": 1}
        assert vocab.total_tokens == 3

    def test_min_count(self):
        vocab = count_terms([Document("0", ["a", "a", "b"])], frozenset(), 2)
        assert vocab.entries == {"a": 2}
        assert vocab.total_tokens == 3

    def test_matches_naive_tally(self):
        rng = random.Random(9)
        pool = [f"t{i}" for i in range(80)]
        docs = [
            Document(str(i), rng.choices(pool, k=100)) for i in range(100)
        ]
        vocab = count_terms(docs, frozenset(), 1)
        oracle = Counter(t for d in docs for t in d.tokens)
        assert vocab.entries == dict(oracle)
        assert vocab.total_tokens == 10000

    def test_order_invariant(self):
        rng = random.Random(3)
        docs = [
            Document(str(i), rng.choices("abcde", k=20)) for i in range(30)
        ]
        shuffled = docs[:]
        rng.shuffle(shuffled)
        a = count_terms(docs, frozenset({"a"}), 2)
        b = count_terms(shuffled, frozenset({"a"}), 2)
        assert a.entries == b.entries
        assert a.total_tokens == b.total_tokens


class TestTopTerms:
    def test_ties_lexicographic(self):
        vocab = count_terms(
            [Document("0", ["a"] * 5 + ["b"] * 3 + ["c"] * 3)], frozenset(), 1
        )
        assert top_terms(vocab, 2) == ["a", "b"]

    def test_n_larger_than_vocab(self):
        vocab = count_terms([Document("0", ["x", "y"])], frozenset(), 1)
        assert sorted(top_terms(vocab, 10)) == ["x", "y"]

    def test_singleton(self):
        vocab = count_terms([Document("0", ["x"])], frozenset(), 1)
        assert top_terms(vocab, 1) == ["x"]

    def test_prefix_closed_ranking(self):
        rng = random.Random(1)
        docs = [Document("0", rng.choices("abcdefghij", k=500))]
        vocab = count_terms(docs, frozenset(), 1)
        for k in range(1, 10):
            assert top_terms(vocab, k) == top_terms(vocab, k + 1)[:k]


class TestLoadCorpus:
    def test_directory_one_doc_per_file(self, tmp_path):
        (tmp_path / "b.txt").write_text("Second file.", encoding="utf-8")
        (tmp_path / "a.txt").write_text("First file here.", encoding="utf-8")
        docs = load_corpus(tmp_path)
        assert [d.id for d in docs] == ["a.txt", "b.txt"]
        assert docs[0].tokens == ["first", "file", "here"]

    def test_file_one_doc_per_line(self, tmp_path):
        path = tmp_path / "corpus.txt"
        path.write_text("First line.\n\nThird line!\n", encoding="utf-8")
        docs = load_corpus(path)
        assert [d.tokens for d in docs] == [
            ["first", "line"],
            ["third", "line"],
        ]

    def test_stopword_file(self, tmp_path):
        path = tmp_path / "stop.txt"
        path.write_text("The\nof\n\n# not a comment, a term\n", encoding="utf-8")
        words = load_stopwords(path)
        assert "the" in words
        assert "of" in words

    def test_make_documents(self):
        docs = make_documents([("x", "One two."), ("y", "Three!")])
        assert [d.id for d in docs] == ["x", "y"]
        assert [d.tokens for d in docs] == [["one", "two"], ["three"]]

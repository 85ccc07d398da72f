"""Corpus ingestion: tokenization, bigram phrase detection, term statistics.

Terms are lowercase runs of letters/digits in which single internal ``.`` and
``-`` characters are preserved (so ``u.s`` and ``forward-looking`` survive as
one term each); everything else delimits. Frequency counting and top-term
selection operate on those normalized terms.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InvalidParamsError

_TOKEN_RE = re.compile(r"[^\W_]+(?:[.\-][^\W_]+)*")

# Compact built-in English stopword list (~150 function words, in
# tokenizer-normalized form: contraction stems appear as bare fragments).
DEFAULT_STOPWORDS = frozenset("""
a about above after again against all also am an and any are as at be because
been before being below between both but by can cannot could did do does doing
down during each few for from further had has have having he her here hers
herself him himself his how i if in into is isn it its itself just me mine
more most must my myself no nor not now of off on once only onto or other our
ours ourselves out over own same she should so some such than that the their
theirs them themselves then there these they this those through to too under
until up upon very was we were what when where whether which while who whom why
will with within without would you your yours yourself yourselves
d ll m re s t ve don didn doesn hasn haven isn shouldn wasn weren won wouldn
aren couldn hadn
""".split())


@dataclass
class Document:
    """One tokenized document: an opaque id plus its ordered terms."""

    id: str
    tokens: list[str]


@dataclass
class Vocabulary:
    """Term counts over a corpus.

    ``entries`` holds only terms that survived stopword/min-count filtering;
    ``total_tokens`` counts every token seen, filtered or not.
    """

    entries: dict[str, int] = field(default_factory=dict)
    total_tokens: int = 0
    total_documents: int = 0

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, term: str) -> bool:
        return term in self.entries


def tokenize(raw_text: str) -> list[str]:
    """Split raw text into normalized lowercase terms.

    Keeps internal periods and hyphens ("u.s", "forward-looking"), strips all
    surrounding punctuation, preserves order. Empty input yields an empty list.
    """
    return _TOKEN_RE.findall(raw_text.lower())


def make_documents(named_texts: Iterable[tuple[str, str]]) -> list[Document]:
    """Tokenize (id, raw_text) pairs into Documents."""
    return [Document(id=doc_id, tokens=tokenize(text)) for doc_id, text in named_texts]


def load_corpus(path: str | Path) -> list[Document]:
    """Load and tokenize a corpus from disk.

    ``path`` is either a directory of UTF-8 ``.txt`` files (one document per
    file) or a single UTF-8 file with one document per line.
    """
    path = Path(path)
    if path.is_dir():
        files = sorted(path.glob("*.txt"))
        docs = make_documents(
            (f.name, f.read_text(encoding="utf-8")) for f in files
        )
    else:
        with path.open(encoding="utf-8") as fh:
            docs = make_documents(
                (f"{path.name}:{i}", line) for i, line in enumerate(fh, start=1)
            )
    return [d for d in docs if d.tokens]


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stopword file: one term per line, UTF-8, lowercased; blank
    lines ignored."""
    with Path(path).open(encoding="utf-8") as fh:
        return frozenset(
            line.strip().lower() for line in fh if line.strip()
        )


def detect_phrases(
    documents: Sequence[Document],
    discount: float = 5.0,
    score_threshold: float = 100.0,
) -> list[Document]:
    """Merge strongly collocated adjacent pairs into single ``a_b`` terms.

    A pair qualifies when
    ``(count(ab) - discount) / (count(a) * count(b)) * total_tokens``
    reaches ``score_threshold``. One pass, greedy left-to-right,
    non-overlapping merges. Counts are taken from ``documents`` themselves.
    """
    if discount < 0:
        raise InvalidParamsError("discount must be >= 0")

    unigram: Counter[str] = Counter()
    for doc in documents:
        unigram.update(doc.tokens)
    total_tokens = sum(unigram.values())
    if total_tokens == 0:
        return [Document(doc.id, list(doc.tokens)) for doc in documents]

    term_ids = {t: i for i, t in enumerate(unigram)}
    bigram: Counter[int] = Counter()
    shift = max(len(term_ids), 1).bit_length()
    for doc in documents:
        toks = doc.tokens
        for a, b in zip(toks, toks[1:]):
            bigram[(term_ids[a] << shift) | term_ids[b]] += 1

    def qualifies(a: str, b: str) -> bool:
        pair_count = bigram.get((term_ids[a] << shift) | term_ids[b], 0)
        score = (pair_count - discount) / (unigram[a] * unigram[b]) * total_tokens
        return score >= score_threshold

    merged_docs = []
    for doc in documents:
        toks = doc.tokens
        out: list[str] = []
        i = 0
        while i < len(toks):
            if i + 1 < len(toks) and qualifies(toks[i], toks[i + 1]):
                out.append(f"{toks[i]}_{toks[i + 1]}")
                i += 2
            else:
                out.append(toks[i])
                i += 1
        merged_docs.append(Document(doc.id, out))
    return merged_docs


def count_terms(
    documents: Sequence[Document],
    stopwords: frozenset[str] | set[str] = frozenset(),
    min_count: int = 1,
) -> Vocabulary:
    """Tally term frequencies over a corpus.

    Stopwords and terms below ``min_count`` are excluded from the entries but
    still contribute to ``total_tokens``.
    """
    if min_count < 1:
        raise InvalidParamsError("min_count must be >= 1")
    counts: Counter[str] = Counter()
    for doc in documents:
        counts.update(doc.tokens)
    total = sum(counts.values())
    entries = {
        t: c for t, c in counts.items() if c >= min_count and t not in stopwords
    }
    return Vocabulary(
        entries=entries, total_tokens=total, total_documents=len(documents)
    )


def top_terms(vocab: Vocabulary, n: int) -> list[str]:
    """The ``n`` highest-count terms, descending count, ties lexicographic.

    Returns all entries when ``n`` exceeds the vocabulary size.
    """
    if n < 1:
        raise InvalidParamsError("n must be >= 1")
    ranked = sorted(vocab.entries.items(), key=lambda kv: (-kv[1], kv[0]))
    return [t for t, _ in ranked[:n]]
